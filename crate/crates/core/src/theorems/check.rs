use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dsl::render_algebra;
use crate::error::Result;
use crate::presentation::{AlgebraPresentation, BaseRing};
use crate::random::{random_algebra, AlgebraParams};

use super::tensor::{dim_tensor, effective_spectrum_tensor, is_triplet, TensorDimReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub seed: Option<u64>,
    pub instances: Vec<Instance>,
    pub reports: Vec<TensorDimReport>,
    pub failures: usize,
}

/// Random pairs over ℤ, both of nonzero characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    pub count: usize,
    pub params: AlgebraParams,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            count: 20,
            params: AlgebraParams::default(),
        }
    }
}

fn check_pair(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<TensorDimReport> {
    // both raise on disagreement between their two routes
    effective_spectrum_tensor(a, b)?;
    is_triplet(a, b)?;
    dim_tensor(a, b)
}

fn finish(seed: Option<u64>, pairs: &[(AlgebraPresentation, AlgebraPresentation)]) -> Result<CrossCheckReport> {
    let reports = pairs
        .par_iter()
        .map(|(a, b)| check_pair(a, b))
        .collect::<Result<Vec<_>>>()?;
    let instances = pairs
        .iter()
        .map(|(a, b)| Instance {
            a: render_algebra(a),
            b: render_algebra(b),
        })
        .collect();
    let failures = reports.iter().filter(|r| !r.agreement).count();
    Ok(CrossCheckReport {
        seed,
        instances,
        reports,
        failures,
    })
}

/// Formula against oracle for one pair.
pub fn cross_check(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<CrossCheckReport> {
    finish(None, &[(a.clone(), b.clone())])
}

/// A seeded batch; the report is identical for identical options.
pub fn random_cross_check(options: &CheckOptions) -> Result<CrossCheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let pairs: Vec<_> = (0..options.count)
        .map(|_| {
            let a = random_algebra(&mut rng, BaseRing::Integers, options.params);
            let b = random_algebra(&mut rng, BaseRing::Integers, options.params);
            (a.into(), b.into())
        })
        .collect();
    finish(Some(options.seed), &pairs)
}
