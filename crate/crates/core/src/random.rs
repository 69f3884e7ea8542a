//! Seeded generators for random polynomials and presentations.

use rand::Rng;

use crate::coeff::{Coefficient, Domain};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::presentation::{AffinePresentation, BaseRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyParams {
    pub max_terms: usize,
    pub max_degree: u32,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
}

impl Default for PolyParams {
    fn default() -> Self {
        PolyParams {
            max_terms: 3,
            max_degree: 2,
            coeff_bound: 10,
        }
    }
}

fn random_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: usize, max_degree: u32) -> Monomial {
    let degree = rng.random_range(0..=max_degree);
    let mut e = vec![0u32; nvars];
    if nvars > 0 {
        for _ in 0..degree {
            e[rng.random_range(0..nvars)] += 1;
        }
    }
    Monomial::from_exponents(e)
}

/// Up to `max_terms` random terms; may be zero after merging.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, ring: PolyRing, params: PolyParams) -> Polynomial {
    let count = rng.random_range(1..=params.max_terms.max(1));
    let raw = (0..count)
        .map(|_| {
            let c = rng.random_range(-params.coeff_bound..=params.coeff_bound);
            (
                random_monomial(rng, ring.nvars, params.max_degree),
                Coefficient::from_i64(ring.domain, c),
            )
        })
        .collect();
    Polynomial::from_raw_unchecked(ring, raw)
}

/// Random nonzero polynomial of positive degree when the ring has variables.
pub fn random_nonconstant<R: Rng + ?Sized>(rng: &mut R, ring: PolyRing, params: PolyParams) -> Polynomial {
    loop {
        let p = random_polynomial(rng, ring, params);
        if !p.is_zero() && (ring.nvars == 0 || !p.is_constant()) {
            return p;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraParams {
    pub max_vars: usize,
    pub max_relations: usize,
    pub poly: PolyParams,
    /// For base ℤ: include a constant relation `n` drawn from `2..=max`,
    /// forcing a nonzero characteristic.
    pub nonzero_characteristic: Option<u64>,
}

impl Default for AlgebraParams {
    fn default() -> Self {
        AlgebraParams {
            max_vars: 3,
            max_relations: 3,
            poly: PolyParams::default(),
            nonzero_characteristic: Some(36),
        }
    }
}

const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];

/// Random affine presentation; the constant relation (if any) counts
/// towards `max_relations`.
pub fn random_algebra<R: Rng + ?Sized>(
    rng: &mut R,
    base: BaseRing,
    params: AlgebraParams,
) -> AffinePresentation {
    let nvars = rng.random_range(0..=params.max_vars.min(NAMES.len()));
    let vars: Vec<String> = NAMES[..nvars].iter().map(|s| s.to_string()).collect();
    let ring = PolyRing::new(base.coefficient_domain(), nvars, Default::default());
    let mut relations = Vec::new();
    let mut budget = params.max_relations;
    if let (BaseRing::Integers, Some(max)) = (base, params.nonzero_characteristic) {
        let n = rng.random_range(2..=max.max(2)) as i64;
        relations.push(Polynomial::from_i64(ring, n));
        budget = budget.saturating_sub(1);
    }
    let extra = rng.random_range(0..=budget);
    for _ in 0..extra {
        let p = if nvars == 0 {
            random_polynomial(rng, ring, params.poly)
        } else {
            random_nonconstant(rng, ring, params.poly)
        };
        if !p.is_zero() {
            relations.push(p);
        }
    }
    AffinePresentation::new(base, vars, relations).expect("generated presentation is valid")
}

/// Random ideal generators over `domain` for kernel tests.
pub fn random_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    domain: Domain,
    nvars: usize,
    max_gens: usize,
    params: PolyParams,
) -> Vec<Polynomial> {
    let ring = PolyRing::new(domain, nvars, Default::default());
    let count = rng.random_range(1..=max_gens.max(1));
    (0..count).map(|_| random_polynomial(rng, ring, params)).collect()
}
