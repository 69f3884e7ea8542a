use rayon::prelude::*;
use serde::Serialize;

use crate::dimension::DimensionValue;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_field, buchberger_integer, characteristic};
use crate::presentation::{tensor_presentation, AlgebraPresentation, BaseRing};
use crate::spectra::{
    check_point, dim_at, effective_spectrum, fibre_at, fibre_dim, is_effective,
    verify_af_at_prime, ComponentList, EffectiveSpectrum, PrimeWitness, SpecPoint,
};

use super::dvalue::{d_value, DMode, DValueRequest};
use super::common_base;

/// Which dimension formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremPath {
    /// `dim_p(A ⊗ B) = sup_I D_p(t.d._p(A_I), ht_p(I), B)` at a single prime.
    Pointwise,
    /// The base has dimension 0 (a field or ℤ/n).
    ZeroDimensionalBase,
    /// Over ℤ with one side of nonzero characteristic `n`, so only the
    /// primes dividing `n` are effective.
    NonzeroCharacteristic,
    /// Every fibre of `A` is zero-dimensional; each point contributes
    /// `dim_p(B)`.
    ZeroDimensionalFactor,
    /// `A` is a finite Boolean ring; the answer is `dim(B/2B)`.
    Boolean,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointReport {
    pub point: SpecPoint,
    pub dim_a: DimensionValue,
    pub dim_b: DimensionValue,
    pub formula: DimensionValue,
    pub oracle: DimensionValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorDimReport {
    pub path: TheoremPath,
    pub points: Vec<PointReport>,
    pub formula_dim: DimensionValue,
    pub oracle_dim: DimensionValue,
    pub agreement: bool,
}

impl TensorDimReport {
    fn new(path: TheoremPath, points: Vec<PointReport>, formula_dim: DimensionValue, oracle_dim: DimensionValue) -> Self {
        let agreement = formula_dim == oracle_dim && points.iter().all(|p| p.formula == p.oracle);
        TensorDimReport {
            path,
            points,
            formula_dim,
            oracle_dim,
            agreement,
        }
    }
}

fn tensor_is_nonzero(t: &AlgebraPresentation) -> Result<bool> {
    for f in t.factors() {
        let trivial = match f.base() {
            BaseRing::Rationals | BaseRing::PrimeField(_) => {
                buchberger_field(f.ring(), f.relations())?.is_trivial()
            }
            BaseRing::Integers | BaseRing::IntegersMod(_) => {
                let ring = f.ring().with_domain(crate::coeff::Domain::Integers);
                buchberger_integer(ring, &f.integer_relations()?)?.is_trivial()
            }
        };
        if !trivial {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `A ⊗ B ≠ 0`, decided both by intersecting effective spectra and by a
/// Gröbner basis of the joint presentation.
pub fn is_triplet(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<bool> {
    let (a, b) = common_base(a, b)?;
    let by_spectra = !effective_spectrum(&a)?.intersect(&effective_spectrum(&b)?).is_empty();
    let direct = tensor_is_nonzero(&tensor_presentation(&a, &b)?)?;
    if by_spectra != direct {
        return Err(Error::Inconsistency(format!(
            "spectra intersection says nonzero = {by_spectra}, joint presentation says {direct}"
        )));
    }
    Ok(direct)
}

/// The intersection of the two effective spectra, checked against the
/// spectrum of the joint presentation and direct fibre tests at every
/// prime either side singles out.
pub fn effective_spectrum_tensor(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<EffectiveSpectrum> {
    let (a, b) = common_base(a, b)?;
    let (ea, eb) = (effective_spectrum(&a)?, effective_spectrum(&b)?);
    let inter = ea.intersect(&eb);
    let t = tensor_presentation(&a, &b)?;
    let direct = effective_spectrum(&t)?;
    if direct != inter {
        return Err(Error::Inconsistency(format!(
            "spectrum of the tensor product {} differs from the intersection {}",
            direct.to_json(),
            inter.to_json()
        )));
    }
    let mut points: Vec<SpecPoint> = ea
        .closed_points
        .union(&eb.closed_points)
        .map(|&p| SpecPoint::Closed(p))
        .collect();
    if matches!(t.base(), BaseRing::Integers | BaseRing::Rationals) {
        points.push(SpecPoint::Generic);
    }
    for pt in points {
        if is_effective(&t, pt)? != inter.contains(pt) {
            return Err(Error::Inconsistency(format!(
                "direct fibre test at {pt} disagrees with the intersection"
            )));
        }
    }
    Ok(inter)
}

/// `D_p(s, d, B)` in closed form, maximised over the nonzero factors of B's
/// fibre.
fn d_closed(b: &AlgebraPresentation, pt: SpecPoint, s: u64, d: u64) -> Result<DimensionValue> {
    let mut best = DimensionValue::Empty;
    for fr in fibre_at(b, pt)?.factors() {
        if fr.is_zero()? {
            continue;
        }
        let req = DValueRequest {
            s,
            d,
            fibre: fr.clone(),
            mode: DMode::ClosedFormAffine,
        };
        best = best.sup(d_value(&req)?);
    }
    Ok(best)
}

/// Formula side at one point: the supremum over primes of A's fibre is
/// attained at a prime of maximal height, where `d = s = dim_p(A)`.
fn formula_at(a: &AlgebraPresentation, b: &AlgebraPresentation, pt: SpecPoint) -> Result<(DimensionValue, DimensionValue, DimensionValue)> {
    let (da, db) = (dim_at(a, pt)?, dim_at(b, pt)?);
    let value = match (da, db) {
        (DimensionValue::Finite(s), DimensionValue::Finite(_)) => d_closed(b, pt, s, s)?,
        _ => DimensionValue::Empty,
    };
    Ok((da, db, value))
}

/// `dim_p(A ⊗ B)` from A and B separately; `Empty` unless `pt` is
/// effective for both.
pub fn dim_tensor_at(a: &AlgebraPresentation, b: &AlgebraPresentation, pt: SpecPoint) -> Result<DimensionValue> {
    let (a, b) = common_base(a, b)?;
    check_point(a.base(), pt)?;
    Ok(formula_at(&a, &b, pt)?.2)
}

/// Primes of one factor of a fibre ring, with its minimal primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSet {
    pub factor: usize,
    pub primes: Vec<PrimeWitness>,
    pub components: ComponentList,
}

/// The pointwise supremum evaluated literally: over the primes `I` of
/// `a_set`, `D_p(t.d._p(A_I), ht_p(I), B)` with `D` restricted to `b_set`.
/// A lower bound for `dim_tensor_at`, equal to it when both sets contain
/// primes of maximal height.
pub fn dim_tensor_at_witnessed(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    pt: SpecPoint,
    a_set: &WitnessSet,
    b_set: &WitnessSet,
) -> Result<DimensionValue> {
    let (a, b) = common_base(a, b)?;
    let b_fibre = fibre_at(&b, pt)?;
    let b_fr = b_fibre.factors().get(b_set.factor).ok_or_else(|| {
        Error::InvalidRequest(format!("factor {} of B out of range", b_set.factor))
    })?;
    let mut best = DimensionValue::Empty;
    for i in &a_set.primes {
        let af = verify_af_at_prime(&a, pt, a_set.factor, i, &a_set.components)?;
        let (Some(s), Some(d)) = (af.td_local.finite(), af.height.finite()) else {
            continue;
        };
        let req = DValueRequest {
            s,
            d,
            fibre: b_fr.clone(),
            mode: DMode::WitnessRestricted {
                primes: b_set.primes.clone(),
                components: b_set.components.clone(),
            },
        };
        best = best.sup(d_value(&req)?);
    }
    Ok(best)
}

/// Fails unless the tensor product has effective dimension 0, which is
/// what makes its dimension equal to its fibre dimension.
fn path_for(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<TheoremPath> {
    match a.base() {
        BaseRing::Integers => {
            let (ca, cb) = (characteristic(a)?, characteristic(b)?);
            if num_traits::Zero::is_zero(&ca) && num_traits::Zero::is_zero(&cb) {
                return Err(Error::Unsupported(
                    "the dimension of A ⊗ B is computed only when the tensor product has \
                     effective dimension 0; over Z that needs a nonzero characteristic on \
                     at least one side, and both characteristics are 0 (dim_at still \
                     works at each prime)"
                        .into(),
                ));
            }
            Ok(TheoremPath::NonzeroCharacteristic)
        }
        _ => Ok(TheoremPath::ZeroDimensionalBase),
    }
}

fn common_points(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<Vec<SpecPoint>> {
    let inter = effective_spectrum(a)?.intersect(&effective_spectrum(b)?);
    inter.finite_points().ok_or_else(|| {
        Error::Inconsistency("common effective spectrum is infinite despite the hypotheses".into())
    })
}

fn oracle_at(t: &AlgebraPresentation, pt: SpecPoint) -> Result<DimensionValue> {
    dim_at(t, pt)
}

/// `dim(A ⊗ B)` as the supremum of the pointwise formula over the common
/// effective primes, compared with the fibre dimension of the joint
/// presentation.
pub fn dim_tensor(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<TensorDimReport> {
    let (a, b) = common_base(a, b)?;
    let path = path_for(&a, &b)?;
    let points = common_points(&a, &b)?;
    let t = tensor_presentation(&a, &b)?;
    let rows = points
        .par_iter()
        .map(|&pt| {
            let (dim_a, dim_b, formula) = formula_at(&a, &b, pt)?;
            Ok(PointReport {
                point: pt,
                dim_a,
                dim_b,
                formula,
                oracle: oracle_at(&t, pt)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let formula_dim = rows.iter().map(|r| r.formula).collect();
    let oracle_dim = fibre_dim(&t)?;
    Ok(TensorDimReport::new(path, rows, formula_dim, oracle_dim))
}

/// The zero-dimensional case: with `d = 0` each common point contributes
/// `D_p(0, 0, B) = dim_p(B)`. Cross-checked against [`dim_tensor`].
pub fn dim_tensor_zero_dim(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<TensorDimReport> {
    let (a, b) = common_base(a, b)?;
    let fa = fibre_dim(&a)?;
    if fa > DimensionValue::Finite(0) {
        return Err(Error::NotZeroDimensional(format!(
            "A has a fibre of dimension {fa}; every fibre must have dimension 0"
        )));
    }
    let general = dim_tensor(&a, &b)?;
    let mut rows = Vec::with_capacity(general.points.len());
    for r in &general.points {
        let formula = match r.dim_a {
            DimensionValue::Empty => DimensionValue::Empty,
            DimensionValue::Finite(_) => d_closed(&b, r.point, 0, 0)?,
        };
        rows.push(PointReport { formula, ..r.clone() });
    }
    let formula_dim: DimensionValue = rows.iter().map(|r| r.formula).collect();
    if formula_dim != general.formula_dim {
        return Err(Error::Inconsistency(format!(
            "zero-dimensional formula gives {formula_dim}, the general one {}",
            general.formula_dim
        )));
    }
    Ok(TensorDimReport::new(
        TheoremPath::ZeroDimensionalFactor,
        rows,
        formula_dim,
        general.oracle_dim,
    ))
}

/// `dim(F_2^k ⊗ B) = dim(B/2B)`, against the expanded tensor product.
pub fn boolean_dim(k: usize, b: &AlgebraPresentation) -> Result<TensorDimReport> {
    if b.base() != BaseRing::Integers {
        return Err(Error::UnsupportedBase(format!(
            "the Boolean formula takes B over Z, got {}",
            b.base()
        )));
    }
    let a = AlgebraPresentation::boolean_atoms(k)?;
    let two = SpecPoint::Closed(2);
    let dim_b = dim_at(b, two)?;
    if dim_b.is_empty() {
        return Err(Error::NotATriplet(
            "B/2B is the zero ring, so A ⊗ B = 0 for every Boolean A".into(),
        ));
    }
    let t = tensor_presentation(&a, b)?;
    let row = PointReport {
        point: two,
        dim_a: dim_at(&a, two)?,
        dim_b,
        formula: dim_b,
        oracle: oracle_at(&t, two)?,
    };
    Ok(TensorDimReport::new(TheoremPath::Boolean, vec![row], dim_b, fibre_dim(&t)?))
}
