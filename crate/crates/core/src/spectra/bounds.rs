use serde::Serialize;

use crate::dimension::DimensionValue;
use crate::error::Result;
use crate::presentation::{AlgebraPresentation, BaseRing};

use super::{effective_dim, fibre_dim};

/// `f ≤ dim A ≤ f + (1 + f)·e` with `f` the fibre dimension and `e` the
/// effective dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeidenbergBounds {
    pub lower: DimensionValue,
    pub upper: DimensionValue,
    /// The exact dimension, known when `e = 0`.
    pub dim_if_known: Option<DimensionValue>,
    /// `n + dim(base)` for a polynomial ring `base[X_1..X_n]`, where going
    /// down holds.
    pub going_down_lower: Option<DimensionValue>,
}

fn base_dim(base: BaseRing) -> u64 {
    match base {
        BaseRing::Integers => 1,
        _ => 0,
    }
}

pub fn seidenberg_bounds(a: &AlgebraPresentation) -> Result<SeidenbergBounds> {
    let f = fibre_dim(a)?;
    let e = effective_dim(a)?;
    let upper = match (f, e) {
        (DimensionValue::Finite(f), DimensionValue::Finite(e)) => DimensionValue::Finite(f + (1 + f) * e),
        _ => DimensionValue::Empty,
    };
    let dim_if_known = match e {
        DimensionValue::Finite(0) | DimensionValue::Empty => Some(f),
        _ => None,
    };
    let going_down_lower = match a {
        AlgebraPresentation::Affine(x) if x.relations().is_empty() => Some(DimensionValue::Finite(
            x.vars().len() as u64 + base_dim(x.base()),
        )),
        _ => None,
    };
    Ok(SeidenbergBounds {
        lower: f,
        upper,
        dim_if_known,
        going_down_lower,
    })
}
