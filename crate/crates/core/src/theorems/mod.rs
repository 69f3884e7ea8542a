//! Dimension of `A ⊗_R B` from the two factors alone, with a direct
//! computation on the concatenated presentation as the oracle.

mod check;
mod dvalue;
mod tensor;

use crate::error::{Error, Result};
use crate::presentation::AlgebraPresentation;

pub use check::{cross_check, random_cross_check, CheckOptions, CrossCheckReport, Instance};
pub use dvalue::{d_value, DMode, DValueRequest};
pub use tensor::{
    boolean_dim, dim_tensor, dim_tensor_at, dim_tensor_at_witnessed, dim_tensor_zero_dim,
    effective_spectrum_tensor, is_triplet, PointReport, TensorDimReport, TheoremPath,
    WitnessSet,
};

/// Bring both algebras over one base. Algebras over ℤ/n and F_p are
/// ℤ-algebras, so differing integral bases meet over ℤ.
pub fn common_base(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
) -> Result<(AlgebraPresentation, AlgebraPresentation)> {
    if a.base() == b.base() {
        return Ok((a.clone(), b.clone()));
    }
    if a.base().is_integral_type() && b.base().is_integral_type() {
        return Ok((a.over_integers()?, b.over_integers()?));
    }
    Err(Error::BaseMismatch {
        left: a.base().to_string(),
        right: b.base().to_string(),
    })
}

#[cfg(test)]
mod tests;
