//! Dimension theory of finitely presented algebras over ℤ, ℤ/n, F_p and ℚ.
//!
//! The crate computes fibre rings `k(p) ⊗ A`, effective spectra, local and
//! fibre Krull dimensions, and the Krull dimension of tensor products
//! `A ⊗_R B`, checking every closed-form answer against a direct computation
//! on the concatenated presentation.

pub mod arith;
pub mod coeff;
pub mod dimension;
pub mod dsl;
pub mod error;
pub mod groebner;
pub mod monomial;
pub mod poly;
pub mod presentation;
pub mod random;
pub mod spectra;
pub mod theorems;

pub use coeff::{Coefficient, Domain};
pub use dimension::DimensionValue;
pub use dsl::{parse_algebra, parse_algebra_with_order, render_algebra};
pub use error::{Error, Result};
pub use groebner::{
    buchberger_field, buchberger_integer, characteristic, groebner_basis, is_trivial,
    krull_dim_affine, normal_form, GroebnerBasis, GroebnerOptions, Strength,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{normalize, poly_mul, PolyRing, Polynomial};
pub use presentation::{tensor_presentation, AffinePresentation, AlgebraPresentation, BaseRing};
pub use spectra::{
    dim_at, effective_dim, effective_spectrum, fibre_at, fibre_dim, height_at, is_effective,
    seidenberg_bounds, td_at, verify_af_at_prime, EffectiveSpectrum, SpecPoint,
};
pub use theorems::{
    boolean_dim, cross_check, d_value, dim_tensor, dim_tensor_at, dim_tensor_zero_dim,
    effective_spectrum_tensor, is_triplet, random_cross_check, TensorDimReport, TheoremPath,
};
