//! Fibre rings `k(p) ⊗ A` over the primes of the base, effective spectra and
//! the dimensions read off them.

mod bounds;
mod effective;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::is_prime;
use crate::coeff::Domain;
use crate::dimension::DimensionValue;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_field, krull_dim_affine, GroebnerBasis};
use crate::poly::{PolyRing, Polynomial};
use crate::presentation::{AffinePresentation, AlgebraPresentation, BaseRing};

pub use bounds::{seidenberg_bounds, SeidenbergBounds};
pub use effective::{effective_dim, effective_spectrum, fibre_dim, EffectiveSpectrum};
pub use witness::{
    height_at, parse_witness, verify_af_at_prime, AfReport, ComponentList, PrimeWitness,
    Witness, WitnessDoc,
};

/// A prime of the base ring: the zero ideal of ℤ or ℚ, or `pℤ` (for ℤ/n
/// and F_p the image of `pℤ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecPoint {
    Generic,
    Closed(u64),
}

impl SpecPoint {
    /// Residue field `k(p)`.
    pub fn residue_field(self) -> Domain {
        match self {
            SpecPoint::Generic => Domain::Rationals,
            SpecPoint::Closed(p) => Domain::PrimeField(p),
        }
    }
}

impl fmt::Display for SpecPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecPoint::Generic => f.write_str("generic"),
            SpecPoint::Closed(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for SpecPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "generic" {
            return Ok(SpecPoint::Generic);
        }
        match s.parse::<u64>() {
            Ok(p) if is_prime(p) => Ok(SpecPoint::Closed(p)),
            Ok(p) => Err(Error::Validation(format!("{p} is not prime"))),
            Err(_) => Err(Error::Validation(format!(
                "point must be a prime or `generic`, got `{s}`"
            ))),
        }
    }
}

/// JSON form: an integer prime, or the string `"generic"`.
impl Serialize for SpecPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SpecPoint::Generic => s.serialize_str("generic"),
            SpecPoint::Closed(p) => s.serialize_u64(*p),
        }
    }
}

impl<'de> Deserialize<'de> for SpecPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Prime(u64),
            Name(String),
        }
        let parsed = match Repr::deserialize(d)? {
            Repr::Prime(p) => SpecPoint::from_str(&p.to_string()),
            Repr::Name(s) => SpecPoint::from_str(&s),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

/// Reject points that are not primes of `base`.
pub fn check_point(base: BaseRing, pt: SpecPoint) -> Result<()> {
    let ok = match (base, pt) {
        (BaseRing::Integers | BaseRing::Rationals, SpecPoint::Generic) => true,
        (BaseRing::Integers, SpecPoint::Closed(p)) => is_prime(p),
        (BaseRing::IntegersMod(n), SpecPoint::Closed(p)) => is_prime(p) && n % p == 0,
        (BaseRing::PrimeField(q), SpecPoint::Closed(p)) => p == q,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::IncompatiblePoint {
            point: pt.to_string(),
            base: base.to_string(),
        })
    }
}

/// One affine factor of a fibre ring: `k(p)[vars] / (relations)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFibre {
    vars: Vec<String>,
    relations: Vec<Polynomial>,
    ring: PolyRing,
}

impl AffineFibre {
    pub fn new(ring: PolyRing, vars: Vec<String>, relations: Vec<Polynomial>) -> Result<Self> {
        if !ring.domain.is_field() {
            return Err(Error::WrongDomain("fibre rings have field coefficients".into()));
        }
        if vars.len() != ring.nvars {
            return Err(Error::ArityMismatch {
                left: ring.nvars,
                right: vars.len(),
            });
        }
        Ok(AffineFibre {
            vars,
            relations,
            ring,
        })
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn field(&self) -> Domain {
        self.ring.domain
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        buchberger_field(self.ring, &self.relations)
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.groebner()?.is_trivial())
    }

    pub fn krull_dim(&self) -> Result<DimensionValue> {
        krull_dim_affine(self.ring, &self.relations)
    }

    /// Dimension of the quotient by the extra generators `extra`.
    pub fn quotient_dim(&self, extra: &[Polynomial]) -> Result<DimensionValue> {
        let mut rels = self.relations.clone();
        rels.extend(extra.iter().cloned());
        krull_dim_affine(self.ring, &rels)
    }
}

/// `k(p) ⊗ A`, one affine fibre per factor of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreRing {
    point: SpecPoint,
    factors: Vec<AffineFibre>,
}

impl FibreRing {
    pub fn point(&self) -> SpecPoint {
        self.point
    }

    pub fn factors(&self) -> &[AffineFibre] {
        &self.factors
    }

    /// Zero ring iff every factor is.
    pub fn is_zero(&self) -> Result<bool> {
        for f in &self.factors {
            if !f.is_zero()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Max over the factors.
    pub fn krull_dim(&self) -> Result<DimensionValue> {
        self.factors
            .iter()
            .map(AffineFibre::krull_dim)
            .collect::<Result<DimensionValue>>()
    }
}

pub(crate) fn affine_fibre(a: &AffinePresentation, pt: SpecPoint) -> Result<AffineFibre> {
    let field = pt.residue_field();
    let ring = a.ring().with_domain(field);
    // ℤ and ℤ/n lifts reduce mod p or embed in ℚ; F_p and ℚ map to themselves
    let relations = a
        .relations()
        .iter()
        .map(|r| r.map_domain(field))
        .collect::<Result<Vec<_>>>()?;
    let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
    AffineFibre::new(ring, a.vars().to_vec(), relations)
}

/// Coefficient-reduced presentation of `k(pt) ⊗ A`.
pub fn fibre_at(a: &AlgebraPresentation, pt: SpecPoint) -> Result<FibreRing> {
    check_point(a.base(), pt)?;
    let factors = a
        .factors()
        .iter()
        .map(|f| affine_fibre(f, pt))
        .collect::<Result<Vec<_>>>()?;
    Ok(FibreRing { point: pt, factors })
}

/// True iff the fibre at `pt` is not the zero ring.
pub fn is_effective(a: &AlgebraPresentation, pt: SpecPoint) -> Result<bool> {
    Ok(!fibre_at(a, pt)?.is_zero()?)
}

/// `dim(k(pt) ⊗ A)`; `Empty` at non-effective points.
pub fn dim_at(a: &AlgebraPresentation, pt: SpecPoint) -> Result<DimensionValue> {
    fibre_at(a, pt)?.krull_dim()
}

/// Transcendence degree of the fibre over `k(pt)`, which for a finitely
/// generated algebra over a field is its Krull dimension.
pub fn td_at(a: &AlgebraPresentation, pt: SpecPoint) -> Result<DimensionValue> {
    dim_at(a, pt)
}
