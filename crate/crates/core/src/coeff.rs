//! Exact coefficients over ℤ, ℚ and F_p.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::inv_mod;

/// Which coefficient ring a polynomial lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Domain {
    pub fn is_field(self) -> bool {
        !matches!(self, Domain::Integers)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integers => write!(f, "Z"),
            Domain::Rationals => write!(f, "Q"),
            Domain::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// A coefficient tagged with its domain.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// `BigRational` invariant) and residues always lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Integer(BigInt),
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn zero(domain: Domain) -> Self {
        Self::from_i64(domain, 0)
    }

    pub fn one(domain: Domain) -> Self {
        Self::from_i64(domain, 1)
    }

    pub fn from_i64(domain: Domain, v: i64) -> Self {
        Self::from_bigint(domain, &BigInt::from(v))
    }

    pub fn from_bigint(domain: Domain, v: &BigInt) -> Self {
        match domain {
            Domain::Integers => Coefficient::Integer(v.clone()),
            Domain::Rationals => Coefficient::Rational(BigRational::from_integer(v.clone())),
            Domain::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Coefficient::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            Coefficient::Integer(_) => Domain::Integers,
            Coefficient::Rational(_) => Domain::Rationals,
            Coefficient::Residue { modulus, .. } => Domain::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Integer(v) => v.is_zero(),
            Coefficient::Rational(v) => v.is_zero(),
            Coefficient::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Integer(v) => v.is_one(),
            Coefficient::Rational(v) => v.is_one(),
            Coefficient::Residue { value, .. } => *value == 1,
        }
    }

    /// Units: ±1 over ℤ, every nonzero element over a field.
    pub fn is_unit(&self) -> bool {
        match self {
            Coefficient::Integer(v) => v.abs().is_one(),
            _ => !self.is_zero(),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Coefficient::Integer(v) => Some(v),
            _ => None,
        }
    }

    /// Map an integer coefficient into another domain; field elements are only
    /// mapped to their own domain.
    pub fn map_to(&self, target: Domain) -> Option<Self> {
        match (self, target) {
            (_, t) if self.domain() == t => Some(self.clone()),
            (Coefficient::Integer(v), t) => Some(Self::from_bigint(t, v)),
            _ => None,
        }
    }

    fn mismatch(&self, other: &Self) -> ! {
        panic!(
            "coefficient domain mismatch: {} vs {}",
            self.domain(),
            other.domain()
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a + b),
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (
                Coefficient::Residue { value: a, modulus: p },
                Coefficient::Residue { value: b, modulus: q },
            ) if p == q => Coefficient::Residue {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => self.mismatch(other),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Coefficient::Integer(a) => Coefficient::Integer(-a),
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a * b),
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (
                Coefficient::Residue { value: a, modulus: p },
                Coefficient::Residue { value: b, modulus: q },
            ) if p == q => Coefficient::Residue {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => self.mismatch(other),
        }
    }

    /// Multiplicative inverse over a field; `None` for zero or over ℤ.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match self {
            Coefficient::Integer(_) => None,
            Coefficient::Rational(a) => Some(Coefficient::Rational(a.recip())),
            Coefficient::Residue { value, modulus } => Some(Coefficient::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// Exact quotient over a field. Panics on division by zero or over ℤ.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by a non-unit"))
    }

    /// Sign used when rendering: negative integers and rationals.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Integer(v) => v.is_negative(),
            Coefficient::Rational(v) => v.is_negative(),
            Coefficient::Residue { .. } => false,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integer(v) => write!(f, "{v}"),
            Coefficient::Rational(v) => write!(f, "{v}"),
            Coefficient::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_canonical() {
        let c = Coefficient::from_i64(Domain::PrimeField(7), -3);
        assert_eq!(c, Coefficient::Residue { value: 4, modulus: 7 });
        let s = c.add(&Coefficient::from_i64(Domain::PrimeField(7), 3));
        assert!(s.is_zero());
        assert_eq!(c.neg(), Coefficient::from_i64(Domain::PrimeField(7), 3));
    }

    #[test]
    fn rational_inverse() {
        let c = Coefficient::from_i64(Domain::Rationals, -4);
        let inv = c.inv().unwrap();
        assert!(c.mul(&inv).is_one());
        assert!(Coefficient::from_i64(Domain::Integers, 2).inv().is_none());
    }

    #[test]
    fn integer_units() {
        assert!(Coefficient::from_i64(Domain::Integers, -1).is_unit());
        assert!(!Coefficient::from_i64(Domain::Integers, 2).is_unit());
        assert!(Coefficient::from_i64(Domain::PrimeField(3), 2).is_unit());
    }

    #[test]
    #[should_panic(expected = "domain mismatch")]
    fn mixed_domains_panic() {
        let a = Coefficient::one(Domain::Integers);
        let b = Coefficient::one(Domain::Rationals);
        let _ = a.add(&b);
    }
}
