//! Finitely presented algebras over ℤ, ℤ/n, F_p and ℚ.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::is_prime;
use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    IntegersMod(u64),
    PrimeField(u64),
    Rationals,
}

impl BaseRing {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Validation(format!("Zmod modulus must be >= 2, got {n}")));
        }
        Ok(BaseRing::IntegersMod(n))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Validation(format!("Fp modulus {p} is not prime")));
        }
        Ok(BaseRing::PrimeField(p))
    }

    /// Coefficient domain of relations: ℤ for ℤ and ℤ/n, the field otherwise.
    pub fn coefficient_domain(self) -> Domain {
        match self {
            BaseRing::Integers | BaseRing::IntegersMod(_) => Domain::Integers,
            BaseRing::PrimeField(p) => Domain::PrimeField(p),
            BaseRing::Rationals => Domain::Rationals,
        }
    }

    /// ℤ/n and F_p can be viewed as ℤ-algebras with a single extra relation.
    pub fn is_integral_type(self) -> bool {
        !matches!(self, BaseRing::Rationals)
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::IntegersMod(n) => write!(f, "Z/{n}"),
            BaseRing::PrimeField(p) => write!(f, "F_{p}"),
            BaseRing::Rationals => write!(f, "Q"),
        }
    }
}

/// `base[vars] / (relations)`. Over ℤ/n the relations are integer lifts and
/// the modulus is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePresentation {
    base: BaseRing,
    vars: Vec<String>,
    relations: Vec<Polynomial>,
    order: MonomialOrder,
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl AffinePresentation {
    pub fn new(base: BaseRing, vars: Vec<String>, relations: Vec<Polynomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vars {
            if !valid_name(v) {
                return Err(Error::Validation(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::Validation(format!("duplicate variable `{v}`")));
            }
        }
        let domain = base.coefficient_domain();
        for r in &relations {
            if r.domain() != domain {
                return Err(Error::DomainMismatch {
                    left: domain,
                    right: r.domain(),
                });
            }
            if r.nvars() != vars.len() {
                return Err(Error::ArityMismatch {
                    left: vars.len(),
                    right: r.nvars(),
                });
            }
        }
        let order = relations.first().map(|r| r.order()).unwrap_or_default();
        let relations = relations.iter().map(|r| r.with_order(order)).collect();
        Ok(AffinePresentation {
            base,
            vars,
            relations,
            order,
        })
    }

    /// The polynomial ring `base[vars]` with no relations.
    pub fn polynomial_ring(base: BaseRing, vars: &[&str]) -> Result<Self> {
        Self::new(base, vars.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> PolyRing {
        PolyRing::new(self.base.coefficient_domain(), self.vars.len(), self.order())
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        AffinePresentation {
            base: self.base,
            vars: self.vars.clone(),
            relations: self.relations.iter().map(|r| r.with_order(order)).collect(),
            order,
        }
    }

    /// Relations generating the ideal of `ℤ[vars]` whose quotient is this
    /// algebra; only for ℤ-type bases. Adds the modulus for ℤ/n and F_p.
    pub fn integer_relations(&self) -> Result<Vec<Polynomial>> {
        let ring = self.ring().with_domain(Domain::Integers);
        let modulus = match self.base {
            BaseRing::Integers => None,
            BaseRing::IntegersMod(n) | BaseRing::PrimeField(n) => Some(n),
            BaseRing::Rationals => {
                return Err(Error::UnsupportedBase(
                    "Q is not a finitely presented Z-algebra".into(),
                ))
            }
        };
        let mut rels = Vec::with_capacity(self.relations.len() + 1);
        for r in &self.relations {
            rels.push(match self.base {
                BaseRing::PrimeField(_) => lift_residues(r, ring),
                _ => r.clone(),
            });
        }
        if let Some(n) = modulus {
            rels.push(Polynomial::constant(
                ring,
                Coefficient::from_bigint(Domain::Integers, &BigInt::from(n)),
            ));
        }
        Ok(rels)
    }

    /// The same algebra regarded as a ℤ-algebra.
    pub fn over_integers(&self) -> Result<Self> {
        if self.base == BaseRing::Integers {
            return Ok(self.clone());
        }
        Ok(AffinePresentation {
            base: BaseRing::Integers,
            vars: self.vars.clone(),
            relations: self.integer_relations()?,
            order: self.order,
        })
    }
}

fn lift_residues(p: &Polynomial, ring: PolyRing) -> Polynomial {
    let raw = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let v = match c {
                Coefficient::Residue { value, .. } => BigInt::from(*value),
                _ => unreachable!("prime field relation"),
            };
            (m.clone(), Coefficient::Integer(v))
        })
        .collect();
    Polynomial::from_raw_unchecked(ring, raw)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraPresentation {
    Affine(AffinePresentation),
    /// Finite product of affine algebras over one base.
    Product(Vec<AffinePresentation>),
}

impl AlgebraPresentation {
    pub fn product(factors: Vec<AffinePresentation>) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(Error::Validation("a product needs at least one factor".into()));
        };
        let base = first.base();
        if let Some(f) = factors.iter().find(|f| f.base() != base) {
            return Err(Error::BaseMismatch {
                left: base.to_string(),
                right: f.base().to_string(),
            });
        }
        Ok(AlgebraPresentation::Product(factors))
    }

    /// `(F_2)^k` as a product of `k` copies of `ℤ/(2)`.
    pub fn boolean_atoms(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Validation("boolean_atoms needs k >= 1".into()));
        }
        let ring = PolyRing::new(Domain::Integers, 0, MonomialOrder::default());
        let atom = AffinePresentation::new(
            BaseRing::Integers,
            Vec::new(),
            vec![Polynomial::from_i64(ring, 2)],
        )?;
        Ok(AlgebraPresentation::Product(vec![atom; k]))
    }

    pub fn base(&self) -> BaseRing {
        self.factors()[0].base()
    }

    pub fn factors(&self) -> &[AffinePresentation] {
        match self {
            AlgebraPresentation::Affine(a) => std::slice::from_ref(a),
            AlgebraPresentation::Product(fs) => fs,
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        self.map_factors(|f| Ok(f.with_order(order)))
            .expect("reordering is infallible")
    }

    pub fn over_integers(&self) -> Result<Self> {
        self.map_factors(AffinePresentation::over_integers)
    }

    fn map_factors<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&AffinePresentation) -> Result<AffinePresentation>,
    {
        Ok(match self {
            AlgebraPresentation::Affine(a) => AlgebraPresentation::Affine(f(a)?),
            AlgebraPresentation::Product(fs) => {
                AlgebraPresentation::Product(fs.iter().map(f).collect::<Result<_>>()?)
            }
        })
    }

    pub fn total_vars(&self) -> usize {
        self.factors().iter().map(|f| f.vars().len()).sum()
    }
}

impl From<AffinePresentation> for AlgebraPresentation {
    fn from(a: AffinePresentation) -> Self {
        AlgebraPresentation::Affine(a)
    }
}

fn fresh_name(base: &str, suffix: &str, taken: &HashSet<String>) -> String {
    let candidate = format!("{base}_{suffix}");
    if !taken.contains(&candidate) {
        return candidate;
    }
    (2..)
        .map(|i| format!("{base}_{suffix}{i}"))
        .find(|c| !taken.contains(c))
        .expect("unbounded search")
}

fn tensor_affine(a: &AffinePresentation, b: &AffinePresentation) -> Result<AffinePresentation> {
    if a.base() != b.base() {
        return Err(Error::BaseMismatch {
            left: a.base().to_string(),
            right: b.base().to_string(),
        });
    }
    let left: HashSet<&str> = a.vars().iter().map(String::as_str).collect();
    let right: HashSet<&str> = b.vars().iter().map(String::as_str).collect();
    let mut taken: HashSet<String> = a.vars().iter().chain(b.vars()).cloned().collect();
    let mut rename = |name: &String, clash: bool, suffix: &str| {
        if clash {
            let fresh = fresh_name(name, suffix, &taken);
            taken.insert(fresh.clone());
            fresh
        } else {
            name.clone()
        }
    };
    let mut vars: Vec<String> = a
        .vars()
        .iter()
        .map(|v| rename(v, right.contains(v.as_str()), "L"))
        .collect();
    vars.extend(
        b.vars()
            .iter()
            .map(|v| rename(v, left.contains(v.as_str()), "R")),
    );
    let (na, nb) = (a.vars().len(), b.vars().len());
    let order = a.order();
    let b = b.with_order(order);
    let relations = a
        .relations()
        .iter()
        .map(|r| r.embed(0, nb))
        .chain(b.relations().iter().map(|r| r.embed(na, 0)))
        .collect();
    let mut t = AffinePresentation::new(a.base(), vars, relations)?;
    t.order = order;
    Ok(t)
}

/// Presentation of `A ⊗ B` over their common base. Affine factors are
/// concatenated (clashing names get `_L` / `_R`), products distribute.
pub fn tensor_presentation(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
) -> Result<AlgebraPresentation> {
    match (a, b) {
        (AlgebraPresentation::Affine(x), AlgebraPresentation::Affine(y)) => {
            Ok(AlgebraPresentation::Affine(tensor_affine(x, y)?))
        }
        _ => {
            let mut factors = Vec::new();
            for x in a.factors() {
                for y in b.factors() {
                    factors.push(tensor_affine(x, y)?);
                }
            }
            AlgebraPresentation::product(factors)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_const(nvars: usize, c: i64) -> Polynomial {
        Polynomial::from_i64(PolyRing::new(Domain::Integers, nvars, MonomialOrder::GrevLex), c)
    }

    fn affine(vars: &[&str], rels: Vec<Polynomial>) -> AffinePresentation {
        AffinePresentation::new(
            BaseRing::Integers,
            vars.iter().map(|s| s.to_string()).collect(),
            rels,
        )
        .unwrap()
    }

    #[test]
    fn concatenation() {
        let a = affine(&["x"], vec![z_const(1, 2)]).into();
        let b = affine(&["y"], vec![z_const(1, 3)]).into();
        let t = tensor_presentation(&a, &b).unwrap();
        let f = &t.factors()[0];
        assert_eq!(f.vars(), &["x", "y"]);
        assert_eq!(f.relations(), &[z_const(2, 2), z_const(2, 3)]);
    }

    #[test]
    fn clashing_names_are_renamed() {
        let a: AlgebraPresentation = affine(&["x"], vec![z_const(1, 2)]).into();
        let t = tensor_presentation(&a, &a).unwrap();
        assert_eq!(t.factors()[0].vars(), &["x_L", "x_R"]);
        assert_eq!(t.factors()[0].relations().len(), 2);
    }

    #[test]
    fn rename_avoids_existing_names() {
        let a: AlgebraPresentation = affine(&["x", "x_R"], vec![]).into();
        let b: AlgebraPresentation = affine(&["x"], vec![]).into();
        let t = tensor_presentation(&a, &b).unwrap();
        assert_eq!(t.factors()[0].vars(), &["x_L", "x_R", "x_R2"]);
    }

    #[test]
    fn products_distribute() {
        let a = AlgebraPresentation::boolean_atoms(2).unwrap();
        let b = affine(&["y"], vec![]).into();
        let t = tensor_presentation(&a, &b).unwrap();
        assert_eq!(t.factors().len(), 2);
        for f in t.factors() {
            assert_eq!(f.vars(), &["y"]);
            assert_eq!(f.relations(), &[z_const(1, 2)]);
        }
    }

    #[test]
    fn base_mismatch() {
        let a = affine(&["x"], vec![]).into();
        let b = AffinePresentation::polynomial_ring(BaseRing::Rationals, &["y"])
            .unwrap()
            .into();
        assert!(matches!(
            tensor_presentation(&a, &b),
            Err(Error::BaseMismatch { .. })
        ));
    }

    #[test]
    fn validation() {
        assert!(BaseRing::prime_field(4).is_err());
        assert!(BaseRing::integers_mod(1).is_err());
        assert!(AffinePresentation::polynomial_ring(BaseRing::Integers, &["x", "x"]).is_err());
        assert!(AffinePresentation::polynomial_ring(BaseRing::Integers, &["1x"]).is_err());
        assert!(AlgebraPresentation::boolean_atoms(0).is_err());
    }

    #[test]
    fn lift_to_integers() {
        let a = AffinePresentation::polynomial_ring(BaseRing::IntegersMod(12), &["x"]).unwrap();
        let z = a.over_integers().unwrap();
        assert_eq!(z.base(), BaseRing::Integers);
        assert_eq!(z.relations(), &[z_const(1, 12)]);
    }
}
