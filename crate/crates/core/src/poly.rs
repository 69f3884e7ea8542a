//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

/// Coefficient domain, number of variables and active order shared by a
/// family of polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub domain: Domain,
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(domain: Domain, nvars: usize, order: MonomialOrder) -> Self {
        PolyRing {
            domain,
            nvars,
            order,
        }
    }

    pub fn with_domain(self, domain: Domain) -> Self {
        PolyRing { domain, ..self }
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        PolyRing { order, ..self }
    }

    fn check(&self, other: &PolyRing) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }
}

/// Terms are kept strictly descending in `ring.order`, with no zero
/// coefficients and no repeated monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Coefficient)>,
}

/// Merge, sort and drop zeros. The only way raw term lists become polynomials.
pub fn normalize(
    ring: PolyRing,
    raw: Vec<(Monomial, Coefficient)>,
) -> Result<Polynomial> {
    for (m, c) in &raw {
        if c.domain() != ring.domain {
            return Err(Error::DomainMismatch {
                left: ring.domain,
                right: c.domain(),
            });
        }
        if m.nvars() != ring.nvars {
            return Err(Error::ArityMismatch {
                left: ring.nvars,
                right: m.nvars(),
            });
        }
    }
    Ok(Polynomial::from_raw_unchecked(ring, raw))
}

/// Product of two polynomials over the same ring.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_mul(b)
}

impl Polynomial {
    pub(crate) fn from_raw_unchecked(
        ring: PolyRing,
        mut raw: Vec<(Monomial, Coefficient)>,
    ) -> Polynomial {
        let order = ring.order;
        raw.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut terms: Vec<(Monomial, Coefficient)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { ring, terms }
    }

    pub fn zero(ring: PolyRing) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: PolyRing, c: Coefficient) -> Self {
        Self::from_raw_unchecked(ring, vec![(Monomial::one(ring.nvars), c)])
    }

    pub fn from_i64(ring: PolyRing, v: i64) -> Self {
        Self::constant(ring, Coefficient::from_i64(ring.domain, v))
    }

    pub fn one(ring: PolyRing) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn var(ring: PolyRing, index: usize) -> Self {
        Polynomial {
            ring,
            terms: vec![(Monomial::var(index, ring.nvars), Coefficient::one(ring.domain))],
        }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn domain(&self) -> Domain {
        self.ring.domain
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn terms(&self) -> &[(Monomial, Coefficient)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coefficient)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Re-sort the terms for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.ring.order {
            return self.clone();
        }
        Self::from_raw_unchecked(self.ring.with_order(order), self.terms.clone())
    }

    /// Map integer coefficients into `target` (ℤ → F_p reduces, ℤ → ℚ embeds).
    pub fn map_domain(&self, target: Domain) -> Result<Polynomial> {
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                c.map_to(target)
                    .map(|c| (m.clone(), c))
                    .ok_or(Error::DomainMismatch {
                        left: self.domain(),
                        right: target,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw_unchecked(self.ring.with_domain(target), raw))
    }

    /// Place the variables at offset `before` inside a ring of
    /// `before + nvars + after` variables.
    pub fn embed(&self, before: usize, after: usize) -> Polynomial {
        let ring = PolyRing {
            nvars: self.ring.nvars + before + after,
            ..self.ring
        };
        Polynomial {
            ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.embed(before, after), c.clone()))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let order = self.ring.order;
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.compare(&a.0, &b.0) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.1.add(&b.1);
                    if !c.is_zero() {
                        terms.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Self::from_raw_unchecked(self.ring, raw)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a.mul(c)))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    /// Multiply by the single term `c * m`. Order is preserved because monomial
    /// orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), a.mul(c)))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Divide by the leading coefficient (fields only).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("monic over a field")),
            _ => self.clone(),
        }
    }

    /// Over ℤ: flip the sign so the leading coefficient is positive.
    pub fn with_positive_lead(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if lc.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Evaluate at a point given as one coefficient per variable.
    pub fn evaluate(&self, point: &[Coefficient]) -> Coefficient {
        let mut acc = Coefficient::zero(self.domain());
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Render with the given variable names using `+ - * ^`. Rational
    /// coefficients are scaled by the common denominator first, so the
    /// output only contains integer literals.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let scaled;
        let poly = if let Domain::Rationals = self.domain() {
            let den = self.terms.iter().fold(BigInt::one(), |acc, (_, c)| match c {
                Coefficient::Rational(r) => acc.lcm(r.denom()),
                _ => acc,
            });
            scaled = self.scale(&Coefficient::from_bigint(Domain::Rationals, &den));
            &scaled
        } else {
            self
        };
        let mut out = String::new();
        for (i, (m, c)) in poly.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(coefficient_literal(&abs));
            }
            for (name, &e) in names.iter().zip(m.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

fn coefficient_literal(c: &Coefficient) -> String {
    match c {
        Coefficient::Rational(r) if r.is_integer() => r.numer().abs().to_string(),
        other => other.to_string(),
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Content of an integer polynomial (gcd of coefficients), zero for 0.
pub fn integer_content(p: &Polynomial) -> BigInt {
    p.terms()
        .iter()
        .filter_map(|(_, c)| c.as_integer())
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(domain: Domain, n: usize) -> PolyRing {
        PolyRing::new(domain, n, MonomialOrder::GrevLex)
    }

    fn term(domain: Domain, e: &[u32], c: i64) -> (Monomial, Coefficient) {
        (
            Monomial::from_exponents(e.to_vec()),
            Coefficient::from_i64(domain, c),
        )
    }

    #[test]
    fn normalize_merges_terms() {
        let z = Domain::Integers;
        let p = normalize(ring(z, 1), vec![term(z, &[1], 1), term(z, &[1], 1)]).unwrap();
        assert_eq!(p.terms(), &[term(z, &[1], 2)]);
    }

    #[test]
    fn normalize_drops_multiples_of_p() {
        let f3 = Domain::PrimeField(3);
        let p = normalize(ring(f3, 1), vec![term(f3, &[2], 3), term(f3, &[1], 1)]).unwrap();
        assert_eq!(p.terms(), &[term(f3, &[1], 1)]);
    }

    #[test]
    fn normalize_empty_is_zero() {
        let p = normalize(ring(Domain::Rationals, 2), vec![]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn normalize_rejects_mixed_domains() {
        let err = normalize(
            ring(Domain::Integers, 1),
            vec![term(Domain::Integers, &[1], 1), term(Domain::Rationals, &[0], 1)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::DomainMismatch { .. }));
    }

    #[test]
    fn products() {
        let q = ring(Domain::Rationals, 1);
        let x = Polynomial::var(q, 0);
        let one = Polynomial::one(q);
        let prod = poly_mul(&(&x + &one), &(&x - &one)).unwrap();
        assert_eq!(prod, &x.pow(2) - &one);
        assert!(poly_mul(&x, &Polynomial::zero(q)).unwrap().is_zero());

        let f2 = ring(Domain::PrimeField(2), 1);
        let x = Polynomial::var(f2, 0);
        let one = Polynomial::one(f2);
        assert_eq!((&x + &one).pow(2), &x.pow(2) + &one);
    }

    #[test]
    fn mul_rejects_mismatch() {
        let a = Polynomial::one(ring(Domain::Integers, 1));
        let b = Polynomial::one(ring(Domain::Rationals, 1));
        assert!(matches!(poly_mul(&a, &b), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn render_examples() {
        let z = ring(Domain::Integers, 2);
        let names = vec!["x".to_string(), "y".to_string()];
        let x = Polynomial::var(z, 0);
        let y = Polynomial::var(z, 1);
        let p = &(&x.pow(2).scale(&Coefficient::from_i64(Domain::Integers, 3)) - &(&x * &y))
            - &Polynomial::from_i64(z, 7);
        assert_eq!(p.render(&names), "3*x^2 - x*y - 7");
        assert_eq!(Polynomial::zero(z).render(&names), "0");
        assert_eq!(x.neg().render(&names), "-x");
    }

    fn arb_poly(domain: Domain) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, 2), -5i64..5),
            0..5,
        )
        .prop_map(move |ts| {
            let raw = ts
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Coefficient::from_i64(domain, c)))
                .collect();
            normalize(ring(domain, 2), raw).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_laws_over_z(a in arb_poly(Domain::Integers), b in arb_poly(Domain::Integers), c in arb_poly(Domain::Integers)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn ring_laws_over_f3(a in arb_poly(Domain::PrimeField(3)), b in arb_poly(Domain::PrimeField(3)), c in arb_poly(Domain::PrimeField(3))) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn normalize_is_idempotent(ts in proptest::collection::vec((proptest::collection::vec(0u32..3, 2), -5i64..5), 0..8)) {
            let z = Domain::Integers;
            let raw: Vec<_> = ts.into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Coefficient::from_i64(z, c)))
                .collect();
            let once = normalize(ring(z, 2), raw).unwrap();
            let twice = normalize(ring(z, 2), once.terms().to_vec()).unwrap();
            prop_assert_eq!(&once, &twice);
            let sorted = once.terms().windows(2).all(|w| {
                MonomialOrder::GrevLex.compare(&w[0].0, &w[1].0) == Ordering::Greater
            });
            prop_assert!(sorted);
            prop_assert!(once.terms().iter().all(|(_, c)| !c.is_zero()));
        }
    }
}
