//! Strong Gröbner bases over ℤ via S- and G-polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::{Coefficient, Domain};
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};
use crate::presentation::{AffinePresentation, AlgebraPresentation, BaseRing};

use super::{check_generators, tail, GroebnerBasis, Strength};

fn int(c: &Coefficient) -> &BigInt {
    c.as_integer().expect("integer coefficient")
}

fn coeff(v: BigInt) -> Coefficient {
    Coefficient::Integer(v)
}

/// Reduce every term to its non-negative Euclidean remainder against the
/// first basis element whose leading monomial divides it.
pub(super) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rest = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let step = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading_term()?;
            let q = gm.quotient_of(&m)?;
            let quot = int(&c).div_floor(int(gc));
            (!quot.is_zero()).then_some((g, q, quot))
        });
        match step {
            Some((g, q, quot)) => p = &p - &g.mul_term(&q, &coeff(quot)),
            None => {
                rest.push((m, c));
                p = tail(&p);
            }
        }
    }
    Polynomial::from_raw_unchecked(f.ring(), rest)
}

/// Remove tail terms that some leading term divides outright, coefficient
/// included; partial remainders are left alone so `{2, x - 1}` stays put.
fn reduce_exact(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rest = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let step = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading_term()?;
            let q = gm.quotient_of(&m)?;
            (int(&c) % int(gc)).is_zero().then(|| (g, q, int(&c) / int(gc)))
        });
        match step {
            Some((g, q, quot)) => p = &p - &g.mul_term(&q, &coeff(quot)),
            None => {
                rest.push((m, c));
                p = tail(&p);
            }
        }
    }
    Polynomial::from_raw_unchecked(f.ring(), rest)
}

/// `(c/a) (L/m_f) f - (c/b) (L/m_g) g` with `L` the monomial lcm and `c` the
/// coefficient lcm of the leading terms `a m_f`, `b m_g`.
pub fn s_polynomial_integer(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some((fm, fc)), Some((gm, gc))) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(f.ring());
    };
    let (a, b) = (int(fc), int(gc));
    let l = fm.lcm(gm);
    let c = a.lcm(b);
    let left = f.mul_term(&fm.quotient_of(&l).unwrap(), &coeff(&c / a));
    let right = g.mul_term(&gm.quotient_of(&l).unwrap(), &coeff(&c / b));
    &left - &right
}

/// `u (L/m_f) f + v (L/m_g) g` where `u a + v b = gcd(a, b)`. `None` when one
/// leading coefficient divides the other, in which case it reduces to zero
/// by the element with the smaller coefficient.
pub fn g_polynomial(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let ((fm, fc), (gm, gc)) = (f.leading_term()?, g.leading_term()?);
    let (a, b) = (int(fc), int(gc));
    if (b % a).is_zero() || (a % b).is_zero() {
        return None;
    }
    let e = a.extended_gcd(b);
    let l = fm.lcm(gm);
    let left = f.mul_term(&fm.quotient_of(&l).unwrap(), &coeff(e.x));
    let right = g.mul_term(&gm.quotient_of(&l).unwrap(), &coeff(e.y));
    Some(&left + &right)
}

fn strongly_divides(h: &Polynomial, g: &Polynomial) -> bool {
    let ((hm, hc), (gm, gc)) = (h.leading_term().unwrap(), g.leading_term().unwrap());
    hm.divides(gm) && (int(gc) % int(hc)).is_zero()
}

/// Strong Gröbner basis of the ideal generated by `gens` in `ℤ[x_1..x_n]`.
pub fn buchberger_integer(ring: PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    if ring.domain != Domain::Integers {
        return Err(Error::WrongDomain(format!(
            "buchberger_integer needs integer coefficients, got {}",
            ring.domain
        )));
    }
    let mut basis: Vec<Polynomial> = check_generators(ring, gens)?
        .iter()
        .map(Polynomial::with_positive_lead)
        .collect();
    let unit = || GroebnerBasis {
        ring,
        elements: vec![Polynomial::one(ring)],
        strength: Strength::IntegerStrong,
    };

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    if basis.iter().any(|g| g.is_constant() && int(g.leading_coefficient().unwrap()).is_one()) {
        return Ok(unit());
    }
    while let Some(&(i, j)) = pending.iter().min_by_key(|&&(i, j)| {
        let l = basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap());
        (l.degree(), i, j)
    }) {
        pending.remove(&(i, j));
        let candidates = [
            Some(s_polynomial_integer(&basis[i], &basis[j])),
            g_polynomial(&basis[i], &basis[j]),
        ];
        for p in candidates.into_iter().flatten() {
            let r = reduce(&p, &basis);
            if r.is_zero() {
                continue;
            }
            if r.is_constant() && int(r.leading_coefficient().unwrap()).abs().is_one() {
                return Ok(unit());
            }
            let n = basis.len();
            basis.push(r.with_positive_lead());
            for k in 0..n {
                pending.insert((k, n));
            }
        }
    }

    Ok(GroebnerBasis {
        ring,
        elements: reduce_basis(basis),
        strength: Strength::IntegerStrong,
    })
}

/// Drop elements whose leading term is strongly divisible by another's, then
/// clear exactly divisible tail terms; sorted by descending leading monomial, then coefficient.
fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut kept: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i
                && strongly_divides(h, g)
                && (!strongly_divides(g, h) || k < i)
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let g = &kept[i];
        let lead = Polynomial::from_raw_unchecked(g.ring(), vec![g.leading_term().unwrap().clone()]);
        kept[i] = &lead + &reduce_exact(&tail(g), &others);
    }
    if let Some(order) = kept.first().map(Polynomial::order) {
        kept.sort_by(|a, b| {
            order
                .compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
                .then_with(|| int(a.leading_coefficient().unwrap()).cmp(int(b.leading_coefficient().unwrap())))
        });
    }
    kept
}

/// Non-negative generator of `(relations) ∩ ℤ`: the constant element of the
/// strong basis, 0 if there is none. The zero ring has characteristic 1.
pub fn characteristic_of_relations(ring: PolyRing, relations: &[Polynomial]) -> Result<BigInt> {
    let gb = buchberger_integer(ring, relations)?;
    Ok(gb
        .elements()
        .iter()
        .find(|g| g.is_constant())
        .map(|g| int(g.leading_coefficient().unwrap()).abs())
        .unwrap_or_else(BigInt::zero))
}

fn affine_characteristic(a: &AffinePresentation) -> Result<BigInt> {
    match a.base() {
        BaseRing::Integers | BaseRing::IntegersMod(_) => {
            let ring = a.ring().with_domain(Domain::Integers);
            characteristic_of_relations(ring, &a.integer_relations()?)
        }
        other => Err(Error::UnsupportedBase(format!(
            "characteristic is computed for bases Z and Zmod, got {other}"
        ))),
    }
}

/// Characteristic of an algebra over ℤ or ℤ/n; for a product the lcm of the
/// factor characteristics (0 if any factor has characteristic 0).
pub fn characteristic(a: &AlgebraPresentation) -> Result<BigInt> {
    let mut acc = BigInt::one();
    for f in a.factors() {
        let c = affine_characteristic(f)?;
        if c.is_zero() {
            return Ok(c);
        }
        acc = acc.lcm(&c);
    }
    Ok(acc)
}
