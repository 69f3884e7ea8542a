use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

use super::{check_generators, tail, GroebnerBasis, GroebnerOptions, Strength};

/// Full reduction over a field.
pub(super) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rest = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let divisor = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading_term()?;
            gm.quotient_of(&m).map(|q| (g, q, gc))
        });
        match divisor {
            Some((g, q, gc)) => p = &p - &g.mul_term(&q, &c.div(gc)),
            None => {
                rest.push((m, c));
                p = tail(&p);
            }
        }
    }
    Polynomial::from_raw_unchecked(f.ring(), rest)
}

/// `lcm/lt(f) * f - lcm/lt(g) * g`.
pub fn s_polynomial_field(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some((fm, fc)), Some((gm, gc))) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(f.ring());
    };
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), &fc.inv().expect("field"));
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), &gc.inv().expect("field"));
    &a - &b
}

pub fn buchberger_field(ring: PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    buchberger_field_with(ring, gens, GroebnerOptions::default())
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties by index), returning the reduced basis.
pub fn buchberger_field_with(
    ring: PolyRing,
    gens: &[Polynomial],
    options: GroebnerOptions,
) -> Result<GroebnerBasis> {
    if !ring.domain.is_field() {
        return Err(Error::WrongDomain(
            "buchberger_field needs F_p or Q coefficients; use buchberger_integer over Z".into(),
        ));
    }
    let mut basis: Vec<Polynomial> = check_generators(ring, gens)?
        .iter()
        .map(Polynomial::monic)
        .collect();
    let unit = || GroebnerBasis {
        ring,
        elements: vec![Polynomial::one(ring)],
        strength: Strength::FieldReduced,
    };
    if basis.iter().any(Polynomial::is_constant) {
        return Ok(unit());
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pending.iter().min_by_key(|&&(i, j)| {
        let l = basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap());
        (l.degree(), i, j)
    }) {
        pending.remove(&(i, j));
        let (mi, mj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if options.pair_pruning {
            if mi.is_coprime(mj) {
                continue;
            }
            let l = mi.lcm(mj);
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].leading_monomial().unwrap().divides(&l)
                    && !pending.contains(&key(i, k))
                    && !pending.contains(&key(j, k))
            });
            if chain {
                continue;
            }
        }
        let r = reduce(&s_polynomial_field(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit());
        }
        let n = basis.len();
        basis.push(r.monic());
        for k in 0..n {
            pending.insert((k, n));
        }
    }

    Ok(GroebnerBasis {
        ring,
        elements: reduce_basis(basis),
        strength: Strength::FieldReduced,
    })
}

/// Minimal, then fully inter-reduced and monic; sorted by descending leading
/// monomial.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = match basis.first() {
        Some(p) => p.order(),
        None => return basis,
    };
    basis.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, p)| p.clone())
            .collect();
        minimal[i] = reduce(&minimal[i], &others).monic();
    }
    minimal.reverse();
    minimal
}
