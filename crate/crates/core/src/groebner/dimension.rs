//! Krull dimension of affine algebras over a field from the leading
//! monomials of a Gröbner basis: the largest set of variables containing the
//! support of no leading monomial.

use crate::dimension::DimensionValue;
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

use super::buchberger_field;

fn minimal_supports(supports: &[u64]) -> Vec<u64> {
    let mut s: Vec<u64> = supports.to_vec();
    s.sort_by_key(|m| (m.count_ones(), *m));
    s.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in s {
        if !out.iter().any(|&k| (k & m) == k) {
            out.push(m);
        }
    }
    out
}

fn independent(set: u64, supports: &[u64]) -> bool {
    supports.iter().all(|&m| m & !set != 0)
}

/// Depth-first search adding variables in increasing index order, pruned by
/// the size bound. Independence is closed under subsets, so every
/// independent set is reached along exactly one path.
pub fn independent_set_dimension(nvars: usize, supports: &[u64]) -> usize {
    assert!(nvars <= 64, "at most 64 variables");
    let supports = minimal_supports(supports);
    if supports.contains(&0) {
        return 0;
    }
    fn dfs(next: usize, set: u64, size: usize, n: usize, supports: &[u64], best: &mut usize) {
        *best = (*best).max(size);
        for v in next..n {
            if size + (n - v) <= *best {
                return;
            }
            let grown = set | (1 << v);
            if independent(grown, supports) {
                dfs(v + 1, grown, size + 1, n, supports, best);
            }
        }
    }
    let mut best = 0;
    dfs(0, 0, 0, nvars, &supports, &mut best);
    best
}

/// Reference path: test all `2^n` subsets.
pub fn independent_set_dimension_exhaustive(nvars: usize, supports: &[u64]) -> usize {
    assert!(nvars < 32, "exhaustive search is for small rings");
    (0u64..1 << nvars)
        .filter(|&s| independent(s, supports))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Krull dimension of `k[x_1..x_n] / (relations)` over a field `k`; `Empty`
/// for the zero ring.
pub fn krull_dim_affine(ring: PolyRing, relations: &[Polynomial]) -> Result<DimensionValue> {
    if !ring.domain.is_field() {
        return Err(Error::WrongDomain(
            "Krull dimension via independent sets needs field coefficients".into(),
        ));
    }
    let gb = buchberger_field(ring, relations)?;
    if gb.is_trivial() {
        return Ok(DimensionValue::Empty);
    }
    let supports: Vec<u64> = gb.leading_monomials().map(|m| m.support()).collect();
    Ok(DimensionValue::Finite(
        independent_set_dimension(ring.nvars, &supports) as u64,
    ))
}
