//! Gröbner bases over fields (reduced) and over ℤ (strong).

mod dimension;
mod field;
mod integer;

use std::fmt;

use crate::coeff::Domain;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

pub use dimension::{
    independent_set_dimension, independent_set_dimension_exhaustive, krull_dim_affine,
};
pub use field::{buchberger_field, buchberger_field_with, s_polynomial_field};
pub use integer::{
    buchberger_integer, characteristic, characteristic_of_relations, g_polynomial,
    s_polynomial_integer,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    /// Monic, pairwise reduced basis over a field.
    FieldReduced,
    /// Every ideal element has its leading term (coefficient included)
    /// divisible by the leading term of a basis element.
    IntegerStrong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Skip pairs by the coprime-leading-monomial and chain criteria (fields only).
    pub pair_pruning: bool,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions { pair_pruning: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Polynomial>,
    strength: Strength,
}

impl GroebnerBasis {
    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn strength(&self) -> Strength {
        self.strength
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(Polynomial::leading_monomial)
    }

    /// True iff the ideal is the whole ring.
    pub fn is_trivial(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.is_constant() && g.leading_coefficient().is_some_and(|c| c.is_unit()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// All S-polynomials of basis pairs, plus the G-polynomials over ℤ. For a
    /// valid basis each of these has normal form zero.
    pub fn pair_polynomials(&self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let (f, g) = (&self.elements[i], &self.elements[j]);
                match self.strength {
                    Strength::FieldReduced => out.push(s_polynomial_field(f, g)),
                    Strength::IntegerStrong => {
                        out.push(s_polynomial_integer(f, g));
                        if let Some(gp) = g_polynomial(f, g) {
                            out.push(gp);
                        }
                    }
                }
            }
        }
        out
    }

    /// One polynomial per line, terms in order.
    pub fn dump(&self, names: &[String]) -> String {
        let mut s = String::new();
        for g in &self.elements {
            s.push_str(&g.render(names));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.ring.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.dump(&names))
    }
}

/// Groebner basis in whichever flavour the coefficient domain calls for.
pub fn groebner_basis(ring: PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    match ring.domain {
        Domain::Integers => buchberger_integer(ring, gens),
        _ => buchberger_field(ring, gens),
    }
}

/// Remainder of `f` modulo the basis. Over ℤ each term is reduced to its
/// non-negative Euclidean remainder, so membership is decided exactly.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    let (a, b) = (f.ring(), gb.ring);
    if a.domain != b.domain {
        return Err(Error::DomainMismatch {
            left: a.domain,
            right: b.domain,
        });
    }
    if a.nvars != b.nvars {
        return Err(Error::ArityMismatch {
            left: a.nvars,
            right: b.nvars,
        });
    }
    if a.order != b.order {
        return Err(Error::OrderMismatch);
    }
    Ok(match gb.strength {
        Strength::FieldReduced => field::reduce(f, &gb.elements),
        Strength::IntegerStrong => integer::reduce(f, &gb.elements),
    })
}

pub fn is_trivial(gb: &GroebnerBasis) -> bool {
    gb.is_trivial()
}

pub(crate) fn check_generators(ring: PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    gens.iter()
        .map(|g| {
            if g.domain() != ring.domain {
                return Err(Error::DomainMismatch {
                    left: ring.domain,
                    right: g.domain(),
                });
            }
            if g.nvars() != ring.nvars {
                return Err(Error::ArityMismatch {
                    left: ring.nvars,
                    right: g.nvars(),
                });
            }
            Ok(g.with_order(ring.order))
        })
        .filter(|g| !matches!(g, Ok(p) if p.is_zero()))
        .collect()
}

/// Drop the leading term.
pub(crate) fn tail(p: &Polynomial) -> Polynomial {
    Polynomial::from_raw_unchecked(p.ring(), p.terms()[1..].to_vec())
}
