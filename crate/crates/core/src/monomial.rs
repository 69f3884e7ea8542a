//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector with one slot per ring variable; all zeros is the monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    /// Insert `before` zero slots in front and `after` behind.
    pub fn embed(&self, before: usize, after: usize) -> Monomial {
        let mut e = vec![0; before];
        e.extend_from_slice(&self.0);
        e.extend(std::iter::repeat_n(0, after));
        Monomial(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, x_1 > x_2 > ... > x_n.
    #[default]
    GrevLex,
    /// Pure lexicographic, x_1 > x_2 > ... > x_n.
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // x*z^2 < y^3 in grevlex but not in lex
        assert_eq!(o.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])),
            Ordering::Greater
        );
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(
            a in proptest::collection::vec(0u32..4, 3),
            b in proptest::collection::vec(0u32..4, 3),
            c in proptest::collection::vec(0u32..4, 3),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for o in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
                prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&c), &b.mul(&c)));
                prop_assert_ne!(o.compare(&a.mul(&c), &Monomial::one(3)), Ordering::Less);
            }
        }
    }
}
