use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::prime_divisors;
use crate::dimension::DimensionValue;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_integer, characteristic};
use crate::presentation::{AffinePresentation, AlgebraPresentation, BaseRing};

use super::{affine_fibre, SpecPoint};

/// The effective primes of the base. With `cofinite` set the closed part is
/// every prime except `closed_points`; this only arises over ℤ in
/// characteristic 0, and then `includes_generic` is true.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EffectiveSpectrum {
    pub includes_generic: bool,
    pub closed_points: BTreeSet<u64>,
    pub cofinite: bool,
}

impl EffectiveSpectrum {
    pub fn empty() -> Self {
        EffectiveSpectrum {
            includes_generic: false,
            closed_points: BTreeSet::new(),
            cofinite: false,
        }
    }

    pub fn finite(includes_generic: bool, closed_points: impl IntoIterator<Item = u64>) -> Self {
        EffectiveSpectrum {
            includes_generic,
            closed_points: closed_points.into_iter().collect(),
            cofinite: false,
        }
    }

    /// Generic point and every closed prime outside `excluded`.
    pub fn cofinite(excluded: impl IntoIterator<Item = u64>) -> Self {
        EffectiveSpectrum {
            includes_generic: true,
            closed_points: excluded.into_iter().collect(),
            cofinite: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.includes_generic && !self.cofinite && self.closed_points.is_empty()
    }

    pub fn contains(&self, pt: SpecPoint) -> bool {
        match pt {
            SpecPoint::Generic => self.includes_generic,
            SpecPoint::Closed(p) => self.closed_points.contains(&p) != self.cofinite,
        }
    }

    pub fn has_closed_points(&self) -> bool {
        self.cofinite || !self.closed_points.is_empty()
    }

    /// The points, when there are finitely many.
    pub fn finite_points(&self) -> Option<Vec<SpecPoint>> {
        if self.cofinite {
            return None;
        }
        let mut out = Vec::new();
        if self.includes_generic {
            out.push(SpecPoint::Generic);
        }
        out.extend(self.closed_points.iter().map(|&p| SpecPoint::Closed(p)));
        Some(out)
    }

    /// Maximal effective primes: the closed points, or the generic point
    /// when it is the only one.
    pub fn maximal_points(&self) -> Option<Vec<SpecPoint>> {
        if self.has_closed_points() {
            return (!self.cofinite)
                .then(|| self.closed_points.iter().map(|&p| SpecPoint::Closed(p)).collect());
        }
        Some(if self.includes_generic {
            vec![SpecPoint::Generic]
        } else {
            Vec::new()
        })
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let generic = self.includes_generic && other.includes_generic;
        match (self.cofinite, other.cofinite) {
            (false, false) => Self::finite(
                generic,
                self.closed_points.intersection(&other.closed_points).copied(),
            ),
            (true, true) => Self::cofinite(self.closed_points.union(&other.closed_points).copied()),
            (true, false) => Self::finite(
                generic,
                other.closed_points.difference(&self.closed_points).copied(),
            ),
            (false, true) => other.intersect(self),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let generic = self.includes_generic || other.includes_generic;
        match (self.cofinite, other.cofinite) {
            (false, false) => {
                Self::finite(generic, self.closed_points.union(&other.closed_points).copied())
            }
            (true, true) => {
                Self::cofinite(self.closed_points.intersection(&other.closed_points).copied())
            }
            (true, false) => {
                Self::cofinite(self.closed_points.difference(&other.closed_points).copied())
            }
            (false, true) => other.union(self),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let s: Self = serde_json::from_str(text).map_err(|e| Error::Validation(e.to_string()))?;
        if s.cofinite && !s.includes_generic {
            return Err(Error::Validation(
                "a cofinite spectrum must include the generic point".into(),
            ));
        }
        Ok(s)
    }
}

/// Spectrum of one affine factor, plus the primes at which its fibre was
/// actually computed (the rest behave like the generic fibre).
pub(super) struct AffineSpectrum {
    pub spectrum: EffectiveSpectrum,
    pub tested: Vec<SpecPoint>,
}

fn effective_among(a: &AffinePresentation, primes: Vec<u64>) -> Result<Vec<u64>> {
    let flags = primes
        .par_iter()
        .map(|&p| Ok(!affine_fibre(a, SpecPoint::Closed(p))?.is_zero()?))
        .collect::<Result<Vec<bool>>>()?;
    Ok(primes.into_iter().zip(flags).filter(|(_, e)| *e).map(|(p, _)| p).collect())
}

pub(super) fn affine_spectrum(a: &AffinePresentation) -> Result<AffineSpectrum> {
    match a.base() {
        BaseRing::Rationals => {
            let e = !affine_fibre(a, SpecPoint::Generic)?.is_zero()?;
            Ok(AffineSpectrum {
                spectrum: EffectiveSpectrum::finite(e, []),
                tested: vec![SpecPoint::Generic],
            })
        }
        BaseRing::PrimeField(p) => {
            let eff = effective_among(a, vec![p])?;
            Ok(AffineSpectrum {
                spectrum: EffectiveSpectrum::finite(false, eff),
                tested: vec![SpecPoint::Closed(p)],
            })
        }
        BaseRing::IntegersMod(n) => {
            let primes = prime_divisors(&n.into())?;
            let eff = effective_among(a, primes.clone())?;
            Ok(AffineSpectrum {
                spectrum: EffectiveSpectrum::finite(false, eff),
                tested: primes.into_iter().map(SpecPoint::Closed).collect(),
            })
        }
        BaseRing::Integers => {
            let c = characteristic(&AlgebraPresentation::Affine(a.clone()))?;
            if !c.is_zero() {
                let primes = prime_divisors(&c)?;
                let eff = effective_among(a, primes.clone())?;
                return Ok(AffineSpectrum {
                    spectrum: EffectiveSpectrum::finite(false, eff),
                    tested: primes.into_iter().map(SpecPoint::Closed).collect(),
                });
            }
            // Away from the primes dividing a leading coefficient of the
            // strong basis, its reduction mod p is a basis of the fibre ideal
            // with the same leading monomials, none of them 1.
            let gb = buchberger_integer(a.ring(), a.relations())?;
            let mut candidates = BTreeSet::new();
            for g in gb.elements() {
                let lc = g.leading_coefficient().and_then(|c| c.as_integer()).expect("integer");
                candidates.extend(prime_divisors(&lc.abs())?);
            }
            let candidates: Vec<u64> = candidates.into_iter().collect();
            let eff = effective_among(a, candidates.clone())?;
            let excluded = candidates.iter().copied().filter(|p| !eff.contains(p));
            let mut tested = vec![SpecPoint::Generic];
            tested.extend(candidates.iter().map(|&p| SpecPoint::Closed(p)));
            Ok(AffineSpectrum {
                spectrum: EffectiveSpectrum::cofinite(excluded),
                tested,
            })
        }
    }
}

/// Primes of the base whose fibre ring is nonzero.
pub fn effective_spectrum(a: &AlgebraPresentation) -> Result<EffectiveSpectrum> {
    let mut acc = EffectiveSpectrum::empty();
    for f in a.factors() {
        acc = acc.union(&affine_spectrum(f)?.spectrum);
    }
    Ok(acc)
}

/// Length of the longest chain of effective primes: 1 exactly when the
/// generic point and some closed point of ℤ are both effective.
pub fn effective_dim(a: &AlgebraPresentation) -> Result<DimensionValue> {
    Ok(spectrum_dim(&effective_spectrum(a)?))
}

pub(crate) fn spectrum_dim(s: &EffectiveSpectrum) -> DimensionValue {
    if s.is_empty() {
        DimensionValue::Empty
    } else if s.includes_generic && s.has_closed_points() {
        DimensionValue::Finite(1)
    } else {
        DimensionValue::Finite(0)
    }
}

/// Supremum of the fibre dimensions over the effective spectrum. In the
/// cofinite case the untested primes share the generic fibre's leading
/// monomials and hence its dimension.
pub fn fibre_dim(a: &AlgebraPresentation) -> Result<DimensionValue> {
    let mut best = DimensionValue::Empty;
    for f in a.factors() {
        let s = affine_spectrum(f)?;
        for pt in s.tested {
            if s.spectrum.contains(pt) {
                best = best.sup(affine_fibre(f, pt)?.krull_dim()?);
            }
        }
    }
    Ok(best)
}
