use crate::dimension::DimensionValue;
use crate::error::{Error, Result};
use crate::spectra::{height_at, AffineFibre, ComponentList, PrimeWitness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DMode {
    /// `d + dim(fibre)`.
    ClosedFormAffine,
    /// `max ht(P) + min(s, d + dim(fibre/P))` over the given primes.
    WitnessRestricted {
        primes: Vec<PrimeWitness>,
        components: ComponentList,
    },
}

/// `D(s, d, F) = sup_P ht(P) + min(s, d + t.d.(F/P))` for a fibre ring `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DValueRequest {
    pub s: u64,
    pub d: u64,
    pub fibre: AffineFibre,
    pub mode: DMode,
}

/// The closed form is exact for affine fibres: a maximal ideal of largest
/// height attains `dim F + d`, and `ht P + t.d.(F/P) ≤ dim F` bounds every
/// term. Witness mode gives the supremum over the supplied primes only.
pub fn d_value(req: &DValueRequest) -> Result<DimensionValue> {
    if req.d > req.s {
        return Err(Error::InvalidRequest(format!(
            "D(s, d, -) needs d <= s, got s = {}, d = {}",
            req.s, req.d
        )));
    }
    match &req.mode {
        DMode::ClosedFormAffine => match req.fibre.krull_dim()? {
            DimensionValue::Empty => Err(Error::InvalidRequest(
                "the closed form needs a nonzero fibre ring".into(),
            )),
            DimensionValue::Finite(dim) => Ok(DimensionValue::Finite(req.d + dim)),
        },
        DMode::WitnessRestricted { primes, components } => {
            let mut best = DimensionValue::Empty;
            for p in primes {
                let ht = height_at(&req.fibre, p, components)?;
                let q = req.fibre.quotient_dim(&p.generators)?;
                let term = match (ht, q) {
                    (DimensionValue::Finite(h), DimensionValue::Finite(q)) => {
                        DimensionValue::Finite(h + req.s.min(req.d + q))
                    }
                    _ => DimensionValue::Empty,
                };
                best = best.sup(term);
            }
            Ok(best)
        }
    }
}
