use serde::{Deserialize, Serialize};

use crate::dimension::DimensionValue;
use crate::dsl::parse_polynomial;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_field, normal_form, GroebnerBasis};
use crate::poly::Polynomial;
use crate::presentation::AlgebraPresentation;

use super::{fibre_at, AffineFibre, SpecPoint};

/// Generators of an ideal of a fibre ring, asserted prime by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeWitness {
    pub generators: Vec<Polynomial>,
}

/// The minimal primes of a fibre ring, as asserted by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentList(pub Vec<PrimeWitness>);

impl PrimeWitness {
    pub fn new(generators: Vec<Polynomial>) -> Self {
        PrimeWitness { generators }
    }

    /// Basis of `relations + (generators)`.
    fn basis(&self, fr: &AffineFibre) -> Result<GroebnerBasis> {
        let mut gens = fr.relations().to_vec();
        gens.extend(self.generators.iter().cloned());
        buchberger_field(fr.ring(), &gens)
    }

    fn proper_basis(&self, fr: &AffineFibre, what: &str) -> Result<GroebnerBasis> {
        let gb = self.basis(fr)?;
        if gb.is_trivial() {
            return Err(Error::InconsistentWitness(format!("{what} is the unit ideal")));
        }
        Ok(gb)
    }

    fn contained_in(&self, other: &GroebnerBasis) -> Result<bool> {
        for g in &self.generators {
            if !normal_form(g, other)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn finite(d: DimensionValue) -> u64 {
    d.finite().expect("proper ideal has a finite dimension")
}

struct Checked {
    /// `dim(fr/P)`
    quotient_dim: u64,
    /// `dim(fr/q)` for the components `q ⊆ P`.
    below: Vec<u64>,
}

fn check(fr: &AffineFibre, p: &PrimeWitness, comps: &ComponentList) -> Result<Checked> {
    let p_gb = p.proper_basis(fr, "the prime witness")?;
    let mut comp_gbs = Vec::with_capacity(comps.0.len());
    for (i, q) in comps.0.iter().enumerate() {
        comp_gbs.push(q.proper_basis(fr, &format!("component {i}"))?);
    }
    for (i, q) in comps.0.iter().enumerate() {
        for (j, gb) in comp_gbs.iter().enumerate() {
            if i != j && q.contained_in(gb)? {
                return Err(Error::InconsistentWitness(format!(
                    "component {i} is contained in component {j}, so they are not all minimal"
                )));
            }
        }
    }
    let mut below = Vec::new();
    for q in &comps.0 {
        if q.contained_in(&p_gb)? {
            below.push(finite(fr.quotient_dim(&q.generators)?));
        }
    }
    if below.is_empty() {
        return Err(Error::InconsistentWitness(
            "the prime contains none of the listed components".into(),
        ));
    }
    let quotient_dim = finite(fr.quotient_dim(&p.generators)?);
    if below.iter().any(|&d| d < quotient_dim) {
        return Err(Error::Inconsistency(
            "a component below the prime has smaller dimension".into(),
        ));
    }
    Ok(Checked { quotient_dim, below })
}

/// `ht(P)` in the fibre: the largest `dim(fr/q) - dim(fr/P)` over listed
/// components `q ⊆ P`. Exact when `comps` are the minimal primes, since
/// affine algebras are catenary.
pub fn height_at(fr: &AffineFibre, p: &PrimeWitness, comps: &ComponentList) -> Result<DimensionValue> {
    let c = check(fr, p, comps)?;
    let h = c.below.iter().map(|d| d - c.quotient_dim).max().unwrap();
    Ok(DimensionValue::Finite(h))
}

/// The altitude formula `ht_p(P) + t.d._p(A/P) = t.d._p(A_P)` at one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AfReport {
    pub height: DimensionValue,
    pub td_quotient: DimensionValue,
    pub td_local: DimensionValue,
    pub holds: bool,
}

pub fn verify_af_at_prime(
    a: &AlgebraPresentation,
    pt: SpecPoint,
    factor: usize,
    p: &PrimeWitness,
    comps: &ComponentList,
) -> Result<AfReport> {
    let fibre = fibre_at(a, pt)?;
    let fr = fibre.factors().get(factor).ok_or_else(|| {
        Error::InvalidRequest(format!(
            "factor {factor} out of range ({} factors)",
            fibre.factors().len()
        ))
    })?;
    if fr.is_zero()? {
        return Err(Error::InvalidRequest(format!(
            "point {pt} is not effective for factor {factor}"
        )));
    }
    let height = height_at(fr, p, comps)?;
    let c = check(fr, p, comps)?;
    let td_quotient = DimensionValue::Finite(c.quotient_dim);
    let td_local = DimensionValue::Finite(*c.below.iter().max().unwrap());
    Ok(AfReport {
        height,
        td_quotient,
        td_local,
        holds: height.plus(td_quotient) == td_local,
    })
}

/// Witness file contents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub fibre: SpecPoint,
    #[serde(default)]
    pub factor: usize,
    pub prime: Vec<String>,
    pub components: Vec<Vec<String>>,
}

/// A parsed witness, bound to its fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub point: SpecPoint,
    pub factor: usize,
    pub fibre: AffineFibre,
    pub prime: PrimeWitness,
    pub components: ComponentList,
}

fn parse_ideal(fr: &AffineFibre, gens: &[String]) -> Result<PrimeWitness> {
    gens.iter()
        .map(|t| {
            parse_polynomial(t, fr.vars(), fr.ring()).map_err(|e| {
                Error::Validation(format!("witness polynomial `{t}`: {} at offset {}", e.message, e.offset))
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(PrimeWitness::new)
}

/// Parse a witness document against the algebra it refers to.
pub fn parse_witness(text: &str, a: &AlgebraPresentation) -> Result<Witness> {
    let doc: WitnessDoc = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let fibre = fibre_at(a, doc.fibre)?;
    let fr = fibre
        .factors()
        .get(doc.factor)
        .ok_or_else(|| Error::Validation(format!("factor {} out of range", doc.factor)))?
        .clone();
    let prime = parse_ideal(&fr, &doc.prime)?;
    let components = doc
        .components
        .iter()
        .map(|c| parse_ideal(&fr, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Witness {
        point: doc.fibre,
        factor: doc.factor,
        fibre: fr,
        prime,
        components: ComponentList(components),
    })
}
