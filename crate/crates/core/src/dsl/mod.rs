//! JSON presentation format.
//!
//! ```text
//! affine  : {"base": {"kind": "Z" | "Zmod" | "Fp" | "Q", "n": <int>}, "vars": [...], "relations": [...]}
//! product : {"product": [<affine>, ...]}
//! sugar   : {"boolean_atoms": <k>}
//! ```
//!
//! `n` is present exactly for `Zmod` and `Fp`. Relations use the grammar in
//! [`expr`].

pub mod expr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::PolyRing;
use crate::presentation::{AffinePresentation, AlgebraPresentation, BaseRing};

pub use expr::{parse_polynomial, ExprError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineDoc {
    pub base: BaseDoc,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Serialize)]
struct ProductDoc<'a> {
    product: &'a [AffineDoc],
}

impl BaseDoc {
    pub fn from_base(base: BaseRing) -> Self {
        let (kind, n) = match base {
            BaseRing::Integers => ("Z", None),
            BaseRing::IntegersMod(n) => ("Zmod", Some(n)),
            BaseRing::PrimeField(p) => ("Fp", Some(p)),
            BaseRing::Rationals => ("Q", None),
        };
        BaseDoc {
            kind: kind.to_string(),
            n,
        }
    }

    pub fn to_base(&self) -> Result<BaseRing> {
        match (self.kind.as_str(), self.n) {
            ("Z", None) => Ok(BaseRing::Integers),
            ("Q", None) => Ok(BaseRing::Rationals),
            ("Zmod", Some(n)) => BaseRing::integers_mod(n),
            ("Fp", Some(p)) => BaseRing::prime_field(p),
            ("Z" | "Q", Some(_)) => Err(Error::Validation(format!(
                "base kind {} takes no modulus",
                self.kind
            ))),
            ("Zmod" | "Fp", None) => Err(Error::Validation(format!(
                "base kind {} requires a modulus `n`",
                self.kind
            ))),
            (other, _) => Err(Error::Validation(format!("unknown base kind `{other}`"))),
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Locates relation literals in the source so expression errors can point
/// into the document.
struct Locator<'a> {
    text: &'a str,
    cursor: usize,
}

impl Locator<'_> {
    fn enter_factor(&mut self, index: usize) {
        let mut pos = 0;
        for _ in 0..=index {
            match self.text[pos..].find("\"relations\"") {
                Some(p) => pos += p + 1,
                None => return,
            }
        }
        self.cursor = pos;
    }

    fn error(&mut self, literal: &str, e: &ExprError) -> Error {
        let quoted = serde_json::to_string(literal).expect("string");
        let found = self.text[self.cursor..].find(&quoted).map(|p| p + self.cursor);
        let (line, column) = match found {
            // +1 skips the opening quote; exact while the literal has no escapes
            Some(p) => {
                self.cursor = p + quoted.len();
                line_col(self.text, p + 1 + e.offset)
            }
            None => (1, e.offset + 1),
        };
        Error::Syntax {
            line,
            column,
            message: e.message.clone(),
        }
    }
}

fn affine_from_doc(
    doc: &AffineDoc,
    order: MonomialOrder,
    locator: &mut Locator<'_>,
) -> Result<AffinePresentation> {
    let base = doc.base.to_base()?;
    let ring = PolyRing::new(base.coefficient_domain(), doc.vars.len(), order);
    for v in &doc.vars {
        if !crate::presentation::valid_name(v) {
            return Err(Error::Validation(format!("invalid variable name `{v}`")));
        }
    }
    let mut relations = Vec::with_capacity(doc.relations.len());
    for r in &doc.relations {
        match parse_polynomial(r, &doc.vars, ring) {
            Ok(p) => relations.push(p),
            Err(e) => return Err(locator.error(r, &e)),
        }
    }
    let mut a = AffinePresentation::new(base, doc.vars.clone(), relations)?;
    if a.order() != order {
        a = a.with_order(order);
    }
    Ok(a)
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Validation(e.to_string()))
}

/// Parse a presentation document using the default (grevlex) order.
pub fn parse_algebra(text: &str) -> Result<AlgebraPresentation> {
    parse_algebra_with_order(text, MonomialOrder::default())
}

pub fn parse_algebra_with_order(text: &str, order: MonomialOrder) -> Result<AlgebraPresentation> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut locator = Locator { text, cursor: 0 };
    let Value::Object(map) = &value else {
        return Err(Error::Validation("presentation must be a JSON object".into()));
    };
    if let Some(k) = map.get("boolean_atoms") {
        if map.len() != 1 {
            return Err(Error::Validation("`boolean_atoms` takes no sibling keys".into()));
        }
        let k: usize = from_value(k.clone())?;
        return Ok(AlgebraPresentation::boolean_atoms(k)?.with_order(order));
    }
    if let Some(p) = map.get("product") {
        if map.len() != 1 {
            return Err(Error::Validation("`product` takes no sibling keys".into()));
        }
        let docs: Vec<AffineDoc> = from_value(p.clone())?;
        let mut factors = Vec::with_capacity(docs.len());
        for (i, d) in docs.iter().enumerate() {
            locator.enter_factor(i);
            factors.push(affine_from_doc(d, order, &mut locator)?);
        }
        return AlgebraPresentation::product(factors);
    }
    let doc: AffineDoc = from_value(value)?;
    locator.enter_factor(0);
    Ok(AlgebraPresentation::Affine(affine_from_doc(
        &doc,
        order,
        &mut locator,
    )?))
}

pub fn affine_doc(a: &AffinePresentation) -> AffineDoc {
    AffineDoc {
        base: BaseDoc::from_base(a.base()),
        vars: a.vars().to_vec(),
        relations: a.relations().iter().map(|r| r.render(a.vars())).collect(),
    }
}

/// Canonical JSON value of a presentation (products are never re-sugared).
pub fn algebra_value(a: &AlgebraPresentation) -> Value {
    match a {
        AlgebraPresentation::Affine(f) => serde_json::to_value(affine_doc(f)),
        AlgebraPresentation::Product(fs) => {
            let docs: Vec<AffineDoc> = fs.iter().map(affine_doc).collect();
            serde_json::to_value(ProductDoc { product: &docs })
        }
    }
    .expect("serializable")
}

/// Canonical serializer; `parse_algebra` inverts it.
pub fn render_algebra(a: &AlgebraPresentation) -> String {
    serde_json::to_string(&algebra_value(a)).expect("serializable")
}
