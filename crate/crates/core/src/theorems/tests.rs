use super::*;
use crate::dimension::DimensionValue::{self, Empty, Finite};
use crate::dsl::parse_algebra;
use crate::spectra::{
    effective_dim, effective_spectrum, fibre_at, fibre_dim, parse_witness, seidenberg_bounds,
    ComponentList, EffectiveSpectrum, PrimeWitness, SpecPoint::{self, Closed, Generic},
};
use crate::presentation::{tensor_presentation, AlgebraPresentation};

fn alg(base: &str, vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
    let doc = serde_json::json!({
        "base": serde_json::from_str::<serde_json::Value>(base).unwrap(),
        "vars": vars,
        "relations": rels,
    });
    parse_algebra(&doc.to_string()).unwrap()
}

const Z: &str = r#"{"kind": "Z"}"#;

fn zmod(n: u64) -> String {
    format!(r#"{{"kind": "Zmod", "n": {n}}}"#)
}

fn fp(p: u64) -> String {
    format!(r#"{{"kind": "Fp", "n": {p}}}"#)
}

fn boolean(k: usize) -> AlgebraPresentation {
    AlgebraPresentation::boolean_atoms(k).unwrap()
}

#[test]
fn triplets() {
    assert!(!is_triplet(&alg(Z, &["x"], &["3"]), &alg(Z, &["y"], &["2"])).unwrap());
    assert!(is_triplet(&alg(Z, &["x"], &["12"]), &alg(Z, &["y"], &["18"])).unwrap());
    assert!(is_triplet(&alg(Z, &["x"], &[]), &alg(Z, &["x"], &[])).unwrap());
    assert!(is_triplet(&alg(&zmod(12), &["x"], &[]), &alg(&zmod(18), &["y"], &[])).unwrap());
    assert!(matches!(
        is_triplet(&alg(Z, &[], &[]), &alg(r#"{"kind": "Q"}"#, &[], &[])),
        Err(Error::BaseMismatch { .. })
    ));
}

#[test]
fn tensor_spectra() {
    let s = effective_spectrum_tensor(&alg(&zmod(12), &["x"], &[]), &alg(&zmod(18), &["y"], &[])).unwrap();
    assert_eq!(s, EffectiveSpectrum::finite(false, [2, 3]));
    let s = effective_spectrum_tensor(&alg(&fp(5), &["x"], &[]), &alg(&fp(5), &["y"], &["y^2"])).unwrap();
    assert_eq!(s, EffectiveSpectrum::finite(false, [5]));
    let s = effective_spectrum_tensor(&alg(Z, &["x"], &["2*x - 1"]), &alg(Z, &[], &["2"])).unwrap();
    assert!(s.is_empty());
    let s = effective_spectrum_tensor(&alg(Z, &["x"], &["2*x - 1"]), &alg(Z, &["y"], &["3*y - 1"])).unwrap();
    assert_eq!(s, EffectiveSpectrum::cofinite([2, 3]));
}

fn fibre(base: &str, vars: &[&str], rels: &[&str], pt: SpecPoint) -> crate::spectra::AffineFibre {
    fibre_at(&alg(base, vars, rels), pt).unwrap().factors()[0].clone()
}

fn witnessed(base: &str, vars: &[&str], rels: &[&str], text: &str) -> (crate::spectra::AffineFibre, Vec<crate::spectra::PrimeWitness>, ComponentList) {
    let a = alg(base, vars, rels);
    let w = parse_witness(text, &a).unwrap();
    (w.fibre, vec![w.prime], w.components)
}

#[test]
fn d_values() {
    let closed = |fibre, s, d| {
        d_value(&DValueRequest {
            s,
            d,
            fibre,
            mode: DMode::ClosedFormAffine,
        })
    };
    assert_eq!(closed(fibre(&fp(7), &[], &[], Closed(7)), 5, 3).unwrap(), Finite(3));
    assert_eq!(closed(fibre(&fp(2), &["x", "y"], &["x*y"], Closed(2)), 3, 1).unwrap(), Finite(2));
    assert_eq!(
        closed(fibre(r#"{"kind": "Q"}"#, &["x"], &[], Generic), 0, 0).unwrap(),
        Finite(1)
    );
    assert!(matches!(
        closed(fibre(&fp(2), &["x"], &[], Closed(2)), 1, 2),
        Err(Error::InvalidRequest(_))
    ));
    assert!(closed(fibre(&fp(2), &["x"], &["1"], Closed(2)), 1, 1).is_err());
}

#[test]
fn d_value_witnesses_reach_the_closed_form() {
    let q = r#"{"kind": "Q"}"#;
    let run = |text: &str| {
        let (fr, primes, components) = witnessed(q, &["x"], &[], text);
        d_value(&DValueRequest {
            s: 0,
            d: 0,
            fibre: fr,
            mode: DMode::WitnessRestricted { primes, components },
        })
        .unwrap()
    };
    assert_eq!(run(r#"{"fibre": "generic", "prime": [], "components": [[]]}"#), Finite(0));
    assert_eq!(run(r#"{"fibre": "generic", "prime": ["x"], "components": [[]]}"#), Finite(1));
}

#[test]
fn pointwise_dimensions() {
    let a = alg(&zmod(4), &["x"], &[]);
    let b = alg(&zmod(6), &["y"], &[]);
    assert_eq!(dim_tensor_at(&a, &b, Closed(2)).unwrap(), Finite(2));
    assert_eq!(dim_tensor_at(&a, &b, Closed(3)).unwrap(), Empty);
    assert_eq!(dim_tensor_at(&boolean(2), &alg(Z, &["y"], &[]), Closed(2)).unwrap(), Finite(1));
    // the bases differ, so the pair is read over ℤ where 5 is a prime
    assert_eq!(dim_tensor_at(&a, &b, Closed(5)).unwrap(), Empty);
    assert!(matches!(
        dim_tensor_at(&a, &a, Closed(5)),
        Err(Error::IncompatiblePoint { .. })
    ));
}

#[test]
fn tensor_dimensions() {
    let r = dim_tensor(&alg(&zmod(12), &["x"], &[]), &alg(&zmod(18), &["y"], &["y^2"])).unwrap();
    assert_eq!((r.formula_dim, r.oracle_dim, r.agreement), (Finite(1), Finite(1), true));
    assert_eq!(r.path, TheoremPath::NonzeroCharacteristic);
    let pts: Vec<_> = r.points.iter().map(|p| (p.point, p.formula)).collect();
    assert_eq!(pts, [(Closed(2), Finite(1)), (Closed(3), Finite(1))]);

    let r = dim_tensor(&alg(Z, &["x"], &["3"]), &alg(Z, &["y"], &["2"])).unwrap();
    assert_eq!((r.formula_dim, r.oracle_dim, r.agreement), (Empty, Empty, true));

    let r = dim_tensor(&alg(&fp(5), &["x", "y"], &[]), &alg(&fp(5), &["z"], &[])).unwrap();
    assert_eq!((r.formula_dim, r.oracle_dim, r.path), (Finite(3), Finite(3), TheoremPath::ZeroDimensionalBase));

    // char 0 on one side only
    let r = dim_tensor(&alg(Z, &["x"], &["6"]), &alg(Z, &["y", "z"], &["2*y - 1"])).unwrap();
    assert_eq!((r.formula_dim, r.oracle_dim, r.agreement), (Finite(2), Finite(2), true));

    assert!(matches!(
        dim_tensor(&alg(Z, &["x"], &[]), &alg(Z, &["y"], &[])),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn zero_dimensional_factor() {
    let r = dim_tensor_zero_dim(&alg(&zmod(8), &["x"], &["x^2"]), &alg(Z, &["y"], &[])).unwrap();
    assert_eq!((r.formula_dim, r.oracle_dim, r.agreement), (Finite(1), Finite(1), true));
    assert_eq!(r.path, TheoremPath::ZeroDimensionalFactor);
    let r = dim_tensor_zero_dim(&alg(&fp(3), &[], &[]), &alg(&fp(3), &["x", "y"], &[])).unwrap();
    assert_eq!(r.formula_dim, Finite(2));
    let r = dim_tensor_zero_dim(&boolean(4), &alg(Z, &[], &[])).unwrap();
    assert_eq!(r.formula_dim, Finite(0));
    assert!(matches!(
        dim_tensor_zero_dim(&alg(&zmod(4), &["x"], &[]), &alg(Z, &[], &[])),
        Err(Error::NotZeroDimensional(_))
    ));
}

#[test]
fn boolean_formula() {
    for k in [1, 2, 4] {
        for (b, want) in [
            (alg(Z, &["x", "y"], &[]), Finite(2)),
            (alg(Z, &[], &[]), Finite(0)),
            (alg(Z, &["x"], &["x^2 + x"]), Finite(0)),
        ] {
            let r = boolean_dim(k, &b).unwrap();
            assert_eq!((r.formula_dim, r.oracle_dim, r.agreement), (want, want, true));
            assert_eq!(r.path, TheoremPath::Boolean);
        }
    }
    assert!(matches!(
        boolean_dim(1, &alg(Z, &["x"], &["2*x - 1"])),
        Err(Error::NotATriplet(_))
    ));
    assert!(boolean_dim(1, &alg(&zmod(2), &[], &[])).is_err());
}

#[test]
fn cross_checks() {
    let r = cross_check(&alg(&zmod(4), &["x"], &[]), &alg(&zmod(6), &["y"], &[])).unwrap();
    assert_eq!(r.failures, 0);
    let report = &r.reports[0];
    assert_eq!(report.formula_dim, Finite(2));
    assert_eq!(report.points.len(), 1);

    let r = cross_check(&alg(Z, &["x"], &["5"]), &alg(Z, &["y"], &["7"])).unwrap();
    assert_eq!((r.reports[0].formula_dim, r.reports[0].oracle_dim), (Empty, Empty));
}

#[test]
fn random_batches_are_deterministic_and_agree() {
    let opts = CheckOptions {
        seed: 42,
        count: 12,
        ..CheckOptions::default()
    };
    let first = random_cross_check(&opts).unwrap();
    assert_eq!(first.failures, 0);
    assert_eq!(first.seed, Some(42));
    let again = random_cross_check(&opts).unwrap();
    assert_eq!(
        serde_json::to_string(&first).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
}

/// The literal supremum over curated primes matches the closed form.
#[test]
fn witnessed_pointwise_supremum() {
    let a = alg(&fp(2), &["x", "y"], &["x*y"]);
    let b = alg(&fp(2), &["z"], &[]);
    let ideal = |alg: &AlgebraPresentation, gens: &[&str]| {
        let fr = fibre_at(alg, Closed(2)).unwrap().factors()[0].clone();
        let gens = gens
            .iter()
            .map(|t| crate::dsl::parse_polynomial(t, fr.vars(), fr.ring()).unwrap())
            .collect();
        PrimeWitness::new(gens)
    };
    let a_set = WitnessSet {
        factor: 0,
        primes: vec![ideal(&a, &["x"]), ideal(&a, &["x", "y"]), ideal(&a, &["x", "y - 1"])],
        components: ComponentList(vec![ideal(&a, &["x"]), ideal(&a, &["y"])]),
    };
    let b_set = WitnessSet {
        factor: 0,
        primes: vec![ideal(&b, &[]), ideal(&b, &["z"])],
        components: ComponentList(vec![ideal(&b, &[])]),
    };
    let literal = dim_tensor_at_witnessed(&a, &b, Closed(2), &a_set, &b_set).unwrap();
    assert_eq!(literal, dim_tensor_at(&a, &b, Closed(2)).unwrap());
    assert_eq!(literal, Finite(2));

    // without maximal primes on the B side the literal value falls short
    let b_generic = WitnessSet {
        primes: vec![ideal(&b, &[])],
        ..b_set
    };
    let partial = dim_tensor_at_witnessed(&a, &b, Closed(2), &a_set, &b_generic).unwrap();
    assert!(partial <= literal);
}

/// Bounds relating the tensor product to its factors.
#[test]
fn tensor_bounds() {
    let pairs = [
        (alg(&zmod(12), &["x"], &[]), alg(&zmod(18), &["y"], &["y^2"])),
        (alg(Z, &["x"], &["6"]), alg(Z, &["y"], &[])),
        (alg(Z, &["x", "y"], &["4", "x*y"]), alg(Z, &["z"], &["2*z - 1"])),
    ];
    for (a, b) in pairs {
        let (a, b) = common_base(&a, &b).unwrap();
        let t = tensor_presentation(&a, &b).unwrap();
        let et = effective_dim(&t).unwrap();
        assert!(et <= effective_dim(&a).unwrap().min(effective_dim(&b).unwrap()));
        let r = dim_tensor(&a, &b).unwrap();
        let bounds = seidenberg_bounds(&t).unwrap();
        assert!(bounds.lower <= r.formula_dim && r.formula_dim <= bounds.upper);
        assert_eq!(fibre_dim(&t).unwrap(), r.oracle_dim);
        if et <= DimensionValue::Finite(0) {
            assert_eq!(bounds.lower, bounds.upper);
        }
        let _ = effective_spectrum(&t).unwrap();
    }
}
