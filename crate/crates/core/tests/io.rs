use proptest::prelude::*;
use std::sync::{Arc, OnceLock};
use taftvar::field::PrimeField;
use taftvar::io::*;
use taftvar::modops::{random_module, standard_module};
use taftvar::taft::build_drinfeld_double;
use taftvar::{Algebra, Error};

fn d2() -> Arc<Algebra> {
    static D: OnceLock<Arc<Algebra>> = OnceLock::new();
    D.get_or_init(|| Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap()))
        .clone()
}

const KMINUS: &str = r#"{"p": 17, "family": "d-taft", "n": 2, "dim": 1,
  "generators": {"x": [[0]], "X": [[0]], "g": [[16]], "G": [[16]]}}"#;

#[test]
fn parses_k_minus() {
    let m = parse_module(KMINUS).unwrap();
    assert_eq!(m.dim(), 1);
    assert!(m.same_matrices(&standard_module(&d2(), "k-").unwrap()));
}

#[test]
fn rejects_non_canonical_residue() {
    let text = KMINUS.replace("[[16]], \"G\"", "[[17]], \"G\"");
    match parse_module_over(&text, &d2()) {
        Err(Error::Parse { location, .. }) => assert_eq!(location, "generators.g[0][0]"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn rejects_relation_violations_and_bad_json() {
    let text = KMINUS.replace("[[16]], \"G\"", "[[3]], \"G\"");
    assert!(matches!(
        parse_module_over(&text, &d2()),
        Err(Error::RelationViolated(_))
    ));
    assert!(matches!(
        parse_module_over("{\"p\": 17,", &d2()),
        Err(Error::Parse { .. })
    ));
    let missing = KMINUS.replace(", \"G\": [[16]]", "");
    assert!(matches!(
        parse_module_over(&missing, &d2()),
        Err(Error::Parse { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn write_then_parse_round_trips(seed in 0u64..1000, s in 0usize..3) {
        let d = d2();
        let m = random_module(&d, 1, s, seed).unwrap();
        let back = parse_module_over(&write_module(&m).unwrap(), &d).unwrap();
        prop_assert!(back.same_matrices(&m));
    }
}
