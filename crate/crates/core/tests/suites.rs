use std::sync::Arc;
use taftvar::field::PrimeField;
use taftvar::suites::*;
use taftvar::taft::build_drinfeld_double;
use taftvar::variety::rank_variety;
use taftvar::{Algebra, Error};

fn d2() -> Arc<Algebra> {
    Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap())
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!(matches!(
        "nope".parse::<Suite>(),
        Err(Error::UnknownSuite(_))
    ));
}

#[test]
fn periodic_modules_have_period_two_and_one_point() {
    let d = d2();
    for seed in 0..8 {
        let (m, pt) = periodic_module(&d, seed).unwrap();
        assert!(has_period_two(&m).unwrap(), "seed {seed}");
        assert_eq!(rank_variety(&m).unwrap().points(), &[pt]);
    }
}

#[test]
fn every_suite_passes_briefly() {
    let d = d2();
    for s in Suite::ALL {
        let r = run_suite(&d, s, 5, 11).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r
            .to_string()
            .ends_with(&format!("PASS trials={}", r.trials)));
    }
}
