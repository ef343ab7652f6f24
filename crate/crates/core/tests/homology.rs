use std::sync::Arc;
use taftvar::field::PrimeField;
use taftvar::homology::*;
use taftvar::modops::standard_module;
use taftvar::rep::Rep;
use taftvar::taft::{build_basic_algebra_a, build_drinfeld_double};
use taftvar::Algebra;

fn d2() -> Arc<Algebra> {
    Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap())
}

fn counts(r: &Resolution) -> Vec<(usize, String)> {
    r.multiplicities()
        .into_iter()
        .map(|l| (l.len(), l[0].clone()))
        .collect()
}

#[test]
fn minimal_resolution_of_k_matches_the_pattern() {
    let d = d2();
    let k = standard_module(&d, "k").unwrap();
    let r = minimal_resolution(&k, 4).unwrap();
    let expect: Vec<(usize, String)> = (0..5)
        .map(|i| (i + 1, if i % 2 == 0 { "k" } else { "k-" }.to_string()))
        .collect();
    assert_eq!(counts(&r), expect);
    for t in &r.multiplicities() {
        assert!(t.iter().all(|l| l == &t[0]));
    }
    let c = canonical_resolution_k(&d, 6).unwrap();
    assert_eq!(counts(&c)[..5], expect[..]);
    assert_eq!(c.terms[2].rep.dim(), 12);
}

#[test]
fn ext_of_k() {
    let d = d2();
    let k = standard_module(&d, "k").unwrap();
    let km = standard_module(&d, "k-").unwrap();
    assert_eq!(ext_dims(&k, &k, 6).unwrap(), vec![1, 0, 3, 0, 5, 0, 7]);
    assert_eq!(ext_dims(&k, &km, 5).unwrap(), vec![0, 2, 0, 4, 0, 6]);
    let c = canonical_resolution_k(&d, 7).unwrap();
    assert_eq!(ext_dims_from(&c, &k, 6).unwrap(), vec![1, 0, 3, 0, 5, 0, 7]);
    let pp = standard_module(&d, "P+").unwrap();
    assert_eq!(ext_dims(&pp, &k, 3).unwrap(), vec![1, 0, 0, 0]);
    assert_eq!(minimal_resolution(&pp, 3).unwrap().terms.len(), 1);
}

#[test]
fn ext_over_basic_algebra() {
    let a = Arc::new(build_basic_algebra_a(PrimeField::new(17, 2).unwrap()).unwrap());
    let kp = standard_module(&a, "k+").unwrap();
    let km = standard_module(&a, "k-").unwrap();
    assert_eq!(ext_dims(&kp, &km, 5).unwrap(), vec![0, 2, 0, 4, 0, 6]);
    assert_eq!(ext_dims(&kp, &kp, 4).unwrap(), vec![1, 0, 3, 0, 5]);
    let cover = projective_cover(&Rep::direct_sum(&a, &[&kp, &km]))
        .unwrap()
        .0;
    assert_eq!(cover.summands, vec!["k+".to_string(), "k-".to_string()]);
}
