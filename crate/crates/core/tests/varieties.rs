use std::sync::Arc;
use taftvar::field::PrimeField;
use taftvar::homology::canonical_resolution_k;
use taftvar::modops::{
    induce, is_projective, random_module, restrict, standard_module, trivial_module, Corner,
};
use taftvar::rep::Rep;
use taftvar::taft::{build_basic_algebra_a, build_drinfeld_double, subalgebra_h};
use taftvar::variety::*;
use taftvar::{projective_line, Algebra, Error, ProjPoint};

fn d2() -> Arc<Algebra> {
    Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap())
}

fn induced_trivial(d: &Arc<Algebra>, pt: ProjPoint) -> Rep {
    let emb = subalgebra_h(d, pt).unwrap();
    induce(&emb, &trivial_module(&emb.sub, Some(&emb)).unwrap())
        .unwrap()
        .rep
}

#[test]
fn rank_point_test_examples() {
    let d = d2();
    let f = d.field();
    let m = induced_trivial(&d, ProjPoint::new(&f, 1, 0).unwrap());
    assert!(rank_point_test(&m, &ProjPoint::new(&f, 0, 1).unwrap()).unwrap());
    assert!(!rank_point_test(&m, &ProjPoint::new(&f, 1, 0).unwrap()).unwrap());
    let pp = standard_module(&d, "P+").unwrap();
    for pt in projective_line(&f) {
        assert!(rank_point_test(&pp, &pt).unwrap());
    }
}

#[test]
fn rank_test_agrees_with_restricted_projectivity() {
    let d = d2();
    let f = d.field();
    let pts = projective_line(&f);
    for seed in 0..6 {
        let m = random_module(&d, 1, 2, seed).unwrap();
        for pt in pts.iter().step_by(4) {
            let emb = subalgebra_h(&d, *pt).unwrap();
            let direct = is_projective(&restrict(&m, &emb).unwrap()).unwrap();
            assert_eq!(
                rank_point_test(&m, pt).unwrap(),
                direct,
                "seed {seed} point {pt}"
            );
        }
    }
}

#[test]
fn rank_varieties_of_named_modules() {
    let d = d2();
    let f = d.field();
    let k = standard_module(&d, "k").unwrap();
    assert_eq!(rank_variety(&k).unwrap(), VarietySet::all(f));
    assert_eq!(rank_variety(&k).unwrap().len(), 18);
    for name in ["P+", "P-", "V1", "V2"] {
        assert!(rank_variety(&standard_module(&d, name).unwrap())
            .unwrap()
            .is_empty());
    }
    // oracle: exhaustive scan for the single point where det [α β; a b] = 0
    for pt in projective_line(&f).into_iter().step_by(4) {
        let v = rank_variety(&induced_trivial(&d, pt)).unwrap();
        let expect: Vec<ProjPoint> = projective_line(&f)
            .into_iter()
            .filter(|q| f.sub(f.mul(pt.alpha(), q.beta()), f.mul(pt.beta(), q.alpha())) == 0)
            .collect();
        assert_eq!(v.points(), &expect[..]);
    }
}

#[test]
fn variety_set_display() {
    let f = PrimeField::new(17, 2).unwrap();
    assert_eq!(VarietySet::empty(f).to_string(), "EMPTY");
    let v = VarietySet::from_points(
        f,
        [
            ProjPoint::new(&f, 0, 1).unwrap(),
            ProjPoint::new(&f, 1, 0).unwrap(),
        ],
    );
    assert_eq!(v.to_string(), "1:0\n0:1");
}

#[test]
fn restriction_coefficients_from_chain_lifts() {
    let d = d2();
    let f = d.field();
    let res = Arc::new(canonical_resolution_k(&d, 3).unwrap());
    let classes = [
        ExtRingPoint::new(1, 0, 0),
        ExtRingPoint::new(0, 1, 0),
        ExtRingPoint::new(0, 0, 1),
    ];
    for pt in projective_line(&f) {
        let (a, b) = (pt.alpha(), pt.beta());
        let oracle = [f.mul(a, a), f.mul(b, b), f.mul(a, b)];
        for (cls, want) in classes.iter().zip(oracle) {
            assert_eq!(restriction_coefficient(&f, cls, &pt), want);
            assert_eq!(
                restriction_coefficient_by_lift(&res, cls, pt).unwrap(),
                want,
                "{pt} {cls:?}"
            );
        }
    }
}

#[test]
fn kernel_pair_vanishes_exactly_at_its_point() {
    let f = PrimeField::new(17, 2).unwrap();
    for pt in projective_line(&f) {
        let (z1, z2) = kernel_pair(&f, &pt);
        let locus: Vec<ProjPoint> = projective_line(&f)
            .into_iter()
            .filter(|q| {
                restriction_coefficient(&f, &z1, q) == 0 && restriction_coefficient(&f, &z2, q) == 0
            })
            .collect();
        assert_eq!(locus, vec![pt]);
    }
}

#[test]
fn support_varieties() {
    let d = d2();
    let f = d.field();
    let oracle = SupportOracle::new(&d).unwrap();
    let k = standard_module(&d, "k").unwrap();
    assert_eq!(oracle.variety(&k).unwrap(), VarietySet::all(f));
    for pt in projective_line(&f) {
        assert!(rank_variety(oracle.module_at(&pt).unwrap())
            .unwrap()
            .contains(&pt));
    }
    assert!(oracle
        .variety(&standard_module(&d, "P+").unwrap())
        .unwrap()
        .is_empty());
    for seed in 0..8 {
        let m = random_module(&d, 1, 2, seed).unwrap();
        assert_eq!(
            oracle.variety(&m).unwrap(),
            rank_variety(&m).unwrap(),
            "seed {seed}"
        );
    }
}

#[test]
fn basic_algebra_rank_varieties() {
    let a = Arc::new(build_basic_algebra_a(PrimeField::new(17, 2).unwrap()).unwrap());
    let f = a.field();
    assert!(rank_variety_basic(&Rep::regular(&a)).unwrap().is_empty());
    let kp = standard_module(&a, "k+").unwrap();
    assert_eq!(rank_variety_basic(&kp).unwrap(), VarietySet::all(f));
}

#[test]
fn block_identification_and_two_definitions() {
    let d = d2();
    let canon = principal_block_identification(&d, 0).unwrap();
    let fp = d.named("f+").unwrap().clone();
    let corner = Corner::new(&d, &fp).unwrap();
    let found = identify_basic_algebra(&corner, &canon.basic, None, 1).unwrap();
    for seed in 0..10 {
        let m = random_module(&d, 1, 2, seed).unwrap();
        let direct = rank_variety(&m).unwrap();
        assert_eq!(
            rank_variety_block(&m, &canon).unwrap(),
            direct,
            "seed {seed}"
        );
        // a different identification moves points by a change of coordinates
        assert_eq!(rank_variety_block(&m, &found).unwrap().len(), direct.len());
    }
}

#[test]
fn identification_negative_control() {
    let f = PrimeField::new(17, 2).unwrap();
    let m2 = Algebra::matrix_algebra(f, 2).unwrap();
    let junk = Algebra::direct_product("m2+junk", &[&m2, &m2]).unwrap();
    let corner = Corner::new(&junk, junk.unit()).unwrap();
    let a = Arc::new(build_basic_algebra_a(f).unwrap());
    assert!(matches!(
        identify_basic_algebra(&corner, &a, None, 0),
        Err(Error::IdentificationFailed(_))
    ));
}
