use std::sync::Arc;
use taftvar::field::PrimeField;
use taftvar::matrix::Matrix;
use taftvar::modops::*;
use taftvar::rep::{hom_basis, Rep};
use taftvar::taft::{build_basic_algebra_a, build_drinfeld_double, subalgebra_h};
use taftvar::{Algebra, ProjPoint};

fn d2() -> Arc<Algebra> {
    Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap())
}

fn tops(m: &Rep) -> Vec<usize> {
    top_multiplicities(m)
        .unwrap()
        .into_iter()
        .map(|(_, k)| k)
        .collect()
}

#[test]
fn standard_modules_of_the_double() {
    let d = d2();
    let mods = standard_modules(&d).unwrap();
    let dims: Vec<(String, usize)> = mods.iter().map(|(n, r)| (n.clone(), r.dim())).collect();
    assert_eq!(
        dims,
        vec![
            ("k".to_string(), 1),
            ("k-".to_string(), 1),
            ("P+".to_string(), 4),
            ("P-".to_string(), 4),
            ("V1".to_string(), 2),
            ("V2".to_string(), 2),
        ]
    );
    for (_, r) in &mods {
        r.check().unwrap();
    }
    let k = standard_module(&d, "k").unwrap();
    // g, G act as 1 and x, X as 0 on the trivial module
    assert_eq!(k.generator_matrix("g").unwrap().get(0, 0), 1);
    assert_eq!(k.generator_matrix("x").unwrap().get(0, 0), 0);
    let km = standard_module(&d, "k-").unwrap();
    assert_eq!(km.generator_matrix("G").unwrap().get(0, 0), 16);
    let pp = standard_module(&d, "P+").unwrap();
    let pm = standard_module(&d, "P-").unwrap();
    assert_eq!(tops(&pp), vec![1, 0, 0, 0]);
    assert_eq!(tops(&Rep::direct_sum(&d, &[&pp, &pm])), vec![1, 1, 0, 0]);
    assert!(is_projective(&pp).unwrap());
    assert!(!is_projective(&k).unwrap());
    assert!(is_projective(&standard_module(&d, "V1").unwrap()).unwrap());
    assert_eq!(hom_basis(&pp, &k).unwrap().len(), 1);
    // Loewy layers of P+: k / k- ⊕ k- / k
    let j = pp.radical_submodule().unwrap();
    let (rad, _) = pp.submodule(j.basis()).unwrap();
    assert_eq!(tops(&rad), vec![0, 2, 0, 0]);
}

#[test]
fn tensor_products() {
    let d = d2();
    let k = standard_module(&d, "k").unwrap();
    let km = standard_module(&d, "k-").unwrap();
    let pp = standard_module(&d, "P+").unwrap();
    assert!(is_isomorphic(&tensor(&km, &km).unwrap(), &k)
        .unwrap()
        .is_yes());
    assert!(is_isomorphic(&tensor(&k, &pp).unwrap(), &pp)
        .unwrap()
        .is_yes());
    assert!(matches!(is_isomorphic(&k, &km).unwrap(), Isomorphism::No));
}

#[test]
fn induced_from_h() {
    let d = d2();
    let f = d.field();
    let emb = subalgebra_h(&d, ProjPoint::new(&f, 1, 0).unwrap()).unwrap();
    let kh = trivial_module(&emb.sub, Some(&emb)).unwrap();
    let ind = induce(&emb, &kh).unwrap();
    let m = &ind.rep;
    m.check().unwrap();
    assert_eq!(m.dim(), 2);
    let labels: Vec<&str> = ind
        .section()
        .iter()
        .map(|&(l, _)| d.labels()[l].as_str())
        .collect();
    assert_eq!(labels, vec!["1", "X"]);
    assert!(m.generator_matrix("x").unwrap().is_zero());
    // column j is the image of basis vector j: X sends 1⊗1 to X⊗1
    assert_eq!(
        *m.generator_matrix("X").unwrap(),
        Matrix::from_rows_i64(f, &[vec![0, 0], vec![1, 0]])
    );
    let diag = Matrix::from_rows_i64(f, &[vec![1, 0], vec![0, -1]]);
    assert_eq!(*m.generator_matrix("g").unwrap(), diag);
    assert_eq!(*m.generator_matrix("G").unwrap(), diag);
    assert_eq!(tops(m), vec![1, 0, 0, 0]);
    // restriction of P+ splits as Q+ ⊕ Q-
    let pp = standard_module(&d, "P+").unwrap();
    let res = restrict(&pp, &emb).unwrap();
    assert!(is_projective(&res).unwrap());
    assert_eq!(tops(&res), vec![1, 1, 0, 0]);
}

#[test]
fn reciprocity_on_named_modules() {
    let d = d2();
    let f = d.field();
    for (a, b) in [(1, 1), (1, 0), (0, 1), (1, 5)] {
        let emb = subalgebra_h(&d, ProjPoint::new(&f, a, b).unwrap()).unwrap();
        for (_, m) in standard_modules(&d).unwrap() {
            let w = reciprocity_witness(&m, &emb).unwrap();
            assert_eq!(w.forward.matrix.rows(), 2 * m.dim());
            // the other tensor order gives an isomorphic module
            let kh = trivial_module(&emb.sub, Some(&emb)).unwrap();
            let kup = induce(&emb, &kh).unwrap().rep;
            let other = tensor(&kup, &m).unwrap();
            assert!(is_isomorphic(&w.forward.source, &other).unwrap().is_yes());
        }
    }
}

#[test]
fn random_modules_are_valid() {
    let d = d2();
    for seed in 0..100u64 {
        let r = 1 + (seed % 3) as usize;
        let s = (seed % 5) as usize;
        let m = random_module(&d, r, s, seed).unwrap();
        assert!(m.dim() > 0 && m.dim() <= 16 * r);
        m.check().unwrap();
    }
    let reg = random_module(&d, 1, 0, 7).unwrap();
    assert_eq!(reg.dim(), 16);
    assert!(is_projective(&reg).unwrap());
}

#[test]
fn block_components() {
    let d = d2();
    let fp = d.named("f+").unwrap().clone();
    let fm = d.named("f-").unwrap().clone();
    let k = standard_module(&d, "k").unwrap();
    assert_eq!(block_component_for(&k, &fp).unwrap().0.dim(), 1);
    assert_eq!(block_component_for(&k, &fm).unwrap().0.dim(), 0);
    let v = standard_module(&d, "V1").unwrap();
    let (c, _) = block_component_for(&v, &fm).unwrap();
    assert_eq!(c.dim(), 2);
    c.check().unwrap();
}

#[test]
fn basic_algebra_modules() {
    let a = Arc::new(build_basic_algebra_a(PrimeField::new(17, 2).unwrap()).unwrap());
    let mods = standard_modules(&a).unwrap();
    let dims: Vec<usize> = mods.iter().map(|(_, r)| r.dim()).collect();
    assert_eq!(dims, vec![1, 1, 4, 4]);
}
