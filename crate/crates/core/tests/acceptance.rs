//! One PASS/FAIL line per acceptance criterion; runs without the test
//! harness so the lines always show.

use std::sync::Arc;
use std::time::Instant;
use taftvar::field::PrimeField;
use taftvar::homology::{canonical_resolution_k, ext_dims};
use taftvar::hopf::verify_hopf_axioms;
use taftvar::modops::{induce, random_module, standard_module, trivial_module};
use taftvar::structure::{central_primitive_idempotents, radical_basis};
use taftvar::suites::{run_suite, Suite};
use taftvar::taft::{build_basic_algebra_a, build_drinfeld_double, subalgebra_h};
use taftvar::variety::{
    principal_block_identification, rank_variety, rank_variety_block,
    restriction_coefficient_by_lift, ExtRingPoint, VarietySet,
};
use taftvar::{projective_line, Algebra, Rep, Result};

fn d2() -> Arc<Algebra> {
    Arc::new(build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap())
}

fn ext_table(d: &Arc<Algebra>) -> Result<bool> {
    let k = standard_module(d, "k")?;
    let want: Vec<usize> = (0..=10)
        .map(|i| if i % 2 == 0 { i + 1 } else { 0 })
        .collect();
    Ok(ext_dims(&k, &k, 10)? == want)
}

fn ext_over_a() -> Result<bool> {
    let a = Arc::new(build_basic_algebra_a(PrimeField::new(17, 2)?)?);
    let kp = standard_module(&a, "k+")?;
    let km = standard_module(&a, "k-")?;
    let want: Vec<usize> = (0..10)
        .map(|i| if i % 2 == 1 { i + 1 } else { 0 })
        .collect();
    Ok(ext_dims(&kp, &km, 9)? == want)
}

fn restriction_formulas(d: &Arc<Algebra>) -> Result<bool> {
    let f = d.field();
    let res = Arc::new(canonical_resolution_k(d, 3)?);
    for pt in projective_line(&f) {
        let (a, b) = (pt.alpha(), pt.beta());
        let cases = [
            (ExtRingPoint::new(1, 0, 0), f.mul(a, a)),
            (ExtRingPoint::new(0, 1, 0), f.mul(b, b)),
            (ExtRingPoint::new(0, 0, 1), f.mul(a, b)),
        ];
        for (cls, want) in cases {
            if restriction_coefficient_by_lift(&res, &cls, pt)? != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn named_varieties(d: &Arc<Algebra>) -> Result<bool> {
    let f = d.field();
    let all = rank_variety(&standard_module(d, "k")?)? == VarietySet::all(f) && f.p() + 1 == 18;
    let proj = rank_variety(&standard_module(d, "P+")?)?.is_empty()
        && rank_variety(&standard_module(d, "P-")?)?.is_empty();
    let mut induced = true;
    for pt in projective_line(&f).into_iter().step_by(4).take(5) {
        let emb = subalgebra_h(d, pt)?;
        let m = induce(&emb, &trivial_module(&emb.sub, Some(&emb))?)?.rep;
        induced &= rank_variety(&m)?.points() == [pt];
    }
    Ok(all && proj && induced)
}

fn suite(d: &Arc<Algebra>, s: Suite, trials: usize) -> Result<bool> {
    Ok(run_suite(d, s, trials, 2024)?.passed())
}

fn block_structure(d: &Arc<Algebra>) -> Result<bool> {
    let central = central_primitive_idempotents(d)?;
    let fm = d.named("f-").expect("f- attached").clone();
    let fp = d.named("f+").expect("f+ attached").clone();
    // f₋ splits into the two matrix blocks
    let rest: Vec<_> = central.iter().filter(|e| **e != fp).collect();
    let splits = rest.len() == 2 && d.add(rest[0], rest[1]) == fm;
    let (corner, _) = d.corner(&fm)?;
    let tables = d.require_tables()?;
    let in_fm: Vec<_> = tables
        .simples()
        .iter()
        .filter(|s| d.mul(&fm, &s.idempotent) == s.idempotent)
        .collect();
    Ok(central.len() == 3
        && splits
        && radical_basis(&corner)?.is_empty()
        && in_fm.len() == 2
        && in_fm.iter().all(|s| s.dim == 2))
}

fn two_definitions(d: &Arc<Algebra>) -> Result<bool> {
    let iso = principal_block_identification(d, 0)?;
    let fp = d.named("f+").expect("f+ attached").clone();
    for seed in 0..25 {
        let m = random_module(d, 1, 2, 500 + seed)?;
        let basis = taftvar::linalg::row_reduce(&m.action(&fp))
            .image_basis()
            .to_vec();
        let fm: Rep = if basis.is_empty() {
            Rep::zero(d)
        } else {
            m.submodule(&basis)?.0
        };
        if rank_variety_block(&fm, &iso)? != rank_variety(&fm)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn general_n() -> Result<bool> {
    let field = PrimeField::default_for(3)?;
    let d3 = build_drinfeld_double(3, field)?;
    d3.check_relations()?;
    let hopf = verify_hopf_axioms(&d3)?;
    let central = central_primitive_idempotents(&d3)?;
    println!(
        "  n=3: p={} dim={} central_idempotents={}",
        field.p(),
        d3.dim(),
        central.len()
    );
    Ok(field.p() == 163 && d3.dim() == 81 && hopf.passed())
}

fn main() {
    let d = d2();
    type Check<'a> = Box<dyn Fn() -> Result<bool> + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        ("1 ext table of k", Box::new(|| ext_table(&d))),
        ("2 ext over A", Box::new(ext_over_a)),
        (
            "3 restriction formulas",
            Box::new(|| restriction_formulas(&d)),
        ),
        ("4 named rank varieties", Box::new(|| named_varieties(&d))),
        ("5 dade", Box::new(|| suite(&d, Suite::Dade, 100))),
        ("6 tensor", Box::new(|| suite(&d, Suite::Tensor, 100))),
        (
            "7 rank = support",
            Box::new(|| suite(&d, Suite::Compare, 50)),
        ),
        (
            "8 variety axioms",
            Box::new(|| suite(&d, Suite::CAxioms, 100)),
        ),
        (
            "9 reciprocity",
            Box::new(|| suite(&d, Suite::Reciprocity, 50)),
        ),
        (
            "10 heller stability",
            Box::new(|| suite(&d, Suite::Heller, 20)),
        ),
        (
            "11 degree-one generation",
            Box::new(|| suite(&d, Suite::Generation, 1)),
        ),
        ("12 block structure", Box::new(|| block_structure(&d))),
        ("13 two definitions", Box::new(|| two_definitions(&d))),
        ("14 general n", Box::new(general_n)),
    ];
    let mut failed = Vec::new();
    for (name, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(true) => println!("PASS {name} ({ms} ms)"),
            Ok(false) => {
                println!("FAIL {name} ({ms} ms)");
                failed.push(*name);
            }
            Err(e) => {
                println!("FAIL {name}: {e}");
                failed.push(*name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
