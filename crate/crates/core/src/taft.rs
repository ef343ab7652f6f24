//! The Drinfel'd double `D(Λ_n)`, the basic algebra `A`, and the
//! subalgebras `H_{αβ}` and `B_{αβ}`.

use crate::algebra::{Algebra, Family, Relation, SubalgebraEmbedding, SubalgebraSpec};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::hopf::{tensor_from_terms, verify_hopf_axioms, HopfData};
use crate::matrix::{vec_ops, Vector};
use crate::pline::ProjPoint;
use crate::rewrite::{PowerRule, RewriteSystem};
use crate::structure;
use crate::tables::Tables;
use std::sync::Arc;

const X_LOWER: usize = 0;
const X_UPPER: usize = 1;
const G_LOWER: usize = 2;
const G_UPPER: usize = 3;

/// Rewrite system for `D(Λ_n)` on the symbols `x, X, g, G`.
pub fn double_rewrite_system(n: usize, field: PrimeField) -> Result<RewriteSystem> {
    let f = field;
    let q = f.primitive_root_of_unity(n as u64)?;
    let qi = f.inv(q);
    let (x, xu, g, gu) = (X_LOWER, X_UPPER, G_LOWER, G_UPPER);
    Ok(RewriteSystem::new(
        f,
        &["x", "X", "g", "G"],
        &[n, n, n, n],
        &[
            PowerRule::Zero,
            PowerRule::Zero,
            PowerRule::One,
            PowerRule::One,
        ],
    )
    // xX - qXx = 1 - gG
    .swap(
        xu,
        x,
        vec![(qi, vec![x, xu]), (f.neg(qi), vec![]), (qi, vec![g, gu])],
    )
    .swap(g, x, vec![(qi, vec![x, g])])
    .swap(gu, x, vec![(qi, vec![x, gu])])
    .swap(g, xu, vec![(q, vec![xu, g])])
    .swap(gu, xu, vec![(q, vec![xu, gu])])
    .swap(gu, g, vec![(1, vec![g, gu])]))
}

fn rel(name: &str, terms: Vec<(Scalar, Vec<usize>)>) -> Relation {
    Relation {
        name: name.into(),
        terms,
    }
}

fn double_relations(n: usize, f: &PrimeField, q: Scalar) -> Vec<Relation> {
    let (x, xu, g, gu) = (X_LOWER, X_UPPER, G_LOWER, G_UPPER);
    let m1 = f.neg(1);
    let qi = f.inv(q);
    vec![
        rel("x^n", vec![(1, vec![x; n])]),
        rel("X^n", vec![(1, vec![xu; n])]),
        rel("g^n = 1", vec![(1, vec![g; n]), (m1, vec![])]),
        rel("G^n = 1", vec![(1, vec![gu; n]), (m1, vec![])]),
        rel("gG = Gg", vec![(1, vec![g, gu]), (m1, vec![gu, g])]),
        rel(
            "gx = q^-1 xg",
            vec![(1, vec![g, x]), (f.neg(qi), vec![x, g])],
        ),
        rel("gX = qXg", vec![(1, vec![g, xu]), (f.neg(q), vec![xu, g])]),
        rel(
            "Gx = q^-1 xG",
            vec![(1, vec![gu, x]), (f.neg(qi), vec![x, gu])],
        ),
        rel(
            "GX = qXG",
            vec![(1, vec![gu, xu]), (f.neg(q), vec![xu, gu])],
        ),
        rel(
            "xX - qXx = 1 - gG",
            vec![
                (1, vec![x, xu]),
                (f.neg(q), vec![xu, x]),
                (m1, vec![]),
                (1, vec![g, gu]),
            ],
        ),
    ]
}

/// Expands a word in the generator names in the PBW basis of `alg`.
pub fn normal_form(word: &[&str], alg: &Algebra) -> Result<Vector> {
    let idx = word
        .iter()
        .map(|s| {
            alg.generator_index(s)
                .map_err(|_| Error::UnknownSymbol(s.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(alg.eval_word(&idx))
}

/// Builds `D(Λ_n)` with its Hopf structure, checking every relation,
/// associativity and the Hopf axioms. For `n = 2` the idempotents `f±`, `e±`
/// and the simples table are attached.
pub fn build_drinfeld_double(n: usize, field: PrimeField) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::UnsupportedAlgebra(format!("n = {n}")));
    }
    let f = field;
    let q = f.primitive_root_of_unity(n as u64)?;
    let rs = double_rewrite_system(n, f)?;
    let mut alg = rs.build_algebra(Family::DTaft { n, q }, double_relations(n, &f, q))?;
    if alg.dim() != n.pow(4) {
        return Err(Error::RelationCheckFailed(
            "PBW basis has wrong size".into(),
        ));
    }
    alg.check_relations()
        .map_err(|e| Error::RelationCheckFailed(e.to_string()))?;
    if n == 2 {
        alg.check_associativity()
    } else {
        alg.check_associativity_generators()
    }
    .map_err(|e| Error::RelationCheckFailed(e.to_string()))?;

    let idx = |exps: [usize; 4]| rs.monomial_index(&exps);
    let one = idx([0, 0, 0, 0]);
    let gi = idx([0, 0, 1, 0]);
    let gui = idx([0, 0, 0, 1]);
    let xi = idx([1, 0, 0, 0]);
    let xui = idx([0, 1, 0, 0]);
    let coproducts = vec![
        tensor_from_terms(&f, &[(1, one, xi), (1, xi, gi)]),
        tensor_from_terms(&f, &[(1, one, xui), (1, xui, gui)]),
        tensor_from_terms(&f, &[(1, gi, gi)]),
        tensor_from_terms(&f, &[(1, gui, gui)]),
    ];
    let counits = vec![0, 0, 1, 1];
    let g_inv = rs.normal_form_vector(&vec![G_LOWER; n - 1]);
    let gu_inv = rs.normal_form_vector(&vec![G_UPPER; n - 1]);
    let antipodes = vec![
        vec_ops::scale(&f, f.neg(1), &alg.mul(&alg.basis(xi), &g_inv)),
        vec_ops::scale(&f, f.neg(1), &alg.mul(&alg.basis(xui), &gu_inv)),
        g_inv,
        gu_inv,
    ];
    let hopf = HopfData::from_generators(&alg, &coproducts, &counits, &antipodes);
    alg.set_hopf(hopf);
    let report = verify_hopf_axioms(&alg)?;
    if let Some(msg) = report.first_counterexample() {
        return Err(Error::RelationCheckFailed(msg.to_string()));
    }
    if n == 2 {
        attach_double_tables(&mut alg)?;
    }
    Ok(alg)
}

fn attach_double_tables(alg: &mut Algebra) -> Result<()> {
    let f = alg.field();
    let half = f.inv(2);
    let quarter = f.mul(half, half);
    let nf = |w: &[&str]| normal_form(w, alg);
    let xx = nf(&["X", "x"])?;
    let one = alg.unit().clone();
    let g = nf(&["g"])?;
    let gu = nf(&["G"])?;
    let gg = nf(&["g", "G"])?;
    let fp = alg.scale(half, &alg.add(&one, &gg));
    let fm = alg.scale(half, &alg.sub(&one, &gg));
    let ep = alg.scale(quarter, &alg.add(&alg.add(&one, &g), &alg.add(&gu, &gg)));
    let em = alg.scale(quarter, &alg.add(&alg.sub(&one, &g), &alg.sub(&gg, &gu)));
    let named = [("f+", &fp), ("f-", &fm), ("e+", &ep), ("e-", &em)].map(|(n, v)| (n, v.clone()));
    for (name, v) in named {
        alg.add_named(name, v);
    }
    if (f.p() as usize) <= alg.dim() {
        // the trace-form radical needs p > 16; no tables in small characteristic
        return Ok(());
    }
    let radical = structure::trace_form_radical(alg)?;
    structure::verify_radical(alg, &radical)?;
    let central = structure::central_primitive_idempotents(alg)?;
    // φ = Xx f₋ / 2 is a rank-one idempotent of the f₋ block
    let phi = alg.scale(half, &alg.mul(&xx, &fm));
    let mut idempotents = vec![("k".to_string(), ep), ("k-".to_string(), em)];
    let mut central_named = vec![("f+".to_string(), fp.clone())];
    let mut block = 0;
    for c in &central {
        if *c == fp {
            continue;
        }
        block += 1;
        central_named.push((format!("c{block}"), c.clone()));
        let cand = alg.mul(c, &phi);
        let e = if !vec_ops::is_zero(&cand) {
            cand
        } else {
            alg.mul(c, &alg.sub(&fm, &phi))
        };
        idempotents.push((format!("V{block}"), e));
    }
    let tables = Tables::build(alg, radical, idempotents, central_named)?;
    alg.set_tables(tables);
    Ok(())
}

/// The eight-dimensional basic algebra on `y1, y2, g`.
pub fn build_basic_algebra_a(field: PrimeField) -> Result<Algebra> {
    let f = field;
    if f.p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let m1 = f.neg(1);
    let rs = RewriteSystem::new(
        f,
        &["y1", "y2", "g"],
        &[2, 2, 2],
        &[PowerRule::Zero, PowerRule::Zero, PowerRule::One],
    )
    .swap(1, 0, vec![(m1, vec![0, 1])])
    .swap(2, 0, vec![(m1, vec![0, 2])])
    .swap(2, 1, vec![(m1, vec![1, 2])]);
    let relations = vec![
        rel("y1^2", vec![(1, vec![0, 0])]),
        rel("y2^2", vec![(1, vec![1, 1])]),
        rel("y1y2 + y2y1", vec![(1, vec![0, 1]), (1, vec![1, 0])]),
        rel("g^2 = 1", vec![(1, vec![2, 2]), (m1, vec![])]),
        rel("gy1 = -y1g", vec![(1, vec![2, 0]), (1, vec![0, 2])]),
        rel("gy2 = -y2g", vec![(1, vec![2, 1]), (1, vec![1, 2])]),
    ];
    let mut alg = rs.build_algebra(Family::BasicA, relations)?;
    alg.check_relations()
        .map_err(|e| Error::RelationCheckFailed(e.to_string()))?;
    alg.check_associativity()
        .map_err(|e| Error::RelationCheckFailed(e.to_string()))?;
    let half = f.inv(2);
    let g = normal_form(&["g"], &alg)?;
    let ep = alg.scale(half, &alg.add(alg.unit(), &g));
    let em = alg.scale(half, &alg.sub(alg.unit(), &g));
    alg.add_named("e+", ep.clone());
    alg.add_named("e-", em.clone());
    // monomials involving y1 or y2
    let radical: Vec<Vector> = (0..alg.dim())
        .filter(|&i| rs.monomial_exponents(i)[..2].iter().any(|&e| e > 0))
        .map(|i| alg.basis(i))
        .collect();
    let tables = Tables::build(
        &alg,
        radical,
        vec![("k+".into(), ep), ("k-".into(), em)],
        vec![("1".into(), alg.unit().clone())],
    )?;
    alg.set_tables(tables);
    Ok(alg)
}

fn require_family(alg: &Algebra, want: &str) -> Result<()> {
    match alg.family() {
        Family::DTaft { n: 2, .. } if want == "d-taft-2" => Ok(()),
        Family::BasicA if want == "basic-A" => Ok(()),
        other => Err(Error::UnsupportedAlgebra(format!("{other:?}"))),
    }
}

/// `H_{αβ} = <g, G, t = αx + βX>` inside `D(Λ_2)`, with basis `g^c G^d` and
/// `g^c G^d t`.
pub fn subalgebra_h(d: &Arc<Algebra>, pt: ProjPoint) -> Result<SubalgebraEmbedding> {
    require_family(d, "d-taft-2")?;
    let f = d.field();
    let (a, b) = (pt.alpha(), pt.beta());
    let t = d.add(
        &d.scale(a, &normal_form(&["x"], d)?),
        &d.scale(b, &normal_form(&["X"], d)?),
    );
    let g = normal_form(&["g"], d)?;
    let gu = normal_form(&["G"], d)?;
    let (gi, gui, ti) = (0, 1, 2);
    let m1 = f.neg(1);
    let ab = f.mul(a, b);
    let relations = vec![
        rel("g^2 = 1", vec![(1, vec![gi, gi]), (m1, vec![])]),
        rel("G^2 = 1", vec![(1, vec![gui, gui]), (m1, vec![])]),
        rel("gG = Gg", vec![(1, vec![gi, gui]), (m1, vec![gui, gi])]),
        rel("gt = -tg", vec![(1, vec![gi, ti]), (1, vec![ti, gi])]),
        rel("Gt = -tG", vec![(1, vec![gui, ti]), (1, vec![ti, gui])]),
        rel(
            "t^2 = ab(1 - gG)",
            vec![(1, vec![ti, ti]), (f.neg(ab), vec![]), (ab, vec![gi, gui])],
        ),
    ];
    let mut words = Vec::new();
    let mut labels = Vec::new();
    for with_t in [false, true] {
        for c in 0..2 {
            for dd in 0..2 {
                let mut w = vec![gi; c];
                w.extend(vec![gui; dd]);
                let mut l = String::new();
                if c == 1 {
                    l.push('g');
                }
                if dd == 1 {
                    l.push('G');
                }
                if with_t {
                    w.push(ti);
                    l.push('t');
                }
                if l.is_empty() {
                    l.push('1');
                }
                words.push(w);
                labels.push(l);
            }
        }
    }
    let spec = SubalgebraSpec {
        generators: vec![("g".into(), g), ("G".into(), gu), ("t".into(), t)],
        basis_words: words,
        labels,
        relations: Some(relations),
        unit: d.unit().clone(),
    };
    let (sub, embed) = Algebra::subalgebra(d, Family::SubH { alpha: a, beta: b }, spec)?;
    // off the axes t² is invertible on the gG = -1 part, which is then a
    // single 2-dimensional simple
    let characters = if ab == 0 {
        vec![
            ("k".into(), 1, 1),
            ("k-".into(), m1, m1),
            ("(+,-)".into(), 1, m1),
            ("(-,+)".into(), m1, 1),
        ]
    } else {
        vec![
            ("k".into(), 1, 1),
            ("k-".into(), m1, m1),
            ("V".into(), 1, m1),
        ]
    };
    finish_embedding(sub, d, embed, characters)
}

/// Attaches the radical and the characters `g ↦ s, G ↦ s'` as simples.
fn finish_embedding(
    mut sub: Algebra,
    parent: &Arc<Algebra>,
    embed: crate::matrix::Matrix,
    characters: Vec<(String, Scalar, Scalar)>,
) -> Result<SubalgebraEmbedding> {
    sub.check_relations()
        .map_err(|e| Error::RelationCheckFailed(e.to_string()))?;
    let f = sub.field();
    let gi = sub.generator_index("g")?;
    let g = sub.generators()[gi].vector.clone();
    let gu = sub
        .generator_index("G")
        .ok()
        .map(|i| sub.generators()[i].vector.clone());
    let quarter_or_half = if gu.is_some() { f.inv(4) } else { f.inv(2) };
    let idempotents: Vec<(String, Vector)> = characters
        .into_iter()
        .map(|(label, s, s2)| {
            // (1 + s g)(1 + s' G) / 4, or (1 + s g) / 2 without G
            let a = sub.add(sub.unit(), &sub.scale(s, &g));
            let e = match &gu {
                Some(gu) => sub.mul(&a, &sub.add(sub.unit(), &sub.scale(s2, gu))),
                None => a,
            };
            (label, sub.scale(quarter_or_half, &e))
        })
        .collect();
    let radical = structure::trace_form_radical(&sub)?;
    let tables = Tables::build(&sub, radical, idempotents, vec![])?;
    sub.set_tables(tables);
    let emb = SubalgebraEmbedding {
        sub: Arc::new(sub),
        parent: parent.clone(),
        embed,
    };
    emb.verify()?;
    Ok(emb)
}

/// `B_{αβ} = <u = αy1 + βy2, g>` inside `A`, with basis `1, u, g, gu`.
pub fn subalgebra_b(a_alg: &Arc<Algebra>, pt: ProjPoint) -> Result<SubalgebraEmbedding> {
    require_family(a_alg, "basic-A")?;
    let f = a_alg.field();
    let (a, b) = (pt.alpha(), pt.beta());
    let u = a_alg.add(
        &a_alg.scale(a, &normal_form(&["y1"], a_alg)?),
        &a_alg.scale(b, &normal_form(&["y2"], a_alg)?),
    );
    let g = normal_form(&["g"], a_alg)?;
    let m1 = f.neg(1);
    let relations = vec![
        rel("g^2 = 1", vec![(1, vec![1, 1]), (m1, vec![])]),
        rel("u^2", vec![(1, vec![0, 0])]),
        rel("gu = -ug", vec![(1, vec![1, 0]), (1, vec![0, 1])]),
    ];
    let spec = SubalgebraSpec {
        generators: vec![("u".into(), u), ("g".into(), g)],
        basis_words: vec![vec![], vec![0], vec![1], vec![1, 0]],
        labels: vec!["1".into(), "u".into(), "g".into(), "gu".into()],
        relations: Some(relations),
        unit: a_alg.unit().clone(),
    };
    let (sub, embed) = Algebra::subalgebra(a_alg, Family::SubB { alpha: a, beta: b }, spec)?;
    finish_embedding(
        sub,
        a_alg,
        embed,
        vec![("k+".into(), 1, 1), ("k-".into(), m1, 1)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d2() -> Algebra {
        build_drinfeld_double(2, PrimeField::new(17, 2).unwrap()).unwrap()
    }

    #[test]
    fn double_dimension_and_rules() {
        let d = d2();
        assert_eq!(d.dim(), 16);
        let f = d.field();
        // xX = -Xx + 1 - gG
        let lhs = normal_form(&["x", "X"], &d).unwrap();
        let mut rhs = d.scale(f.neg(1), &normal_form(&["X", "x"], &d).unwrap());
        rhs = d.add(&rhs, d.unit());
        rhs = d.sub(&rhs, &normal_form(&["g", "G"], &d).unwrap());
        assert_eq!(lhs, rhs);
        assert!(vec_ops::is_zero(&normal_form(&["x", "x"], &d).unwrap()));
        let gx = normal_form(&["g", "x"], &d).unwrap();
        let xg = normal_form(&["x", "g"], &d).unwrap();
        assert_eq!(gx, d.scale(f.neg(1), &xg));
        assert!(matches!(
            normal_form(&["y"], &d),
            Err(Error::UnknownSymbol(_))
        ));
    }

    #[test]
    fn double_idempotents() {
        let d = d2();
        let fp = d.named("f+").unwrap();
        let fm = d.named("f-").unwrap();
        assert!(d.is_idempotent(fp) && d.is_idempotent(fm));
        assert!(d.commutes_with_generators(fp) && d.commutes_with_generators(fm));
        assert!(vec_ops::is_zero(&d.mul(fp, fm)));
        assert_eq!(&d.add(fp, fm), d.unit());
        let t = d.tables().unwrap();
        assert_eq!(t.radical().len(), 6);
        let dims: Vec<(String, usize, usize)> = t
            .simples()
            .iter()
            .map(|s| (s.label.clone(), s.dim, s.pim_dim()))
            .collect();
        assert_eq!(dims[0], ("k".into(), 1, 4));
        assert_eq!(dims[1], ("k-".into(), 1, 4));
        assert_eq!(dims[2].1, 2);
        assert_eq!(dims[3].1, 2);
    }

    #[test]
    fn basic_algebra() {
        let a = build_basic_algebra_a(PrimeField::new(17, 2).unwrap()).unwrap();
        assert_eq!(a.dim(), 8);
        let t = a.tables().unwrap();
        assert_eq!(t.radical().len(), 6);
        structure::verify_radical(&a, t.radical()).unwrap();
        assert_eq!(structure::trace_form_radical(&a).unwrap().len(), 6);
        assert_eq!(
            structure::central_primitive_idempotents(&a).unwrap().len(),
            1
        );
        let s = normal_form(&["y1", "y2"], &a).unwrap();
        let r = normal_form(&["y2", "y1"], &a).unwrap();
        assert!(vec_ops::is_zero(&a.add(&s, &r)));
        assert!(matches!(
            build_basic_algebra_a(PrimeField::new(2, 1).unwrap()),
            Err(Error::CharacteristicTwo)
        ));
    }

    #[test]
    fn subalgebras() {
        let f = PrimeField::new(17, 2).unwrap();
        let d = Arc::new(d2());
        let a = Arc::new(build_basic_algebra_a(f).unwrap());
        for pt in crate::pline::projective_line(&f) {
            let h = subalgebra_h(&d, pt).unwrap();
            assert_eq!(h.sub.dim(), 8);
            let rad = if f.mul(pt.alpha(), pt.beta()) == 0 {
                4
            } else {
                2
            };
            assert_eq!(h.sub.tables().unwrap().radical().len(), rad);
            let b = subalgebra_b(&a, pt).unwrap();
            assert_eq!(b.sub.dim(), 4);
        }
    }
}

#[cfg(test)]
mod order_three {
    use super::*;

    #[test]
    fn double_of_order_three() {
        let f = PrimeField::default_for(3).unwrap();
        let d = build_drinfeld_double(3, f).unwrap();
        assert_eq!(d.dim(), 81);
        let ids = structure::central_primitive_idempotents(&d).unwrap();
        let sum = ids.iter().fold(vec![0; 81], |acc, e| d.add(&acc, e));
        assert_eq!(&sum, d.unit());
    }
}
