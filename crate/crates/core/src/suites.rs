//! Seeded property suites over random modules of `D(Λ₂)`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::ext;
use crate::homology;
use crate::modops::{self, Isomorphism};
use crate::pline::{projective_line, ProjPoint};
use crate::rep::Rep;
use crate::taft;
use crate::variety::{self, ExtRingPoint, SupportOracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Dade,
    Tensor,
    CAxioms,
    Reciprocity,
    Heller,
    Compare,
    Generation,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Dade,
        Suite::Tensor,
        Suite::CAxioms,
        Suite::Reciprocity,
        Suite::Heller,
        Suite::Compare,
        Suite::Generation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Dade => "dade",
            Suite::Tensor => "tensor",
            Suite::CAxioms => "c-axioms",
            Suite::Reciprocity => "reciprocity",
            Suite::Heller => "heller",
            Suite::Compare => "compare",
            Suite::Generation => "generation",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.into()))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    /// Seeds of failing trials.
    pub failures: Vec<u64>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Timestamp-free, so equal seeds give identical text.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite={}", self.suite.name())?;
        writeln!(f, "trials={}", self.trials)?;
        writeln!(f, "failures={}", self.failures.len())?;
        match self.failures.first() {
            None => write!(f, "PASS trials={}", self.trials),
            Some(s) => write!(f, "FAIL seed={s}"),
        }
    }
}

/// Seed of trial `i` in a run started from `seed`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(i as u64)
}

/// A random module of dimension at most `max_dim`.
pub fn small_random_module(d: &Arc<Algebra>, max_dim: usize, seed: u64) -> Result<Rep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let s = rng.gen_range(1..=3);
        let m = modops::random_module(d, 1, s, rng.gen())?;
        if m.dim() <= max_dim {
            return Ok(m);
        }
    }
}

/// `Ω^j(k_{H_{αβ}}↑ ⊗ k₋^ε)` for a random point, `j, ε ∈ {0, 1}`; these have
/// a one-point rank variety and period two.
pub fn periodic_module(d: &Arc<Algebra>, seed: u64) -> Result<(Rep, ProjPoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = projective_line(&d.field());
    let pt = pts[rng.gen_range(0..pts.len())];
    let emb = taft::subalgebra_h(d, pt)?;
    let mut m = modops::induce(&emb, &modops::trivial_module(&emb.sub, Some(&emb))?)?.rep;
    if rng.gen_bool(0.5) {
        m = modops::tensor(&m, &modops::standard_module(d, "k-")?)?;
    }
    if rng.gen_bool(0.5) {
        m = homology::syzygy(&m, 1)?;
    }
    Ok((m, pt))
}

fn random_class(d: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> ExtRingPoint {
    let p = d.field().p();
    loop {
        let c = ExtRingPoint::new(
            rng.gen_range(0..p),
            rng.gen_range(0..p),
            rng.gen_range(0..p),
        );
        if (c.u, c.v, c.w) != (0, 0, 0) {
            return c;
        }
    }
}

/// Runs a suite on `D(Λ₂)`; `trials` is ignored by `generation`, which
/// checks odd degrees up to 7.
pub fn run_suite(d: &Arc<Algebra>, suite: Suite, trials: usize, seed: u64) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(Error::Invariant("trials must be at least 1".into()));
    }
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = trials;
    match suite {
        Suite::Generation => {
            let rows = ext::generation_in_degree_one_check(d, 7)?;
            count = rows.len();
            for row in rows {
                if !row.spans() || row.dim != row.degree + 1 {
                    failures.push(row.degree as u64);
                }
            }
        }
        Suite::Compare => {
            let oracle = SupportOracle::new(d)?;
            for i in 0..trials {
                let s = trial_seed(seed, i);
                let m = small_random_module(d, 16, s)?;
                if oracle.variety(&m)? != variety::rank_variety(&m)? {
                    failures.push(s);
                }
            }
        }
        _ => {
            for i in 0..trials {
                let s = trial_seed(seed, i);
                if !run_trial(d, suite, s)? {
                    failures.push(s);
                }
            }
        }
    }
    Ok(SuiteReport {
        suite,
        trials: count,
        failures,
        elapsed: start.elapsed(),
    })
}

/// One trial of a per-module suite.
pub fn run_trial(d: &Arc<Algebra>, suite: Suite, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Dade => {
            let r = rng.gen_range(1..=3);
            let s = rng.gen_range(0..=3);
            let m = modops::random_module(d, r, s, rng.gen())?;
            Ok(modops::is_projective(&m)? == variety::rank_variety(&m)?.is_empty())
        }
        Suite::Tensor => {
            let m = small_random_module(d, 12, rng.gen())?;
            let n = small_random_module(d, 12, rng.gen())?;
            let vmn = variety::rank_variety(&modops::tensor(&m, &n)?)?;
            Ok(vmn == variety::rank_variety(&m)?.intersection(&variety::rank_variety(&n)?))
        }
        Suite::CAxioms => c_axioms(d, &mut rng),
        Suite::Reciprocity => {
            let m = small_random_module(d, 12, rng.gen())?;
            let pts = projective_line(&d.field());
            let emb = taft::subalgebra_h(d, pts[rng.gen_range(0..pts.len())])?;
            match modops::reciprocity_witness(&m, &emb) {
                Ok(w) => Ok(w.forward.is_intertwiner() && w.inverse.is_intertwiner()),
                Err(Error::WitnessNotBijective) => Ok(false),
                Err(e) => Err(e),
            }
        }
        Suite::Heller => {
            let (m, _) = periodic_module(d, rng.gen())?;
            let res = Arc::new(homology::canonical_resolution_k(d, 3)?);
            let z = random_class(d, &mut rng).class(&res)?;
            Ok(ext::heller_stability_check(&z, &m)?.passed)
        }
        Suite::Compare => {
            let m = small_random_module(d, 16, seed)?;
            Ok(variety::support_variety(&m)? == variety::rank_variety(&m)?)
        }
        Suite::Generation => Err(Error::Invariant("generation has no per-seed trials".into())),
    }
}

/// (C1) on `M ⊕ N`, (C2) on `0 → ΩM → P → M → 0`, (C3) for `Ω^n`, `n ≤ 3`.
fn c_axioms(d: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Result<bool> {
    let m = small_random_module(d, 16, rng.gen())?;
    let n = small_random_module(d, 16, rng.gen())?;
    let vm = variety::rank_variety(&m)?;
    let vn = variety::rank_variety(&n)?;
    let sum = Rep::direct_sum(d, &[&m, &n]);
    if variety::rank_variety(&sum)? != vm.union(&vn) {
        return Ok(false);
    }
    let (cover, epi) = homology::projective_cover(&m)?;
    let (om, _) = homology::kernel_module(&epi)?;
    let vp = variety::rank_variety(&cover.rep)?;
    let vom = variety::rank_variety(&om)?;
    let two_of_three = vm.union(&vom).intersection(&vp) == vp
        && vp.union(&vom).intersection(&vm) == vm
        && vp.union(&vm).intersection(&vom) == vom;
    if !two_of_three {
        return Ok(false);
    }
    for k in 1..=3 {
        if variety::rank_variety(&homology::syzygy(&m, k)?)? != vm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `Ω²(M) ≅ M`, for picking Heller-suite inputs.
pub fn has_period_two(m: &Rep) -> Result<bool> {
    Ok(matches!(
        modops::is_isomorphic(&homology::syzygy(m, 2)?, m)?,
        Isomorphism::Yes(_)
    ))
}
