//! Ext classes as cocycles, chain-map lifting, Yoneda products, `L_ζ`, and
//! the Heller-translate and degree-one generation checks.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::homology::{self, Complex, Resolution};
use crate::linalg::{self, RowReduction};
use crate::matrix::{vec_ops, Matrix, Vector};
use crate::modops::{self, Isomorphism};
use crate::rep::{hom_basis, ModHom, Rep};
use std::collections::HashMap;
use std::sync::Arc;

/// A class in `Ext^n(M, N)` represented by a cocycle `P_n → N` on a fixed
/// resolution `P` of `M`.
#[derive(Debug, Clone)]
pub struct ExtElement {
    pub degree: usize,
    pub resolution: Arc<Resolution>,
    pub target: Rep,
    /// `target.dim x dim P_n`.
    pub cocycle: Matrix,
}

impl ExtElement {
    /// Builds a class from the images of the summand generators of `P_n`.
    pub fn from_generator_images(
        res: &Arc<Resolution>,
        degree: usize,
        target: &Rep,
        images: &[Vector],
    ) -> Result<ExtElement> {
        let h = res.terms[degree].map_to(target, images)?;
        if !h.is_intertwiner() {
            return Err(Error::Invariant("cochain is not a module map".into()));
        }
        Ok(ExtElement {
            degree,
            resolution: res.clone(),
            target: target.clone(),
            cocycle: h.matrix,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cocycle.is_zero()
    }

    /// Whether `ζ ∘ ∂_{n+1} = 0`, where the next differential is known.
    pub fn is_cocycle(&self) -> bool {
        match self.resolution.maps.get(self.degree + 1) {
            Some(d) => self.cocycle.mul(d).is_zero(),
            None => true,
        }
    }
}

/// The class `u·x + v·y + w·z` in `Ext^2(k, k)` on the canonical resolution:
/// the cocycle `(a, b, c) ↦ (u a + w b + v c)·1` on `P_+^3`.
pub fn ext2_element(res: &Arc<Resolution>, u: Scalar, v: Scalar, w: Scalar) -> Result<ExtElement> {
    if u == 0 && v == 0 && w == 0 {
        return Err(Error::ZeroClass);
    }
    let k = res.target.clone();
    ExtElement::from_generator_images(res, 2, &k, &[vec![u], vec![w], vec![v]])
}

/// Lifts a cocycle `ζ : P_n → N` to maps `θ_i : P_{n+i} → C_i` for
/// `0 ≤ i ≤ depth`, where `C` is an exact complex over `N`, so that
/// `ε θ_0 = ζ` and `∂ θ_i = θ_{i-1} ∂`.
pub fn lift_chain_map(
    cocycle: &Matrix,
    source: &Resolution,
    n: usize,
    target: &Complex,
    depth: usize,
) -> Result<Vec<Matrix>> {
    let alg = source.target.algebra().clone();
    let t = alg.require_tables()?.clone();
    let mut thetas: Vec<Matrix> = Vec::with_capacity(depth + 1);
    for i in 0..=depth {
        let deg = n + i;
        if deg >= source.terms.len() || i >= target.modules.len() {
            return Err(Error::LiftFailed(i));
        }
        let p = &source.terms[deg];
        let c = &target.modules[i];
        // the map each generator's image must hit
        let rhs_map = if i == 0 {
            cocycle.clone()
        } else {
            thetas[i - 1].mul(&source.maps[deg])
        };
        let mut solvers: HashMap<String, (Matrix, RowReduction)> = HashMap::new();
        let mut images = Vec::with_capacity(p.summands.len());
        for (j, label) in p.summands.iter().enumerate() {
            if !solvers.contains_key(label) {
                let e = &t.simple(label)?.idempotent;
                let ae = c.action(e);
                let sys = target.maps[i].mul(&ae);
                solvers.insert(label.clone(), (ae, linalg::row_reduce(&sys)));
            }
            let (ae, rr) = &solvers[label];
            let rhs = rhs_map.mul_vec(&p.generator(j));
            let u = rr.solve(&rhs).map_err(|_| Error::LiftFailed(i))?;
            images.push(ae.mul_vec(&u));
        }
        thetas.push(p.map_to(c, &images)?.matrix);
    }
    Ok(thetas)
}

/// The Yoneda product `η ∘ ζ` for `ζ ∈ Ext^n(M, N)` and `η ∈ Ext^m(N, L)`,
/// where `η` lives on a resolution of `N`.
pub fn yoneda(eta: &ExtElement, zeta: &ExtElement) -> Result<ExtElement> {
    if eta.resolution.target.dim() != zeta.target.dim() {
        return Err(Error::DimensionMismatch {
            expected: zeta.target.dim(),
            got: eta.resolution.target.dim(),
        });
    }
    let thetas = lift_chain_map(
        &zeta.cocycle,
        &zeta.resolution,
        zeta.degree,
        &eta.resolution.as_complex(),
        eta.degree,
    )?;
    Ok(ExtElement {
        degree: zeta.degree + eta.degree,
        resolution: zeta.resolution.clone(),
        target: eta.target.clone(),
        cocycle: eta.cocycle.mul(&thetas[eta.degree]),
    })
}

/// `Ω^n(M) = ker ∂_{n-1}` (`ker` of the augmentation for `n = 1`) inside `P_{n-1}`,
/// with its inclusion matrix.
pub fn syzygy_in(res: &Resolution, n: usize) -> Result<(Rep, Matrix)> {
    let h = ModHom {
        source: res.terms[n - 1].rep.clone(),
        target: res.module(n as isize - 2).clone(),
        matrix: res.maps[n - 1].clone(),
    };
    homology::kernel_module(&h)
}

/// The map `ζ̂ : Ω^n(M) → N` induced by a cocycle on `P_n`.
pub fn hat(zeta: &ExtElement) -> Result<(Rep, Matrix, Matrix)> {
    let res = &zeta.resolution;
    let n = zeta.degree;
    let (omega, incl) = syzygy_in(res, n)?;
    let rr = linalg::row_reduce(&res.maps[n]);
    let cols = incl
        .columns()
        .iter()
        .map(|w| rr.solve(w).map(|p| zeta.cocycle.mul_vec(&p)))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::LiftFailed(n))?;
    let hat = Matrix::from_cols(omega.field(), zeta.target.dim(), &cols);
    Ok((omega, incl, hat))
}

/// `L_ζ = ker(ζ̂ : Ω^n(k) → k)`.
pub fn l_zeta(zeta: &ExtElement) -> Result<Rep> {
    let (omega, _, h) = hat(zeta)?;
    if h.is_zero() {
        return Err(Error::ZeroClass);
    }
    let ker = linalg::kernel(&h);
    Ok(omega.submodule(&ker)?.0)
}

/// Outcome of [`heller_stability_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HellerReport {
    /// `σ Ω²(f) σ⁻¹ - f` factors through a projective.
    pub passed: bool,
    /// `f` itself is stably zero, so the check says little.
    pub f_stably_zero: bool,
}

/// Checks that `Ω²(f) = f` stably, for `f` representing `ζ ⊗ M` on a module
/// with `Ω²(M) ≅ M`. Fails with an error when no isomorphism `Ω²(M) → M`
/// is found.
pub fn heller_stability_check(zeta: &ExtElement, m: &Rep) -> Result<HellerReport> {
    if zeta.is_zero() {
        return Err(Error::ZeroClass);
    }
    if modops::is_projective(m)? {
        return Ok(HellerReport {
            passed: true,
            f_stably_zero: true,
        });
    }
    let f = m.field();
    let x = homology::minimal_resolution(m, 2)?;
    let (omega2, incl) = syzygy_in(&x, 2)?;
    let sigma = match modops::is_isomorphic(&omega2, m)? {
        Isomorphism::Yes(h) => h.matrix,
        _ => return Err(Error::Invariant("module is not of period 2".into())),
    };
    let sigma_inv = linalg::inverse(&sigma).ok_or(Error::WitnessNotBijective)?;
    let pi = &x.maps[0];

    // θ lifts id_M from X into F ⊗ M; on Ω²(M) it lands in Ω²(k) ⊗ M
    let fres = &zeta.resolution;
    let fm = fres.as_complex().tensor_right(m)?;
    let theta = lift_chain_map(pi, &x, 0, &fm, 1)?;
    let (_, omega_k_incl, zhat) = hat(zeta)?;
    let theta_on_omega = theta[1].mul(&incl);
    // coordinates in Ω²(k) ⊗ M, then apply ζ̂ ⊗ id
    let basis = omega_k_incl.kron(&Matrix::identity(f, m.dim()));
    let coords = linalg::coordinates(&basis, &theta_on_omega)?;
    let xi_hat = zhat.kron(&Matrix::identity(f, m.dim())).mul(&coords);
    let endo = xi_hat.mul(&sigma_inv);

    // Ω²(endo): lift endo through X and restrict to Ω²(M)
    let lift = lift_chain_map(&endo.mul(pi), &x, 0, &x.as_complex(), 1)?;
    let omega_f = linalg::coordinates(&incl, &lift[1].mul(&incl))?;
    let diff = sigma.mul(&omega_f).mul(&sigma_inv).sub(&endo);
    Ok(HellerReport {
        passed: factors_through_cover(&diff, m, &x)?,
        f_stably_zero: factors_through_cover(&endo, m, &x)?,
    })
}

/// Whether an endomorphism `h` of `M` factors as `π ∘ φ` through the cover
/// `π : X_0 → M`.
fn factors_through_cover(h: &Matrix, m: &Rep, x: &Resolution) -> Result<bool> {
    if h.is_zero() {
        return Ok(true);
    }
    let f = m.field();
    let pi = &x.maps[0];
    let homs = hom_basis(m, &x.terms[0].rep)?;
    if homs.is_empty() {
        return Ok(false);
    }
    let cols: Vec<Vector> = homs
        .iter()
        .map(|phi| pi.mul(&phi.matrix).data().to_vec())
        .collect();
    let sys = Matrix::from_cols(f, m.dim() * m.dim(), &cols);
    Ok(linalg::row_reduce(&sys).solve(h.data()).is_ok())
}

/// Degree-one generation of `Ext(k, k₋)` in odd degrees `n ≤ upto`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationRow {
    pub degree: usize,
    /// Rank of `Ext^{n-1}(k₋, k₋) · Ext^1(k, k₋)`.
    pub left_rank: usize,
    /// Rank of `Ext^1(k, k₋) · Ext^{n-1}(k, k)`.
    pub right_rank: usize,
    pub dim: usize,
}

impl GenerationRow {
    pub fn spans(&self) -> bool {
        self.left_rank == self.dim && self.right_rank == self.dim
    }
}

/// Compares the span of Yoneda products with `Ext^1(k, k₋)` on either side
/// against `Ext^n(k, k₋)`, by rank.
pub fn generation_in_degree_one_check(d: &Arc<Algebra>, upto: usize) -> Result<Vec<GenerationRow>> {
    let k = modops::standard_module(d, "k")?;
    let km = modops::standard_module(d, "k-")?;
    let pk = Arc::new(homology::minimal_resolution(&k, upto + 1)?);
    let pkm = Arc::new(homology::minimal_resolution(&km, upto + 1)?);
    let ones = cocycle_basis(&pk, 1, &km)?;
    let mut out = Vec::new();
    for n in (1..=upto).step_by(2) {
        let ambient = pk.terms[n].rep.dim() * km.dim();
        let dim = cocycle_basis(&pk, n, &km)?.len();
        let mut left = linalg::Subspace::new(d.field(), ambient);
        for z in &ones {
            for e in &cocycle_basis(&pkm, n - 1, &km)? {
                left.insert(yoneda(e, z)?.cocycle.data().to_vec());
            }
        }
        let mut right = linalg::Subspace::new(d.field(), ambient);
        for e in &cocycle_basis(&pk, n - 1, &k)? {
            for z in &ones {
                right.insert(yoneda(z, e)?.cocycle.data().to_vec());
            }
        }
        out.push(GenerationRow {
            degree: n,
            left_rank: left.dim(),
            right_rank: right.dim(),
            dim,
        });
    }
    Ok(out)
}

/// Basis of `Hom(P_n, N)` as classes; for minimal resolutions and simple `N`
/// these are exactly the Ext classes.
pub fn cocycle_basis(res: &Arc<Resolution>, n: usize, target: &Rep) -> Result<Vec<ExtElement>> {
    let p = &res.terms[n];
    let t = res.target.algebra().require_tables()?.clone();
    let mut out = Vec::new();
    for (j, label) in p.summands.iter().enumerate() {
        let e = &t.simple(label)?.idempotent;
        for v in linalg::row_reduce(&target.action(e)).image_basis() {
            let mut imgs = vec![vec_ops::zero(target.dim()); p.summands.len()];
            imgs[j] = v.clone();
            out.push(ExtElement::from_generator_images(res, n, target, &imgs)?);
        }
    }
    Ok(out)
}
