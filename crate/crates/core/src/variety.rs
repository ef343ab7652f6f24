//! Rank and support varieties as finite point sets of `P¹(F_p)`, restriction
//! coefficients of degree-two classes, and the identification of block
//! corners with the basic algebra `A`.

use crate::algebra::{Algebra, Family};
use crate::error::{Error, Result};
use crate::ext::{self, ExtElement};
use crate::field::{PrimeField, Scalar};
use crate::homology::{self, Resolution};
use crate::linalg;
use crate::matrix::{vec_ops, Matrix, Vector};
use crate::modops::{self, Corner};
use crate::pline::{projective_line, ProjPoint};
use crate::rep::Rep;
use crate::structure;
use crate::taft;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;

/// A subset of `P¹(F_p)`, kept in the order of [`projective_line`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietySet {
    field: PrimeField,
    points: Vec<ProjPoint>,
}

impl VarietySet {
    pub fn empty(field: PrimeField) -> Self {
        VarietySet {
            field,
            points: Vec::new(),
        }
    }

    pub fn all(field: PrimeField) -> Self {
        VarietySet {
            points: projective_line(&field),
            field,
        }
    }

    pub fn from_points(field: PrimeField, pts: impl IntoIterator<Item = ProjPoint>) -> Self {
        let mut points: Vec<ProjPoint> = pts.into_iter().collect();
        points.sort_by_key(|p| p.index(&field));
        points.dedup();
        VarietySet { field, points }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, pt: &ProjPoint) -> bool {
        self.points.contains(pt)
    }

    pub fn union(&self, other: &VarietySet) -> VarietySet {
        VarietySet::from_points(self.field, self.points.iter().chain(&other.points).copied())
    }

    pub fn intersection(&self, other: &VarietySet) -> VarietySet {
        VarietySet::from_points(
            self.field,
            self.points.iter().filter(|p| other.contains(p)).copied(),
        )
    }
}

/// One point per line, or `EMPTY`.
impl fmt::Display for VarietySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "EMPTY");
        }
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn require_d2(alg: &Algebra) -> Result<()> {
    match alg.family() {
        Family::DTaft { n: 2, .. } => Ok(()),
        other => Err(Error::UnsupportedAlgebra(format!(
            "expected the double of the Taft algebra with n = 2, got {other:?}"
        ))),
    }
}

fn t_element(d: &Algebra, pt: &ProjPoint) -> Result<Vector> {
    let x = d.generator("x")?;
    let xx = d.generator("X")?;
    Ok(d.add(&d.scale(pt.alpha(), x), &d.scale(pt.beta(), xx)))
}

fn f_plus(d: &Algebra) -> Result<Vector> {
    d.named("f+")
        .cloned()
        .ok_or_else(|| Error::Invariant("f+ is not attached".into()))
}

/// Whether `M` is projective over `H_{αβ}`: `t = αx + βX` acts on `f₊M`
/// with rank `dim(f₊M)/2`.
pub fn rank_point_test(m: &Rep, pt: &ProjPoint) -> Result<bool> {
    let d = m.algebra();
    require_d2(d)?;
    let fp = m.action(&f_plus(d)?);
    let dim = linalg::rank(&fp);
    if dim % 2 == 1 {
        return Ok(false);
    }
    let t = m.action(&t_element(d, pt)?).mul(&fp);
    Ok(2 * linalg::rank(&t) == dim)
}

/// `V^r(M)`: the points where `M` is not projective over `H_{αβ}`.
pub fn rank_variety(m: &Rep) -> Result<VarietySet> {
    let f = m.field();
    let mut pts = Vec::new();
    for pt in projective_line(&f) {
        if !rank_point_test(m, &pt)? {
            pts.push(pt);
        }
    }
    Ok(VarietySet::from_points(f, pts))
}

/// Rank variety of a module over the basic algebra `A`: the points where
/// `αy₁ + βy₂` has rank different from `dim/2`.
pub fn rank_variety_basic(m: &Rep) -> Result<VarietySet> {
    let a = m.algebra();
    if *a.family() != Family::BasicA {
        return Err(Error::UnsupportedAlgebra(
            "expected the basic algebra A".into(),
        ));
    }
    let f = m.field();
    let y1 = m.generator_matrix("y1")?;
    let y2 = m.generator_matrix("y2")?;
    let dim = m.dim();
    let pts = projective_line(&f).into_iter().filter(|pt| {
        let u = y1.scale(pt.alpha()).add(&y2.scale(pt.beta()));
        dim % 2 == 1 || 2 * linalg::rank(&u) != dim
    });
    Ok(VarietySet::from_points(f, pts))
}

/// An isomorphism `A → eBe`, given by the images of `y₁, y₂, g`.
#[derive(Debug, Clone)]
pub struct BasicIdentification {
    pub corner: Corner,
    pub basic: Arc<Algebra>,
    /// Images of `y₁, y₂, g` in corner coordinates.
    pub y1: Vector,
    pub y2: Vector,
    pub g: Vector,
    /// `corner.dim x 8`, columns are the images of the basis of `A`.
    pub map: Matrix,
}

impl BasicIdentification {
    /// Transports `eM` to an `A`-module.
    pub fn transport(&self, m: &Rep) -> Result<Rep> {
        let (em, _) = modops::block_component(m, &self.corner)?;
        let mut mats = Vec::new();
        for gen in self.basic.generators() {
            let img = match gen.name.as_str() {
                "y1" => &self.y1,
                "y2" => &self.y2,
                "g" => &self.g,
                other => return Err(Error::UnknownSymbol(other.into())),
            };
            mats.push((gen.name.clone(), em.action(img)));
        }
        Rep::from_generators(&self.basic, mats).map_err(|e| Error::BadIdentification(e.to_string()))
    }
}

/// Checks that `y₁ ↦ y1, y₂ ↦ y2, g ↦ g` extends to an algebra isomorphism
/// `A → C` and returns its matrix.
fn verify_identification(a: &Algebra, c: &Algebra, imgs: [&Vector; 3]) -> Result<Matrix> {
    let bad = |s: &str| Error::BadIdentification(s.into());
    if a.generators().len() != 3 || c.dim() != a.dim() {
        return Err(bad("dimension mismatch"));
    }
    let cols: Vec<Vector> = a
        .basis_words()
        .iter()
        .map(|w| {
            w.iter()
                .fold(c.unit().clone(), |acc, &i| c.mul(&acc, imgs[i]))
        })
        .collect();
    let phi = Matrix::from_cols(c.field(), c.dim(), &cols);
    if linalg::rank(&phi) != c.dim() {
        return Err(bad("images do not span the corner"));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = phi.mul_vec(a.product_of_basis(i, j));
            let rhs = c.mul(&cols[i], &cols[j]);
            if lhs != rhs {
                return Err(bad("map is not multiplicative"));
            }
        }
    }
    Ok(phi)
}

const IDENTIFY_ATTEMPTS: u64 = 256;

/// Finds an isomorphism from the basic algebra `A` to the corner `eBe`.
///
/// A hint `(y₁, y₂, g)` in parent coordinates is tried first; otherwise
/// orthogonal primitive idempotents `ε₁, ε₂` are lifted from a random
/// element, `g = ε₁ - ε₂`, and `y₁, y₂` are solved for in
/// `ε₁Cε₂ ⊕ ε₂Cε₁`.
pub fn identify_basic_algebra(
    corner: &Corner,
    basic: &Arc<Algebra>,
    hint: Option<[&Vector; 3]>,
    seed: u64,
) -> Result<BasicIdentification> {
    let c = &corner.alg;
    let f = c.field();
    let done = |imgs: [Vector; 3]| -> Result<BasicIdentification> {
        let map = verify_identification(basic, c, [&imgs[0], &imgs[1], &imgs[2]])?;
        let [y1, y2, g] = imgs;
        Ok(BasicIdentification {
            corner: corner.clone(),
            basic: basic.clone(),
            y1,
            y2,
            g,
            map,
        })
    };
    if c.dim() != basic.dim() {
        return Err(Error::IdentificationFailed(format!(
            "corner has dimension {}, expected {}",
            c.dim(),
            basic.dim()
        )));
    }
    if let Some(h) = hint {
        let imgs = h.map(|v| {
            linalg::coordinates(
                &corner.embed,
                &Matrix::from_cols(f, v.len(), std::slice::from_ref(v)),
            )
            .map(|m| m.col(0))
        });
        if let [Ok(y1), Ok(y2), Ok(g)] = imgs {
            if let Ok(id) = done([y1, y2, g]) {
                return Ok(id);
            }
        }
    }
    let rad = structure::radical_basis(c)?;
    if rad.len() + 2 != c.dim() {
        return Err(Error::IdentificationFailed(format!(
            "radical has dimension {}, expected {}",
            rad.len(),
            c.dim() - 2
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..IDENTIFY_ATTEMPTS {
        if let Some(imgs) = identify_attempt(c, &mut rng) {
            if let Ok(id) = done(imgs) {
                return Ok(id);
            }
        }
    }
    Err(Error::IdentificationFailed(format!(
        "no identification after {IDENTIFY_ATTEMPTS} attempts"
    )))
}

fn random_vector(f: &PrimeField, n: usize, rng: &mut ChaCha8Rng) -> Vector {
    (0..n).map(|_| rng.gen_range(0..f.p())).collect()
}

fn random_in_span(f: &PrimeField, basis: &[Vector], n: usize, rng: &mut ChaCha8Rng) -> Vector {
    let mut v = vec_ops::zero(n);
    for b in basis {
        vec_ops::axpy(f, &mut v, rng.gen_range(0..f.p()), b);
    }
    v
}

fn identify_attempt(c: &Algebra, rng: &mut ChaCha8Rng) -> Option<[Vector; 3]> {
    let f = c.field();
    let n = c.dim();
    let one = c.unit();
    let r = random_vector(&f, n, rng);
    let eig = structure::eigenvalues(&c.left_mult(&r));
    if eig.len() != 2 {
        return None;
    }
    let shifted = c.sub(&r, &c.scale(eig[0], one));
    let e1 = structure::nilpotent_part(c, one, &shifted, n);
    let e2 = c.sub(one, &e1);
    if !c.is_idempotent(&e1) || vec_ops::is_zero(&e1) || vec_ops::is_zero(&e2) {
        return None;
    }
    let g = c.sub(&e1, &e2);
    let span = |l: &Vector, rr: &Vector| -> Vec<Vector> {
        let imgs: Vec<Vector> = (0..n).map(|i| c.mul(&c.mul(l, &c.basis(i)), rr)).collect();
        linalg::Subspace::spanned_by(f, n, &imgs).basis().to_vec()
    };
    let e12 = span(&e1, &e2);
    let e21 = span(&e2, &e1);
    if e12.len() != 2 || e21.len() != 2 {
        return None;
    }
    // b ↦ (ab, ba, ...) on coordinates of b in e21
    let system = |a: &Vector, extra: Option<&Vector>| -> Matrix {
        let cols: Vec<Vector> = e21
            .iter()
            .map(|b| {
                let mut col = c.mul(a, b);
                col.extend(c.mul(b, a));
                if let Some(a1) = extra {
                    col.extend(c.add(&c.mul(a1, b), &c.mul(b, a1)));
                }
                col
            })
            .collect();
        Matrix::from_cols(f, cols[0].len(), &cols)
    };
    let combine = |coef: &[Scalar]| -> Vector {
        let mut v = vec_ops::zero(n);
        for (k, b) in coef.iter().zip(&e21) {
            vec_ops::axpy(&f, &mut v, *k, b);
        }
        v
    };
    let a1 = random_in_span(&f, &e12, n, rng);
    let ker = linalg::kernel(&system(&a1, None));
    if ker.len() != 1 {
        return None;
    }
    let b1 = combine(&ker[0]);
    let a2 = random_in_span(&f, &e12, n, rng);
    let mut rhs = vec_ops::zero(2 * n);
    rhs.extend(c.add(&c.mul(&a2, &b1), &c.mul(&b1, &a2)));
    let rhs = vec_ops::scale(&f, f.neg(1), &rhs);
    let sol = linalg::row_reduce(&system(&a2, Some(&a1)))
        .solve(&rhs)
        .ok()?;
    let b2 = combine(&sol);
    Some([c.add(&a1, &b1), c.add(&a2, &b2), g])
}

/// Rank variety of a module in a block, through `eM` viewed as an
/// `A`-module.
pub fn rank_variety_block(m: &Rep, iso: &BasicIdentification) -> Result<VarietySet> {
    rank_variety_basic(&iso.transport(m)?)
}

/// Identification of the principal block corner `f₊ D f₊` of `D(Λ₂)` with
/// `A`, trying `y₁ = x f₊, y₂ = X f₊, g = g f₊` first.
pub fn principal_block_identification(d: &Arc<Algebra>, seed: u64) -> Result<BasicIdentification> {
    require_d2(d)?;
    let fp = f_plus(d)?;
    let corner = Corner::new(d, &fp)?;
    let basic = Arc::new(taft::build_basic_algebra_a(d.field())?);
    let y1 = d.mul(d.generator("x")?, &fp);
    let y2 = d.mul(d.generator("X")?, &fp);
    let g = d.mul(d.generator("g")?, &fp);
    identify_basic_algebra(&corner, &basic, Some([&y1, &y2, &g]), seed)
}

/// A degree-two class `u·x + v·y + w·z` of `Ext(k, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtRingPoint {
    pub u: Scalar,
    pub v: Scalar,
    pub w: Scalar,
}

impl ExtRingPoint {
    pub fn new(u: Scalar, v: Scalar, w: Scalar) -> Self {
        ExtRingPoint { u, v, w }
    }

    pub fn class(&self, res: &Arc<Resolution>) -> Result<ExtElement> {
        ext::ext2_element(res, self.u, self.v, self.w)
    }
}

/// Coefficient of the generator in the restriction of the class to
/// `H_{αβ}`: `u α² + v β² + w αβ`.
pub fn restriction_coefficient(f: &PrimeField, cls: &ExtRingPoint, pt: &ProjPoint) -> Scalar {
    let (a, b) = (pt.alpha(), pt.beta());
    let terms = [
        f.mul(cls.u, f.mul(a, a)),
        f.mul(cls.v, f.mul(b, b)),
        f.mul(cls.w, f.mul(a, b)),
    ];
    terms.iter().fold(0, |acc, &t| f.add(acc, t))
}

/// The periodic resolution `… → He₋ → He₊ → k` of the trivial
/// `H_{αβ}`-module with differentials right multiplication by `t`.
pub fn h_resolution_k(
    emb: &crate::algebra::SubalgebraEmbedding,
    length: usize,
) -> Result<Resolution> {
    let h = &emb.sub;
    let k = modops::trivial_module(h, Some(emb))?;
    let t = h.generator("t")?.clone();
    let label = |i: usize| if i.is_multiple_of(2) { "k" } else { "k-" }.to_string();
    let mut labels = Vec::new();
    let mut images = Vec::new();
    for i in 0..=length {
        labels.push(vec![label(i)]);
        if i == 0 {
            images.push(vec![vec![1]]);
        } else {
            let prev = modops::ProjectiveSum::new(h, vec![label(i - 1)])?;
            images.push(vec![prev.rep.act(&t, &prev.generator(0))]);
        }
    }
    Resolution::from_generator_images(k, labels, images)
}

/// The restriction coefficient read off a chain lift of `id_k` from the
/// `H_{αβ}`-resolution into the restricted canonical resolution.
pub fn restriction_coefficient_by_lift(
    res: &Arc<Resolution>,
    cls: &ExtRingPoint,
    pt: ProjPoint,
) -> Result<Scalar> {
    let d = res.target.algebra();
    let emb = taft::subalgebra_h(d, pt)?;
    let q = h_resolution_k(&emb, 2)?;
    let target = res.restricted(&emb)?;
    let theta = ext::lift_chain_map(&q.maps[0], &q, 0, &target, 2)?;
    let z = cls.class(res)?;
    let v = z.cocycle.mul(&theta[2]).mul_vec(&q.terms[2].generator(0));
    Ok(v[0])
}

/// `(βz - αy, βx - αz)`, whose restrictions vanish exactly at `(α:β)`.
pub fn kernel_pair(f: &PrimeField, pt: &ProjPoint) -> (ExtRingPoint, ExtRingPoint) {
    let (a, b) = (pt.alpha(), pt.beta());
    (
        ExtRingPoint::new(0, f.neg(a), b),
        ExtRingPoint::new(b, 0, f.neg(a)),
    )
}

/// Per-point modules `L_{ζ₁} ⊗ L_{ζ₂}` for the support criterion.
#[derive(Debug, Clone)]
pub struct SupportOracle {
    field: PrimeField,
    per_point: Vec<(ProjPoint, Rep)>,
}

impl SupportOracle {
    pub fn new(d: &Arc<Algebra>) -> Result<Self> {
        require_d2(d)?;
        let f = d.field();
        let res = Arc::new(homology::canonical_resolution_k(d, 3)?);
        let mut per_point = Vec::new();
        for pt in projective_line(&f) {
            let (z1, z2) = kernel_pair(&f, &pt);
            let l1 = ext::l_zeta(&z1.class(&res)?)?;
            let l2 = ext::l_zeta(&z2.class(&res)?)?;
            per_point.push((pt, modops::tensor(&l1, &l2)?));
        }
        Ok(SupportOracle {
            field: f,
            per_point,
        })
    }

    /// `L_{ζ₁} ⊗ L_{ζ₂}` at a point.
    pub fn module_at(&self, pt: &ProjPoint) -> Option<&Rep> {
        self.per_point.iter().find(|(p, _)| p == pt).map(|(_, l)| l)
    }

    /// Points where `M ⊗ L_{ζ₁} ⊗ L_{ζ₂}` is not projective. Only `f₊M`
    /// is tensored; the `f₋` block is semisimple.
    pub fn variety(&self, m: &Rep) -> Result<VarietySet> {
        let d = m.algebra();
        let fp = f_plus(d)?;
        let basis = linalg::row_reduce(&m.action(&fp)).image_basis().to_vec();
        if basis.is_empty() {
            return Ok(VarietySet::empty(self.field));
        }
        let (fm, _) = m.submodule(&basis)?;
        let mut pts = Vec::new();
        for (pt, l) in &self.per_point {
            if !modops::is_projective(&modops::tensor(&fm, l)?)? {
                pts.push(*pt);
            }
        }
        Ok(VarietySet::from_points(self.field, pts))
    }
}

/// `V^s(M)` as a point set, by the `L_ζ` criterion.
pub fn support_variety(m: &Rep) -> Result<VarietySet> {
    SupportOracle::new(m.algebra())?.variety(m)
}
