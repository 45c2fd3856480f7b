//! SL(2) pants and the symmetric-square embedding into SO(J) ⊂ SL(3,ℂ).

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};
use crate::linalg::{from_rows, r, CScalar, Mat3, Vec3};

pub type Mat2 = Matrix2<CScalar>;
pub type Vec2 = Vector2<CScalar>;

const SQRT2: f64 = core::f64::consts::SQRT_2;

/// The antidiagonal form of signature (2,1).
pub fn form_j() -> Mat3 {
    Mat3::from_fn(|i, j| if i + j == 2 { r(1.0) } else { r(0.0) })
}

pub fn mat2(a: CScalar, b: CScalar, c: CScalar, d: CScalar) -> Mat2 {
    Mat2::new(a, b, c, d)
}

pub fn det2(m: &Mat2) -> CScalar {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Inverse of a unimodular 2×2 matrix.
pub fn inv2(m: &Mat2) -> Mat2 {
    Mat2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
}

/// Φ*: the image of `[[a, b], [c, d]]` in SO(J).
pub fn phi_star(m: &Mat2) -> Mat3 {
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    from_rows([
        [a * a, -a * b * SQRT2, -b * b],
        [-a * c * SQRT2, a * d + b * c, b * d * SQRT2],
        [-c * c, c * d * SQRT2, d * d],
    ])
}

/// The map on vectors intertwined by Φ*.
pub fn phi_vec(w: &Vec2) -> Vec3 {
    Vec3::new(-w[0] * w[0], w[0] * w[1] * SQRT2, w[1] * w[1])
}

/// A pair `(Â, B̂)` in normal form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2Pair {
    pub a: Mat2,
    pub b: Mat2,
    pub tr_comm: CScalar,
    /// `tr[Â,B̂] = 2` within 1e-9.
    pub reducible: bool,
}

impl Sl2Pair {
    /// `Ĉ = (B̂Â)⁻¹`.
    pub fn c(&self) -> Mat2 {
        inv2(&(self.b * self.a))
    }
}

/// `Â = [[x, -1], [1, 0]]`, `B̂ = [[0, ζ], [-1/ζ, y]]` with `ζ + 1/ζ = z`,
/// so that `trÂ = x`, `trB̂ = y`, `tr ÂB̂ = z`.
pub fn sl2_pants_from_traces(x: CScalar, y: CScalar, z: CScalar) -> Sl2Pair {
    let d = (z * z - 4.0).sqrt();
    let (p, m) = ((z + d) / 2.0, (z - d) / 2.0);
    let zeta = if (p.norm() - m.norm()).abs() > 1e-14 * p.norm().max(1.0) {
        if p.norm() > m.norm() { p } else { m }
    } else if p.arg() >= m.arg() {
        p
    } else {
        m
    };
    let a = mat2(x, r(-1.0), r(1.0), r(0.0));
    let b = mat2(r(0.0), zeta, -zeta.inv(), y);
    let tr_comm = (a * b * inv2(&a) * inv2(&b)).trace();
    Sl2Pair {
        a,
        b,
        tr_comm,
        reducible: (tr_comm - 2.0).norm() <= 1e-9,
    }
}

/// Shape invariant and commutator trace of the Φ*-image of a Fuchsian pants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuchsianShape {
    pub sigma: CScalar,
    pub tr_comm: CScalar,
}

fn branch_root(a: CScalar, b: CScalar, c: CScalar) -> Result<CScalar> {
    for t in [a, b, c] {
        let s = t + 1.0;
        if s.im == 0.0 && s.re < 0.0 {
            return Err(Error::DomainError("a + 1 lies on the negative real axis"));
        }
    }
    Ok((a + 1.0).sqrt() * (b + 1.0).sqrt() * (c + 1.0).sqrt())
}

/// `σ = a+b+c+1 + 2√((a+1)(b+1)(c+1))` with the positive root, and
/// `tr[A,B] = (a+b+c+1+√((a+1)(b+1)(c+1)))² - 1`.
///
/// For complex input the root is the product of principal roots of the
/// three factors.
pub fn fuchsian_shape(a: CScalar, b: CScalar, c: CScalar) -> Result<FuchsianShape> {
    let k = branch_root(a, b, c)?;
    Ok(shape_from_root(a, b, c, k))
}

fn shape_from_root(a: CScalar, b: CScalar, c: CScalar, k: CScalar) -> FuchsianShape {
    let h = a + b + c + 1.0;
    FuchsianShape {
        sigma: h + k * 2.0,
        tr_comm: (h + k) * (h + k) - 1.0,
    }
}

/// Both roots `a+b+c+1 ± 2√((a+1)(b+1)(c+1))` of the shape quadratic,
/// principal root first.
pub fn shape_quadratic_roots(a: CScalar, b: CScalar, c: CScalar) -> (CScalar, CScalar) {
    let h = a + b + c + 1.0;
    let k = ((a + 1.0) * (b + 1.0) * (c + 1.0)).sqrt() * 2.0;
    (h + k, h - k)
}

/// Analytic continuation of the Fuchsian branch along a polyline of
/// boundary traces. The first vertex fixes the branch via
/// [`fuchsian_shape`]; the square root is then followed continuously.
pub fn continue_shape(path: &[[CScalar; 3]]) -> Result<FuchsianShape> {
    let first = path
        .first()
        .ok_or(Error::DomainError("empty continuation path"))?;
    let mut k = branch_root(first[0], first[1], first[2])?;
    let prod = |p: &[CScalar; 3]| (p[0] + 1.0) * (p[1] + 1.0) * (p[2] + 1.0);
    let mut last = *first;
    for next in &path[1..] {
        let steps = 64;
        for i in 1..=steps {
            let t = i as f64 / steps as f64;
            let p = [0, 1, 2].map(|j| last[j] + (next[j] - last[j]) * t);
            let q = prod(&p);
            if q.norm() < 1e-12 {
                return Err(Error::DomainError("continuation path meets the branch locus"));
            }
            let s = q.sqrt();
            k = if (s - k).norm() <= (s + k).norm() { s } else { -s };
        }
        last = *next;
    }
    Ok(shape_from_root(last[0], last[1], last[2], k))
}
