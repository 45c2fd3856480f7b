//! Fixed-size 3×3 complex matrix algebra: characteristic polynomials,
//! closed-form eigen-decomposition and the elliptic/parabolic/loxodromic
//! classification of elements of SL(3,ℂ).

use crate::error::{Error, Result};
use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

pub type CScalar = Complex64;
pub type Mat3 = Matrix3<CScalar>;
pub type Vec3 = Vector3<CScalar>;

/// Default tolerance for `|det M - 1|` when a matrix is used as a group element.
pub const UNIMODULAR_TOL: f64 = 1e-9;
/// Default tolerance for the modulus tests in [`classify`].
pub const CLASSIFY_TOL: f64 = 1e-9;

const TIE_TOL: f64 = 1e-12;

#[inline]
pub const fn c(re: f64, im: f64) -> CScalar {
    Complex64::new(re, im)
}

#[inline]
pub const fn r(re: f64) -> CScalar {
    Complex64::new(re, 0.0)
}

pub fn diag(a: CScalar, b: CScalar, d: CScalar) -> Mat3 {
    Mat3::from_diagonal(&Vec3::new(a, b, d))
}

pub fn from_rows(rows: [[CScalar; 3]; 3]) -> Mat3 {
    Mat3::new(
        rows[0][0], rows[0][1], rows[0][2], rows[1][0], rows[1][1], rows[1][2], rows[2][0],
        rows[2][1], rows[2][2],
    )
}

pub fn to_rows(m: &Mat3) -> [[CScalar; 3]; 3] {
    let mut out = [[CScalar::default(); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = m[(i, j)];
        }
    }
    out
}

pub fn det(m: &Mat3) -> CScalar {
    m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
}

/// Classical adjugate, so that `m * adj(m) = det(m) I`.
pub fn adj(m: &Mat3) -> Mat3 {
    let e = |i: usize, j: usize| m[(i, j)];
    Mat3::new(
        e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1),
        e(0, 2) * e(2, 1) - e(0, 1) * e(2, 2),
        e(0, 1) * e(1, 2) - e(0, 2) * e(1, 1),
        e(1, 2) * e(2, 0) - e(1, 0) * e(2, 2),
        e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0),
        e(0, 2) * e(1, 0) - e(0, 0) * e(1, 2),
        e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0),
        e(0, 1) * e(2, 0) - e(0, 0) * e(2, 1),
        e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
    )
}

#[inline]
pub fn tr(m: &Mat3) -> CScalar {
    m[(0, 0)] + m[(1, 1)] + m[(2, 2)]
}

/// Inverse via the adjugate; exact for unimodular input up to rounding.
pub fn inverse(m: &Mat3) -> Mat3 {
    adj(m) / det(m)
}

/// Frobenius norm.
#[inline]
pub fn norm(m: &Mat3) -> f64 {
    libm::sqrt(m.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

pub fn check_unimodular(m: &Mat3, tol: f64) -> Result<()> {
    let gap = (det(m) - 1.0).norm();
    if gap <= tol && gap.is_finite() {
        Ok(())
    } else {
        Err(Error::NonUnimodular(gap))
    }
}

/// The three cube roots of `z`, principal root first.
pub fn cube_roots(z: CScalar) -> [CScalar; 3] {
    let w = cbrt(z);
    let omega = c(-0.5, libm::sqrt(0.75));
    [w, w * omega, w * omega * omega]
}

fn cbrt(z: CScalar) -> CScalar {
    if z.norm() == 0.0 {
        return CScalar::default();
    }
    CScalar::from_polar(libm::cbrt(z.norm()), z.arg() / 3.0)
}

/// Rescales `m` to determinant one.
///
/// Of the three admissible scalars, the one scoring lowest is taken. The
/// score is the smaller of two measures: how far `tr` and `tr adj` are from
/// the real axis, and how far `tr adj` is from `tr`. Real matrices therefore
/// stay real whatever the sign of their determinant, and a multiple of an
/// orthogonal matrix (for any symmetric form) lands in SO. Every choice
/// depends only on traces, so it commutes with conjugation.
pub fn unit_det(m: &Mat3) -> Mat3 {
    let roots = cube_roots(det(m));
    let t = tr(m);
    let s = tr(&adj(m));
    let score = |w: CScalar| {
        let (a, b) = (t / w, s / (w * w));
        (a.im.abs() + b.im.abs()).min((a - b).norm())
    };
    let size = (t / roots[0]).norm() + (s / (roots[0] * roots[0])).norm();
    let mut best = roots[0];
    let mut best_score = score(best);
    for &w in &roots[1..] {
        let sc = score(w);
        if sc < best_score - 1e-12 * size {
            best = w;
            best_score = sc;
        }
    }
    m / best
}

/// Coefficients `(c2, c1)` of `x³ - c2 x² + c1 x - 1`.
///
/// `c1` is taken as the trace of the adjugate, which equals `tr(M⁻¹)` for a
/// unimodular matrix.
pub fn char_poly(m: &Mat3) -> Result<(CScalar, CScalar)> {
    check_unimodular(m, UNIMODULAR_TOL)?;
    Ok((tr(m), tr(&adj(m))))
}

/// Roots of `x³ - t x² + s x - 1`, sorted as in [`EigenTriple`].
pub fn cubic_roots(t: CScalar, s: CScalar) -> [CScalar; 3] {
    let a = -t;
    let b = s;
    let d = r(-1.0);
    let p = b - a * a / 3.0;
    let q = a * a * a * (2.0 / 27.0) - a * b / 3.0 + d;
    let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let w1 = -q / 2.0 + disc;
    let w2 = -q / 2.0 - disc;
    let w = if w1.norm() >= w2.norm() { w1 } else { w2 };
    let shift = -a / 3.0;
    let mut out = [shift; 3];
    if w.norm() > 0.0 {
        for (k, u) in cube_roots(w).into_iter().enumerate() {
            out[k] = u - p / (u * 3.0) + shift;
        }
    }
    for x in &mut out {
        *x = polish(*x, a, b, d);
    }
    sort_spectrum(&mut out);
    out
}

fn polish(x: CScalar, a: CScalar, b: CScalar, d: CScalar) -> CScalar {
    let f = |x: CScalar| ((x + a) * x + b) * x + d;
    let fx = f(x);
    let df = (x * 3.0 + a * 2.0) * x + b;
    if df.norm() == 0.0 {
        return x;
    }
    let y = x - fx / df;
    if f(y).norm() < fx.norm() {
        y
    } else {
        x
    }
}

/// `true` when `a` comes before `b`: larger modulus first, ties broken by
/// larger argument.
fn precedes(a: CScalar, b: CScalar) -> bool {
    let (ma, mb) = (a.norm(), b.norm());
    if (ma - mb).abs() > TIE_TOL * ma.max(mb) {
        ma > mb
    } else {
        a.arg() > b.arg()
    }
}

pub fn sort_spectrum(v: &mut [CScalar; 3]) {
    for i in 1..3 {
        let mut j = i;
        while j > 0 && precedes(v[j], v[j - 1]) {
            v.swap(j, j - 1);
            j -= 1;
        }
    }
}

/// Sorted eigenvalues of a unimodular matrix.
pub fn eigenvalues(m: &Mat3) -> [CScalar; 3] {
    cubic_roots(tr(m), tr(&adj(m)))
}

/// A unit null vector of `m - λ I`, taken as the largest cross product of two
/// of its rows.
pub fn null_vector(m: &Mat3, lambda: CScalar) -> Vec3 {
    let n = m - Mat3::identity() * lambda;
    let rows = [n.row(0).transpose(), n.row(1).transpose(), n.row(2).transpose()];
    let mut best = Vec3::zeros();
    let mut best_norm = -1.0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let v = rows[i].cross(&rows[j]);
        let nv = v.norm();
        if nv > best_norm {
            best = v;
            best_norm = nv;
        }
    }
    normalize_vector(&best)
}

/// Unit Euclidean norm with the first non-negligible component real positive.
pub fn normalize_vector(v: &Vec3) -> Vec3 {
    let n = v.norm();
    if n == 0.0 {
        return *v;
    }
    let u = v / r(n);
    for k in 0..3 {
        let z = u[k];
        if z.norm() > 1e-10 {
            return u * (z.conj() / z.norm());
        }
    }
    u
}

/// Eigenvalues sorted by descending modulus with matching eigenvectors
/// (`v₊`, `v₀`, `v₋` for a strongly loxodromic element).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenTriple {
    pub values: [CScalar; 3],
    pub vectors: [Vec3; 3],
}

impl EigenTriple {
    /// Eigenvectors as the columns of a matrix.
    pub fn basis(&self) -> Mat3 {
        Mat3::from_columns(&self.vectors)
    }

    pub fn attracting(&self) -> Vec3 {
        self.vectors[0]
    }

    pub fn repelling(&self) -> Vec3 {
        self.vectors[2]
    }

    /// Smallest pairwise distance between eigenvalues, relative to the largest modulus.
    pub fn separation(&self) -> f64 {
        separation(&self.values)
    }
}

fn separation(v: &[CScalar; 3]) -> f64 {
    let scale = v[0].norm().max(1.0);
    let g = (v[0] - v[1]).norm().min((v[1] - v[2]).norm()).min((v[0] - v[2]).norm());
    g / scale
}

/// Eigen-decomposition of a unimodular matrix with simple spectrum.
pub fn eigen3(m: &Mat3, tol: f64) -> Result<EigenTriple> {
    check_unimodular(m, UNIMODULAR_TOL)?;
    eigen3_projective(m, tol)
}

/// [`eigen3`] without the determinant gate, for matrices already scaled to
/// determinant one whose computed determinant carries conditioning noise.
pub fn eigen3_projective(m: &Mat3, tol: f64) -> Result<EigenTriple> {
    let values = eigenvalues(m);
    let gap = separation(&values);
    if gap < tol {
        return Err(Error::RepeatedEigenvalues(gap));
    }
    let vectors = [
        null_vector(m, values[0]),
        null_vector(m, values[1]),
        null_vector(m, values[2]),
    ];
    Ok(EigenTriple { values, vectors })
}

/// Conjugacy classes of SL(3,ℂ) elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementClass {
    Identity,
    RegularElliptic,
    ComplexReflection,
    Unipotent,
    EllipticParabolic,
    LoxoParabolic,
    ComplexHomothety,
    Screw,
    StronglyLoxodromic,
}

impl ElementClass {
    pub fn name(self) -> &'static str {
        match self {
            ElementClass::Identity => "Identity",
            ElementClass::RegularElliptic => "RegularElliptic",
            ElementClass::ComplexReflection => "ComplexReflection",
            ElementClass::Unipotent => "Unipotent",
            ElementClass::EllipticParabolic => "EllipticParabolic",
            ElementClass::LoxoParabolic => "LoxoParabolic",
            ElementClass::ComplexHomothety => "ComplexHomothety",
            ElementClass::Screw => "Screw",
            ElementClass::StronglyLoxodromic => "StronglyLoxodromic",
        }
    }

    pub fn is_elliptic(self) -> bool {
        matches!(self, ElementClass::RegularElliptic | ElementClass::ComplexReflection)
    }

    pub fn is_parabolic(self) -> bool {
        matches!(self, ElementClass::Unipotent | ElementClass::EllipticParabolic)
    }

    pub fn is_loxodromic(self) -> bool {
        matches!(
            self,
            ElementClass::LoxoParabolic
                | ElementClass::ComplexHomothety
                | ElementClass::Screw
                | ElementClass::StronglyLoxodromic
        )
    }
}

/// Classifies a unimodular matrix.
///
/// Repeated eigenvalues are clustered at `tol^(1/3)` because a Jordan block
/// splits its eigenvalue by the cube (or square) root of the rounding error;
/// moduli are compared at `tol` using cluster means, which stay accurate.
pub fn classify(m: &Mat3, tol: f64) -> ElementClass {
    let id = Mat3::identity();
    if norm(&(m - id)) <= tol {
        return ElementClass::Identity;
    }
    let ev = eigenvalues(m);
    let scale = ev[0].norm().max(1.0);
    let eq = libm::cbrt(tol) * scale;
    let close = |i: usize, j: usize| (ev[i] - ev[j]).norm() <= eq;
    let n_close = [close(0, 1), close(1, 2), close(0, 2)]
        .iter()
        .filter(|&&b| b)
        .count();
    let unit = |z: CScalar| (z.norm() - 1.0).abs() <= tol;
    match n_close {
        0 => {
            if ev.iter().all(|&z| unit(z)) {
                ElementClass::RegularElliptic
            } else {
                let m = [ev[0].norm(), ev[1].norm(), ev[2].norm()];
                let tie = (m[0] - m[1]).abs() <= tol * scale || (m[1] - m[2]).abs() <= tol * scale;
                if tie {
                    ElementClass::Screw
                } else {
                    ElementClass::StronglyLoxodromic
                }
            }
        }
        1 => {
            let (mean, mu) = if close(0, 1) {
                ((ev[0] + ev[1]) / 2.0, ev[2])
            } else if close(1, 2) {
                ((ev[1] + ev[2]) / 2.0, ev[0])
            } else {
                ((ev[0] + ev[2]) / 2.0, ev[1])
            };
            // The double root is only good to √ε; λ²μ = 1 with the simple
            // root μ is much sharper.
            let s = mu.inv().sqrt();
            let lam = if (s - mean).norm() <= (s + mean).norm() { s } else { -s };
            let n = m - id * lam;
            let nn = norm(&n).max(1e-300);
            let diagonalizable = norm(&adj(&n)) <= libm::sqrt(tol) * nn * nn;
            match (diagonalizable, unit(lam)) {
                (true, true) => ElementClass::ComplexReflection,
                (true, false) => ElementClass::ComplexHomothety,
                (false, true) => ElementClass::EllipticParabolic,
                (false, false) => ElementClass::LoxoParabolic,
            }
        }
        _ => {
            let lam = (ev[0] + ev[1] + ev[2]) / 3.0;
            let n = m - id * lam;
            if norm(&n) <= eq * scale {
                ElementClass::ComplexReflection
            } else if (lam - 1.0).norm() <= eq {
                ElementClass::Unipotent
            } else {
                ElementClass::EllipticParabolic
            }
        }
    }
}

/// The discriminant `x²y² - 4(x³+y³) + 18xy - 27` of `X³ - xX² + yX - 1`.
pub fn trace_discriminant(x: CScalar, y: CScalar) -> CScalar {
    x * x * y * y - (x * x * x + y * y * y) * 4.0 + x * y * 18.0 - 27.0
}

/// Outcome of the trace test for strong loxodromy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceTest {
    pub strongly_loxodromic: bool,
    /// `tr(M⁻¹)` equals the conjugate of `tr(M)`.
    pub self_conjugate: bool,
    /// `F` lies inside the rounding band around zero.
    pub indeterminate: bool,
    pub f: CScalar,
}

pub fn trace_test(t: CScalar, tinv: CScalar) -> TraceTest {
    let f = trace_discriminant(t, tinv);
    let (a, b) = (t.norm(), tinv.norm());
    let scale = (a * a * b * b).max(a * a * a).max(b * b * b).max(1.0);
    let band = 1e-12 * scale;
    let self_conjugate = (tinv - t.conj()).norm() <= 1e-12 * (1.0 + a);
    let indeterminate = if self_conjugate {
        f.re.abs() <= band
    } else {
        f.norm() <= band
    };
    let strongly_loxodromic = if self_conjugate {
        f.re > band
    } else {
        f.norm() > band
    };
    TraceTest {
        strongly_loxodromic,
        self_conjugate,
        indeterminate,
        f,
    }
}

/// Trace criterion for strong loxodromy from `(tr M, tr M⁻¹)`.
///
/// When `tr M⁻¹` is not the conjugate of `tr M` the criterion only certifies
/// distinct eigenvalues; see [`moduli_distinct`] for the eigenvalue test.
pub fn strongly_loxodromic_by_trace(t: CScalar, tinv: CScalar) -> bool {
    trace_test(t, tinv).strongly_loxodromic
}

/// Eigenvalue test for strong loxodromy: pairwise relative modulus gaps above `gap`.
pub fn moduli_distinct(values: &[CScalar; 3], gap: f64) -> bool {
    let m = [values[0].norm(), values[1].norm(), values[2].norm()];
    let rel = |x: f64, y: f64| (x - y).abs() / x.max(y);
    rel(m[0], m[1]) > gap && rel(m[1], m[2]) > gap && rel(m[0], m[2]) > gap
}
