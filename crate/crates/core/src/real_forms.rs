//! Real forms: detection of SO(3,ℂ), SL(3,ℝ) and SU(2,1) pants and
//! surfaces, Goldman–Zhang coordinates and Parker–Platis cross-ratios.

use alloc::vec::Vec;

use nalgebra::{Matrix4, Vector4};

use crate::error::{Error, Result};
use rand::Rng;

use crate::gluing::{FnRecord, Letter, SurfaceRep};
use crate::linalg::{
    adj, classify, cubic_roots, eigen3, moduli_distinct, CLASSIFY_TOL, norm, tr, CScalar, EigenTriple, Mat3, Vec3,
};
use crate::sample::{self, SampleRng};
use crate::sl2::form_j;
use crate::trace_algebra::{lawton_sym, t2, ShapePair, TraceCoordsY};

/// Subgroups recognized by the detectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupTag {
    SO3C,
    Reducible,
    SL3R,
    SU21,
    Generic,
}

impl SubgroupTag {
    pub fn name(self) -> &'static str {
        match self {
            SubgroupTag::SO3C => "SO3C",
            SubgroupTag::Reducible => "Reducible",
            SubgroupTag::SL3R => "SL3R",
            SubgroupTag::SU21 => "SU21",
            SubgroupTag::Generic => "Generic",
        }
    }
}

/// One named test contributing to a verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Evidence {
    pub name: &'static str,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubgroupVerdict {
    pub tag: SubgroupTag,
    /// Every tag whose tests passed, in detection order.
    pub passing: Vec<SubgroupTag>,
    pub evidence: Vec<Evidence>,
    /// Number of sampled words behind a heuristic verdict (0 for exact tests).
    pub samples: usize,
    pub note: Option<&'static str>,
}

impl SubgroupVerdict {
    pub fn passes(&self, tag: SubgroupTag) -> bool {
        self.passing.contains(&tag)
    }

    pub fn residual(&self, name: &str) -> Option<f64> {
        self.evidence.iter().find(|e| e.name == name).map(|e| e.residual)
    }

    fn from_evidence(passing: Vec<SubgroupTag>, evidence: Vec<Evidence>, samples: usize) -> Self {
        SubgroupVerdict {
            tag: passing.first().copied().unwrap_or(SubgroupTag::Generic),
            passing,
            evidence,
            samples,
            note: None,
        }
    }
}

fn rel(a: CScalar, b: CScalar) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

/// Coordinate-level detection for one pants.
pub fn detect_pants(y: &TraceCoordsY, tol: f64) -> SubgroupVerdict {
    let v = &y.y;
    let self_pairing = (0..4).map(|k| rel(v[k + 4], v[k])).fold(0.0, f64::max);
    let linear = rel(v[3], 3.0 - v[0] - v[1] - v[2]);
    let q = lawton_sym(v);
    let disc = q.discriminant().norm() / (1.0 + q.s.norm_sqr());
    let t2_res = t2(v[0], v[1], v[2], v[3]).norm() / (1.0 + v[3].norm_sqr());
    let reality = v.iter().map(|z| z.im.abs() / (1.0 + z.norm())).fold(0.0, f64::max);
    let pairing = (0..4).map(|k| rel(v[k + 4], v[k].conj())).fold(0.0, f64::max);

    let paired = self_pairing <= tol;
    let so3 = paired && disc <= tol && t2_res <= tol && linear > tol;
    let reducible = paired && linear <= tol;
    let ev = |name, residual: f64, passed| Evidence { name, residual, passed };
    let evidence = alloc::vec![
        ev("self_pairing", self_pairing, paired),
        ev("repeated_root", disc, disc <= tol),
        ev("t2_branch", t2_res, t2_res <= tol),
        ev("linear_branch", linear, linear <= tol),
        ev("reality", reality, reality <= tol),
        ev("conjugate_pairing", pairing, pairing <= tol),
    ];
    let mut passing = Vec::new();
    if so3 {
        passing.push(SubgroupTag::SO3C);
    }
    if reducible {
        passing.push(SubgroupTag::Reducible);
    }
    if reality <= tol {
        passing.push(SubgroupTag::SL3R);
    }
    if pairing <= tol {
        passing.push(SubgroupTag::SU21);
    }
    SubgroupVerdict::from_evidence(passing, evidence, 0)
}

/// Relative tolerance of the word-sampling detector.
pub const ACOSTA_TOL: f64 = 1e-7;

fn edge_evidence(k: &[CScalar; 3]) -> (f64, f64, f64) {
    let so = (k[1] - 1.0).norm();
    let su = (k[1].norm() - 1.0).abs().max((k[0] * k[2].conj() - 1.0).norm());
    let real = k.iter().map(|z| z.im.abs() / z.norm()).fold(0.0, f64::max);
    (so, su, real)
}

/// Coordinate-level detection for an assembled surface: every pants must
/// pass a tag at the trace level and every twist must lie in the matching
/// real centralizer (SO(3,ℂ): `v ≡ 0`; SU(2,1): `|κ₂| = 1`, `κ₁κ̄₃ = 1`;
/// SL(3,ℝ): all `κ` real).
///
/// The twist test is relative to the library's zero-twist reference, which
/// stays in the real form for SO(J) and SL(3,ℝ) pants. For SU(2,1) pants
/// that are not Fuchsian the word scan is the reliable test.
pub fn detect_surface(rec: &FnRecord, tol: f64) -> SubgroupVerdict {
    let pants: Vec<SubgroupVerdict> = rec.pants.iter().map(|p| detect_pants(&p.coords, tol)).collect();
    let (mut so, mut su, mut real) = (0.0f64, 0.0f64, 0.0f64);
    for e in &rec.edges {
        let (a, b, c) = edge_evidence(&e.glue.kappas());
        so = so.max(a);
        su = su.max(b);
        real = real.max(c);
    }
    let all = |t: SubgroupTag| pants.iter().all(|v| v.passes(t));
    let mut evidence = alloc::vec![
        Evidence { name: "edge_so3", residual: so, passed: so <= tol },
        Evidence { name: "edge_su21", residual: su, passed: su <= tol },
        Evidence { name: "edge_real", residual: real, passed: real <= tol },
    ];
    for v in &pants {
        for e in &v.evidence {
            if let Some(x) = evidence.iter_mut().find(|x| x.name == e.name) {
                x.residual = x.residual.max(e.residual);
                x.passed &= e.passed;
            } else {
                evidence.push(e.clone());
            }
        }
    }
    let mut passing = Vec::new();
    for (tag, edge_ok) in [
        (SubgroupTag::SO3C, so <= tol),
        (SubgroupTag::SL3R, real <= tol),
        (SubgroupTag::SU21, su <= tol),
    ] {
        if edge_ok && all(tag) {
            passing.push(tag);
        }
    }
    SubgroupVerdict::from_evidence(passing, evidence, 0)
}

/// Conjugator `G` reducing `Σ‖G g G⁻¹‖²` over the generators and their
/// inverses (a gradient flow on the Kempf–Ness functional). Words in the
/// balanced generators lose far less to rounding.
pub fn balance(gens: &[Mat3]) -> Mat3 {
    let mut g = Mat3::identity();
    let cost = |g: &Mat3| -> f64 {
        let gi = adj(g);
        gens.iter()
            .map(|m| {
                let (a, b) = (norm(&(g * m * gi)), norm(&(g * adj(m) * gi)));
                a * a + b * b
            })
            .sum()
    };
    let mut f = cost(&g);
    let mut step = 0.1;
    for _ in 0..200 {
        let gi = adj(&g);
        let mut mu = Mat3::zeros();
        for m in gens {
            for h in [g * m * gi, g * adj(m) * gi] {
                mu += h * h.adjoint() - h.adjoint() * h;
            }
        }
        if norm(&mu) <= 1e-6 * f {
            break;
        }
        let mut accepted = false;
        while step > 1e-8 {
            let trial = sample::expm(&(mu * CScalar::new(-step / f, 0.0))) * g;
            let ft = cost(&trial);
            if ft < f {
                g = trial;
                f = ft;
                step *= 1.5;
                accepted = true;
                break;
            }
            step /= 2.0;
        }
        if !accepted {
            break;
        }
    }
    g
}

fn random_word(rng: &mut SampleRng, n_gens: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut w: Vec<Letter> = Vec::with_capacity(len);
    while w.len() < len {
        let l = Letter {
            gen: rng.gen_range(0..n_gens),
            inv: rng.gen_bool(0.5),
        };
        if w.last().map_or(true, |p| *p != l.inverse()) {
            w.push(l);
        }
    }
    w
}

/// Word-sampling detector: traces of random words decide reality
/// (`tr W ∈ ℝ`), conjugate pairing (`tr W⁻¹ = conj tr W`) and self pairing
/// (`tr W⁻¹ = tr W`). Conjugate pairing is refined to SU(2,1) only when a
/// sampled word is loxodromic.
pub fn acosta_scan(rep: &SurfaceRep, n_words: usize, max_len: usize, seed: u64) -> SubgroupVerdict {
    acosta_scan_with(rep, n_words, max_len, seed, ACOSTA_TOL)
}

pub fn acosta_scan_with(
    rep: &SurfaceRep,
    n_words: usize,
    max_len: usize,
    seed: u64,
    tol: f64,
) -> SubgroupVerdict {
    let raw: Vec<Mat3> = (0..rep.n_generators()).map(|i| rep.generator(i).unwrap()).collect();
    let b = balance(&raw);
    let bi = adj(&b);
    let gens: Vec<Mat3> = raw.iter().map(|m| b * m * bi).collect();
    let invs: Vec<Mat3> = gens.iter().map(adj).collect();
    let norms: Vec<f64> = gens.iter().zip(&invs).map(|(g, h)| norm(g).max(norm(h))).collect();
    let mut rng = sample::rng(seed);
    let (mut real, mut su, mut so) = (0.0f64, 0.0f64, 0.0f64);
    let mut witness = false;
    for _ in 0..n_words {
        let w = random_word(&mut rng, gens.len(), max_len);
        let m = w.iter().fold(Mat3::identity(), |m, l| {
            m * if l.inv { invs[l.gen] } else { gens[l.gen] }
        });
        // The adjugate of the product would square its rounding error.
        let mi = w.iter().rev().fold(Mat3::identity(), |m, l| {
            m * if l.inv { gens[l.gen] } else { invs[l.gen] }
        });
        let (t, ti) = (tr(&m), tr(&mi));
        // Rounding in a product is bounded by the product of the letter
        // norms, not by the norm of the result.
        let scale = 1.0 + w.iter().map(|l| norms[l.gen]).product::<f64>();
        real = real.max(t.im.abs().max(ti.im.abs()) / scale);
        su = su.max((ti - t.conj()).norm() / scale);
        so = so.max((ti - t).norm() / scale);
        // The cubic formula is only good to ε^{1/3} near a triple root, so
        // the witness goes through the clustering classifier.
        if !witness && classify(&(m / m.determinant().powf(1.0 / 3.0)), CLASSIFY_TOL).is_loxodromic() {
            witness = true;
        }
    }
    let ev = |name, residual: f64| Evidence { name, residual, passed: residual <= tol };
    let evidence = alloc::vec![ev("self_pairing", so), ev("reality", real), ev("conjugate_pairing", su)];
    let mut passing = Vec::new();
    if so <= tol {
        passing.push(SubgroupTag::SO3C);
    }
    if real <= tol {
        passing.push(SubgroupTag::SL3R);
    }
    if su <= tol {
        passing.push(SubgroupTag::SU21);
    }
    let mut v = SubgroupVerdict::from_evidence(passing, evidence, n_words);
    if su <= tol && !witness {
        v.note = Some("SU21-or-SU3: no loxodromic witness found");
    }
    v
}

/// `‖M*JM − J‖ ≤ tol`.
pub fn su_check(m: &Mat3, tol: f64) -> bool {
    let j = form_j();
    norm(&(m.adjoint() * j * m - j)) <= tol
}

/// `‖MᵀJM − J‖ ≤ tol`.
pub fn so_check(m: &Mat3, tol: f64) -> bool {
    let j = form_j();
    norm(&(m.transpose() * j * m - j)) <= tol
}

/// Goldman and Zhang parameters for a convex projective pair of pants.
///
/// Each boundary carries `[λ, τ]`; `s` and `r` are Zhang's internal
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldmanParams {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub s: f64,
    pub r: f64,
}

impl GoldmanParams {
    pub fn uniform(lambda: f64, tau: f64, s: f64, r: f64) -> Self {
        GoldmanParams {
            a: [lambda, tau],
            b: [lambda, tau],
            c: [lambda, tau],
            s,
            r,
        }
    }

    /// Checks `0 < λ < 1`, `2/√λ < τ < λ + λ⁻²` on each boundary, and `s, r > 0`.
    pub fn validate(&self) -> Result<()> {
        for [l, t] in [self.a, self.b, self.c] {
            if !(l > 0.0 && l < 1.0) {
                return Err(Error::ConstraintViolated("0 < λ < 1"));
            }
            if !(t > 2.0 / libm::sqrt(l) && t < l + 1.0 / (l * l)) {
                return Err(Error::ConstraintViolated("2/√λ < τ < λ + λ⁻²"));
            }
        }
        if !(self.s > 0.0 && self.r > 0.0) {
            return Err(Error::ConstraintViolated("s > 0 and r > 0"));
        }
        Ok(())
    }

    pub fn rho_a(&self) -> f64 {
        let ([la, ta], [lb, _], [lc, _]) = (self.a, self.b, self.c);
        let s = self.s;
        1.0 + libm::sqrt(lc * la / lb) * ta * s + lc / lb * s * s
    }

    pub fn rho_b(&self) -> f64 {
        let ([la, _], [lb, tb], [lc, _]) = (self.a, self.b, self.c);
        let s = self.s;
        1.0 + libm::sqrt(la * lb / lc) * tb * s + la / lc * s * s
    }

    /// `ρ_C` in the form printed alongside `ρ_A` and `ρ_B`; it repeats
    /// `τ_A` and `λ_C/λ_B` and does not satisfy `tr C = λ_C + τ_C`.
    pub fn rho_c_printed(&self) -> f64 {
        let ([la, ta], [lb, _], [lc, _]) = (self.a, self.b, self.c);
        let s = self.s;
        1.0 + libm::sqrt(lb * lc / la) * ta * s + lc / lb * s * s
    }

    /// `ρ_C` forced by `tr C = λ_C + τ_C`.
    pub fn rho_c(&self) -> f64 {
        let ([la, _], [lb, _], [lc, tc]) = (self.a, self.b, self.c);
        let s = self.s;
        1.0 + libm::sqrt(lb * lc / la) * tc * s + lb / la * s * s
    }
}

/// `(tr, tr⁻¹) = (λ + τ, λ⁻¹ + λτ)`.
pub fn goldman_boundary_to_traces(lambda: f64, tau: f64) -> (CScalar, CScalar) {
    (
        CScalar::new(lambda + tau, 0.0),
        CScalar::new(1.0 / lambda + lambda * tau, 0.0),
    )
}

/// Inverse of [`goldman_boundary_to_traces`]: `λ` is the smallest
/// eigenvalue and `τ` the sum of the other two.
pub fn traces_to_goldman_boundary(t: CScalar, tinv: CScalar) -> Result<(f64, f64)> {
    if t.im.abs() > 1e-12 * (1.0 + t.norm()) || tinv.im.abs() > 1e-12 * (1.0 + tinv.norm()) {
        return Err(Error::NotPositiveRealSpectrum);
    }
    let roots = cubic_roots(t, tinv);
    let mut x = [0.0; 3];
    for (k, z) in roots.iter().enumerate() {
        if z.im.abs() > 1e-7 * z.norm() || z.re <= 0.0 {
            return Err(Error::NotPositiveRealSpectrum);
        }
        x[k] = z.re;
    }
    x.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if (x[1] - x[0]) <= 1e-7 * x[1] {
        return Err(Error::DegenerateJacobian);
    }
    Ok((x[0], x[1] + x[2]))
}

/// Closed forms for `σ±` in Zhang's coordinates with a given `ρ_C`.
pub fn zhang_sigma_with(p: &GoldmanParams, rho_c: f64) -> ShapePair {
    let ([la, ta], [lb, tb], [lc, tc]) = (p.a, p.b, p.c);
    let (s, r) = (p.s, p.r);
    let sq = libm::sqrt;
    let l = sq(la * lb * lc);
    let rr = p.rho_a() * p.rho_b() * rho_c;
    let plus = (l + 1.0 / l) * s
        + (r + rr / r) / (s * s)
        + (sq(lc / lb) * sq(la) * ta + sq(la / lc) * sq(lb) * tb + sq(lb / la) * sq(lc) * tc) / s
        + 2.0 / (s * s);
    let minus = (l + 1.0 / l) / s
        + (l * r + rr / (l * r)) / s
        + (sq(lb / lc) * sq(la) * ta + sq(lc / la) * sq(lb) * tb + sq(la / lb) * sq(lc) * tc) * s
        + 2.0 * s * s;
    ShapePair {
        sigma_plus: CScalar::new(plus, 0.0),
        sigma_minus: CScalar::new(minus, 0.0),
    }
}

/// Closed forms for `σ±` using the relation-derived `ρ_C`.
pub fn zhang_sigma(p: &GoldmanParams) -> ShapePair {
    zhang_sigma_with(p, p.rho_c())
}

/// Hermitian pairing `⟨z, w⟩ = w* J z`.
pub fn pairing(z: &Vec3, w: &Vec3) -> CScalar {
    let j = form_j();
    (w.adjoint() * j * z)[(0, 0)]
}

/// Parker–Platis cross-ratios of the fixed points of `A` and `B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossRatios {
    pub x1: CScalar,
    pub x2: CScalar,
    pub x3: CScalar,
    /// `A` and `B` share a fixed point.
    pub degenerate: bool,
}

impl CrossRatios {
    /// Residuals of `|X₂| = |X₁||X₃|` and
    /// `2|X₁|²Re X₃ = |X₁|² + |X₂|² + 1 − 2 Re(X₁ + X₂)`, relative to the
    /// size of the terms.
    pub fn falbel_residuals(&self) -> (f64, f64) {
        let (a1, a2, a3) = (self.x1.norm(), self.x2.norm(), self.x3.norm());
        let first = (a2 - a1 * a3).abs() / (1.0 + a2);
        let lhs = 2.0 * a1 * a1 * self.x3.re;
        let rhs = a1 * a1 + a2 * a2 + 1.0 - 2.0 * (self.x1.re + self.x2.re);
        let second = (lhs - rhs).abs() / (1.0 + a1 * a1 * (1.0 + a3) + a2 * a2 + 2.0 * (a1 + a2));
        (first, second)
    }
}

/// Attracting and repelling fixed points of a loxodromic element of SU(J).
pub fn null_fixed_points(m: &Mat3) -> Result<(EigenTriple, Vec3, Vec3)> {
    let e = eigen3(m, 1e-9).map_err(|_| Error::NotLoxodromic)?;
    if !moduli_distinct(&e.values, 1e-9) {
        return Err(Error::NotLoxodromic);
    }
    let (a, r) = (e.attracting(), e.repelling());
    let worst = pairing(&a, &a).norm().max(pairing(&r, &r).norm());
    if worst > 1e-8 {
        return Err(Error::NotNullFixedPoints(worst));
    }
    Ok((e, a, r))
}

pub fn cross_ratios(a: &Mat3, b: &Mat3) -> Result<CrossRatios> {
    let (_, aa, ra) = null_fixed_points(a)?;
    let (_, ab, rb) = null_fixed_points(b)?;
    let p = pairing;
    let x1 = p(&ra, &ab) * p(&rb, &aa) / (p(&rb, &ab) * p(&ra, &aa));
    let x2 = p(&aa, &ab) * p(&rb, &ra) / (p(&rb, &ab) * p(&aa, &ra));
    let x3 = p(&ab, &aa) * p(&rb, &ra) / (p(&rb, &aa) * p(&ab, &ra));
    let shared = [p(&aa, &ab), p(&ra, &rb), p(&aa, &rb), p(&ra, &ab)]
        .iter()
        .map(|z| z.norm())
        .fold(f64::INFINITY, f64::min);
    Ok(CrossRatios {
        x1,
        x2,
        x3,
        degenerate: shared < 1e-10,
    })
}

/// The four traces entering the Parker–Platis linear system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PpTraces {
    pub ba: CScalar,
    pub ainv_binv: CScalar,
    pub ainv_b: CScalar,
    pub binv_a: CScalar,
}

impl PpTraces {
    pub fn of(a: &Mat3, b: &Mat3) -> Self {
        let (ai, bi) = (crate::linalg::adj(a), crate::linalg::adj(b));
        PpTraces {
            ba: (b * a).trace(),
            ainv_binv: (ai * bi).trace(),
            ainv_b: (ai * b).trace(),
            binv_a: (bi * a).trace(),
        }
    }
}

fn pd2(v: &[CScalar; 3]) -> CScalar {
    let d = (v[0] - v[1]) * (v[1] - v[2]) * (v[0] - v[2]);
    d * d
}

/// The linear system for `(X₁, X̄₁, X₂, X̄₂)`, its right-hand side and
/// its determinant `Δ`.
pub fn pp_system(
    ea: &[CScalar; 3],
    eb: &[CScalar; 3],
    t: &PpTraces,
) -> (Matrix4<CScalar>, Vector4<CScalar>, CScalar) {
    let inv = |v: &[CScalar; 3]| [v[0].inv(), v[1].inv(), v[2].inv()];
    let (ia, ib) = (inv(ea), inv(eb));
    let rows = [(ea, eb, t.ba), (&ia, &ib, t.ainv_binv), (&ia, eb, t.ainv_b), (ea, &ib, t.binv_a)];
    let mut m = Matrix4::zeros();
    let mut rhs = Vector4::zeros();
    for (k, (x, y, tr)) in rows.iter().enumerate() {
        let [l, mm, n] = **x;
        let [bl, bm, bn] = **y;
        rhs[k] = *tr - (l + n) * bm - mm * (bl + bn) + mm * bm;
        m[(k, 0)] = (n - mm) * (bn - bm);
        m[(k, 1)] = (l - mm) * (bl - bm);
        m[(k, 2)] = (l - mm) * (bn - bm);
        m[(k, 3)] = (n - mm) * (bl - bm);
    }
    (m, rhs, pd2(ea) * pd2(eb))
}

/// Recovers `(X₁, X₂)` from eigenvalues and traces, checking that the
/// solution is conjugate-paired.
pub fn pp_linear_system(
    ea: &EigenTriple,
    eb: &EigenTriple,
    traces: &PpTraces,
) -> Result<(CScalar, CScalar)> {
    let (m, rhs, delta) = pp_system(&ea.values, &eb.values, traces);
    let scale = libm::pow(ea.values[0].norm(), 6.0) * libm::pow(eb.values[0].norm(), 6.0);
    let rel_delta = delta.norm() / scale.max(1.0);
    if rel_delta <= 1e-12 {
        return Err(Error::DegenerateDelta(rel_delta));
    }
    let sol = m.lu().solve(&rhs).ok_or(Error::DegenerateDelta(rel_delta))?;
    let gap = (sol[1] - sol[0].conj()).norm() / (1.0 + sol[0].norm());
    let gap2 = (sol[3] - sol[2].conj()).norm() / (1.0 + sol[2].norm());
    let gap = gap.max(gap2);
    if gap > 1e-7 {
        return Err(Error::ConjugacyInconsistent(gap));
    }
    Ok((sol[0], sol[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gluing::{assemble_surface, extract_fn, CentralizerParam, PantsDecomposition};
    use crate::linalg::{c, diag, eigenvalues, r};
    use crate::pants::goldman_pants;
    use crate::sample;
    use crate::sl2::{phi_star, sl2_pants_from_traces};
    use crate::trace_algebra::{pants_coords, self_paired, shape_invariants, RootChoice};
    use rand::Rng;

    #[test]
    fn fuchsian_tuple_passes_all_three() {
        let y = TraceCoordsY::new(self_paired(r(8.0), r(8.0), r(8.0), r(79.0)), RootChoice::Plus);
        let v = detect_pants(&y, 1e-8);
        assert_eq!(v.tag, SubgroupTag::SO3C);
        assert_eq!(v.passing, alloc::vec![SubgroupTag::SO3C, SubgroupTag::SL3R, SubgroupTag::SU21]);
    }

    #[test]
    fn detection_of_families() {
        let mut g = sample::rng(41);
        // Real pair with σ₊ ≠ σ₋.
        let a = sample::real_conjugator(&mut g, 1e3);
        let b = sample::real_conjugator(&mut g, 1e3);
        let v = detect_pants(&pants_coords(&a, &b), 1e-8);
        assert_eq!(v.tag, SubgroupTag::SL3R);
        assert_eq!(v.passing, alloc::vec![SubgroupTag::SL3R]);
        // SU(J) pair.
        let a = sample::su_loxodromic(&mut g, 1.2);
        let b = sample::su_loxodromic(&mut g, 1.2);
        let v = detect_pants(&pants_coords(&a, &b), 1e-8);
        assert_eq!(v.tag, SubgroupTag::SU21);
        // Goldman pants.
        let (p, _) = goldman_pants(&sample::goldman_params(&mut g), true).unwrap();
        assert_eq!(detect_pants(&p.coords, 1e-8).tag, SubgroupTag::SL3R);
        // Complex Φ*-image.
        let s = sl2_pants_from_traces(c(-3.0, 0.4), c(-2.5, -0.2), c(-3.5, 0.1));
        let y = pants_coords(&phi_star(&s.a), &phi_star(&s.b));
        let v = detect_pants(&y, 1e-8);
        assert_eq!(v.tag, SubgroupTag::SO3C);
        assert!(!v.passes(SubgroupTag::SU21) && !v.passes(SubgroupTag::SL3R));
        // Reducible block family.
        let p = crate::pants::build_reducible_pants(
            (c(1.0, 0.5), r(-3.0), c(0.2, 2.0)),
            ([r(1.0), r(2.0)], [c(0.0, 1.0), r(0.5)]),
        );
        assert_eq!(detect_pants(&p.coords, 1e-8).tag, SubgroupTag::Reducible);
        // Generic.
        let y = TraceCoordsY::new([0; 8].map(|_| sample::complex_box(&mut g, 3.0)), RootChoice::Plus);
        assert_eq!(detect_pants(&y, 1e-8).tag, SubgroupTag::Generic);
    }

    #[test]
    fn su_check_examples() {
        assert!(su_check(&Mat3::identity(), 1e-12));
        let l = CScalar::from_polar(2.0, core::f64::consts::PI / 6.0);
        let d = diag(l, l.conj() / l, l.conj().inv());
        assert!(su_check(&d, 1e-12));
        let mut g = sample::rng(42);
        let m = sample::unimodular_disk(&mut g);
        let j = form_j();
        assert!(norm(&(m.adjoint() * j * m - j)) > 1e-3);
        assert!(!su_check(&m, 1e-8));
    }

    #[test]
    fn su_spectra_and_traces() {
        let mut g = sample::rng(43);
        for _ in 0..50 {
            let m = sample::su_loxodromic(&mut g, 1.2);
            assert!((tr(&adj(&m)) - tr(&m).conj()).norm() < 1e-10 * (1.0 + tr(&m).norm()));
            let ev = eigenvalues(&m);
            let l = ev[0];
            let expect = [l, l.conj() / l, l.conj().inv()];
            for k in 0..3 {
                assert!((ev[k] - expect[k]).norm() < 1e-8 * (1.0 + l.norm()));
            }
        }
    }

    #[test]
    fn boundary_conversion() {
        let (t, ti) = goldman_boundary_to_traces(0.25, 5.0);
        assert_eq!((t, ti), (r(5.25), r(5.25)));
        let mut g = sample::rng(44);
        for _ in 0..200 {
            let l: f64 = g.gen_range(0.1..0.9);
            let lo = 2.0 / libm::sqrt(l);
            let hi = l + 1.0 / (l * l);
            let tau = lo + (hi - lo) * g.gen_range(0.01..0.99);
            let (t, ti) = goldman_boundary_to_traces(l, tau);
            let (l2, tau2) = traces_to_goldman_boundary(t, ti).unwrap();
            assert!((l2 - l).abs() < 1e-10 && (tau2 - tau).abs() < 1e-10 * tau);
        }
        let l = 0.5;
        let (t, ti) = goldman_boundary_to_traces(l, l + 1.0 / (l * l));
        assert_eq!(traces_to_goldman_boundary(t, ti), Err(Error::DegenerateJacobian));
        assert_eq!(
            traces_to_goldman_boundary(c(1.0, 1.0), c(1.0, -1.0)),
            Err(Error::NotPositiveRealSpectrum)
        );
    }

    #[test]
    fn zhang_matches_direct_shape() {
        let mut g = sample::rng(45);
        let mut printed_disagreements = 0;
        for _ in 0..100 {
            let p = sample::goldman_params(&mut g);
            let (rep, report) = goldman_pants(&p, true).unwrap();
            if report.discrepancy() > 1e-8 {
                printed_disagreements += 1;
                assert_eq!(report.used, crate::pants::RhoCPath::RelationDerived);
            }
            let z = zhang_sigma(&p);
            let s = shape_invariants(&rep.a, &rep.b);
            assert!((z.sigma_plus - s.sigma_plus).norm() < 1e-8 * s.sigma_plus.norm());
            assert!((z.sigma_minus - s.sigma_minus).norm() < 1e-8 * s.sigma_minus.norm());
        }
        assert!(printed_disagreements > 90);
        let p = GoldmanParams::uniform(0.25, 5.0, 1.0, 2.0);
        let z = zhang_sigma(&p);
        assert!(z.sigma_plus.re.is_finite() && z.sigma_minus.re.is_finite());
    }

    #[test]
    fn cross_ratio_identities_and_invariance() {
        let mut g = sample::rng(46);
        for _ in 0..50 {
            let a = sample::su_loxodromic(&mut g, 1.2);
            let b = sample::su_loxodromic(&mut g, 1.2);
            let x = cross_ratios(&a, &b).unwrap();
            let (f1, f2) = x.falbel_residuals();
            assert!(f1 < 1e-8 && f2 < 1e-8, "{f1} {f2}");
            let h = sample::su_element(&mut g, 0.5);
            let hi = adj(&h);
            let y = cross_ratios(&(h * a * hi), &(h * b * hi)).unwrap();
            for (p, q) in [(x.x1, y.x1), (x.x2, y.x2), (x.x3, y.x3)] {
                assert!((p - q).norm() < 1e-8 * (1.0 + p.norm()));
            }
            let (ea, eb) = (eigen3(&a, 1e-9).unwrap(), eigen3(&b, 1e-9).unwrap());
            let (x1, x2) = pp_linear_system(&ea, &eb, &PpTraces::of(&a, &b)).unwrap();
            assert!((x1 - x.x1).norm() < 1e-7 * (1.0 + x.x1.norm()));
            assert!((x2 - x.x2).norm() < 1e-7 * (1.0 + x.x2.norm()));
            let (_, _, delta) = pp_system(&ea.values, &eb.values, &PpTraces::of(&a, &b));
            let (m, _, _) = pp_system(&ea.values, &eb.values, &PpTraces::of(&a, &b));
            assert!((m.determinant() - delta).norm() < 1e-8 * delta.norm());
        }
    }

    #[test]
    fn cross_ratio_degenerate_and_rejections() {
        let mut g = sample::rng(47);
        let a = sample::su_loxodromic(&mut g, 1.2);
        let x = cross_ratios(&a, &a).unwrap();
        assert!(x.degenerate);
        assert!((x.x1 - 1.0).norm() < 1e-10);
        let m = sample::with_spectrum(&mut g, [r(4.0), r(1.0), r(0.25)], 1e3);
        assert!(matches!(cross_ratios(&m, &a), Err(Error::NotNullFixedPoints(_))));
        assert_eq!(cross_ratios(&Mat3::identity(), &a), Err(Error::NotLoxodromic));
    }

    #[test]
    fn pp_rejections() {
        let mut g = sample::rng(48);
        let a = sample::su_loxodromic(&mut g, 1.2);
        let b = sample::su_loxodromic(&mut g, 1.2);
        let (ea, eb) = (eigen3(&a, 1e-9).unwrap(), eigen3(&b, 1e-9).unwrap());
        let mut t = PpTraces::of(&a, &b);
        t.ba += sample::complex_box(&mut g, 1.0) * 0.01 * (1.0 + t.ba.norm());
        t.ainv_b += sample::complex_box(&mut g, 1.0) * 0.01 * (1.0 + t.ainv_b.norm());
        assert!(matches!(pp_linear_system(&ea, &eb, &t), Err(Error::ConjugacyInconsistent(_))));
        let rep = EigenTriple {
            values: [r(2.0), r(0.5), r(0.5)],
            vectors: ea.vectors,
        };
        assert!(matches!(
            pp_linear_system(&rep, &eb, &PpTraces::of(&a, &b)),
            Err(Error::DegenerateDelta(_))
        ));
    }
    fn theta(glue: CentralizerParam) -> SurfaceRep {
        let sp = sl2_pants_from_traces(r(-3.0), r(-3.2), r(-2.6));
        let y = pants_coords(&phi_star(&sp.a), &phi_star(&sp.b));
        assemble_surface(&PantsDecomposition::theta([glue; 3]), &[y, y], 3).unwrap()
    }

    #[test]
    fn surface_detection_families() {
        let cases = [
            (c(0.0, 0.0), c(0.0, 0.0), &[SubgroupTag::SO3C, SubgroupTag::SL3R, SubgroupTag::SU21][..]),
            (c(0.0, 0.0), c(0.0, 0.4), &[SubgroupTag::SU21][..]),
            (c(0.0, 0.7), c(0.0, 0.0), &[SubgroupTag::SO3C][..]),
            (c(0.7, 0.0), c(0.0, 0.0), &[SubgroupTag::SO3C, SubgroupTag::SL3R, SubgroupTag::SU21][..]),
            (c(0.3, 0.5), c(0.1, -0.2), &[][..]),
        ];
        for (u, v, expect) in cases {
            let rep = theta(CentralizerParam::new(u, v));
            let coord = detect_surface(&extract_fn(&rep).unwrap(), 1e-8);
            assert_eq!(coord.passing, expect, "coordinates, u = {u}, v = {v}");
            let scan = acosta_scan(&rep, 500, 12, 7);
            assert_eq!(scan.passing, expect, "words, u = {u}, v = {v}: {:?}", scan.evidence);
            assert_eq!(scan.samples, 500);
            assert!(scan.note.is_none());
        }
        let generic = acosta_scan(&theta(CentralizerParam::new(c(0.3, 0.5), c(0.1, -0.2))), 100, 12, 1);
        assert_eq!(generic.tag, SubgroupTag::Generic);
    }

    /// A conjugator `P` with `P⁻¹MP ∈ SU(J)` for every `M` preserving a
    /// common Hermitian form of signature (2,1).
    fn into_su(ms: &[Mat3]) -> Mat3 {
        use nalgebra::{DMatrix, SymmetricEigen};
        let basis = |k: usize| -> Mat3 {
            let mut h = Mat3::zeros();
            match k {
                0..=2 => h[(k, k)] = r(1.0),
                _ => {
                    let (i, j) = [(0, 1), (0, 2), (1, 2)][(k - 3) % 3];
                    let z = if k < 6 { r(1.0) } else { c(0.0, 1.0) };
                    h[(i, j)] = z;
                    h[(j, i)] = z.conj();
                }
            }
            h
        };
        let mut a = DMatrix::<f64>::zeros(18 * ms.len(), 9);
        for (n, m) in ms.iter().enumerate() {
            for k in 0..9 {
                let h = basis(k);
                let e = m.adjoint() * h * m - h;
                for (q, z) in e.iter().enumerate() {
                    a[(18 * n + 2 * q, k)] = z.re;
                    a[(18 * n + 2 * q + 1, k)] = z.im;
                }
            }
        }
        let svd = a.svd(false, true);
        let vt = svd.v_t.unwrap();
        let k = (0..9).min_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j])).unwrap();
        let mut h = Mat3::zeros();
        for q in 0..9 {
            h += basis(q) * r(vt[(k, q)]);
        }
        let eig = SymmetricEigen::new(h);
        let positive = eig.eigenvalues.iter().filter(|x| **x > 0.0).count();
        if positive == 1 {
            h = -h;
        }
        let eig = SymmetricEigen::new(h);
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
        let v = Mat3::from_fn(|i, j| eig.eigenvectors[(i, idx[j])]);
        let d = diag(
            r(1.0 / libm::sqrt(eig.eigenvalues[idx[0]].abs())),
            r(1.0 / libm::sqrt(eig.eigenvalues[idx[1]].abs())),
            r(1.0 / libm::sqrt(eig.eigenvalues[idx[2]].abs())),
        );
        // J = U diag(1, 1, −1) U*.
        let s = r(libm::sqrt(0.5));
        let u = crate::linalg::from_rows([[s, r(0.0), s], [r(0.0), r(1.0), r(0.0)], [s, r(0.0), -s]]);
        v * d * u.adjoint()
    }

    #[test]
    fn x3_sign_follows_commutator_root() {
        // Two SU(2,1) pairs with the same trace coordinates and opposite
        // commutator roots have conjugate X₃: the sign of Im X₃ is what
        // the root choice decides once the eigenvalues and X₁, X₂ are fixed.
        let mut g = sample::rng(47);
        let mut checked = 0;
        while checked < 12 {
            let a = sample::su_loxodromic(&mut g, 1.3);
            let b = sample::su_loxodromic(&mut g, 1.3);
            let x = cross_ratios(&a, &b).unwrap();
            let mut y = pants_coords(&a, &b);
            if y.quadratic().repeated(1e-6) {
                continue;
            }
            y.root = match y.root {
                RootChoice::Plus => RootChoice::Minus,
                RootChoice::Minus => RootChoice::Plus,
            };
            let Ok((p, _)) = crate::pants::build_pants(&y, 11) else { continue };
            let q = into_su(&[p.a, p.b]);
            let qi = q.try_inverse().unwrap();
            let (a2, b2) = (qi * p.a * q, qi * p.b * q);
            assert!(su_check(&a2, 1e-6) && su_check(&b2, 1e-6));
            let x2 = cross_ratios(&a2, &b2).unwrap();
            assert!((x2.x1 - x.x1).norm() < 1e-6 * (1.0 + x.x1.norm()));
            assert!((x2.x2 - x.x2).norm() < 1e-6 * (1.0 + x.x2.norm()));
            assert!((x2.x3 - x.x3.conj()).norm() < 1e-6 * (1.0 + x.x3.norm()));
            assert!(x.x3.im.abs() > 1e-6 && x.x3.im.signum() != x2.x3.im.signum());
            checked += 1;
        }
    }

    #[test]
    fn acosta_without_loxodromics() {
        // A compact group: a diagonal unitary and a real rotation.
        let a = diag(c(0.0, 0.4).exp(), c(0.0, 1.1).exp(), c(0.0, -1.5).exp());
        let (cs, sn) = (r(libm::cos(0.9)), r(libm::sin(0.9)));
        let b = crate::linalg::from_rows([[cs, -sn, r(0.0)], [sn, cs, r(0.0)], [r(0.0), r(0.0), r(1.0)]]);
        let p = crate::pants::PantsRep::new(a, b);
        let rep = SurfaceRep {
            decomposition: PantsDecomposition::theta([CentralizerParam::default(); 3]),
            pants: alloc::vec![p.clone(), p],
            frames: alloc::vec![Mat3::identity(); 2],
            kinds: alloc::vec![],
            stable_letters: alloc::vec![],
        };
        let v = acosta_scan(&rep, 50, 6, 2);
        assert!(v.passes(SubgroupTag::SU21));
        assert!(!v.passes(SubgroupTag::SL3R));
        assert_eq!(v.note, Some("SU21-or-SU3: no loxodromic witness found"));
    }
}
