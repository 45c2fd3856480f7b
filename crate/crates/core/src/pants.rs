//! Pairs of pants `⟨A, B, C : CBA = I⟩`: construction from trace
//! coordinates, the reducible block family and Goldman's real matrices.

use alloc::vec::Vec;
use core::fmt;

use nalgebra::{SMatrix, SVector};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{
    adj, cubic_roots, diag, eigen3, norm, r, sort_spectrum, strongly_loxodromic_by_trace, tr, CScalar,
    Mat3, Vec3,
};
use crate::real_forms::GoldmanParams;
use crate::sample;
use crate::sl2;
use crate::trace_algebra::{commutator_trace, pants_coords, RootChoice, TraceCoordsY};

/// Relative size of the smallest shared-subspace defect below which a
/// pants is reported reducible.
pub const IRREDUCIBLE_TOL: f64 = 1e-7;

/// One three-holed sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct PantsRep {
    pub a: Mat3,
    pub b: Mat3,
    pub c: Mat3,
    pub coords: TraceCoordsY,
    pub irreducible: bool,
    /// Smallest relative defect of `B` preserving an eigenline or
    /// eigenplane of `A`; zero for reducible pairs.
    pub irreducibility_margin: f64,
}

impl PantsRep {
    /// Completes `(A, B)` with `C = (BA)⁻¹`.
    pub fn new(a: Mat3, b: Mat3) -> Self {
        let c = adj(&(b * a));
        let coords = pants_coords(&a, &b);
        let margin = irreducibility_margin(&a, &b);
        PantsRep {
            a,
            b,
            c,
            coords,
            irreducible: margin > IRREDUCIBLE_TOL,
            irreducibility_margin: margin,
        }
    }

    /// Boundary slot `k`: 0 = A, 1 = B, 2 = C.
    pub fn boundary(&self, k: usize) -> &Mat3 {
        match k {
            0 => &self.a,
            1 => &self.b,
            _ => &self.c,
        }
    }

    pub fn generators(&self) -> [Mat3; 3] {
        [self.a, self.b, self.c]
    }

    /// `‖CBA − I‖`.
    pub fn relation_residual(&self) -> f64 {
        norm(&(self.c * self.b * self.a - Mat3::identity()))
    }

    /// `(GAG⁻¹, GBG⁻¹, GCG⁻¹)` for unimodular `G`.
    pub fn conjugated(&self, g: &Mat3) -> PantsRep {
        let gi = adj(g);
        let mut p = PantsRep::new(g * self.a * gi, g * self.b * gi);
        p.c = g * self.c * gi;
        p
    }
}

/// How far `B` is from preserving an eigenline or eigenplane of `A`.
pub fn irreducibility_margin(a: &Mat3, b: &Mat3) -> f64 {
    let Ok(e) = crate::linalg::eigen3(a, 1e-9) else {
        return f64::NAN;
    };
    let basis = e.basis();
    let Some(bi) = basis.try_inverse() else {
        return f64::NAN;
    };
    let m = bi * b * basis;
    let scale = norm(&m).max(1e-300);
    let mut best = f64::INFINITY;
    for k in 0..3 {
        let col: f64 = (0..3).filter(|&i| i != k).map(|i| m[(i, k)].norm_sqr()).sum();
        let row: f64 = (0..3).filter(|&j| j != k).map(|j| m[(k, j)].norm_sqr()).sum();
        best = best.min(libm::sqrt(col) / scale).min(libm::sqrt(row) / scale);
    }
    best
}

/// Diagnostics of a [`build_pants`] run.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverReport {
    pub residual: f64,
    pub iterations: usize,
    pub restarts: usize,
    pub gauge: Gauge,
}

/// The two entries of `B` (in the eigenbasis of `A`) fixed to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gauge(pub [(usize, usize); 2]);

impl fmt::Display for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(i, j), (k, l)] = self.0;
        write!(f, "b{}{} = b{}{} = 1", i + 1, j + 1, k + 1, l + 1)
    }
}

/// Gauge slices tried by [`build_pants`], in order, with the number of
/// random starts spent on each.
pub fn gauge_schedule() -> Vec<(Gauge, usize)> {
    let primary = [(0, 1), (1, 2)];
    let fallback = [(0, 2), (1, 0)];
    let mut out = Vec::new();
    out.push((Gauge(primary), 24));
    out.push((Gauge(fallback), 8));
    let off: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    for (n, &p) in off.iter().enumerate() {
        for &q in &off[n + 1..] {
            let pair = [p, q];
            if p == (q.1, q.0) || pair == primary || pair == fallback || [q, p] == fallback {
                continue;
            }
            out.push((Gauge(pair), 8));
        }
    }
    out
}

/// Total number of random starts in [`gauge_schedule`] actually used.
pub const MAX_STARTS: usize = 64;
const MAX_ITER: usize = 80;
const CONVERGED: f64 = 1e-13;
const ACCEPT: f64 = 1e-10;

struct System {
    ev: [CScalar; 3],
    targets: [CScalar; 8],
    scale: [f64; 8],
    gauge: Gauge,
    n_eq: usize,
}

impl System {
    fn new(y: &TraceCoordsY, ev: [CScalar; 3], comm: CScalar, gauge: Gauge, n_eq: usize) -> Self {
        let v = &y.y;
        let targets = [
            r(1.0),
            v[1],
            v[5],
            v[6],
            v[2],
            v[3] + v[4] * v[1],
            v[7] + v[5] * v[0],
            comm,
        ];
        System {
            ev,
            targets,
            scale: targets.map(|t| 1.0 + t.norm()),
            gauge,
            n_eq,
        }
    }

    fn free(&self) -> [(usize, usize); 7] {
        let mut out = [(0, 0); 7];
        let mut k = 0;
        for i in 0..3 {
            for j in 0..3 {
                if !self.gauge.0.contains(&(i, j)) {
                    out[k] = (i, j);
                    k += 1;
                }
            }
        }
        out
    }

    fn matrix(&self, z: &SVector<CScalar, 7>) -> Mat3 {
        let mut b = Mat3::zeros();
        for &(i, j) in &self.gauge.0 {
            b[(i, j)] = r(1.0);
        }
        for (k, &(i, j)) in self.free().iter().enumerate() {
            b[(i, j)] = z[k];
        }
        b
    }

    fn values_and_gradients(&self, b: &Mat3) -> ([CScalar; 8], [Mat3; 8]) {
        let a = diag(self.ev[0], self.ev[1], self.ev[2]);
        let ai = diag(self.ev[0].inv(), self.ev[1].inv(), self.ev[2].inv());
        let ab = adj(b);
        let id = Mat3::identity();
        let x_of = |w: &Mat3| -> Mat3 {
            let tb = tr(b);
            let tw = tr(w);
            b * w + w * b - id * tr(&(w * b)) - w * tb + id * (tw * tb) - b * tw
        };
        let ba = b * a;
        let w = a * b * ai;
        let vals = [
            b.determinant(),
            tr(b),
            tr(&ab),
            tr(&(a * b)),
            tr(&adj(&ba)),
            tr(&(ai * b)),
            tr(&(ab * a)),
            tr(&(w * ab)),
        ];
        let grads = [
            ab.transpose(),
            id,
            id * tr(b) - b.transpose(),
            a.transpose(),
            (a * tr(&ba) - a * b * a).transpose(),
            ai.transpose(),
            x_of(&a).transpose(),
            (ai * ab * a).transpose() + x_of(&w).transpose(),
        ];
        (vals, grads)
    }

    fn residual(&self, z: &SVector<CScalar, 7>) -> SVector<CScalar, 8> {
        let (vals, _) = self.values_and_gradients(&self.matrix(z));
        SVector::from_fn(|k, _| {
            if k < self.n_eq {
                (vals[k] - self.targets[k]) / self.scale[k]
            } else {
                r(0.0)
            }
        })
    }

    fn jacobian(&self, z: &SVector<CScalar, 7>) -> SMatrix<CScalar, 8, 7> {
        let (_, grads) = self.values_and_gradients(&self.matrix(z));
        let free = self.free();
        SMatrix::from_fn(|k, m| {
            if k < self.n_eq {
                let (i, j) = free[m];
                grads[k][(i, j)] / self.scale[k]
            } else {
                r(0.0)
            }
        })
    }

    /// Damped Gauss–Newton from `z`, returning the final point, residual norm
    /// and iteration count.
    fn solve(&self, mut z: SVector<CScalar, 7>) -> (SVector<CScalar, 7>, f64, usize) {
        let mut f = self.residual(&z);
        let mut n = f.norm();
        for it in 0..MAX_ITER {
            if n <= CONVERGED || !n.is_finite() {
                return (z, n, it);
            }
            let jac = self.jacobian(&z);
            let svd = jac.svd(true, true);
            let Ok(d) = svd.solve(&(-f), 1e-14) else {
                return (z, n, it);
            };
            let mut t = 1.0;
            loop {
                let cand = z + d * r(t);
                let fc = self.residual(&cand);
                let nc = fc.norm();
                if nc * nc <= (1.0 - 1e-4 * t) * n * n {
                    z = cand;
                    f = fc;
                    n = nc;
                    break;
                }
                t *= 0.5;
                if t < 1e-8 {
                    return (z, n, it);
                }
            }
        }
        (z, n, MAX_ITER)
    }
}

/// Numerical section of the pants character variety: a triple `(A, B, C)`
/// with the given coordinates and commutator root, `A` diagonal with
/// eigenvalues of descending modulus.
/// Closed-form construction for coordinates on the self-paired locus:
/// the image of an SL(2) pants under Φ*, moved to A-diagonal form. Newton
/// only reaches these to about the square root of machine precision
/// because the commutator root is double there.
fn self_paired_pants(y: &TraceCoordsY, comm: CScalar) -> Option<(PantsRep, SolverReport)> {
    let v = &y.y;
    if (0..4).any(|k| (v[k] - v[k + 4]).norm() > 1e-12 * (1.0 + v[k].norm())) {
        return None;
    }
    let (x, w) = ((v[0] + 1.0).sqrt(), (v[1] + 1.0).sqrt());
    let z = (v[2] + 1.0).sqrt();
    for z in [z, -z] {
        let s = sl2::sl2_pants_from_traces(x, w, z);
        let (a, b) = (sl2::phi_star(&s.a), sl2::phi_star(&s.b));
        let e = match eigen3(&a, 1e-9) {
            Ok(e) => e,
            Err(_) => return None,
        };
        let m = e.basis();
        let mi = m.try_inverse()?;
        let mut p = PantsRep::new(diag_of_values(&e.values), mi * b * m);
        let t = commutator_trace(&p.a, &p.b);
        // At a double root the computed root itself is only good to
        // about √ε, so only the trace coordinates are compared there.
        let mut gap = p.coords.distance(y);
        if !y.quadratic().repeated(1e-6) {
            gap = gap.max((t - comm).norm() / (1.0 + comm.norm()));
        }
        if gap <= 1e-9 {
            p.coords.root = y.root;
            let report = SolverReport {
                residual: gap,
                iterations: 0,
                restarts: 0,
                gauge: gauge_schedule()[0].0,
            };
            return Some((p, report));
        }
    }
    None
}

fn diag_of_values(v: &[CScalar; 3]) -> Mat3 {
    diag(v[0], v[1], v[2])
}

pub fn build_pants(y: &TraceCoordsY, seed: u64) -> Result<(PantsRep, SolverReport)> {
    let v = &y.y;
    if !strongly_loxodromic_by_trace(v[0], v[4]) {
        return Err(Error::BoundaryNotLoxodromic);
    }
    let mut ev = cubic_roots(v[0], v[4]);
    sort_spectrum(&mut ev);
    let quad = y.quadratic();
    let comm = quad.root(y.root);
    let other = quad.root(match y.root {
        RootChoice::Plus => RootChoice::Minus,
        RootChoice::Minus => RootChoice::Plus,
    });
    if let Some(found) = self_paired_pants(y, comm) {
        return Ok(found);
    }
    let mut rng = sample::rng(seed);
    let mut restarts = 0;
    let mut iterations = 0;
    let mut best = f64::INFINITY;
    let mut budget = MAX_STARTS;
    let mut other_root_seen = false;

    for (gauge, starts) in gauge_schedule() {
        let sys = System::new(y, ev, comm, gauge, 8);
        let free_sys = System::new(y, ev, comm, gauge, 7);
        for _ in 0..starts.min(budget) {
            budget -= 1;
            let z0 = SVector::<CScalar, 7>::from_fn(|_, _| sample::complex_box(&mut rng, 2.0));
            let (z, n, it) = sys.solve(z0);
            iterations += it;
            best = best.min(n);
            if n <= ACCEPT {
                let p = PantsRep::new(diag(ev[0], ev[1], ev[2]), sys.matrix(&z));
                let report = SolverReport {
                    residual: n,
                    iterations,
                    restarts,
                    gauge,
                };
                let mut p = p;
                p.coords.root = y.root;
                return Ok((p, report));
            }
            // Diagnose a root that no start reaches: solve without the
            // commutator equation and look at which root comes out.
            if !other_root_seen && rng.gen_bool(0.25) {
                let (z, n, it) = free_sys.solve(z);
                iterations += it;
                if n <= ACCEPT {
                    let b = free_sys.matrix(&z);
                    let t = commutator_trace(&diag(ev[0], ev[1], ev[2]), &b);
                    if (t - other).norm() < (t - comm).norm() && !quad.repeated(1e-9) {
                        other_root_seen = true;
                    }
                }
            }
            restarts += 1;
        }
        if budget == 0 {
            break;
        }
    }
    if other_root_seen {
        return Err(Error::RootChoiceUnrealizable);
    }
    Err(Error::NoConvergence {
        restarts,
        residual: best,
    })
}

/// Block triple `A' = [[Â, a], [0, 1]]`, `B' = [[B̂, b], [0, 1]]`,
/// `C' = (B'A')⁻¹` over SL(2) pants with traces `(trÂ, trB̂, trÂB̂)`.
pub fn build_reducible_pants(
    sl2_traces: (CScalar, CScalar, CScalar),
    offsets: ([CScalar; 2], [CScalar; 2]),
) -> PantsRep {
    let p = sl2::sl2_pants_from_traces(sl2_traces.0, sl2_traces.1, sl2_traces.2);
    let embed = |m: &sl2::Mat2, off: &[CScalar; 2]| {
        let mut out = Mat3::identity();
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = m[(i, j)];
            }
            out[(i, 2)] = off[i];
        }
        out
    };
    let a = embed(&p.a, &offsets.0);
    let b = embed(&p.b, &offsets.1);
    PantsRep::new(a, b)
}

/// Which `ρ_C` [`goldman_pants`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoCPath {
    Printed,
    RelationDerived,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldmanReport {
    pub rho_c_printed: f64,
    pub rho_c_derived: f64,
    pub used: RhoCPath,
    /// `|tr C − (λ_C + τ_C)|` of the matrices built from the printed `ρ_C`.
    pub printed_trace_gap: f64,
}

impl GoldmanReport {
    pub fn discrepancy(&self) -> f64 {
        (self.rho_c_printed - self.rho_c_derived).abs()
    }
}

fn goldman_matrices(p: &GoldmanParams, rho_c: f64) -> [Mat3; 3] {
    let ([la, _], [lb, _], [lc, _]) = (p.a, p.b, p.c);
    let s = p.s;
    let sq = libm::sqrt;
    let (ra, rb) = (p.rho_a(), p.rho_b());
    let a1 = la;
    let a2 = sq(lc / (la * lb)) / s;
    let a3 = sq(lb / (la * lc)) * s;
    let b1 = sq(lc / (la * lb)) * s;
    let b2 = lb;
    let b3 = sq(la / (lb * lc)) / s;
    let g1 = sq(lb / (la * lc)) / s;
    let g2 = sq(la / (lb * lc)) * s;
    let g3 = lc;
    let (ea2, ea3, eb1, eb3, ec1, ec2) = (p.r / rb, 2.0, rb * rho_c / p.r, 2.0, rb / 2.0, ra / 2.0);
    let m = |rows: [[f64; 3]; 3]| Mat3::from_fn(|i, j| r(rows[i][j]));
    [
        m([
            [a1, a1 * ea2 + g1 * ea3 * ec2, g1 * ea3],
            [0.0, -b1 + g1 * eb3 * ec2, g1 * eb3],
            [0.0, -g1 * ec2, -g1],
        ]),
        m([
            [-a2, 0.0, -a2 * ea3],
            [a2 * eb1, b2, b2 * eb3 + a2 * ea3 * eb1],
            [a2 * ec1, 0.0, -g2 + a2 * ea3 * ec1],
        ]),
        m([
            [-a3 + b3 * ea2 * eb1, b3 * ea2, 0.0],
            [-b3 * eb1, -b3, 0.0],
            [g3 * ec1 + b3 * eb1 * ec2, b3 * ec2, g3],
        ]),
    ]
}

/// Goldman's matrices for a convex projective pair of pants in Zhang's
/// coordinates.
///
/// The matrices are first built with the printed `ρ_C`; if `C` then fails
/// `tr C = λ_C + τ_C` they are rebuilt with the value forced by that
/// relation. `strict` enforces the boundary inequalities.
pub fn goldman_pants(p: &GoldmanParams, strict: bool) -> Result<(PantsRep, GoldmanReport)> {
    if strict {
        p.validate()?;
    } else if !(p.s > 0.0 && p.r != 0.0 && [p.a, p.b, p.c].iter().all(|b| b[0] > 0.0)) {
        return Err(Error::ConstraintViolated("λ > 0 and s > 0 required"));
    }
    let printed = p.rho_c_printed();
    let derived = p.rho_c();
    let target = p.c[0] + p.c[1];
    let [a, b, c] = goldman_matrices(p, printed);
    let gap = (tr(&c).re - target).abs();
    let (mats, used) = if gap <= 1e-9 * (1.0 + target.abs()) {
        ([a, b, c], RhoCPath::Printed)
    } else {
        (goldman_matrices(p, derived), RhoCPath::RelationDerived)
    };
    let [a, b, c] = mats;
    let mut rep = PantsRep::new(a, b);
    rep.c = c;
    let res = rep.relation_residual();
    if res > 1e-9 * (1.0 + norm(&a) * norm(&b) * norm(&c)) {
        return Err(Error::RelationResidual(res));
    }
    Ok((
        rep,
        GoldmanReport {
            rho_c_printed: printed,
            rho_c_derived: derived,
            used,
            printed_trace_gap: gap,
        },
    ))
}

/// Boundary eigenvector helper used by tests: `B v ∝ v`.
pub fn is_invariant_line(b: &Mat3, v: &Vec3, tol: f64) -> bool {
    let w = b * v;
    let u = v.normalize();
    (w - u * u.dotc(&w)).norm() <= tol * (1.0 + w.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, eigenvalues};
    use crate::trace_algebra::{lawton_sym, self_paired, y_from_matrices, Reducibility};

    fn close(a: &TraceCoordsY, b: &TraceCoordsY, tol: f64) -> bool {
        a.distance(b) <= tol && a.root == b.root
    }

    #[test]
    fn gradients_match_finite_differences() {
        let mut g = sample::rng(31);
        let ev = sample::loxodromic_spectrum(&mut g, 1.3, 3.0);
        let y = TraceCoordsY::new([0; 8].map(|_| sample::complex_box(&mut g, 3.0)), RootChoice::Plus);
        let sys = System::new(&y, ev, c(1.0, 2.0), Gauge([(0, 1), (1, 2)]), 8);
        let z = SVector::<CScalar, 7>::from_fn(|_, _| sample::complex_box(&mut g, 1.0));
        let jac = sys.jacobian(&z);
        let h = 1e-6;
        for m in 0..7 {
            for dir in [r(1.0), c(0.0, 1.0)] {
                let mut zp = z;
                let mut zm = z;
                zp[m] += dir * h;
                zm[m] -= dir * h;
                let fd = (sys.residual(&zp) - sys.residual(&zm)) / r(2.0 * h);
                let an = jac.column(m) * dir;
                assert!((fd - an).norm() < 1e-6 * (1.0 + an.norm()), "column {m}");
            }
        }
    }

    #[test]
    fn gauge_schedule_is_independent() {
        let s = gauge_schedule();
        assert_eq!(s[0].0, Gauge([(0, 1), (1, 2)]));
        assert_eq!(s[1].0, Gauge([(0, 2), (1, 0)]));
        assert_eq!(s.len(), 12);
        for (Gauge([p, q]), _) in &s {
            assert_ne!(*p, (q.1, q.0));
        }
        assert!(s.iter().map(|x| x.1).sum::<usize>() >= MAX_STARTS);
        assert_eq!(alloc::format!("{}", s[0].0), "b12 = b23 = 1");
    }

    #[test]
    fn round_trip_random_pairs() {
        let mut g = sample::rng(32);
        let mut failures = 0;
        for k in 0..20 {
            let a0 = diag_of(sample::loxodromic_spectrum(&mut g, 1.2, 5.0));
            let spec = sample::loxodromic_spectrum(&mut g, 1.2, 5.0);
            let b0 = sample::with_spectrum(&mut g, spec, 1e3);
            let y = pants_coords(&a0, &b0);
            match build_pants(&y, k) {
                Ok((p, rep)) => {
                    assert!(rep.residual <= 1e-9);
                    let back = pants_coords(&p.a, &p.b);
                    assert!(close(&back, &y, 1e-6), "{:?} vs {:?}", back, y);
                    assert!(p.relation_residual() < 1e-9);
                    assert!(p.irreducible);
                }
                Err(Error::NoConvergence { .. }) => failures += 1,
                Err(e) => panic!("{e}"),
            }
        }
        assert!(failures <= 1);
    }

    fn diag_of(v: [CScalar; 3]) -> Mat3 {
        diag(v[0], v[1], v[2])
    }

    #[test]
    fn fuchsian_pants_realizes_double_root() {
        let y = TraceCoordsY::new(self_paired(r(8.0), r(8.0), r(8.0), r(79.0)), RootChoice::Plus);
        assert!(lawton_sym(&y.y).repeated(1e-6));
        let (p, _) = build_pants(&y, 1).unwrap();
        let t = commutator_trace(&p.a, &p.b);
        assert!((t - 2703.0).norm() < 1e-6, "{t}");
        let back = y_from_matrices(&p.a, &p.b);
        for k in 0..8 {
            assert!((back[k] - y.y[k]).norm() < 1e-7 * (1.0 + y.y[k].norm()));
        }
    }

    #[test]
    fn reducible_branch_is_flagged() {
        let t = (r(-3.0), r(-2.5), r(-4.0));
        let src = build_reducible_pants(t, ([r(0.0); 2], [r(0.0); 2]));
        let y = src.coords;
        assert_eq!(
            crate::trace_algebra::reducibility_test(&y, 1e-8),
            Reducibility::ReducibleBranch
        );
        let (p, _) = build_pants(&y, 3).unwrap();
        assert!(!p.irreducible, "margin {}", p.irreducibility_margin);
        assert!(pants_coords(&p.a, &p.b).distance(&y) < 1e-6);
    }

    #[test]
    fn non_loxodromic_boundary_is_rejected() {
        let y = TraceCoordsY::new([r(3.0); 8], RootChoice::Plus);
        assert_eq!(build_pants(&y, 0), Err(Error::BoundaryNotLoxodromic));
    }

    #[test]
    fn reducible_family() {
        let z = [r(0.0); 2];
        // The normal form over traces (2,2,2) is a unipotent pair whose
        // semisimplification is the identity: every trace is 3.
        let p = build_reducible_pants((r(2.0), r(2.0), r(2.0)), (z, z));
        assert!(p.coords.y.iter().take(3).all(|t| (t - 3.0).norm() < 1e-12));
        for m in p.generators() {
            use crate::linalg::ElementClass::{Identity, Unipotent};
            assert!(matches!(crate::linalg::classify(&m, 1e-9), Identity | Unipotent));
        }
        let mut g = sample::rng(33);
        for _ in 0..30 {
            let t = (
                sample::complex_box(&mut g, 4.0),
                sample::complex_box(&mut g, 4.0),
                sample::complex_box(&mut g, 4.0),
            );
            let p0 = build_reducible_pants(t, (z, z));
            let off = (
                [sample::complex_box(&mut g, 2.0), sample::complex_box(&mut g, 2.0)],
                [sample::complex_box(&mut g, 2.0), sample::complex_box(&mut g, 2.0)],
            );
            let p1 = build_reducible_pants(t, off);
            let sigma = 3.0 - (t.0 + 1.0) - (t.1 + 1.0) - (t.2 + 1.0);
            for p in [&p0, &p1] {
                assert!(p.relation_residual() < 1e-9);
                assert!((p.coords.y[3] - sigma).norm() < 1e-9 * (1.0 + sigma.norm()));
                assert!((p.coords.y[7] - sigma).norm() < 1e-9 * (1.0 + sigma.norm()));
                assert!(!p.irreducible);
            }
            assert!(p0.coords.distance(&p1.coords) < 1e-9);
        }
    }

    #[test]
    fn goldman_example() {
        let p = GoldmanParams::uniform(0.25, 5.0, 1.0, 2.0);
        let (rep, report) = goldman_pants(&p, true).unwrap();
        for k in 0..3 {
            let m = rep.boundary(k);
            assert!((tr(m) - 5.25).norm() < 1e-10);
            assert!((tr(&adj(m)) - 5.25).norm() < 1e-10);
            for e in eigenvalues(m) {
                assert!(e.re > 0.0 && e.im.abs() < 1e-9);
            }
        }
        assert!(rep.relation_residual() < 1e-9);
        // With equal λ the two ρ_C formulas coincide.
        assert!(report.discrepancy() < 1e-12);
        assert_eq!(report.used, RhoCPath::Printed);
    }

    #[test]
    fn goldman_rejects_invalid_boundaries() {
        let p = GoldmanParams::uniform(0.25, 3.0, 1.0, 2.0);
        assert!(matches!(goldman_pants(&p, true), Err(Error::ConstraintViolated(_))));
        assert!(goldman_pants(&p, false).is_ok());
    }

    #[test]
    fn conjugation_preserves_coordinates() {
        let mut g = sample::rng(34);
        for _ in 0..20 {
            let a = sample::unimodular_disk(&mut g);
            let b = sample::unimodular_disk(&mut g);
            let p = PantsRep::new(a, b);
            let h = sample::conjugator(&mut g, 1e3);
            let q = p.conjugated(&h);
            assert!(q.coords.distance(&p.coords) < 1e-8);
            assert_eq!(q.coords.root, p.coords.root);
        }
    }
}
