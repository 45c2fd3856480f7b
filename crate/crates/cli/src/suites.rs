//! Seeded verification suites, one per acceptance criterion.
//!
//! Every suite compares a library result against an oracle computed a
//! different way (matrix traces against trace polynomials, closed forms
//! against numerics, eigenvalues against trace tests) and records the
//! residuals of each named check.

use fn3_core::gluing::{assemble_surface, extract_fn, CentralizerParam, PantsDecomposition};
use fn3_core::linalg::{
    adj, c, diag, eigen3, eigenvalues, moduli_distinct, norm, r, strongly_loxodromic_by_trace, tr,
    trace_test, CScalar,
};
use fn3_core::pants::{build_pants, build_reducible_pants, goldman_pants, RhoCPath};
use fn3_core::real_forms::{
    acosta_scan, cross_ratios, detect_pants, detect_surface, pp_linear_system, zhang_sigma, PpTraces,
    SubgroupTag,
};
use fn3_core::sample::{self, SampleRng};
use fn3_core::sl2::{fuchsian_shape, mat2, phi_star, phi_vec, sl2_pants_from_traces, Mat2, Vec2};
use fn3_core::trace_algebra::{
    commutator_trace, lawton_raw, lawton_sym, pants_coords, self_paired, shape_invariants, t2,
    x_from_matrices, y_from_x, TraceCoordsY,
};
use fn3_core::Error as CoreError;
use rand::Rng;
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{CliError, Result};

/// `(name, criterion, title)` of every suite, in criterion order.
pub const SUITES: [(&str, usize, &str); 11] = [
    ("lawton", 1, "Lawton identity"),
    ("factorization", 2, "Branch factorization"),
    ("roundtrip", 3, "Pants round trip"),
    ("phi", 4, "Symmetric-square embedding"),
    ("fuchsian", 5, "Fuchsian pants"),
    ("reducible", 6, "Reducible branch"),
    ("su21", 7, "SU(2,1) cross-ratios"),
    ("goldman", 8, "Goldman-Zhang pants"),
    ("surface", 9, "Surface assembly"),
    ("detection", 10, "Detection consistency"),
    ("classification", 11, "Classification cross-check"),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bin {
    /// `floor(log10(residual))`, clamped to `[-17, 2]`.
    pub decade: i32,
    pub count: usize,
}

/// Residual statistics of one named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// `None` for pass/fail checks.
    pub tolerance: Option<f64>,
    pub count: usize,
    pub failures: usize,
    pub max_residual: f64,
    pub histogram: Vec<Bin>,
}

impl Check {
    fn new(name: &str, tolerance: Option<f64>) -> Self {
        Check {
            name: name.to_string(),
            tolerance,
            count: 0,
            failures: 0,
            max_residual: 0.0,
            histogram: Vec::new(),
        }
    }

    fn push(&mut self, residual: f64) {
        self.count += 1;
        let tol = self.tolerance.unwrap_or(0.0);
        if !(residual <= tol) {
            self.failures += 1;
        }
        if residual.is_nan() || residual > self.max_residual {
            self.max_residual = residual;
        }
        if self.tolerance.is_some() {
            let decade = if residual > 0.0 && residual.is_finite() {
                (residual.log10().floor() as i32).clamp(-17, 2)
            } else if residual == 0.0 {
                -17
            } else {
                2
            };
            match self.histogram.binary_search_by_key(&decade, |b| b.decade) {
                Ok(i) => self.histogram[i].count += 1,
                Err(i) => self.histogram.insert(i, Bin { decade, count: 1 }),
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.count > 0 && self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub criterion: usize,
    pub title: String,
    pub passed: bool,
    pub samples: usize,
    /// Samples left out of the tolerance statistics (indeterminate band,
    /// solver failures); reported under `notes`.
    pub excluded: usize,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    /// One-line summary: the worst residual relative to its tolerance.
    pub fn summary(&self) -> String {
        let worst = self
            .checks
            .iter()
            .filter_map(|c| c.tolerance.map(|t| (c, c.max_residual / t)))
            .max_by(|a, b| a.1.total_cmp(&b.1));
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
        let mut s = format!("{} samples", self.samples);
        if let Some((c, _)) = worst {
            s += &format!(", worst {} = {:.2e} (tol {:.0e})", c.name, c.max_residual, c.tolerance.unwrap());
        }
        if !failed.is_empty() {
            s += &format!(", failing: {}", failed.join(" "));
        }
        s
    }
}

struct Suite<'a> {
    cfg: &'a RunConfig,
    name: &'static str,
    rng: SampleRng,
    checks: Vec<Check>,
    notes: Vec<String>,
    samples: usize,
    excluded: usize,
}

impl<'a> Suite<'a> {
    fn new(cfg: &'a RunConfig, name: &'static str, criterion: usize) -> Self {
        let seed = cfg.seed.wrapping_add((criterion as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        Suite {
            cfg,
            name,
            rng: sample::rng(seed),
            checks: Vec::new(),
            notes: Vec::new(),
            samples: 0,
            excluded: 0,
        }
    }

    fn count(&self, default: usize) -> usize {
        self.cfg.samples(self.name, default)
    }

    fn slot(&mut self, name: &str, tolerance: Option<f64>) -> &mut Check {
        let i = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                let tol = tolerance.map(|t| self.cfg.tol(&format!("{}.{}", self.name, name), t));
                self.checks.push(Check::new(name, tol));
                self.checks.len() - 1
            }
        };
        &mut self.checks[i]
    }

    /// Records `residual` against the (overridable) tolerance `tol`.
    fn residual(&mut self, name: &str, tol: f64, residual: f64) {
        self.slot(name, Some(tol)).push(residual);
    }

    fn flag(&mut self, name: &str, ok: bool) {
        self.slot(name, None).push(if ok { 0.0 } else { 1.0 });
    }

    fn finish(self, criterion: usize, title: &str) -> SuiteReport {
        SuiteReport {
            suite: self.name.to_string(),
            criterion,
            title: title.to_string(),
            passed: !self.checks.is_empty() && self.checks.iter().all(Check::passed),
            samples: self.samples,
            excluded: self.excluded,
            checks: self.checks,
            notes: self.notes,
        }
    }
}

fn rel(a: CScalar, b: CScalar) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

/// Random SL(2,ℂ) element with entries in the disk of radius 2.
fn sl2_element(g: &mut SampleRng) -> Mat2 {
    loop {
        let m = mat2(
            sample::disk_point(g) * 2.0,
            sample::disk_point(g) * 2.0,
            sample::disk_point(g) * 2.0,
            sample::disk_point(g) * 2.0,
        );
        let d = m.determinant();
        if d.norm() > 1e-2 {
            return m / d.sqrt();
        }
    }
}

fn fuchsian_coords(g: &mut SampleRng) -> (TraceCoordsY, [f64; 3]) {
    let t = sample::fuchsian_traces(g, 2.2, 4.0).map(|x| -x);
    let s = sl2_pants_from_traces(r(t[0]), r(t[1]), r(t[2]));
    (pants_coords(&phi_star(&s.a), &phi_star(&s.b)), t)
}

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.0)
}

/// Runs one suite by name.
pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let (name, criterion, title) = *SUITES
        .iter()
        .find(|s| s.0 == name)
        .ok_or_else(|| CliError::UnknownSuite(name.to_string()))?;
    let mut s = Suite::new(cfg, name, criterion);
    match criterion {
        1 => lawton(&mut s),
        2 => factorization(&mut s),
        3 => roundtrip(&mut s),
        4 => phi(&mut s),
        5 => fuchsian(&mut s),
        6 => reducible(&mut s),
        7 => su21(&mut s),
        8 => goldman(&mut s),
        9 => surface(&mut s),
        10 => detection(&mut s),
        _ => classification(&mut s),
    }
    Ok(s.finish(criterion, title))
}

fn lawton(s: &mut Suite) {
    for _ in 0..s.count(1000) {
        s.samples += 1;
        let a = sample::unimodular_disk(&mut s.rng);
        let b = sample::unimodular_disk(&mut s.rng);
        let (t1, t2v) = (commutator_trace(&a, &b), commutator_trace(&b, &a));
        let x = x_from_matrices(&a, &b);
        let (s0, p0) = lawton_raw(&x);
        s.residual("s_raw", 1e-8, rel(s0, t1 + t2v));
        s.residual("p_raw", 1e-8, rel(p0, t1 * t2v));
        let q = lawton_sym(&y_from_x(&x));
        s.residual("s_sym", 1e-8, rel(q.s, t1 + t2v));
        s.residual("p_sym", 1e-8, rel(q.p, t1 * t2v));
    }
}

fn factorization(s: &mut Suite) {
    for _ in 0..s.count(1000) {
        s.samples += 1;
        let [a, b, cc, t] = [0; 4].map(|_| sample::disk_point(&mut s.rng) * 5.0);
        let d = lawton_sym(&self_paired(a, b, cc, t)).discriminant();
        let f = (t + a + b + cc - 3.0).powu(2) * t2(a, b, cc, t);
        s.residual("discriminant", 1e-8, (d - f).norm() / (1.0 + d.norm()));
    }
}

fn roundtrip(s: &mut Suite) {
    let n = s.count(200);
    let mut failures = 0;
    for k in 0..n {
        s.samples += 1;
        // Boundary A diagonal and B conjugated: both with well separated moduli.
        let sa = sample::loxodromic_spectrum(&mut s.rng, 1.2, 5.0);
        let sb = sample::loxodromic_spectrum(&mut s.rng, 1.2, 5.0);
        let a = diag(sa[0], sa[1], sa[2]);
        let b = sample::with_spectrum(&mut s.rng, sb, 1e2);
        let y = pants_coords(&a, &b);
        match build_pants(&y, s.cfg.seed.wrapping_add(k as u64)) {
            Ok((p, _)) => {
                let back = pants_coords(&p.a, &p.b);
                s.residual("coords", 1e-6, back.distance(&y));
                s.flag("root", back.root == y.root);
            }
            Err(CoreError::NoConvergence { .. }) => {
                failures += 1;
                s.excluded += 1;
            }
            Err(e) => {
                s.flag("root", false);
                s.notes.push(format!("sample {k}: {e}"));
            }
        }
    }
    let rate = failures as f64 / n.max(1) as f64;
    s.residual("nonconvergence_rate", 0.02, rate);
    s.notes.push(format!("NoConvergence on {failures} of {n} samples"));
}

fn phi(s: &mut Suite) {
    for _ in 0..s.count(1000) {
        s.samples += 1;
        let (m, n) = (sl2_element(&mut s.rng), sl2_element(&mut s.rng));
        let (pm, pn, pmn) = (phi_star(&m), phi_star(&n), phi_star(&(m * n)));
        s.residual("homomorphism", 1e-10, norm(&(pmn - pm * pn)) / (1.0 + norm(&pm) * norm(&pn)));
        let j = fn3_core::sl2::form_j();
        s.residual("j_orthogonal", 1e-10, norm(&(pm.transpose() * j * pm - j)) / (1.0 + norm(&pm).powi(2)));
        let t = m.trace();
        s.residual("trace", 1e-10, rel(tr(&pm), t * t - 1.0));
        s.residual("inverse_trace", 1e-10, rel(tr(&adj(&pm)), tr(&pm)));
        // Eigenvectors of m map to eigenvectors of Φ(m) with squared eigenvalues.
        let d = (t * t - 4.0).sqrt();
        for lam in [(t + d) / 2.0, (t - d) / 2.0] {
            let w = if m[(0, 1)].norm() >= m[(1, 0)].norm() {
                Vec2::new(m[(0, 1)], lam - m[(0, 0)])
            } else {
                Vec2::new(lam - m[(1, 1)], m[(1, 0)])
            };
            let v = phi_vec(&w);
            let res = (pm * v - v * lam * lam).norm() / ((1.0 + norm(&pm)) * v.norm());
            s.residual("eigenvalue_squares", 1e-10, res);
        }
    }
}

fn fuchsian(s: &mut Suite) {
    for _ in 0..s.count(100) {
        s.samples += 1;
        let t = sample::fuchsian_traces(&mut s.rng, 2.2, 6.0).map(|x| -x);
        let sp = sl2_pants_from_traces(r(t[0]), r(t[1]), r(t[2]));
        let (x, yv, z) = (sp.a.trace(), sp.b.trace(), sp.c().trace());
        s.flag("gilman_maskit_sign", (x * yv * z).re < 0.0 && (x * yv * z).im == 0.0);
        let (a, b) = (phi_star(&sp.a), phi_star(&sp.b));
        let sigma = shape_invariants(&a, &b);
        let (ta, tb, tc) = (x * x - 1.0, yv * yv - 1.0, z * z - 1.0);
        // The trace identity with the sign of the SL(2) triple product.
        let direct = ta + tb + tc + 1.0 - x * yv * z * 2.0;
        s.residual("sigma_trace_identity", 1e-8, rel(sigma.sigma_plus, direct));
        match fuchsian_shape(ta, tb, tc) {
            Ok(f) => {
                s.residual("sigma_closed_form", 1e-8, rel(sigma.sigma_plus, f.sigma));
                s.residual("commutator_closed_form", 1e-8, rel(commutator_trace(&a, &b), f.tr_comm));
            }
            Err(_) => s.flag("closed_form_defined", false),
        }
    }
    let sp = sl2_pants_from_traces(r(-3.0), r(-3.0), r(-3.0));
    let (a, b) = (phi_star(&sp.a), phi_star(&sp.b));
    s.residual("instance_sigma", 1e-9, rel(shape_invariants(&a, &b).sigma_plus, r(79.0)));
    s.residual("instance_commutator", 1e-9, rel(commutator_trace(&a, &b), r(2703.0)));
}

fn reducible(s: &mut Suite) {
    for _ in 0..s.count(100) {
        s.samples += 1;
        let g = &mut s.rng;
        let traces = (sample::complex_box(g, 3.0), sample::complex_box(g, 3.0), sample::complex_box(g, 3.0));
        let offsets = (
            [sample::complex_box(g, 2.0), sample::complex_box(g, 2.0)],
            [sample::complex_box(g, 2.0), sample::complex_box(g, 2.0)],
        );
        let p = build_reducible_pants(traces, offsets);
        // Boundary traces read off the matrices, not the coordinates.
        let (a, b, cc) = (tr(&p.a), tr(&p.b), tr(&p.c));
        let lin = 3.0 - a - b - cc;
        let sh = shape_invariants(&p.a, &p.b);
        s.residual("sigma_plus", 1e-9, rel(sh.sigma_plus, lin));
        s.residual("sigma_minus", 1e-9, rel(sh.sigma_minus, lin));
        let q = p.coords.quadratic();
        s.residual("discriminant", 1e-8, q.discriminant().norm() / (1.0 + q.s.norm_sqr()));
        s.flag("detected_reducible", detect_pants(&p.coords, 1e-8).tag == SubgroupTag::Reducible);
    }
}

fn su21(s: &mut Suite) {
    for _ in 0..s.count(200) {
        s.samples += 1;
        let a = sample::su_loxodromic(&mut s.rng, 1.2);
        let b = sample::su_loxodromic(&mut s.rng, 1.2);
        for m in [&a, &b] {
            s.residual("trace_pairing", 1e-10, rel(tr(&adj(m)), tr(m).conj()));
        }
        let x = match cross_ratios(&a, &b) {
            Ok(x) => x,
            Err(e) => {
                s.flag("cross_ratios", false);
                s.notes.push(format!("cross ratios: {e}"));
                continue;
            }
        };
        let (f1, f2) = x.falbel_residuals();
        s.residual("falbel_modulus", 1e-8, f1);
        s.residual("falbel_real_part", 1e-8, f2);
        let (ea, eb) = match (eigen3(&a, 1e-9), eigen3(&b, 1e-9)) {
            (Ok(ea), Ok(eb)) => (ea, eb),
            _ => {
                s.flag("pp_recovery", false);
                continue;
            }
        };
        match pp_linear_system(&ea, &eb, &PpTraces::of(&a, &b)) {
            Ok((x1, x2)) => {
                s.residual("pp_x1", 1e-7, rel(x1, x.x1));
                s.residual("pp_x2", 1e-7, rel(x2, x.x2));
            }
            Err(e) => {
                s.flag("pp_recovery", false);
                s.notes.push(format!("linear system: {e}"));
            }
        }
    }
}

fn goldman(s: &mut Suite) {
    let mut logged = 0;
    let mut worst_gap: f64 = 0.0;
    for _ in 0..s.count(200) {
        s.samples += 1;
        let p = sample::goldman_params(&mut s.rng);
        let (rep, report) = match goldman_pants(&p, true) {
            Ok(v) => v,
            Err(e) => {
                s.flag("construction", false);
                s.notes.push(format!("goldman_pants: {e}"));
                continue;
            }
        };
        s.residual("relation", 1e-9, rep.relation_residual());
        for (m, [l, tau]) in [(&rep.a, p.a), (&rep.b, p.b), (&rep.c, p.c)] {
            let mut ev = eigenvalues(m);
            let worst_im = ev.iter().map(|z| z.im.abs() / z.norm()).fold(0.0, f64::max);
            s.flag("positive_spectrum", worst_im <= 1e-8 && ev.iter().all(|z| z.re > 0.0));
            ev.sort_by(|x, y| x.re.total_cmp(&y.re));
            s.residual("smallest_eigenvalue", 1e-8, (ev[0].re - l).abs() / l);
            s.residual("trace", 1e-10, rel(tr(m), r(l + tau)));
            s.residual("inverse_trace", 1e-10, rel(tr(&adj(m)), r(1.0 / l + l * tau)));
        }
        let z = zhang_sigma(&p);
        let sh = shape_invariants(&rep.a, &rep.b);
        s.residual("zhang_sigma_plus", 1e-8, rel(z.sigma_plus, sh.sigma_plus));
        s.residual("zhang_sigma_minus", 1e-8, rel(z.sigma_minus, sh.sigma_minus));
        if report.discrepancy() > 1e-8 {
            logged += 1;
            worst_gap = worst_gap.max(report.discrepancy());
            s.flag("relation_derived_rho_c_used", report.used == RhoCPath::RelationDerived);
        }
    }
    s.notes.push(format!(
        "printed and relation-derived rho_C differ by more than 1e-8 on {logged} of {} draws (largest gap {worst_gap:.3e}); the relation-derived value was used there",
        s.samples
    ));
}

/// Gluing values per edge: u in {0, 0.7, 0.3+0.5i}, v in {0, 0.1-0.2i}.
fn glue_options() -> [CentralizerParam; 6] {
    let us = [r(0.0), r(0.7), c(0.3, 0.5)];
    let vs = [r(0.0), c(0.1, -0.2)];
    core::array::from_fn(|k| CentralizerParam::new(us[k / 2], vs[k % 2]))
}

fn surface(s: &mut Suite) {
    let opts = glue_options();
    let zero = PantsDecomposition::theta([CentralizerParam::default(); 3]);
    for k in 0..s.count(20) {
        s.samples += 1;
        let (y, _) = fuchsian_coords(&mut s.rng);
        let seed = s.cfg.seed.wrapping_add(k as u64);
        let base = match assemble_surface(&zero, &[y, y], seed) {
            Ok(b) => b,
            Err(e) => {
                s.flag("assembly", false);
                s.notes.push(format!("draw {k}, zero glue: {e}"));
                continue;
            }
        };
        // Every glue choice on every edge, against the same pants.
        for combo in 0..opts.len().pow(3) {
            let glue = [opts[combo % 6], opts[combo / 6 % 6], opts[combo / 36]];
            let rep = match assemble_surface(&PantsDecomposition::theta(glue), &[y, y], seed) {
                Ok(r) => r,
                Err(e) => {
                    s.flag("assembly", false);
                    s.notes.push(format!("draw {k}, combination {combo}: {e}"));
                    continue;
                }
            };
            for (_, res) in rep.relation_residuals() {
                s.residual("relation", 1e-8, res);
            }
            let rec = match extract_fn(&rep) {
                Ok(rec) => rec,
                Err(e) => {
                    s.flag("extraction", false);
                    s.notes.push(format!("draw {k}, combination {combo}: {e}"));
                    continue;
                }
            };
            for p in &rec.pants {
                s.residual("roundtrip_coords", 1e-6, p.coords.distance(&y));
            }
            for (e, g) in rec.edges.iter().zip(&glue) {
                s.residual("roundtrip_glue", 1e-6, e.glue.lattice_distance(g));
            }
            for p in 0..2 {
                let (w0, w1) = (base.world_pants(p), rep.world_pants(p));
                for slot in 0..3 {
                    s.residual("boundary_trace", 1e-9, rel(tr(&w1[slot]), tr(&w0[slot])));
                    s.residual("boundary_trace", 1e-9, rel(tr(&adj(&w1[slot])), tr(&adj(&w0[slot]))));
                }
            }
        }
    }
}

fn detection(s: &mut Suite) {
    use SubgroupTag::*;
    let families: [(&str, &[SubgroupTag]); 4] =
        [("fuchsian", &[SO3C, SL3R, SU21]), ("turn", &[SU21]), ("bend", &[SO3C]), ("generic", &[])];
    for k in 0..s.count(5) {
        let (y, _) = fuchsian_coords(&mut s.rng);
        for (family, expect) in families {
            s.samples += 1;
            let g = &mut s.rng;
            let glue: [CentralizerParam; 3] = [0; 3].map(|_| {
                let x = g.gen_range(0.1..0.9) * if g.gen_bool(0.5) { 1.0 } else { -1.0 };
                let w = g.gen_range(0.1..0.9) * if g.gen_bool(0.5) { 1.0 } else { -1.0 };
                match family {
                    "fuchsian" => CentralizerParam::new(r(x), r(0.0)),
                    "turn" => CentralizerParam::new(r(0.0), c(0.0, x / 2.0)),
                    "bend" => CentralizerParam::new(c(0.0, x), r(0.0)),
                    _ => CentralizerParam::new(c(x, w), c(w / 2.0, x / 3.0)),
                }
            });
            let seed = s.cfg.seed.wrapping_add(k as u64);
            let rep = match assemble_surface(&PantsDecomposition::theta(glue), &[y, y], seed) {
                Ok(rep) => rep,
                Err(e) => {
                    s.flag("assembly", false);
                    s.notes.push(format!("{family} draw {k}: {e}"));
                    continue;
                }
            };
            let coord = match extract_fn(&rep) {
                Ok(rec) => detect_surface(&rec, 1e-8),
                Err(e) => {
                    s.flag("extraction", false);
                    s.notes.push(format!("{family} draw {k}: {e}"));
                    continue;
                }
            };
            let scan = acosta_scan(&rep, 500, 12, seed);
            let ok = coord.passing == expect;
            s.flag(&format!("{family}_coordinates"), ok);
            s.flag(&format!("{family}_word_scan"), scan.passing == expect && scan.samples == 500);
            s.flag("scan_agrees_with_coordinates", scan.passing == coord.passing);
            if family == "generic" {
                s.flag("generic_verdict", coord.tag == Generic && scan.tag == Generic);
            }
            if !ok {
                let names: Vec<&str> = coord.passing.iter().map(|t| t.name()).collect();
                s.notes.push(format!("{family} draw {k}: coordinates pass {names:?}"));
            }
        }
    }
}

fn classification(s: &mut Suite) {
    let mut band = 0;
    for k in 0..s.count(1000) {
        s.samples += 1;
        let g = &mut s.rng;
        let values = match k % 4 {
            0 => sample::loxodromic_spectrum(g, 1.0, 3.0),
            1 => eigenvalues(&sample::su_element(g, 1.0)),
            2 => {
                let (a, b) = (g.gen_range(-3.0..3.0), g.gen_range(-3.0..3.0));
                [c(0.0, a).exp(), c(0.0, b).exp(), c(0.0, -a - b).exp()]
            }
            _ => {
                let (a, b): (f64, f64) = (g.gen_range(-2.0..2.0), g.gen_range(-2.0..2.0));
                [r(a.exp()), r(b.exp()), r((-a - b).exp())]
            }
        };
        let m = sample::with_spectrum(g, values, 1e2);
        let (t, ti) = (tr(&m), tr(&adj(&m)));
        if trace_test(t, ti).indeterminate {
            band += 1;
            s.excluded += 1;
            continue;
        }
        s.flag("trace_test_matches_moduli", strongly_loxodromic_by_trace(t, ti) == moduli_distinct(&values, 1e-6));
    }
    s.notes.push(format!("{band} samples inside the indeterminate band"));
}
