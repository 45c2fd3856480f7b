//! Gluing pants along boundary curves: the centralizer torus, amalgamation
//! and HNN extension, and extraction of the gluing parameters.
//!
//! Zero twist is defined by anchored eigenbases: the eigenbasis of a
//! boundary element is scaled so that its columns sum to the attracting
//! eigenvector of the next boundary of the same pants. Gluing two such
//! bases (and normalizing the determinant) gives the reference conjugator;
//! the twist is the centralizer element separating the actual gluing from
//! it. The reference is conjugation equivariant and, for pants in SO(J) or
//! SL(3,ℝ), stays inside the same real form.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{adj, diag, eigen3_projective, moduli_distinct, norm, tr, unit_det, CScalar, EigenTriple, Mat3, Vec3};
use crate::pants::{build_pants, PantsRep};
use crate::trace_algebra::{pants_coords, RootChoice, ShapePair, TraceCoordsY};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Twist-bend `u` and bulge-turn `v` of one gluing.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CentralizerParam {
    pub u: CScalar,
    pub v: CScalar,
}

fn fold(x: f64, period: f64) -> f64 {
    // Into (−period/2, period/2].
    let mut y = x - period * libm::round(x / period);
    if y <= -period / 2.0 {
        y += period;
    }
    if y > period / 2.0 {
        y -= period;
    }
    y
}

impl CentralizerParam {
    pub fn new(u: CScalar, v: CScalar) -> Self {
        CentralizerParam { u, v }
    }

    /// The eigenvalues `(e^{u−v}, e^{2v}, e^{−u−v})`.
    pub fn kappas(&self) -> [CScalar; 3] {
        [(self.u - self.v).exp(), (self.v * 2.0).exp(), (-self.u - self.v).exp()]
    }

    fn from_kappas(k1: CScalar, k2: CScalar) -> Self {
        let v = k2.ln() / 2.0;
        let mut u = k1.ln() + v;
        u.im = fold(u.im, 2.0 * PI);
        CentralizerParam { u, v }
    }

    /// Representative with `Im u ∈ (−π, π]`, `Im v ∈ (−π/2, π/2]`.
    pub fn canonical(&self) -> Self {
        let v = CScalar::new(self.v.re, fold(self.v.im, PI));
        // Shifting v by iπ must shift u by iπ as well.
        let shifts = libm::round((self.v.im - v.im) / PI);
        let mut u = self.u - CScalar::new(0.0, shifts * PI);
        u.im = fold(u.im, 2.0 * PI);
        CentralizerParam { u, v }
    }

    /// `true` when the canonical representative differs from `self`.
    pub fn wraps(&self) -> bool {
        let c = self.canonical();
        (c.u - self.u).norm() + (c.v - self.v).norm() > 1e-14
    }

    /// Distance modulo the lattice generated by `(2πi, 0)` and `(iπ, iπ)`.
    pub fn lattice_distance(&self, other: &CentralizerParam) -> f64 {
        let d = CentralizerParam::new(self.u - other.u, self.v - other.v).canonical();
        let mut best = f64::INFINITY;
        for a in -1..=1 {
            for b in -1..=1 {
                let du = d.u - CScalar::new(0.0, 2.0 * PI * a as f64 + PI * b as f64);
                let dv = d.v - CScalar::new(0.0, PI * b as f64);
                best = best.min(du.norm() + dv.norm());
            }
        }
        best
    }
}

/// `K = TᵘUᵛ = diag(e^{u−v}, e^{2v}, e^{−u−v})`.
pub fn centralizer_element(p: &CentralizerParam) -> Mat3 {
    let k = p.kappas();
    diag(k[0], k[1], k[2])
}

/// `E K E⁻¹` for the eigenbasis `E` of a strongly loxodromic element.
pub fn centralizer_in_basis(basis: &EigenTriple, p: &CentralizerParam) -> Mat3 {
    let e = basis.basis();
    e * centralizer_element(p) * inverse3(&e)
}

/// Removes the determinant drift picked up by products and conjugations.
fn renorm(m: &Mat3) -> Mat3 {
    m / m.determinant().powf(1.0 / 3.0)
}

fn eig(m: &Mat3) -> Result<EigenTriple> {
    eigen3_projective(&renorm(m), 1e-9)
}

fn inverse3(m: &Mat3) -> Mat3 {
    adj(m) / m.determinant()
}

/// Recovers `(u, v)` from an element of the centralizer of the matrix
/// whose eigen-decomposition is `basis`.
pub fn extract_twist(k: &Mat3, basis: &EigenTriple) -> Result<CentralizerParam> {
    if !moduli_distinct(&basis.values, 1e-9) {
        return Err(Error::NotStronglyLoxodromic);
    }
    let e = basis.basis();
    let ei = inverse3(&e);
    let a = e * diag(basis.values[0], basis.values[1], basis.values[2]) * ei;
    let comm = norm(&(k * a - a * k)) / (norm(k) * norm(&a)).max(1e-300);
    if comm > 1e-8 {
        return Err(Error::NotInCentralizer(comm));
    }
    let d = ei * k * e;
    Ok(CentralizerParam::from_kappas(d[(0, 0)], d[(1, 1)]))
}

fn condition(m: &Mat3) -> f64 {
    norm(m) * norm(&inverse3(m))
}

/// A unimodular `G` carrying the sorted eigenbasis of `source` onto the
/// vectors of `target`, so that `G·source·G⁻¹` has eigen-decomposition
/// `target`.
pub fn matching_conjugator(target: &EigenTriple, source: &Mat3) -> Result<Mat3> {
    let s = eig(source)?;
    let gap = (0..3)
        .map(|k| (s.values[k] - target.values[k]).norm() / (1.0 + target.values[k].norm()))
        .fold(0.0, f64::max);
    if gap > 1e-6 {
        return Err(Error::EigenvalueMismatch(gap));
    }
    let (sb, tb) = (s.basis(), target.basis());
    for m in [&sb, &tb] {
        let c = condition(m);
        if !(c <= 1e8) {
            return Err(Error::IllConditioned(c));
        }
    }
    Ok(unit_det(&(tb * inverse3(&sb))))
}

/// Eigenbasis of `x` (sorted by `x`) with columns scaled to sum to `anchor`.
pub fn anchored_basis(x: &Mat3, anchor: &Vec3) -> Result<Mat3> {
    let e = eig(x)?;
    let b = e.basis();
    let c = condition(&b);
    if !(c <= 1e8) {
        return Err(Error::IllConditioned(c));
    }
    let coef = inverse3(&b) * anchor;
    let small = coef.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    if !(small > 1e-10 * anchor.norm()) {
        return Err(Error::IllConditioned(anchor.norm() / small));
    }
    Ok(Mat3::from_fn(|i, j| b[(i, j)] * coef[j]))
}

/// Anchor for boundary `slot`: the attracting eigenvector of the next slot.
fn anchor(gens: &[Mat3; 3], slot: usize) -> Result<Vec3> {
    Ok(eig(&gens[(slot + 1) % 3])?.attracting())
}

/// Zero-twist conjugator carrying boundary `sb` of `b` onto the inverse
/// of boundary `sa` of `a`.
fn reference_conjugator(a: &[Mat3; 3], sa: usize, b: &[Mat3; 3], sb: usize) -> Result<Mat3> {
    let xa = adj(&a[sa]);
    let ba = anchored_basis(&xa, &anchor(a, sa)?)?;
    let bb = anchored_basis(&b[sb], &anchor(b, sb)?)?;
    Ok(unit_det(&(ba * inverse3(&bb))))
}

/// Zero-twist stable letter `D₀` with `D₀ X_a⁻¹ D₀⁻¹ = X_b`.
fn reference_stable_letter(a: &[Mat3; 3], sa: usize, b: &[Mat3; 3], sb: usize) -> Result<Mat3> {
    let bb = anchored_basis(&b[sb], &anchor(b, sb)?)?;
    let ba = anchored_basis(&adj(&a[sa]), &anchor(a, sa)?)?;
    Ok(unit_det(&(bb * inverse3(&ba))))
}

/// One gluing of slot `a = (pants, slot)` to slot `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub glue: CentralizerParam,
}

/// Pants graph of a closed surface of genus `genus`.
#[derive(Debug, Clone, PartialEq)]
pub struct PantsDecomposition {
    pub genus: usize,
    pub n_pants: usize,
    pub edges: Vec<Edge>,
}

impl PantsDecomposition {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        if self.genus < 2 {
            return bad(format!("genus {} < 2", self.genus));
        }
        if self.n_pants != 2 * self.genus - 2 {
            return bad(format!("{} pants, expected {}", self.n_pants, 2 * self.genus - 2));
        }
        if self.edges.len() != 3 * self.genus - 3 {
            return bad(format!("{} edges, expected {}", self.edges.len(), 3 * self.genus - 3));
        }
        let mut used = vec![[false; 3]; self.n_pants];
        for (k, e) in self.edges.iter().enumerate() {
            for (p, s) in [e.a, e.b] {
                if p >= self.n_pants || s >= 3 {
                    return bad(format!("edge {k}: slot ({p}, {s}) out of range"));
                }
                if used[p][s] {
                    return bad(format!("edge {k}: slot ({p}, {s}) used twice"));
                }
                used[p][s] = true;
            }
        }
        let mut seen = vec![false; self.n_pants];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(p) = queue.pop_front() {
            for e in &self.edges {
                for (x, y) in [(e.a.0, e.b.0), (e.b.0, e.a.0)] {
                    if x == p && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        if let Some(p) = seen.iter().position(|s| !s) {
            return bad(format!("pants {p} is not connected to pants 0"));
        }
        Ok(())
    }

    /// The genus-2 theta graph: slot `s` of pants 0 glued to slot `s` of
    /// pants 1.
    pub fn theta(glue: [CentralizerParam; 3]) -> Self {
        PantsDecomposition {
            genus: 2,
            n_pants: 2,
            edges: (0..3)
                .map(|s| Edge {
                    a: (0, s),
                    b: (1, s),
                    glue: glue[s],
                })
                .collect(),
        }
    }

    /// Genus-2 graph with two self-edges: slot 0 of each pants closed onto
    /// slot 1 of the same pants, slots 2 glued together.
    pub fn dumbbell(glue: [CentralizerParam; 3]) -> Self {
        PantsDecomposition {
            genus: 2,
            n_pants: 2,
            edges: vec![
                Edge { a: (0, 0), b: (0, 1), glue: glue[0] },
                Edge { a: (0, 2), b: (1, 2), glue: glue[1] },
                Edge { a: (1, 0), b: (1, 1), glue: glue[2] },
            ],
        }
    }
}

/// How an edge was realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Amalgamation along a spanning-tree edge.
    Tree { parent_is_a: bool },
    /// HNN extension with stable letter `stable_letters[index]`.
    Stable { index: usize },
}

/// A letter of a word: generator index and whether it is inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inv: false }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }
}

/// A closed-surface representation assembled from pants.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceRep {
    pub decomposition: PantsDecomposition,
    /// Pants in their own frames.
    pub pants: Vec<PantsRep>,
    /// `F_i` with world pants `F_i L F_i⁻¹`.
    pub frames: Vec<Mat3>,
    pub kinds: Vec<EdgeKind>,
    /// Stable letters with the edge each closes.
    pub stable_letters: Vec<(usize, Mat3)>,
}

impl SurfaceRep {
    /// World image of boundary `slot` of pants `p`.
    pub fn boundary(&self, p: usize, slot: usize) -> Mat3 {
        let f = &self.frames[p];
        f * self.pants[p].boundary(slot) * inverse3(f)
    }

    pub fn world_pants(&self, p: usize) -> [Mat3; 3] {
        [self.boundary(p, 0), self.boundary(p, 1), self.boundary(p, 2)]
    }

    pub fn n_generators(&self) -> usize {
        3 * self.pants.len() + self.stable_letters.len()
    }

    pub fn generator(&self, i: usize) -> Result<Mat3> {
        let n = 3 * self.pants.len();
        if i < n {
            Ok(self.boundary(i / 3, i % 3))
        } else if i < self.n_generators() {
            Ok(self.stable_letters[i - n].1)
        } else {
            Err(Error::UnknownGenerator(i))
        }
    }

    pub fn generator_name(&self, i: usize) -> String {
        let n = 3 * self.pants.len();
        if i < n {
            format!("P{}.{}", i / 3, ["A", "B", "C"][i % 3])
        } else {
            format!("D{}", self.stable_letters[i - n].0)
        }
    }

    pub fn generators(&self) -> Vec<(String, Mat3)> {
        (0..self.n_generators())
            .map(|i| (self.generator_name(i), self.generator(i).unwrap()))
            .collect()
    }

    /// Every defining relation as a named word.
    pub fn relations(&self) -> Vec<(String, Vec<Letter>)> {
        let g = |p: usize, s: usize| Letter::new(3 * p + s);
        let prefix = |p: usize, s: usize| -> [Letter; 2] {
            match s {
                0 => [g(p, 2), g(p, 1)],
                1 => [g(p, 0), g(p, 2)],
                _ => [g(p, 1), g(p, 0)],
            }
        };
        let mut out = Vec::new();
        for p in 0..self.pants.len() {
            out.push((format!("P{p}"), vec![g(p, 2), g(p, 1), g(p, 0)]));
        }
        let n = 3 * self.pants.len();
        for (e, (edge, kind)) in self.decomposition.edges.iter().zip(&self.kinds).enumerate() {
            let ((pa, sa), (pb, sb)) = (edge.a, edge.b);
            let word = match *kind {
                EdgeKind::Tree { .. } => {
                    let mut w = prefix(pa, sa).to_vec();
                    w.extend(prefix(pb, sb));
                    w
                }
                EdgeKind::Stable { index } => {
                    let d = Letter::new(n + index);
                    let conj = [d, g(pa, sa).inverse(), d.inverse()];
                    if pa == pb {
                        let mut w = Vec::new();
                        for s in [2, 1, 0] {
                            if s == sb {
                                w.extend(conj);
                            } else {
                                w.push(g(pa, s));
                            }
                        }
                        w
                    } else {
                        let mut w = conj.to_vec();
                        w.push(g(pb, sb).inverse());
                        w
                    }
                }
            };
            out.push((format!("E{e}"), word));
        }
        out
    }

    /// `‖w − I‖` for every relation word, relative to the product of the
    /// letter norms (the a-priori rounding scale of the product).
    pub fn relation_residuals(&self) -> Vec<(String, f64)> {
        self.relations()
            .into_iter()
            .map(|(name, w)| {
                let m = evaluate_word(self, &w).unwrap();
                let scale: f64 = w
                    .iter()
                    .map(|l| {
                        let g = self.generator(l.gen).unwrap();
                        norm(&g).max(norm(&adj(&g))) / SQRT3
                    })
                    .product();
                (name, norm(&(m - Mat3::identity())) / scale.max(1.0))
            })
            .collect()
    }

    pub fn max_relation_residual(&self) -> f64 {
        self.relation_residuals().iter().map(|r| r.1).fold(0.0, f64::max)
    }

    /// Global conjugation by a unimodular `g`.
    pub fn conjugated(&self, g: &Mat3) -> SurfaceRep {
        let gi = adj(g);
        let mut out = self.clone();
        for f in out.frames.iter_mut() {
            *f = g * *f;
        }
        for (_, d) in out.stable_letters.iter_mut() {
            *d = g * *d * gi;
        }
        out
    }
}

/// Left-to-right product of generators and inverses.
pub fn evaluate_word(rep: &SurfaceRep, word: &[Letter]) -> Result<Mat3> {
    let mut m = Mat3::identity();
    for l in word {
        let g = rep.generator(l.gen)?;
        m *= if l.inv { adj(&g) } else { g };
    }
    Ok(m)
}

fn spectra_gap(x: &Mat3, y: &Mat3) -> f64 {
    let (t, ti) = (tr(x), tr(&adj(x)));
    let (s, si) = (tr(y), tr(&adj(y)));
    ((t - si).norm() / (1.0 + t.norm())).max((ti - s).norm() / (1.0 + ti.norm()))
}

/// Assembles a surface group from pants given in their own frames.
pub fn assemble_from_pants(d: &PantsDecomposition, pants: Vec<PantsRep>) -> Result<SurfaceRep> {
    d.validate()?;
    if pants.len() != d.n_pants {
        return Err(Error::InvalidDecomposition(format!(
            "{} pants supplied, decomposition has {}",
            pants.len(),
            d.n_pants
        )));
    }
    for (k, e) in d.edges.iter().enumerate() {
        let gap = spectra_gap(pants[e.a.0].boundary(e.a.1), pants[e.b.0].boundary(e.b.1));
        if gap > 1e-6 {
            return Err(Error::SpectraMismatch { edge: k, gap });
        }
    }
    let local: Vec<[Mat3; 3]> = pants.iter().map(|p| p.generators()).collect();
    let wrap = |id: usize| move |e: Error| Error::Pants { id, source: alloc::boxed::Box::new(e) };

    let n = d.n_pants;
    let mut frames = vec![Mat3::identity(); n];
    let mut seen = vec![false; n];
    let mut kinds: Vec<Option<EdgeKind>> = vec![None; d.edges.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(p) = queue.pop_front() {
        for (k, e) in d.edges.iter().enumerate() {
            if kinds[k].is_some() {
                continue;
            }
            let parent_is_a = if e.a.0 == p && !seen[e.b.0] {
                true
            } else if e.b.0 == p && !seen[e.a.0] {
                false
            } else {
                continue;
            };
            let ((pa, sa), (pb, sb)) = (e.a, e.b);
            let g0 = reference_conjugator(&local[pa], sa, &local[pb], sb).map_err(wrap(pb))?;
            let basis = eig(&local[pa][sa]).map_err(wrap(pa))?;
            let r = centralizer_in_basis(&basis, &e.glue) * g0;
            if parent_is_a {
                frames[pb] = frames[pa] * r;
            } else {
                frames[pa] = frames[pb] * inverse3(&r);
            }
            let child = if parent_is_a { pb } else { pa };
            seen[child] = true;
            queue.push_back(child);
            kinds[k] = Some(EdgeKind::Tree { parent_is_a });
        }
    }
    let world: Vec<[Mat3; 3]> = (0..n)
        .map(|i| {
            let fi = inverse3(&frames[i]);
            local[i].map(|m| frames[i] * m * fi)
        })
        .collect();
    let mut stable_letters = Vec::new();
    for (k, e) in d.edges.iter().enumerate() {
        if kinds[k].is_some() {
            continue;
        }
        let ((pa, sa), (pb, sb)) = (e.a, e.b);
        let d0 = reference_stable_letter(&world[pa], sa, &world[pb], sb).map_err(wrap(pa))?;
        let basis = eig(&world[pa][sa]).map_err(wrap(pa))?;
        let dk = d0 * centralizer_in_basis(&basis, &e.glue);
        kinds[k] = Some(EdgeKind::Stable { index: stable_letters.len() });
        stable_letters.push((k, dk));
    }
    let rep = SurfaceRep {
        decomposition: d.clone(),
        pants,
        frames,
        kinds: kinds.into_iter().map(|k| k.unwrap()).collect(),
        stable_letters,
    };
    let res = rep.max_relation_residual();
    if res > 1e-8 {
        return Err(Error::RelationResidual(res));
    }
    Ok(rep)
}

/// Builds every pants from its coordinates and assembles the surface.
pub fn assemble_surface(
    d: &PantsDecomposition,
    coords: &[TraceCoordsY],
    seed: u64,
) -> Result<SurfaceRep> {
    d.validate()?;
    if coords.len() != d.n_pants {
        return Err(Error::InvalidDecomposition(format!(
            "{} coordinate records for {} pants",
            coords.len(),
            d.n_pants
        )));
    }
    for (k, e) in d.edges.iter().enumerate() {
        let (t, ti) = coords[e.a.0].boundary(e.a.1);
        let (s, si) = coords[e.b.0].boundary(e.b.1);
        let gap = ((t - si).norm() / (1.0 + t.norm())).max((ti - s).norm() / (1.0 + ti.norm()));
        if gap > 1e-6 {
            return Err(Error::SpectraMismatch { edge: k, gap });
        }
    }
    let mut pants = Vec::with_capacity(coords.len());
    for (id, y) in coords.iter().enumerate() {
        let (p, _) = build_pants(y, seed.wrapping_add(id as u64 * 0x9e37_79b9))
            .map_err(|e| Error::Pants { id, source: alloc::boxed::Box::new(e) })?;
        pants.push(p);
    }
    assemble_from_pants(d, pants)
}

/// Coordinates of one pants in the record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PantsRecord {
    pub coords: TraceCoordsY,
    pub shape: ShapePair,
    pub root: RootChoice,
}

/// Coordinates of one glued curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeRecord {
    /// `(tr X, tr X⁻¹)` of the curve on the `a` side.
    pub traces: (CScalar, CScalar),
    pub glue: CentralizerParam,
}

/// The full coordinate record of a surface representation.
#[derive(Debug, Clone, PartialEq)]
pub struct FnRecord {
    pub pants: Vec<PantsRecord>,
    pub edges: Vec<EdgeRecord>,
}

impl FnRecord {
    /// Largest difference to `other`: trace coordinates relative, glue
    /// modulo the twist lattice.
    pub fn distance(&self, other: &FnRecord) -> f64 {
        let mut d: f64 = 0.0;
        for (p, q) in self.pants.iter().zip(&other.pants) {
            d = d.max(p.coords.distance(&q.coords));
        }
        for (e, f) in self.edges.iter().zip(&other.edges) {
            d = d.max(e.glue.lattice_distance(&f.glue));
            d = d.max((e.traces.0 - f.traces.0).norm() / (1.0 + e.traces.0.norm()));
            d = d.max((e.traces.1 - f.traces.1).norm() / (1.0 + e.traces.1.norm()));
        }
        d
    }
}

/// Reads back boundary traces, shape invariants and gluing parameters.
pub fn extract_fn(rep: &SurfaceRep) -> Result<FnRecord> {
    let n = rep.pants.len();
    let world: Vec<[Mat3; 3]> = (0..n).map(|p| rep.world_pants(p)).collect();
    let pants = world
        .iter()
        .zip(&rep.pants)
        .map(|(w, local)| {
            let mut coords = pants_coords(&w[0], &w[1]);
            // World coordinates carry conditioning noise and a double root
            // only survives to its square root, so near-repeated labels come
            // from the local record.
            if coords.quadratic().repeated(1e-4) {
                coords.root = local.coords.root;
            }
            PantsRecord {
                coords,
                shape: coords.shape(),
                root: coords.root,
            }
        })
        .collect();
    let mut edges = Vec::new();
    for (e, kind) in rep.decomposition.edges.iter().zip(&rep.kinds) {
        let ((pa, sa), (pb, sb)) = (e.a, e.b);
        let x = &world[pa][sa];
        let glue = match *kind {
            EdgeKind::Tree { .. } => {
                let la = rep.pants[pa].generators();
                let lb = rep.pants[pb].generators();
                let g0 = reference_conjugator(&la, sa, &lb, sb)?;
                let k = inverse3(&rep.frames[pa]) * rep.frames[pb] * inverse3(&g0);
                extract_twist(&k, &eig(&la[sa])?)?
            }
            EdgeKind::Stable { index } => {
                let d0 = reference_stable_letter(&world[pa], sa, &world[pb], sb)?;
                let k = inverse3(&d0) * rep.stable_letters[index].1;
                extract_twist(&k, &eig(x)?)?
            }
        };
        edges.push(EdgeRecord {
            traces: (tr(x), tr(&adj(x))),
            glue,
        });
    }
    Ok(FnRecord { pants, edges })
}
