//! Trace coordinates of two-generator subgroups of SL(3,ℂ): Lawton's
//! polynomials, the cyclically symmetric pants coordinates and the
//! commutator quadratic.

use crate::linalg::{adj, tr, CScalar, Mat3};

/// Lawton's eight traces
/// `(trA, trB, trAB, trA⁻¹B, trA⁻¹, trB⁻¹, trB⁻¹A⁻¹, trB⁻¹A)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceCoordsX {
    pub x: [CScalar; 8],
}

/// Which root of the commutator quadratic is `tr[A,B]`.
///
/// `Plus` is the lexicographically larger root in `(Re, Im)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RootChoice {
    #[default]
    Plus,
    Minus,
}

impl RootChoice {
    pub fn name(self) -> &'static str {
        match self {
            RootChoice::Plus => "plus",
            RootChoice::Minus => "minus",
        }
    }
}

/// Pants coordinates `(trA, trB, trC, σ₊, trA⁻¹, trB⁻¹, trC⁻¹, σ₋)` for
/// `CBA = I`, together with the commutator root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceCoordsY {
    pub y: [CScalar; 8],
    pub root: RootChoice,
}

impl TraceCoordsY {
    pub fn new(y: [CScalar; 8], root: RootChoice) -> Self {
        TraceCoordsY { y, root }
    }

    /// `(tr, tr⁻¹)` of boundary slot `k` (0 = A, 1 = B, 2 = C).
    pub fn boundary(&self, k: usize) -> (CScalar, CScalar) {
        (self.y[k], self.y[k + 4])
    }

    pub fn shape(&self) -> ShapePair {
        ShapePair {
            sigma_plus: self.y[3],
            sigma_minus: self.y[7],
        }
    }

    pub fn quadratic(&self) -> CommutatorQuadratic {
        lawton_sym(&self.y)
    }

    /// The commutator trace selected by `root`.
    pub fn commutator(&self) -> CScalar {
        self.quadratic().root(self.root)
    }

    /// Largest distance between the coordinates of `self` and `other`,
    /// relative to their size.
    pub fn distance(&self, other: &TraceCoordsY) -> f64 {
        self.y
            .iter()
            .zip(other.y.iter())
            .map(|(a, b)| (a - b).norm() / (1.0 + a.norm()))
            .fold(0.0, f64::max)
    }
}

/// The shape invariants `σ₊`, `σ₋`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapePair {
    pub sigma_plus: CScalar,
    pub sigma_minus: CScalar,
}

/// `X² - S X + P` with its two roots, `Plus` first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorQuadratic {
    pub s: CScalar,
    pub p: CScalar,
    pub roots: (CScalar, CScalar),
}

impl CommutatorQuadratic {
    pub fn new(s: CScalar, p: CScalar) -> Self {
        let d = (s * s - p * 4.0).sqrt();
        let big = if (s + d).norm() >= (s - d).norm() {
            (s + d) / 2.0
        } else {
            (s - d) / 2.0
        };
        let small = if big.norm() > 0.0 { p / big } else { (s - big).into() };
        let roots = if lex_ge(big, small) {
            (big, small)
        } else {
            (small, big)
        };
        CommutatorQuadratic { s, p, roots }
    }

    pub fn root(&self, choice: RootChoice) -> CScalar {
        match choice {
            RootChoice::Plus => self.roots.0,
            RootChoice::Minus => self.roots.1,
        }
    }

    pub fn discriminant(&self) -> CScalar {
        self.s * self.s - self.p * 4.0
    }

    /// Label of the root nearest to `value`.
    pub fn choice_of(&self, value: CScalar) -> RootChoice {
        if (value - self.roots.0).norm() <= (value - self.roots.1).norm() {
            RootChoice::Plus
        } else {
            RootChoice::Minus
        }
    }

    /// `true` when the roots agree to `tol` relative to their size.
    pub fn repeated(&self, tol: f64) -> bool {
        let (a, b) = self.roots;
        (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
    }
}

fn lex_ge(a: CScalar, b: CScalar) -> bool {
    a.re > b.re || (a.re == b.re && a.im >= b.im)
}

/// Neumaier-compensated complex summation.
#[derive(Default)]
struct Sum {
    s: CScalar,
    c: CScalar,
}

impl Sum {
    fn add(&mut self, x: CScalar) {
        let t = self.s + x;
        let re = if self.s.re.abs() >= x.re.abs() {
            (self.s.re - t.re) + x.re
        } else {
            (x.re - t.re) + self.s.re
        };
        let im = if self.s.im.abs() >= x.im.abs() {
            (self.s.im - t.im) + x.im
        } else {
            (x.im - t.im) + self.s.im
        };
        self.c += CScalar::new(re, im);
        self.s = t;
    }

    fn total(&self) -> CScalar {
        self.s + self.c
    }
}

/// `(S₀(x), P₀(x))`, the sum and product of `tr[A,B]` and `tr[B,A]`.
pub fn lawton_raw(x: &TraceCoordsX) -> (CScalar, CScalar) {
    let [x1, x2, x3, x4, x5, x6, x7, x8] = x.x;
    let s0 = x1 * x5 + x2 * x6 + x3 * x7 + x4 * x8 + x1 * x2 * x5 * x6
        - x1 * x2 * x7
        - x1 * x4 * x6
        - x2 * x5 * x8
        - x3 * x5 * x6
        - 3.0;

    let sq = |z: CScalar| z * z;
    let cu = |z: CScalar| z * z * z;
    let lines: [&[CScalar]; 17] = [
        &[
            sq(x1) * x2 * sq(x5) * x6,
            x1 * sq(x2) * x5 * sq(x6),
            sq(x1) * sq(x2) * x3,
            sq(x5) * sq(x6) * x7,
            sq(x1) * sq(x6) * x8,
            sq(x2) * x4 * sq(x5),
        ],
        &[
            -sq(x1) * x2 * x5 * x7,
            -x1 * x3 * sq(x5) * x6,
            -sq(x1) * x4 * x5 * x6,
            -x1 * x2 * sq(x5) * x8,
        ],
        &[
            -sq(x2) * x5 * x6 * x8,
            -x1 * x2 * x4 * sq(x6),
            -x1 * sq(x2) * x6 * x7,
            -x2 * x3 * x5 * sq(x6),
        ],
        &[
            -cu(x1) * x2 * x6,
            -x2 * cu(x5) * x6,
            -x1 * cu(x2) * x5,
            -x1 * cu(x6) * x5,
        ],
        &[
            -x1 * x2 * x3 * x4 * x5,
            -x1 * x5 * x6 * x7 * x8,
            -x1 * x2 * x3 * x6 * x8,
            -x2 * x4 * x5 * x6 * x7,
        ],
        &[
            sq(x1) * x2 * x8,
            x4 * sq(x5) * x6,
            sq(x1) * x3 * x6,
            x2 * sq(x5) * x7,
            sq(x1) * x4 * x7,
            x3 * sq(x5) * x8,
        ],
        &[
            x1 * sq(x2) * x4,
            x5 * sq(x6) * x8,
            sq(x2) * x3 * x5,
            x1 * sq(x6) * x7,
            sq(x2) * x7 * x8,
            x3 * x4 * sq(x6),
        ],
        &[
            sq(x3) * x4 * x5,
            x1 * sq(x7) * x8,
            sq(x3) * x6 * x8,
            x2 * x4 * sq(x7),
        ],
        &[
            x1 * x3 * sq(x4),
            x5 * x7 * sq(x8),
            sq(x4) * x6 * x7,
            x2 * x3 * sq(x8),
        ],
        &[
            -x1 * x2 * sq(x3) * 2.0,
            -x5 * x6 * sq(x7) * 2.0,
            -x2 * sq(x4) * x5 * 2.0,
            -x1 * x6 * sq(x8) * 2.0,
        ],
        &[x1 * x2 * x5 * x6, x1 * x3 * x5 * x7, x1 * x4 * x5 * x8],
        &[x2 * x3 * x6 * x7, x2 * x4 * x6 * x8, x3 * x4 * x7 * x8],
        &[
            cu(x1),
            cu(x2),
            cu(x3),
            cu(x4),
            cu(x5),
            cu(x6),
            cu(x7),
            cu(x8),
        ],
        &[
            -x1 * x3 * x8 * 3.0,
            -x4 * x5 * x7 * 3.0,
            -x2 * x3 * x4 * 3.0,
            -x6 * x7 * x8 * 3.0,
        ],
        &[
            x1 * x4 * x6 * 3.0,
            x2 * x5 * x8 * 3.0,
            x1 * x2 * x7 * 3.0,
            x3 * x5 * x6 * 3.0,
        ],
        &[
            -x1 * x5 * 6.0,
            -x2 * x6 * 6.0,
            -x3 * x7 * 6.0,
            -x4 * x8 * 6.0,
        ],
        &[CScalar::new(9.0, 0.0)],
    ];
    let mut p0 = Sum::default();
    for line in lines {
        for &t in line {
            p0.add(t);
        }
    }
    (s0, p0.total())
}

/// `S(y)`.
pub fn lawton_s(y: &[CScalar; 8]) -> CScalar {
    let [y1, y2, y3, y4, y5, y6, y7, y8] = *y;
    y1 * y5 + y2 * y6 + y3 * y7 + y4 * y8 - y1 * y2 * y3 - y5 * y6 * y7 - 3.0
}

/// `P(y)`.
pub fn lawton_p(y: &[CScalar; 8]) -> CScalar {
    let [y1, y2, y3, y4, y5, y6, y7, y8] = *y;
    let sq = |z: CScalar| z * z;
    let cu = |z: CScalar| z * z * z;
    let terms = [
        y1 * y2 * y3 * y5 * y6 * y7,
        sq(y1) * sq(y2) * y7,
        y3 * sq(y5) * sq(y6),
        sq(y1) * sq(y3) * y6,
        y2 * sq(y5) * sq(y7),
        sq(y2) * sq(y3) * y5,
        y1 * sq(y6) * sq(y7),
        y1 * y2 * y5 * y6,
        y2 * y3 * y6 * y7,
        y1 * y3 * y5 * y7,
        -y1 * y2 * sq(y7) * 2.0,
        -sq(y3) * y5 * y6 * 2.0,
        -y1 * y3 * sq(y6) * 2.0,
        -sq(y2) * y5 * y7 * 2.0,
        -y2 * y3 * sq(y5) * 2.0,
        -sq(y1) * y6 * y7 * 2.0,
        cu(y1),
        cu(y2),
        cu(y3),
        cu(y5),
        cu(y6),
        cu(y7),
        y1 * y2 * y3 * 3.0,
        y5 * y6 * y7 * 3.0,
        -y1 * y5 * 6.0,
        -y2 * y6 * 6.0,
        -y3 * y7 * 6.0,
        y1 * y2 * y4 * y5 * y7,
        y1 * y3 * y4 * y6 * y7,
        y2 * y3 * y4 * y5 * y6,
        y1 * sq(y2) * y4,
        y4 * sq(y5) * y6,
        sq(y1) * y3 * y4,
        y4 * y5 * sq(y7),
        y2 * sq(y3) * y4,
        y4 * sq(y6) * y7,
        y1 * y3 * y5 * y6 * y8,
        y2 * y3 * y5 * y7 * y8,
        y1 * y2 * y6 * y7 * y8,
        y5 * sq(y6) * y8,
        sq(y1) * y2 * y8,
        sq(y5) * y7 * y8,
        y1 * sq(y3) * y8,
        y6 * sq(y7) * y8,
        sq(y2) * y3 * y8,
        (sq(y4) - y8 * 3.0) * (y1 * y7 + y2 * y5 + y3 * y6),
        (sq(y8) - y4 * 3.0) * (y1 * y6 + y2 * y7 + y3 * y5),
        y4 * y8 * (y1 * y5 + y2 * y6 + y3 * y7 - 6.0),
        cu(y4),
        cu(y8),
        CScalar::new(9.0, 0.0),
    ];
    let mut acc = Sum::default();
    for t in terms {
        acc.add(t);
    }
    acc.total()
}

/// The commutator quadratic of a pants coordinate tuple.
pub fn lawton_sym(y: &[CScalar; 8]) -> CommutatorQuadratic {
    CommutatorQuadratic::new(lawton_s(y), lawton_p(y))
}

pub fn x_from_y(y: &[CScalar; 8]) -> TraceCoordsX {
    let [y1, y2, y3, y4, y5, y6, y7, y8] = *y;
    TraceCoordsX {
        x: [y1, y2, y7, y4 + y2 * y5, y5, y6, y3, y8 + y1 * y6],
    }
}

pub fn y_from_x(x: &TraceCoordsX) -> [CScalar; 8] {
    let [x1, x2, x3, x4, x5, x6, x7, x8] = x.x;
    [x1, x2, x7, x4 - x2 * x5, x5, x6, x3, x8 - x1 * x6]
}

/// `tr(ABA⁻¹B⁻¹)` for unimodular `A`, `B`.
pub fn commutator_trace(a: &Mat3, b: &Mat3) -> CScalar {
    tr(&(a * b * adj(a) * adj(b)))
}

pub fn x_from_matrices(a: &Mat3, b: &Mat3) -> TraceCoordsX {
    let (ai, bi) = (adj(a), adj(b));
    TraceCoordsX {
        x: [
            tr(a),
            tr(b),
            tr(&(a * b)),
            tr(&(ai * b)),
            tr(&ai),
            tr(&bi),
            tr(&(bi * ai)),
            tr(&(bi * a)),
        ],
    }
}

pub fn shape_invariants(a: &Mat3, b: &Mat3) -> ShapePair {
    let (ai, bi) = (adj(a), adj(b));
    ShapePair {
        sigma_plus: tr(&(ai * b)) - tr(&ai) * tr(b),
        sigma_minus: tr(&(bi * a)) - tr(&bi) * tr(a),
    }
}

/// The eight pants coordinates of `(A, B, C = (BA)⁻¹)`.
pub fn y_from_matrices(a: &Mat3, b: &Mat3) -> [CScalar; 8] {
    let c = adj(&(b * a));
    let sh = shape_invariants(a, b);
    [
        tr(a),
        tr(b),
        tr(&c),
        sh.sigma_plus,
        tr(&adj(a)),
        tr(&adj(b)),
        tr(&adj(&c)),
        sh.sigma_minus,
    ]
}

/// Pants coordinates of `(A, B)` including the root realized by `tr[A,B]`.
pub fn pants_coords(a: &Mat3, b: &Mat3) -> TraceCoordsY {
    let y = y_from_matrices(a, b);
    let q = lawton_sym(&y);
    TraceCoordsY {
        y,
        root: q.choice_of(commutator_trace(a, b)),
    }
}

/// Coordinates after relabelling `(A, B, C)` as `(B, C, A)`.
pub fn cyclic_shift(y: &[CScalar; 8]) -> [CScalar; 8] {
    [y[1], y[2], y[0], y[3], y[5], y[6], y[4], y[7]]
}

/// The self-paired tuple `(a, b, c, t, a, b, c, t)`.
pub fn self_paired(a: CScalar, b: CScalar, c: CScalar, t: CScalar) -> [CScalar; 8] {
    [a, b, c, t, a, b, c, t]
}

pub fn t2(a: CScalar, b: CScalar, c: CScalar, t: CScalar) -> CScalar {
    t * t - (a + b + c + 1.0) * t * 2.0 - a * b * c * 4.0 + a * a + b * b + c * c
        - (a * b + b * c + a * c) * 2.0
        - (a + b + c) * 2.0
        - 3.0
}

/// Branches of the discriminant `S² - 4P` on self-paired tuples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchFactorization {
    /// `3 - a - b - c`, the reducible branch.
    pub linear_root: CScalar,
    pub linear_commutator: CScalar,
    /// Roots of `T₂`, `Plus` first.
    pub t2_roots: (CScalar, CScalar),
    pub t2_commutators: (CScalar, CScalar),
}

pub fn branch_factorization(a: CScalar, b: CScalar, c: CScalar) -> BranchFactorization {
    let linear_root = 3.0 - a - b - c;
    let linear_commutator = -a * b * c + a * a + b * b + c * c + a * b + b * c + a * c
        - (a + b + c) * 3.0
        + 3.0;
    let half = a + b + c + 1.0;
    let k = ((a + 1.0) * (b + 1.0) * (c + 1.0)).sqrt() * 2.0;
    let q = CommutatorQuadratic::new(half * 2.0, half * half - k * k);
    let comm = |s: CScalar| half * s + (a + 1.0) * (b + 1.0) * (c + 1.0) - 1.0;
    BranchFactorization {
        linear_root,
        linear_commutator,
        t2_roots: q.roots,
        t2_commutators: (comm(q.roots.0), comm(q.roots.1)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reducibility {
    ReducibleBranch,
    IrreducibleBranch,
    NotSelfPaired,
}

/// Locates a tuple relative to the reducible branch `σ = 3 - a - b - c`.
pub fn reducibility_test(y: &TraceCoordsY, tol: f64) -> Reducibility {
    let v = &y.y;
    let paired = (0..4).all(|k| (v[k] - v[k + 4]).norm() <= tol);
    if !paired {
        return Reducibility::NotSelfPaired;
    }
    if (v[3] - (3.0 - v[0] - v[1] - v[2])).norm() <= tol {
        Reducibility::ReducibleBranch
    } else {
        Reducibility::IrreducibleBranch
    }
}

/// SL(2) trace identities: `tr(A⁻¹B)` and `tr[A,B]` from `(trA, trB, trAB)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrickeSl2 {
    pub tr_ainv_b: CScalar,
    pub tr_comm: CScalar,
}

pub fn fricke_sl2(x: CScalar, y: CScalar, z: CScalar) -> FrickeSl2 {
    FrickeSl2 {
        tr_ainv_b: x * y - z,
        tr_comm: x * x + y * y + z * z - 2.0 - x * y * z,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{r, unit_det, Mat3};
    use crate::sample;

    fn rel(a: CScalar, b: CScalar) -> f64 {
        (a - b).norm() / (1.0 + b.norm())
    }

    #[test]
    fn identity_tuples() {
        let x = TraceCoordsX { x: [r(3.0); 8] };
        let (s0, p0) = lawton_raw(&x);
        assert_eq!((s0, p0), (r(6.0), r(9.0)));
        let y = y_from_x(&x);
        assert_eq!(y[3], r(-6.0));
        let q = lawton_sym(&y);
        assert_eq!((q.s, q.p), (r(6.0), r(9.0)));
        assert!((q.roots.0 - 3.0).norm() < 1e-7 && (q.roots.1 - 3.0).norm() < 1e-7);
    }

    #[test]
    fn lawton_matches_commutators() {
        let mut rng = sample::rng(11);
        for _ in 0..200 {
            let a = sample::unimodular_disk(&mut rng);
            let b = sample::unimodular_disk(&mut rng);
            let (s0, p0) = lawton_raw(&x_from_matrices(&a, &b));
            let c1 = commutator_trace(&a, &b);
            let c2 = commutator_trace(&b, &a);
            assert!(rel(s0, c1 + c2) < 1e-9);
            assert!(rel(p0, c1 * c2) < 1e-9);
            let y = y_from_matrices(&a, &b);
            let q = lawton_sym(&y);
            assert!(rel(q.s, s0) < 1e-9 && rel(q.p, p0) < 1e-9);
            assert!(rel(q.s, q.roots.0 + q.roots.1) < 1e-12);
            let x = x_from_matrices(&a, &b);
            let back = x_from_y(&y_from_x(&x));
            for k in 0..8 {
                assert!(rel(back.x[k], x.x[k]) < 1e-15);
                assert!(rel(x_from_y(&y).x[k], x.x[k]) < 1e-12);
            }
        }
    }

    #[test]
    fn shape_invariants_are_cyclic() {
        let mut rng = sample::rng(5);
        for _ in 0..100 {
            let a = sample::unimodular_disk(&mut rng);
            let b = sample::unimodular_disk(&mut rng);
            let c = adj(&(b * a));
            let s0 = shape_invariants(&a, &b);
            for (p, q) in [(&b, &c), (&c, &a)] {
                let s = shape_invariants(p, q);
                assert!(rel(s.sigma_plus, s0.sigma_plus) < 1e-9);
                assert!(rel(s.sigma_minus, s0.sigma_minus) < 1e-9);
            }
            let y = y_from_matrices(&a, &b);
            let z = y_from_matrices(&b, &c);
            let shifted = cyclic_shift(&y);
            for k in 0..8 {
                assert!(rel(shifted[k], z[k]) < 1e-9);
            }
            assert!(rel(lawton_s(&shifted), lawton_s(&y)) < 1e-9);
            assert!(rel(lawton_p(&shifted), lawton_p(&y)) < 1e-9);
        }
    }

    #[test]
    fn shared_eigenvector_gives_branch_locus() {
        let mut rng = sample::rng(8);
        for _ in 0..50 {
            let mut a = sample::unimodular_disk(&mut rng);
            let mut b = sample::unimodular_disk(&mut rng);
            for m in [&mut a, &mut b] {
                m[(1, 0)] = r(0.0);
                m[(2, 0)] = r(0.0);
                *m = unit_det(m);
            }
            let (s0, p0) = lawton_raw(&x_from_matrices(&a, &b));
            assert!((s0 * s0 - p0 * 4.0).norm() < 1e-8 * (1.0 + s0.norm_sqr()));
            let k = a * b * adj(&a) * adj(&b);
            assert!((k[(0, 0)] - 1.0).norm() < 1e-10);
        }
    }

    #[test]
    fn factorization_examples() {
        let f = branch_factorization(r(3.0), r(3.0), r(3.0));
        assert_eq!(f.linear_root, r(-6.0));
        assert_eq!(f.linear_commutator, r(3.0));
        let f = branch_factorization(r(8.0), r(8.0), r(8.0));
        assert!((f.t2_roots.0 - 79.0).norm() < 1e-12);
        assert!((f.t2_roots.1 + 29.0).norm() < 1e-12);
        assert!((f.t2_commutators.0 - 2703.0).norm() < 1e-9);
        assert!(t2(r(8.0), r(8.0), r(8.0), r(0.0)) == r(-2291.0));
    }

    #[test]
    fn factorization_identity() {
        let mut rng = sample::rng(3);
        for _ in 0..200 {
            let [a, b, c, t] = [0; 4].map(|_| sample::complex_box(&mut rng, 5.0));
            let y = self_paired(a, b, c, t);
            let d = lawton_sym(&y).discriminant();
            let f = (t + a + b + c - 3.0).powu(2) * t2(a, b, c, t);
            assert!((d - f).norm() <= 1e-9 * (1.0 + d.norm()));
        }
    }

    #[test]
    fn branch_commutators_are_double_roots() {
        let mut rng = sample::rng(4);
        for _ in 0..50 {
            let [a, b, c] = [0; 3].map(|_| sample::complex_box(&mut rng, 5.0));
            let f = branch_factorization(a, b, c);
            for (s, comm) in [
                (f.linear_root, f.linear_commutator),
                (f.t2_roots.0, f.t2_commutators.0),
                (f.t2_roots.1, f.t2_commutators.1),
            ] {
                let q = lawton_sym(&self_paired(a, b, c, s));
                assert!(rel(q.s / 2.0, comm) < 1e-8, "{:?} {:?}", q.s / 2.0, comm);
            }
        }
    }

    #[test]
    fn reducibility_examples() {
        let fuchsian = TraceCoordsY::new(self_paired(r(8.0), r(8.0), r(8.0), r(79.0)), RootChoice::Plus);
        assert_eq!(reducibility_test(&fuchsian, 1e-8), Reducibility::IrreducibleBranch);
        let red = TraceCoordsY::new(self_paired(r(2.0), r(4.0), r(5.0), r(-8.0)), RootChoice::Plus);
        assert_eq!(reducibility_test(&red, 1e-8), Reducibility::ReducibleBranch);
        let mut rng = sample::rng(1);
        let y = [0; 8].map(|_| sample::complex_box(&mut rng, 3.0));
        assert_eq!(
            reducibility_test(&TraceCoordsY::new(y, RootChoice::Plus), 1e-8),
            Reducibility::NotSelfPaired
        );
    }

    #[test]
    fn fricke_examples() {
        let f = fricke_sl2(r(2.0), r(2.0), r(2.0));
        assert_eq!((f.tr_ainv_b, f.tr_comm), (r(2.0), r(2.0)));
        let f = fricke_sl2(r(-3.0), r(-3.0), r(-3.0));
        assert_eq!((f.tr_ainv_b, f.tr_comm), (r(12.0), r(52.0)));
    }

    #[test]
    fn root_labels_are_lexicographic() {
        let q = CommutatorQuadratic::new(r(0.0), r(1.0));
        assert!((q.roots.0 - CScalar::new(0.0, 1.0)).norm() < 1e-15);
        assert_eq!(q.choice_of(CScalar::new(0.0, -1.0)), RootChoice::Minus);
        let id = Mat3::identity();
        assert_eq!(pants_coords(&id, &id).root, RootChoice::Plus);
    }
}
