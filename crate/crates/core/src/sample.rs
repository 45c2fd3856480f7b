//! Seeded random samplers used by the test suites and the verification
//! drivers. Everything is deterministic in the seed.

use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::real_forms::GoldmanParams;
use crate::sl2::form_j;
use crate::linalg::{c, classify, eigenvalues, norm, r, unit_det, CScalar, ElementClass, Mat3};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the closed unit disk.
pub fn disk_point(rng: &mut SampleRng) -> CScalar {
    let rad = libm::sqrt(rng.gen::<f64>());
    CScalar::from_polar(rad, rng.gen_range(-PI..PI))
}

/// Uniform point of the square `|Re|, |Im| ≤ h`.
pub fn complex_box(rng: &mut SampleRng, h: f64) -> CScalar {
    c(rng.gen_range(-h..h), rng.gen_range(-h..h))
}

/// Entries from the unit disk, rescaled to determinant one.
pub fn unimodular_disk(rng: &mut SampleRng) -> Mat3 {
    loop {
        let m = Mat3::from_fn(|_, _| disk_point(rng));
        if m.determinant().norm() > 1e-3 {
            return unit_det(&m);
        }
    }
}

/// Frobenius norm of `M` times that of `M⁻¹`, for unimodular `M`.
pub fn condition(m: &Mat3) -> f64 {
    norm(m) * norm(&crate::linalg::adj(m))
}

/// A unimodular conjugator with condition number at most `max_cond`.
pub fn conjugator(rng: &mut SampleRng, max_cond: f64) -> Mat3 {
    loop {
        let g = unimodular_disk(rng) + Mat3::identity() * r(1.0);
        if g.determinant().norm() < 1e-3 {
            continue;
        }
        let g = unit_det(&g);
        if condition(&g) <= max_cond {
            return g;
        }
    }
}

/// A real unimodular conjugator with condition number at most `max_cond`.
pub fn real_conjugator(rng: &mut SampleRng, max_cond: f64) -> Mat3 {
    loop {
        let g = Mat3::from_fn(|i, j| r(rng.gen_range(-1.0..1.0) + if i == j { 1.5 } else { 0.0 }));
        let d = g.determinant().re;
        if d.abs() < 1e-2 {
            continue;
        }
        let g = unit_det(&g);
        if condition(&g) <= max_cond {
            return g;
        }
    }
}

/// An element of SU(J) obtained by exponentiating a random element of its
/// Lie algebra with entries of size about `scale`.
pub fn su_element(rng: &mut SampleRng, scale: f64) -> Mat3 {
    let mut s = Mat3::zeros();
    for i in 0..3 {
        s[(i, i)] = c(0.0, rng.gen_range(-scale..scale));
        for j in (i + 1)..3 {
            let z = complex_box(rng, scale);
            s[(i, j)] = z;
            s[(j, i)] = -z.conj();
        }
    }
    let mut x = form_j() * s;
    let t = x.trace() / 3.0;
    for i in 0..3 {
        x[(i, i)] -= t;
    }
    unit_det(&expm(&x))
}

/// Matrix exponential by scaling and squaring of a Taylor polynomial.
pub(crate) fn expm(x: &Mat3) -> Mat3 {
    let mut k = 0;
    let mut y = *x;
    while norm(&y) > 0.5 {
        y /= r(2.0);
        k += 1;
    }
    let mut term = Mat3::identity();
    let mut sum = Mat3::identity();
    for n in 1..=18 {
        term = term * y / r(n as f64);
        sum += term;
    }
    for _ in 0..k {
        sum = sum * sum;
    }
    sum
}

/// A strongly loxodromic element of SU(J) whose consecutive eigenvalue
/// moduli differ by a factor of at least `min_ratio`.
pub fn su_loxodromic(rng: &mut SampleRng, min_ratio: f64) -> Mat3 {
    loop {
        let m = su_element(rng, 1.0);
        if classify(&m, 1e-9) != ElementClass::StronglyLoxodromic {
            continue;
        }
        let ev = eigenvalues(&m);
        if ev[0].norm() / ev[1].norm() >= min_ratio && ev[1].norm() / ev[2].norm() >= min_ratio {
            return m;
        }
    }
}

/// Three SL(2,ℝ) traces in `(lo, hi)` with `lo < hi < -2`,
/// the trace data of a Fuchsian pair of pants.
pub fn fuchsian_traces(rng: &mut SampleRng, lo: f64, hi: f64) -> [f64; 3] {
    [0; 3].map(|_| rng.gen_range(lo..hi))
}

/// Unimodular matrix `G·diag(values)·G⁻¹` with a random conjugator.
pub fn with_spectrum(rng: &mut SampleRng, values: [CScalar; 3], max_cond: f64) -> Mat3 {
    let g = conjugator(rng, max_cond);
    let d = Mat3::from_diagonal(&nalgebra::Vector3::new(values[0], values[1], values[2]));
    g * d * crate::linalg::adj(&g)
}

/// Three eigenvalues with product one whose moduli have consecutive
/// ratios in `[lo, hi]` and random arguments.
pub fn loxodromic_spectrum(rng: &mut SampleRng, lo: f64, hi: f64) -> [CScalar; 3] {
    let r1 = rng.gen_range(lo..hi);
    let r2 = rng.gen_range(lo..hi);
    let m3 = 1.0 / libm::cbrt(r1 * r2 * r2);
    let m2 = m3 * r2;
    let m1 = m2 * r1;
    let a1 = rng.gen_range(-PI..PI);
    let a2 = rng.gen_range(-PI..PI);
    [
        CScalar::from_polar(m1, a1),
        CScalar::from_polar(m2, a2),
        CScalar::from_polar(m3, -a1 - a2),
    ]
}

/// Goldman parameters strictly inside the admissible region, each `τ`
/// kept 2% away from its bounds.
pub fn goldman_params(rng: &mut SampleRng) -> GoldmanParams {
    let mut bd = || {
        let l: f64 = rng.gen_range(0.1..0.9);
        let lo = 2.0 / libm::sqrt(l);
        let hi = l + 1.0 / (l * l);
        [l, lo + (hi - lo) * rng.gen_range(0.02..0.98)]
    };
    let (a, b, c) = (bd(), bd(), bd());
    GoldmanParams {
        a,
        b,
        c,
        s: rng.gen_range(0.3..3.0),
        r: rng.gen_range(0.3..3.0),
    }
}
