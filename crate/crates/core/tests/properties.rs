//! Property tests for the algebraic invariants of the library.

use fn3_core::gluing::{assemble_from_pants, extract_fn, CentralizerParam, PantsDecomposition};
use fn3_core::linalg::{
    adj, c, classify, eigen3, moduli_distinct, norm, r, strongly_loxodromic_by_trace, tr,
    trace_test, unit_det, CScalar, Mat3, CLASSIFY_TOL,
};
use fn3_core::pants::{build_pants, PantsRep};
use fn3_core::real_forms::{detect_pants, goldman_boundary_to_traces, su_check, SubgroupTag};
use fn3_core::sample;
use fn3_core::sl2::{form_j, inv2, mat2, phi_star, phi_vec, sl2_pants_from_traces, Mat2, Vec2};
use fn3_core::trace_algebra::{
    commutator_trace, cyclic_shift, lawton_p, lawton_raw, lawton_s, lawton_sym, pants_coords,
    self_paired, shape_invariants, t2, x_from_matrices, x_from_y, y_from_x,
};
use proptest::prelude::*;
use rand::Rng;

fn rel(a: CScalar, b: CScalar) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

fn sl2(g: &mut sample::SampleRng) -> Mat2 {
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cayley_hamilton(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let m = sample::unimodular_disk(&mut g) * r(3.0);
        let m = fn3_core::linalg::unit_det(&m);
        let i = Mat3::identity();
        let ch = m * m * m - m * m * tr(&m) + m * tr(&adj(&m)) - i;
        prop_assert!(norm(&ch) <= 1e-8 * norm(&m).powi(3));
    }

    #[test]
    fn lawton_identity(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let a = sample::unimodular_disk(&mut g);
        let b = sample::unimodular_disk(&mut g);
        let (s, p) = lawton_raw(&x_from_matrices(&a, &b));
        let (t1, t2v) = (commutator_trace(&a, &b), commutator_trace(&b, &a));
        prop_assert!(rel(s, t1 + t2v) < 1e-8);
        prop_assert!(rel(p, t1 * t2v) < 1e-8);
    }

    #[test]
    fn phi_star_is_a_homomorphism(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let (m, n) = (sl2(&mut g), sl2(&mut g));
        let lhs = phi_star(&(m * n));
        let rhs = phi_star(&m) * phi_star(&n);
        prop_assert!(norm(&(lhs - rhs)) <= 1e-10 * (1.0 + norm(&lhs)));
        prop_assert!(norm(&(phi_star(&-m) - phi_star(&m))) == 0.0);
        let p = phi_star(&m);
        let j = form_j();
        prop_assert!(norm(&(p.transpose() * j * p - j)) <= 1e-10 * (1.0 + norm(&p).powi(2)));
        prop_assert!(rel(tr(&p), m.trace() * m.trace() - 1.0) < 1e-12);
        prop_assert!(rel(tr(&adj(&p)), tr(&p)) < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eigen_triples_are_sorted_eigenpairs(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let spec = sample::loxodromic_spectrum(&mut g, 1.1, 4.0);
        let m = sample::with_spectrum(&mut g, spec, 1e3);
        let e = eigen3(&m, 1e-9).unwrap();
        for k in 0..3 {
            let v = e.vectors[k];
            prop_assert!((m * v - v * e.values[k]).norm() <= 1e-8 * norm(&m));
            prop_assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        prop_assert!(e.values[0].norm() >= e.values[1].norm());
        prop_assert!(e.values[1].norm() >= e.values[2].norm());
    }

    #[test]
    fn classification_is_conjugation_invariant(seed in any::<u64>(), family in 0usize..4) {
        let mut g = sample::rng(seed);
        let m = match family {
            0 => sample::unimodular_disk(&mut g),
            1 => sample::su_element(&mut g, 1.0),
            2 => {
                let t = g.gen_range(-3.0..3.0);
                fn3_core::linalg::diag(c(0.0, t).exp(), c(0.0, -2.0 * t).exp(), c(0.0, t).exp())
            }
            _ => {
                let spec = sample::loxodromic_spectrum(&mut g, 1.2, 3.0);
                sample::with_spectrum(&mut g, spec, 1e2)
            }
        };
        let h = sample::conjugator(&mut g, 1e3);
        let n = h * m * adj(&h);
        prop_assert_eq!(classify(&m, CLASSIFY_TOL), classify(&n, CLASSIFY_TOL));
    }

    #[test]
    fn trace_test_agrees_with_moduli(seed in any::<u64>(), family in 0usize..3) {
        let mut g = sample::rng(seed);
        let values = match family {
            0 => sample::loxodromic_spectrum(&mut g, 1.0, 3.0),
            1 => {
                let m = sample::su_element(&mut g, 1.0);
                fn3_core::linalg::eigenvalues(&m)
            }
            _ => {
                let a = g.gen_range(-3.0..3.0);
                let b = g.gen_range(-3.0..3.0);
                [c(0.0, a).exp(), c(0.0, b).exp(), c(0.0, -a - b).exp()]
            }
        };
        let m = sample::with_spectrum(&mut g, values, 1e2);
        let t = trace_test(tr(&m), tr(&adj(&m)));
        if !t.indeterminate {
            prop_assert_eq!(
                strongly_loxodromic_by_trace(tr(&m), tr(&adj(&m))),
                moduli_distinct(&values, 1e-6)
            );
        }
    }

    #[test]
    fn lawton_polynomials_are_cyclic(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let y: [CScalar; 8] = core::array::from_fn(|_| sample::complex_box(&mut g, 4.0));
        let z = cyclic_shift(&y);
        prop_assert!(rel(lawton_s(&z), lawton_s(&y)) < 1e-9);
        prop_assert!(rel(lawton_p(&z), lawton_p(&y)) < 1e-9);
        let back = y_from_x(&x_from_y(&y));
        for k in 0..8 {
            prop_assert!(rel(back[k], y[k]) < 1e-14);
        }
    }

    #[test]
    fn shape_invariants_follow_the_triple(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let a = sample::unimodular_disk(&mut g);
        let b = sample::unimodular_disk(&mut g);
        let cc = adj(&(b * a));
        let s1 = shape_invariants(&a, &b);
        let s2 = shape_invariants(&b, &cc);
        let s3 = shape_invariants(&cc, &a);
        for s in [s2, s3] {
            prop_assert!(rel(s.sigma_plus, s1.sigma_plus) < 1e-9);
            prop_assert!(rel(s.sigma_minus, s1.sigma_minus) < 1e-9);
        }
    }

    #[test]
    fn self_paired_discriminant_factorizes(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let [a, b, cc, t] = [0; 4].map(|_| sample::complex_box(&mut g, 5.0));
        let d = lawton_sym(&self_paired(a, b, cc, t)).discriminant();
        let f = (t + a + b + cc - 3.0).powu(2) * t2(a, b, cc, t);
        prop_assert!((d - f).norm() <= 1e-9 * (1.0 + d.norm()));
    }

    #[test]
    fn shared_eigenvector_is_on_the_branch_locus(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let h = sample::conjugator(&mut g, 1e2);
        let upper = |g: &mut sample::SampleRng| {
            let mut m = Mat3::from_fn(|i, j| if i <= j { sample::disk_point(g) + r(1.0) } else { r(0.0) });
            m = fn3_core::linalg::unit_det(&m);
            m
        };
        let (a, b) = (h * upper(&mut g) * adj(&h), h * upper(&mut g) * adj(&h));
        let q = lawton_sym(&pants_coords(&a, &b).y);
        prop_assert!(q.discriminant().norm() <= 1e-7 * (1.0 + q.s.norm_sqr()));
        prop_assert!(rel(commutator_trace(&a, &b), r(3.0)) < 1e-8);
    }

    #[test]
    fn phi_maps_eigenvectors(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let m = sl2(&mut g);
        let t = m.trace();
        let d = (t * t - 4.0).sqrt();
        let lam = (t + d) / 2.0;
        // (b, λ − a) is an eigenvector for λ when b ≠ 0.
        let w = if m[(0, 1)].norm() > 1e-6 {
            Vec2::new(m[(0, 1)], lam - m[(0, 0)])
        } else {
            Vec2::new(lam - m[(1, 1)], m[(1, 0)])
        };
        prop_assume!(w.norm() > 1e-6);
        let v = phi_vec(&w);
        let p = phi_star(&m);
        prop_assert!((p * v - v * lam * lam).norm() <= 1e-9 * (1.0 + norm(&p)) * v.norm());
        let _ = inv2(&m);
    }

    #[test]
    fn su_elements_pair_traces(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let m = sample::su_element(&mut g, 1.0);
        prop_assert!(su_check(&m, 1e-10));
        prop_assert!(rel(tr(&adj(&m)), tr(&m).conj()) < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pants_coordinates_are_conjugation_invariant(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let a = sample::unimodular_disk(&mut g);
        let b = sample::unimodular_disk(&mut g);
        let p = PantsRep::new(a, b);
        prop_assert!(p.relation_residual() <= 1e-9);
        let h = sample::conjugator(&mut g, 1e3);
        let q = p.conjugated(&h);
        prop_assert!(q.relation_residual() <= 1e-9);
        prop_assert!(p.coords.distance(&q.coords) <= 1e-8);
    }

    #[test]
    fn fuchsian_pants_are_detected(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let t = sample::fuchsian_traces(&mut g, 2.2, 5.0).map(|x| r(-x));
        let s = sl2_pants_from_traces(t[0], t[1], t[2]);
        let y = pants_coords(&phi_star(&s.a), &phi_star(&s.b));
        prop_assert_eq!(detect_pants(&y, 1e-8).tag, SubgroupTag::SO3C);
        let (tr_a, tr_ai) = goldman_boundary_to_traces(0.25, 5.0);
        prop_assert!(rel(tr_a, r(5.25)) < 1e-15 && rel(tr_ai, r(5.25)) < 1e-15);
    }

    #[test]
    fn glue_changes_only_the_twist(seed in any::<u64>()) {
        let mut g = sample::rng(seed);
        let t = sample::fuchsian_traces(&mut g, 2.2, 4.0).map(|x| r(-x));
        let s = sl2_pants_from_traces(t[0], t[1], t[2]);
        let y = pants_coords(&phi_star(&s.a), &phi_star(&s.b));
        let (p0, _) = build_pants(&y, seed).unwrap();
        let glue: [CentralizerParam; 3] = [0; 3].map(|_| {
            CentralizerParam::new(sample::complex_box(&mut g, 1.0), sample::complex_box(&mut g, 0.5))
        });
        let zero = PantsDecomposition::theta([CentralizerParam::default(); 3]);
        let moved = PantsDecomposition::theta(glue);
        let r0 = assemble_from_pants(&zero, vec![p0.clone(), p0.clone()]).unwrap();
        let r1 = assemble_from_pants(&moved, vec![p0.clone(), p0]).unwrap();
        let (e0, e1) = (extract_fn(&r0).unwrap(), extract_fn(&r1).unwrap());
        for (a, b) in e0.pants.iter().zip(&e1.pants) {
            prop_assert!(a.coords.distance(&b.coords) < 1e-8);
            prop_assert_eq!(a.root, b.root);
        }
        for (k, (a, b)) in e0.edges.iter().zip(&e1.edges).enumerate() {
            prop_assert!(rel(a.traces.0, b.traces.0) < 1e-9);
            prop_assert!(rel(a.traces.1, b.traces.1) < 1e-9);
            prop_assert!(b.glue.lattice_distance(&glue[k]) < 1e-7);
        }
        let h = sample::conjugator(&mut g, 1e3);
        let e2 = extract_fn(&r1.conjugated(&h)).unwrap();
        prop_assert!(e1.distance(&e2) < 1e-7);
        // Conjugating by the centralizer keeps the curve itself.
        let x = unit_det(&r1.boundary(0, 0));
        let k = fn3_core::gluing::centralizer_in_basis(&eigen3(&x, 1e-9).unwrap(), &glue[0]);
        prop_assert!(norm(&(k * x * adj(&k) - x)) < 1e-8 * norm(&x));
    }
}
