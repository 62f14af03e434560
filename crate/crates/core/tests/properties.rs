use omin::affinize::{cstar_act, lift_from_bpoint, xi};
use omin::bridge::{mu_sl2, omega1, sl2_act, to_bivector, F, F_inv};
use omin::exact_linalg::{Mat, Scalar};
use omin::orthogonal::{biv_to_matrix, bracket, in_min_closure, kks_lambda, matrix_to_biv};
use omin::quiver::{h_act, in_n, random_h, random_sl, sample_n, symplectic_form};
use omin::suites::{orbit_sample, regular_window_sample};
use omin::trialgebra::{phi_window, phi_window_inv, triality, window_bracket, window_killing};
use omin::weylact::{gg_equals_triality, sk_partner, zk_check};
use omin::{rng, Bivector, Perm3, QuiverPoint, WindowElement};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Scalar::new(p, q))
}

fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| Mat::from_fn(rows, cols, |i, j| Scalar::from_int(v[i * cols + j])))
}

fn bivector() -> impl Strategy<Value = Bivector> {
    prop::collection::vec(-3i64..=3, 28).prop_map(|v| Bivector::from_coeff_vector(4, v.into_iter().map(Scalar::from_int).collect()))
}

fn window() -> impl Strategy<Value = WindowElement> {
    any::<u64>().prop_map(|seed| WindowElement::random(&mut rng(seed), 3))
}

fn quiver3() -> impl Strategy<Value = QuiverPoint> {
    any::<u64>().prop_map(|seed| QuiverPoint::random(&mut rng(seed), 3, 3))
}

fn perm() -> impl Strategy<Value = Perm3> {
    (0usize..6).prop_map(|i| Perm3::all()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Scalar::one());
        }
    }

    #[test]
    fn scalar_text_roundtrip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rank_nullity(m in mat(4, 6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), 6);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn det_is_multiplicative(a in mat(4, 4), b in mat(4, 4)) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
        if let Ok(ai) = a.inverse() {
            prop_assert_eq!(&a * &ai, Mat::identity(4));
        } else {
            prop_assert!(a.det().unwrap().is_zero());
        }
    }

    #[test]
    fn bracket_antisymmetry_and_jacobi(a in bivector(), b in bivector(), c in bivector()) {
        prop_assert_eq!(bracket(&a, &b), bracket(&b, &a).neg());
        let j = bracket(&a, &bracket(&b, &c))
            .add(&bracket(&b, &bracket(&c, &a)))
            .add(&bracket(&c, &bracket(&a, &b)));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn bivector_matrix_roundtrip(a in bivector()) {
        prop_assert_eq!(matrix_to_biv(&biv_to_matrix(&a)), a);
    }

    #[test]
    fn killing_is_invariant(a in bivector(), b in bivector(), c in bivector()) {
        prop_assert_eq!(kks_lambda(&bracket(&a, &b), &c), kks_lambda(&a, &bracket(&b, &c)));
    }

    #[test]
    fn window_roundtrip_and_bracket(a in window(), b in window()) {
        prop_assert_eq!(phi_window_inv(&phi_window(&a).unwrap()), a.clone());
        let lhs = phi_window(&window_bracket(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, bracket(&phi_window(&a).unwrap(), &phi_window(&b).unwrap()));
    }

    #[test]
    fn triality_is_an_s3_action(s in perm(), t in perm(), a in window(), b in window()) {
        prop_assert_eq!(triality(&s, &triality(&t, &a)), triality(&s.compose(&t), &a));
        prop_assert_eq!(triality(&Perm3::identity(), &a), a.clone());
        let lhs = triality(&s, &window_bracket(&a, &b).unwrap());
        prop_assert_eq!(lhs, window_bracket(&triality(&s, &a), &triality(&s, &b)).unwrap());
        prop_assert_eq!(window_killing(&triality(&s, &a), &triality(&s, &b)), window_killing(&a, &b));
    }

    #[test]
    fn h_action_is_a_symplectic_group_action(seed in any::<u64>(), p in quiver3(), q in quiver3()) {
        let mut r = rng(seed);
        let (g, h) = (random_h(&mut r, 3), random_h(&mut r, 3));
        let gh = h_act(&g, &h_act(&h, &p).unwrap()).unwrap();
        prop_assert_eq!(gh, h_act(&g.compose(&h), &p).unwrap());
        let (gp, gq) = (h_act(&g, &p).unwrap(), h_act(&g, &q).unwrap());
        prop_assert_eq!(symplectic_form(&gp, &gq).unwrap(), symplectic_form(&p, &q).unwrap());
        prop_assert_eq!(symplectic_form(&p, &q).unwrap(), -symplectic_form(&q, &p).unwrap());
    }

    #[test]
    fn n_is_h_stable(seed in any::<u64>(), n in 3usize..=5) {
        let mut r = rng(seed);
        let p = sample_n(&mut r, n);
        let h = random_h(&mut r, n);
        prop_assert_eq!(in_n(&h_act(&h, &p).unwrap()).unwrap(), in_n(&p).unwrap());
    }

    #[test]
    fn f_is_linear_and_symplectic(p in quiver3(), q in quiver3(), z in scalar()) {
        let lhs = F(&p.add(&q.scale(&z))).unwrap();
        let rhs = F(&p).unwrap().add(&IsoMapScale::scale(&F(&q).unwrap(), &z));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(omega1(&F(&p).unwrap(), &F(&q).unwrap()), symplectic_form(&p, &q).unwrap());
        prop_assert_eq!(F_inv(&F(&p).unwrap()), p);
    }

    #[test]
    fn sl2_moment_map_is_equivariant(seed in any::<u64>(), p in quiver3()) {
        let g = random_sl(&mut rng(seed), 2, 4, 2);
        let f = F(&p).unwrap();
        let gi = g.inverse().unwrap();
        let moved = sl2_act(&g, &f).unwrap();
        prop_assert_eq!(mu_sl2(&moved), &(&gi.transpose() * &mu_sl2(&f)) * &g.transpose());
        prop_assert_eq!(to_bivector(&moved), to_bivector(&f));
    }

    #[test]
    fn cstar_group_law(p in quiver3(), a in 1i64..6, b in 1i64..6) {
        let (za, zb) = (Scalar::from_int(a), Scalar::new(-1, b));
        let lhs = cstar_act(&za, &cstar_act(&zb, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, cstar_act(&(&za * &zb), &p).unwrap());
        prop_assert_eq!(cstar_act(&Scalar::one(), &p).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn orbit_points_are_in_the_closure(seed in any::<u64>()) {
        let b = orbit_sample(&mut rng(seed), 5);
        prop_assert!(!b.is_zero() && in_min_closure(&b));
        prop_assert!(kks_lambda(&b, &b).is_zero());
    }

    #[test]
    fn n_maps_to_the_orbit_closure(seed in any::<u64>()) {
        let p = sample_n(&mut rng(seed), 3);
        prop_assert!(in_min_closure(&to_bivector(&F(&p).unwrap())));
    }

    #[test]
    fn xi_round_trip(seed in any::<u64>(), n in 3usize..=4) {
        let p = sample_n(&mut rng(seed), n);
        let b = xi(&p).unwrap();
        let back = xi(&lift_from_bpoint(&b).unwrap()).unwrap();
        prop_assert!(omin::affinize::bpoint_eq(&back, &b));
    }

    #[test]
    fn weyl_generators_match_triality(seed in any::<u64>(), k in 1usize..=2) {
        let a = regular_window_sample(&mut rng(seed));
        prop_assert!(gg_equals_triality(&a, k).unwrap());
    }

    #[test]
    fn sk_partner_is_an_involution(seed in any::<u64>(), k in 1usize..=2) {
        let p = sample_n(&mut rng(seed), 3);
        let q = sk_partner(&p, k).unwrap();
        prop_assert!(zk_check(&p, &q, k).unwrap());
        prop_assert!(in_n(&q).is_ok());
    }
}

trait IsoMapScale {
    fn scale(&self, z: &Scalar) -> Self;
}

impl IsoMapScale for omin::IsoMap {
    fn scale(&self, z: &Scalar) -> Self {
        omin::IsoMap { matrix: self.matrix.scale(z) }
    }
}
