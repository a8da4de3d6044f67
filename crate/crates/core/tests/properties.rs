use num_complex::Complex64;
use process_algebra::bohm::{self, Grid, WaveSpec};
use process_algebra::export;
use process_algebra::groupoid::{apply_operator, composed_operator, compose, Composite, CompositionMode, Extensive, Iterant, IterantOp, Metric};
use process_algebra::lorentz;
use process_algebra::observables::spin_expectation;
use process_algebra::spinor::{self, PauliDictionary};
use process_algebra::weyl::WeylAlgebra;
use process_algebra::{Multivector, Signature};
use proptest::prelude::*;
use std::sync::Arc;

fn sig_and_elements(count: usize) -> impl Strategy<Value = (Arc<Signature>, Vec<Multivector>)> {
    (0usize..=3, 0usize..=3).prop_flat_map(move |(p, q)| {
        let sig = Arc::new(Signature::new(p, q).unwrap());
        let blades = sig.blade_count();
        prop::collection::vec(prop::collection::vec(-2.0f64..2.0, blades), count).prop_map(move |vs| {
            let els = vs
                .into_iter()
                .map(|c| Multivector::from_coeffs(&sig, c).unwrap())
                .collect();
            (sig.clone(), els)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative((_, m) in sig_and_elements(3)) {
        let l = &(&m[0] * &m[1]) * &m[2];
        let r = &m[0] * &(&m[1] * &m[2]);
        prop_assert!(l.distance(&r) < 1e-10);
    }

    #[test]
    fn reversion_reverses_products((_, m) in sig_and_elements(2)) {
        let lhs = (&m[0] * &m[1]).reversion();
        let rhs = &m[1].reversion() * &m[0].reversion();
        prop_assert!(lhs.distance(&rhs) < 1e-12);
    }

    #[test]
    fn trace_is_cyclic((_, m) in sig_and_elements(2)) {
        prop_assert!(((&m[0] * &m[1]).trace() - (&m[1] * &m[0]).trace()).abs() < 1e-10);
    }

    #[test]
    fn generators_square_to_signs_and_anticommute(p in 0usize..=4, q in 0usize..=3) {
        let sig = Arc::new(Signature::new(p, q).unwrap());
        for i in 0..sig.dim() {
            let a = Multivector::<f64>::basis(&sig, 1 << i);
            let want = if i < p { 1.0 } else { -1.0 };
            prop_assert_eq!((&a * &a).scalar_part(), want);
            for j in (i + 1)..sig.dim() {
                let b = Multivector::<f64>::basis(&sig, 1 << j);
                prop_assert_eq!((&a * &b + &b * &a).max_abs(), 0.0);
            }
        }
    }

    #[test]
    fn rotations_compose_and_preserve_length(t1 in -7.0f64..7.0, t2 in -7.0f64..7.0, v in prop::array::uniform3(-3.0f64..3.0)) {
        let sig = Arc::new(Signature::pauli());
        let plane = Multivector::<f64>::basis(&sig, 0b011);
        let (g1, g2) = (lorentz::rotor(&plane, t1).unwrap(), lorentz::rotor(&plane, t2).unwrap());
        let g12 = lorentz::rotor(&plane, t1 + t2).unwrap();
        prop_assert!((&g1.element * &g2.element).distance(&g12.element) < 1e-12);
        let x = Multivector::vector(&sig, &v).unwrap();
        let y = g1.apply(&x).unwrap();
        prop_assert!(((&y * &y).scalar_part() - (&x * &x).scalar_part()).abs() < 1e-11);
    }

    #[test]
    fn velocity_addition_stays_subluminal(v1 in -0.999f64..0.999, v2 in -0.999f64..0.999) {
        let s = lorentz::add_velocities(v1, v2).unwrap();
        prop_assert!(s.abs() < 1.0);
        let k = lorentz::k_factor(v1).unwrap() * lorentz::k_factor(v2).unwrap();
        prop_assert!((k - lorentz::k_factor(s).unwrap()).abs() < 1e-9 * k.max(1.0));
        prop_assert!((lorentz::rapidity(s).unwrap() - lorentz::rapidity(v1).unwrap() - lorentz::rapidity(v2).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn hopf_image_is_null(g in prop::array::uniform4(-5.0f64..5.0)) {
        prop_assume!(g.iter().map(|c| c * c).sum::<f64>() > 1e-6);
        let v = spinor::hopf_map(g).unwrap();
        let interval = v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
        prop_assert!(interval.abs() <= 1e-12 * v[0] * v[0]);
        prop_assert!(v[0] >= 0.0);
    }

    #[test]
    fn spin_has_magnitude_half(a in prop::array::uniform4(-1.0f64..1.0)) {
        let (p1, p2) = (Complex64::new(a[0], a[1]), Complex64::new(a[2], a[3]));
        let n = (p1.norm_sqr() + p2.norm_sqr()).sqrt();
        prop_assume!(n > 1e-3);
        let dict = PauliDictionary::solve().unwrap();
        let s = spin_expectation(&dict.ideal_element(p1 / n, p2 / n)).unwrap();
        prop_assert!(((s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn iterant_composites_match_actions(a in -1e6f64..1e6, b in -1e6f64..1e6) {
        let x = Iterant::new(a, b);
        for op in [IterantOp::SigmaX, IterantOp::Project, IterantOp::LeftIdealFirst, IterantOp::LeftIdealSecond] {
            prop_assert_eq!(composed_operator(op).apply(x), apply_operator(op, x));
        }
    }

    #[test]
    fn groupoid_composition_associates(signs in prop::collection::vec(prop::bool::ANY, 5), idx in prop::array::uniform6(0usize..5)) {
        let mut m = Metric::new();
        for (k, s) in signs.iter().enumerate() {
            m.add(&format!("Q{k}"), if *s { 1 } else { -1 });
        }
        let (a, b, c) = (Extensive::new(idx[0], idx[1]), Extensive::new(idx[2], idx[3]), Extensive::new(idx[4], idx[5]));
        let g = CompositionMode::Groupoid;
        if let (Composite::Arrow(ab), Composite::Arrow(bc)) = (compose(&a, &b, &m, g).unwrap(), compose(&b, &c, &m, g).unwrap()) {
            let (l, r) = (compose(&ab, &c, &m, g).unwrap(), compose(&a, &bc, &m, g).unwrap());
            if matches!(l, Composite::Arrow(_)) && matches!(r, Composite::Arrow(_)) {
                prop_assert!(l.equivalent(&r, &m, 0.0).unwrap());
            }
        }
    }

    #[test]
    fn plane_wave_momentum_is_k(k in -3.0f64..3.0, mass in 0.5f64..3.0) {
        let wave = WaveSpec::PlaneWave { amplitude: 1.0, k: vec![k], mass };
        let g = Grid::interval(-2.0, 2.0, 81).unwrap();
        let polar = bohm::decompose_polar(&wave.sample(&g, 0.4)).unwrap();
        let p = bohm::bohm_momentum(&polar);
        for v in &p[0].values[2..79] {
            prop_assert!((v - k).abs() < 1e-10);
        }
    }

    #[test]
    fn lightcone_export_is_reproducible(seed in any::<u64>()) {
        let a = export::lightcone_samples(5, seed).unwrap().to_csv_string().unwrap();
        let b = export::lightcone_samples(5, seed).unwrap().to_csv_string().unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weyl_product_associates_and_adjoint_reverses(n in 2usize..=6, seed in prop::collection::vec(-1.0f64..1.0, 6 * 36)) {
        let w = WeylAlgebra::new(n).unwrap();
        let el = |k: usize| {
            let c = (0..n * n).map(|i| Complex64::new(seed[k * 72 + 2 * i], seed[k * 72 + 2 * i + 1])).collect();
            w.from_coeffs(c).unwrap()
        };
        let (a, b, c) = (el(0), el(1), el(2));
        let l = w.product(&w.product(&a, &b).unwrap(), &c).unwrap();
        let r = w.product(&a, &w.product(&b, &c).unwrap()).unwrap();
        prop_assert!(l.distance(&r).unwrap() < 1e-10);
        let adj = w.adjoint(&w.product(&a, &b).unwrap()).unwrap();
        let rev = w.product(&w.adjoint(&b).unwrap(), &w.adjoint(&a).unwrap()).unwrap();
        prop_assert!(adj.distance(&rev).unwrap() < 1e-10);
    }

    #[test]
    fn translation_has_period_n(n in 2usize..=12, j in 0usize..12) {
        let w = WeylAlgebra::new(n).unwrap();
        let start = w.idempotent_x(j % n);
        let mut cur = start.clone();
        for _ in 0..n {
            cur = w.translate_idempotent(&cur).unwrap();
        }
        prop_assert!(cur.distance(&start).unwrap() < 1e-12);
    }
}
