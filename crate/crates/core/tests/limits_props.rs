use ene::algebra::{Gaussian, Poly, RationalFunction};
use ene::limits::{chordal_distance, euler_limit_error, hausdorff_distance, SampleRegion, SpherePoint};
use ene::transalg::{transalg_make, TransalgebraicFunction};
use num_complex::Complex64;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = SpherePoint> {
    prop_oneof![
        1 => Just(SpherePoint::Infinity),
        9 => (-50.0f64..50.0, -50.0f64..50.0).prop_map(|(a, b)| SpherePoint::Finite(Complex64::new(a, b))),
    ]
}

fn stock() -> TransalgebraicFunction {
    transalg_make(
        RationalFunction::from_poly(Poly::new(vec![Gaussian::from_int(1), Gaussian::ratio(-1, 2)])),
        RationalFunction::new(Poly::from_ints(&[1]), Poly::from_ints(&[1, -1])).unwrap(),
    )
    .unwrap()
}

#[test]
fn exponential_error_matches_asymptotics() {
    // e^z − (1 + z/k)^k ≈ e^z·z²/(2k); on the unit circle the sup is at z = 1
    let f = TransalgebraicFunction::exponential(RationalFunction::z());
    let region = SampleRegion::circle(Complex64::new(0.0, 0.0), 1.0, 256);
    for k in [500u64, 1000, 2000] {
        let err = euler_limit_error(&f, k, &region).unwrap();
        let model = std::f64::consts::E / (2.0 * k as f64);
        assert!((err / model - 1.0).abs() < 0.01, "k = {k}: {err} vs {model}");
    }
}

#[test]
fn error_is_independent_of_thread_count() {
    let f = stock();
    let region = SampleRegion::circle(Complex64::new(0.0, 0.0), 0.4, 200).with_circle(Complex64::new(0.0, 0.0), 3.0, 200);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| euler_limit_error(&f, 128, &region).unwrap())
    };
    let one = run(1);
    assert_eq!(one.to_bits(), run(4).to_bits());
    assert_eq!(one.to_bits(), run(7).to_bits());
}

proptest! {
    #[test]
    fn chordal_is_a_bounded_metric(a in point(), b in point(), c in point()) {
        let (ab, ba) = (chordal_distance(a, b), chordal_distance(b, a));
        prop_assert_eq!(ab, ba);
        prop_assert!((0.0..=2.0 + 1e-12).contains(&ab));
        prop_assert_eq!(chordal_distance(a, a), 0.0);
        prop_assert!(chordal_distance(a, c) <= ab + chordal_distance(b, c) + 1e-12);
    }

    #[test]
    fn inversion_is_an_isometry(x in -20.0f64..20.0, y in -20.0f64..20.0, u in -20.0f64..20.0, v in -20.0f64..20.0) {
        let (z, w) = (Complex64::new(x, y), Complex64::new(u, v));
        prop_assume!(z.norm() > 1e-3 && w.norm() > 1e-3);
        let d = chordal_distance(SpherePoint::Finite(z), SpherePoint::Finite(w));
        let di = chordal_distance(SpherePoint::Finite(z.inv()), SpherePoint::Finite(w.inv()));
        prop_assert!((d - di).abs() < 1e-9);
        let to_inf = chordal_distance(SpherePoint::Finite(z), SpherePoint::Infinity);
        let to_zero = chordal_distance(SpherePoint::Finite(z.inv()), SpherePoint::Finite(Complex64::new(0.0, 0.0)));
        prop_assert!((to_inf - to_zero).abs() < 1e-9);
    }

    #[test]
    fn hausdorff_is_a_metric(
        a in prop::collection::vec(point(), 1..5),
        b in prop::collection::vec(point(), 1..5),
        c in prop::collection::vec(point(), 1..5),
    ) {
        let d = |x: &[SpherePoint], y: &[SpherePoint]| hausdorff_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert_eq!(d(&a, &a), 0.0);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-12);
    }
}
