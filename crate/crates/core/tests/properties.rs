use logcoeff::classes::member_from_schwarz;
use logcoeff::logcoeff::{gamma_from_beta, log_coefficients, pre_schwarzian_coeffs};
use logcoeff::{ClassSpec, Coeff, Exact, Exponent, Float, Param, SchwarzFn, Series};
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use std::f64::consts::PI;

const ORDER: usize = 7;

fn rational() -> impl Strategy<Value = Exact> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn series_with_constant(c0: i64) -> impl Strategy<Value = Series<Exact>> {
    prop::collection::vec(rational(), ORDER).prop_map(move |tail| {
        let mut coeffs = vec![Exact::from_i64(c0)];
        coeffs.extend(tail);
        Series::new(coeffs).unwrap()
    })
}

fn any_series() -> impl Strategy<Value = Series<Exact>> {
    prop::collection::vec(rational(), ORDER + 1).prop_map(|c| Series::new(c).unwrap())
}

fn disk_point() -> impl Strategy<Value = Complex64> {
    (0.0f64..0.98, -PI..PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_inverts_log(f in series_with_constant(1), g in series_with_constant(0)) {
        prop_assert_eq!(f.log_unit().unwrap().exp_zero().unwrap(), f.clone());
        prop_assert_eq!(g.exp_zero().unwrap().log_unit().unwrap(), g);
    }

    #[test]
    fn product_is_commutative_and_associative(a in any_series(), b in any_series(), c in any_series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn powers_add(f in series_with_constant(1), p in -4i64..=4, q in -4i64..=4, d in 1i64..=3) {
        let lhs = f.pow(&Exponent::ratio(p, d)).unwrap().mul(&f.pow(&Exponent::ratio(q, d)).unwrap()).unwrap();
        prop_assert_eq!(lhs, f.pow(&Exponent::ratio(p + q, d)).unwrap());
    }

    #[test]
    fn composition_is_associative(a in any_series(), b in series_with_constant(0), c in series_with_constant(0)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn division_undoes_product(a in any_series(), b in series_with_constant(1)) {
        prop_assert_eq!(a.mul(&b).unwrap().div(&b).unwrap(), a);
    }

    #[test]
    fn schur_refit_recovers_parameters(params in prop::collection::vec(disk_point(), 1..5)) {
        let params: Vec<Float> = params;
        let phi = SchwarzFn::<Float>::from_schur(&params, 12).unwrap();
        let refit = SchwarzFn::from_coefficients(&phi.series().coeffs()[1..]).unwrap();
        for (a, b) in params.iter().zip(refit.schur_params()) {
            prop_assert!((a - b).norm() < 1e-7, "{a} vs {b}");
        }
        for b in &refit.schur_params()[params.len()..] {
            prop_assert!(b.norm() < 1e-7);
        }
    }

    #[test]
    fn gamma_routes_agree_on_members(
        c in 1i64..=24,
        params in prop::collection::vec(-8i64..=8, 1..4),
        g_class in any::<bool>(),
    ) {
        let spec = if g_class {
            ClassSpec::g(Param::exact_ratio(c.min(8), 8)).unwrap()
        } else {
            ClassSpec::f(Param::exact_ratio(c, 8)).unwrap()
        };
        let params: Vec<Exact> = params.into_iter().map(|k| Exact::ratio(k, 8)).collect();
        let phi = SchwarzFn::<Exact>::from_schur(&params, 6).unwrap();
        let f = member_from_schwarz(&spec, &phi, 6).unwrap();
        let direct = log_coefficients(&f, 5).unwrap();
        let via = gamma_from_beta(&pre_schwarzian_coeffs(&f, 5).unwrap()).unwrap();
        prop_assert_eq!(direct.values(), &via[..]);
    }

    #[test]
    fn rotation_preserves_gamma_moduli(params in prop::collection::vec(disk_point(), 1..4), theta in -3.0f64..3.0) {
        let spec = ClassSpec::f(3).unwrap();
        let phi = SchwarzFn::<Float>::from_schur(&params, 8).unwrap();
        let a = log_coefficients(&member_from_schwarz(&spec, &phi, 8).unwrap(), 7).unwrap();
        let b = log_coefficients(&member_from_schwarz(&spec, &phi.rotated(theta), 8).unwrap(), 7).unwrap();
        for (x, y) in a.moduli().iter().zip(b.moduli()) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }
}
