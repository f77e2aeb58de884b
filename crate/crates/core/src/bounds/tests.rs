use super::*;
use crate::classes::ClassSpec;
use crate::coeff::Exact;
use crate::logcoeff::{gamma_from_beta, BetaDelta};
use crate::series::Series;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn p(n: i64, d: i64) -> Param {
    Param::exact_ratio(n, d)
}

#[test]
fn a_n_alpha_examples() {
    for &a in &[0.1, 0.5, 0.9, 1.0] {
        assert!((a_n_alpha(1, a) - 2.0 * a).abs() < 1e-15);
    }
    for n in 1..=20 {
        assert!((a_n_alpha(n, 1.0) - 2.0).abs() < 1e-9, "n = {n}");
    }
    assert!((a_n_alpha(2, 0.5) - 0.5).abs() < 1e-15);
}

#[test]
fn a_n_recurrence_matches_finite_sum() {
    for &a in &[0.25, 0.5, 0.75, 1.0] {
        let seq = a_n_alpha_sequence(a, 25);
        for n in 1..=25 {
            // the finite sum loses about 1e-7 to cancellation by n = 25
            assert!((seq[n - 1] - a_n_alpha(n, a)).abs() < 1e-6, "alpha {a}, n {n}");
        }
    }
}

#[test]
fn a_n_matches_series_oracle() {
    // ((1+z)/(1-z))^{1/2} via the exact series pow
    let order = 12;
    let base = Series::<Exact>::from_fn(order, |k| if k == 0 { r(1, 1) } else { r(2, 1) });
    let h = base.pow(&crate::coeff::Exponent::Rational(r(1, 2))).unwrap();
    for n in 1..=order {
        let want = h.coeff(n).to_f64().unwrap();
        assert!((a_n_alpha(n, 0.5) - want).abs() < 1e-12);
    }
}

#[test]
fn gamma_examples() {
    let f3 = ClassSpec::f(3).unwrap();
    let b = gamma_bound(&f3, 2);
    assert_eq!(b.exact, Some(r(7, 16)));
    assert!(b.sharp && b.applicable && b.is_proven());

    let b = gamma_bound(&f3, 4);
    let want = (5.0 + 9.5 * (76.0f64 / 303.0).sqrt()) / 40.0;
    assert!((b.value.unwrap() - want).abs() < 1e-14);
    assert!((want - 0.243945).abs() < 1e-6);
    assert!(!b.sharp);
    assert_eq!(b.branch, Some("D9"));

    let g1 = ClassSpec::g(1).unwrap();
    let b = gamma_bound(&g1, 3);
    assert_eq!(b.exact, Some(r(1, 24)));
    assert!(b.sharp);

    let star = ClassSpec::janowski(1, -1).unwrap();
    assert_eq!(gamma_bound(&star, 7).exact, Some(r(1, 7)));
}

#[test]
fn f3_gamma5_closed_form() {
    let b = gamma_bound(&ClassSpec::f(3).unwrap(), 5);
    let want = (69.0 / 8.0 + 33.0 / 4.0 * (22.0f64 / 83.0).sqrt()) / 60.0;
    assert!((b.value.unwrap() - want).abs() < 1e-14);
}

#[test]
fn f_low_index_bounds_match_beta_identity() {
    for c in [r(1, 2), r(1, 1), r(2, 1), r(3, 1), r(7, 3)] {
        let bd = BetaDelta {
            beta: vec![c.clone(); 5],
            delta: Vec::new(),
        };
        let g = gamma_from_beta(&bd).unwrap();
        let spec = ClassSpec::f(Param::from_rational(c.clone())).unwrap();
        for n in 1..=3 {
            assert_eq!(gamma_bound(&spec, n).exact.as_ref(), Some(&g[n - 1]), "c = {c}, n = {n}");
        }
    }
}

#[test]
fn g_bounds_are_labelled() {
    let g = ClassSpec::g(p(1, 2)).unwrap();
    for n in 1..=3 {
        let b = gamma_bound(&g, n);
        assert_eq!(b.exact, Some(r(1, 4 * n as i64 * (n as i64 + 1))));
        assert!(b.is_proven());
    }
    let all = gamma_bounds(&g, 5);
    assert_eq!(all.len(), 2);
    assert_eq!(all[0].exact, Some(r(1, 30)));
    assert!(all[0].is_proven());
    assert_eq!(all[1].exact, Some(r(1, 120)));
    assert_eq!(all[1].status, BoundStatus::Conjectural);
}

#[test]
fn f3_conjecture_is_separate() {
    let all = gamma_bounds(&ClassSpec::f(3).unwrap(), 7);
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].status, BoundStatus::Conjectural);
    assert_eq!(all[0].exact, Some(r(255, 7 * 256)));
    let all = gamma_bounds(&ClassSpec::f(2).unwrap(), 7);
    assert!(!all[0].applicable);
}

#[test]
fn gap_intervals_are_inapplicable() {
    let b = gamma_bound(&ClassSpec::f(Param::real(2.65)).unwrap(), 4);
    assert!(!b.applicable);
    assert!(b.reason.as_ref().unwrap().contains("(2.61818, 2.71569)"));
    assert_eq!(b.alternatives.len(), 2);
    let b = gamma_bound(&ClassSpec::f(Param::real(1.33)).unwrap(), 5);
    assert!(!b.applicable);
    assert!(b.reason.as_ref().unwrap().contains("(1.31148, 1.35541)"));
    assert!(!i_envelope(&Param::real(2.7), Envelope::I2).applicable);
    assert!(!i_envelope(&Param::real(1.34), Envelope::I3).applicable);
}

#[test]
fn polynomial_branches_are_exact_at_thresholds() {
    let c = f4_poly_max();
    let b = gamma_bound(&ClassSpec::f(Param::from_rational(c.clone())).unwrap(), 4);
    let want = (c.clone() + c.clone() * &c / r(18, 1) * (r(13, 1) + c.clone() / r(2, 1) - c.clone() * &c / r(8, 1)))
        / r(40, 1);
    assert_eq!(b.exact, Some(want));
    assert_eq!(b.branch, Some("D6"));
}

#[test]
fn envelope_examples() {
    let b = i_envelope(&Param::from(3), Envelope::I3);
    assert!((b.value.unwrap() - 2.2 * (22.0f64 / 83.0).sqrt()).abs() < 1e-14);
    assert!((b.value.unwrap() - 1.1325).abs() < 5e-4);
    let b = i_envelope(&Param::from(3), Envelope::I2);
    assert!((b.value.unwrap() - 19.0 / 9.0 * (76.0f64 / 303.0).sqrt()).abs() < 1e-14);
    let b = i_envelope(&Param::from(2), Envelope::I2);
    assert_eq!(b.exact, Some(r(19, 18)));
    assert_eq!(b.branch, Some("D6"));
}

#[test]
fn envelope_is_the_ps_value() {
    for &(c, which) in &[(2.8, Envelope::I2), (3.0, Envelope::I2), (1.4, Envelope::I3), (2.5, Envelope::I3)] {
        let (mu, u) = which.mu_upsilon(c);
        let ps = ps_phi(mu, u).unwrap();
        assert_eq!(ps.region, PsRegion::D9);
        let e = i_envelope(&Param::real(c), which).value.unwrap();
        assert!((ps.value - e).abs() < 1e-12);
    }
    for &(c, which) in &[(0.5, Envelope::I2), (2.0, Envelope::I2), (1.0, Envelope::I3)] {
        let (mu, u) = which.mu_upsilon(c);
        let ps = ps_phi(mu, u).unwrap();
        let e = i_envelope(&Param::real(c), which).value.unwrap();
        assert!((ps.value - e).abs() < 1e-12, "c = {c}: {} vs {e}", ps.value);
    }
}

/// Root of `upsilon = 2|mu|(|mu|+1)/(mu^2+2|mu|+4)` along the c-curve, by bisection.
fn d9_edge(which: Envelope) -> f64 {
    let g = |c: f64| {
        let (mu, u) = which.mu_upsilon(c);
        u - 2.0 * mu * (mu + 1.0) / (mu * mu + 2.0 * mu + 4.0)
    };
    let (mut lo, mut hi) = (1.0, 3.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(lo).signum() == g(mid).signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn decimal_thresholds_round_the_d9_edge() {
    assert!((d9_edge(Envelope::I2) - F4_I2_MIN).abs() < 1e-5);
    assert!((d9_edge(Envelope::I3) - F5_I3_MIN).abs() < 1e-5);
}

#[test]
fn energy_examples() {
    let j = ClassSpec::janowski(1, p(-1, 2)).unwrap();
    let b = energy_bound(&j, Weight::Ones);
    assert!((b.value.unwrap() - 2.25 * 0.267_652_639_082_733).abs() < 1e-13);

    let s = ClassSpec::spiral(Param::from(0), Param::from(0)).unwrap();
    let b = energy_bound(&s, Weight::Ones);
    assert!((b.value.unwrap() - PI * PI / 6.0).abs() < 1e-15);

    let j0 = ClassSpec::janowski(1, 0).unwrap();
    assert_eq!(energy_bound(&j0, Weight::Ones).exact, Some(r(1, 4)));
}

#[test]
fn energy_hypothesis_gates() {
    let j = ClassSpec::janowski(1, -1).unwrap();
    assert!(!energy_bound(&j, Weight::NSquared).applicable);
    assert!(!energy_bound(&j, Weight::PowT(2.5)).applicable);
    assert_eq!(energy_bound(&j, Weight::PowT(1.0)).value, Some(f64::INFINITY));
    assert!(!energy_bound(&ClassSpec::g(1).unwrap(), Weight::Ones).applicable);
    assert!(energy_bound(&ClassSpec::g(1).unwrap(), Weight::RothPn).applicable);
}

#[test]
fn starlike_energy_with_fractional_weight() {
    // ((A-B)/2B)^2 = 1 and sum (n+1)^{1/2}/n^2, oracle by long direct sum plus integral tail
    let j = ClassSpec::janowski(1, -1).unwrap();
    let v = energy_bound(&j, Weight::PowT(0.5)).value.unwrap();
    let mut s = 0.0;
    let m = 2_000_000u64;
    for n in (1..=m).rev() {
        let nf = n as f64;
        s += (nf + 1.0).sqrt() / (nf * nf);
    }
    s += 2.0 / (m as f64).sqrt();
    assert!((v - s).abs() < 1e-8, "{v} vs {s}");
}

#[test]
fn janowski_weighted_reduces_to_dilog_at_t0() {
    for &b in &[-0.9, -0.5, -0.1] {
        let spec = ClassSpec::janowski(Param::real(0.5), Param::real(b)).unwrap();
        let w = energy_bound(&spec, Weight::PowT(0.0)).value.unwrap();
        let d = energy_bound(&spec, Weight::Ones).value.unwrap();
        assert!((w - d).abs() < 1e-13);
    }
}

#[test]
fn janowski_energy_monotone_in_b() {
    // fixed A - B = 1
    let mut prev = 0.0;
    for k in 1..10 {
        let b = -0.1 * k as f64;
        let spec = ClassSpec::janowski(Param::real(1.0 + b), Param::real(b)).unwrap();
        let v = energy_bound(&spec, Weight::Ones).value.unwrap();
        assert!(v > prev);
        prev = v;
    }
}

#[test]
fn strongly_starlike_energy_limits() {
    // alpha = 1 gives the Koebe energy pi^2/6
    assert!((strongly_starlike_energy(1.0) - PI * PI / 6.0).abs() < 1e-12);
    // alpha = 1/2 against a short direct sum with a generous tail
    let seq = a_n_alpha_sequence(0.5, 200);
    let head: f64 = seq.iter().enumerate().map(|(i, a)| a * a / ((i + 1) as f64).powi(2)).sum();
    let v = strongly_starlike_energy(0.5);
    assert!(v > head / 4.0 && v - head / 4.0 < 1e-5);
}

#[test]
fn f3_energy_constant_value() {
    assert!((f3_energy_constant() - 1.129_606_700_153_9).abs() < 1e-12);
    let b = energy_bound(&ClassSpec::f(3).unwrap(), Weight::Ones);
    assert_eq!(b.status, BoundStatus::Conjectural);
}

#[test]
fn complex_a_is_outside_hypothesis() {
    let spec = ClassSpec::new(ClassKind::Janowski {
        a: Param::from(0),
        a_imag: Some(Param::real(0.5)),
        b: Param::from(-1),
    })
    .unwrap();
    let b = gamma_bound(&spec, 1);
    assert!(!b.applicable);
    assert!(b.reason.unwrap().contains("outside theorem hypothesis"));
}

#[test]
fn csv_table_has_fixed_columns() {
    let rows = bound_table(&ClassSpec::f(3).unwrap(), 5);
    let mut buf = Vec::new();
    write_bound_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("class,params,n,bound,sharp,applicable,citation"));
    assert!(text.contains("7/16"));
}

#[test]
fn janowski_partial_bound() {
    let spec = ClassSpec::janowski(1, p(-1, 2)).unwrap();
    let v = janowski_n2_partial_bound(&spec, 2).unwrap();
    assert!((v - 2.25 * (0.25 + 0.0625)).abs() < 1e-15);
    let spec = ClassSpec::janowski(p(1, 2), 0).unwrap();
    assert_eq!(janowski_n2_partial_bound(&spec, 9), Some(0.0625));
}
