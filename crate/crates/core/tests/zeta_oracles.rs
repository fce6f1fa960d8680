//! The zeta engine against independent oracles: an alternating series with
//! Borwein acceleration, the functional equation, exact Gamma identities and
//! the asymptotic expansion of the Riemann–Siegel theta function.

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use zeta_criteria::arg::counting_n_integer;
use zeta_criteria::zeta::{
    hardy_z, log_abs_zeta, log_deriv_zeta, log_gamma, riemann_siegel_theta, zeta, zeta_real, ComplexPoint,
};

fn z(s: Complex64, tol: f64) -> Complex64 {
    zeta(ComplexPoint::try_from(s).unwrap(), tol).unwrap().value
}

/// `ζ(s) = η(s) / (1 - 2^{1-s})` with `η` summed by Borwein's algorithm.
fn eta_oracle(s: Complex64) -> Complex64 {
    let n = 64usize;
    let mut d = vec![0.0f64; n + 1];
    let mut term = 1.0f64 / n as f64;
    let mut acc = term;
    d[0] = n as f64 * acc;
    for (i, di) in d.iter_mut().enumerate().skip(1) {
        let (fi, fn_) = (i as f64, n as f64);
        term *= (fn_ + fi - 1.0) * 4.0 * (fn_ - fi + 1.0) / ((2.0 * fi - 1.0) * (2.0 * fi));
        acc += term;
        *di = fn_ * acc;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let pow = (-s * ((k + 1) as f64).ln()).exp();
        sum += sign * (d[k] - d[n]) * pow;
    }
    let eta = -sum / d[n];
    let two = Complex64::new(2.0, 0.0);
    eta / (Complex64::new(1.0, 0.0) - two.powc(Complex64::new(1.0, 0.0) - s))
}

#[test]
fn classical_values() {
    assert!((zeta_real(3.0).unwrap() - 1.202_056_903_159_594_3).abs() < 1e-15);
    assert!((zeta_real(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
    assert!((zeta_real(0.0).unwrap() + 0.5).abs() < 1e-14);
    assert!((zeta_real(-1.0).unwrap() + 1.0 / 12.0).abs() < 1e-14);
    let ld = log_deriv_zeta(ComplexPoint::real(2.0).unwrap(), 1e-13).unwrap().value.re;
    // ζ'(2)/ζ(2) = γ + ln 2π - 12 ln A
    let glaisher = 1.282_427_129_100_622_6_f64;
    let expected = 0.577_215_664_901_532_9 + (2.0 * PI).ln() - 12.0 * glaisher.ln();
    assert!((ld - expected).abs() < 1e-13, "{ld} vs {expected}");
}

#[test]
fn alternating_series_oracle() {
    for (s, t) in [(0.5, 3.0), (0.5, 14.134_725), (0.7, 25.0), (2.5, -7.0), (0.1, 40.0), (-0.5, 10.0)] {
        let s = Complex64::new(s, t);
        let got = z(s, 1e-11);
        let want = eta_oracle(s);
        assert!((got - want).norm() < 1e-11 * (1.0 + want.norm()), "{s}: {got} vs {want}");
    }
}

#[test]
fn functional_equation() {
    for s in [Complex64::new(-1.0, 5.0), Complex64::new(0.3, 20.0), Complex64::new(0.2, 100.0)] {
        let one = Complex64::new(1.0, 0.0);
        let gamma = log_gamma(ComplexPoint::try_from(one - s).unwrap()).unwrap().exp();
        let rhs = Complex64::new(2.0, 0.0).powc(s)
            * Complex64::new(PI, 0.0).powc(s - one)
            * (PI * s / 2.0).sin()
            * gamma
            * z(one - s, 1e-11);
        let lhs = z(s, 1e-11);
        assert!((lhs - rhs).norm() < 1e-11 * (1.0 + lhs.norm()), "{s}: {lhs} vs {rhs}");
    }
}

#[test]
fn gamma_identities() {
    // |Γ(1/2+it)|² = π / cosh πt and |Γ(1+it)|² = πt / sinh πt
    for t in [0.1, 1.0, 3.7, 10.0, 50.0] {
        let a = log_gamma(ComplexPoint::new(0.5, t).unwrap()).unwrap().re;
        assert!((2.0 * a - (PI / (PI * t).cosh()).ln()).abs() < 1e-12 * (1.0 + PI * t), "{t}");
        let b = log_gamma(ComplexPoint::new(1.0, t).unwrap()).unwrap().re;
        assert!((2.0 * b - (PI * t / (PI * t).sinh()).ln()).abs() < 1e-12 * (1.0 + PI * t), "{t}");
    }
    let mut fact = 1.0f64;
    for n in 1..20 {
        let g = log_gamma(ComplexPoint::real(n as f64).unwrap()).unwrap();
        assert!((g.re - fact.ln()).abs() < 1e-13 * (1.0 + fact.ln()), "{n}");
        assert_eq!(g.im, 0.0);
        fact *= n as f64;
    }
}

#[test]
fn theta_matches_asymptotic_series() {
    for t in [200.0, 500.0, 5000.0] {
        let t: f64 = t;
        let series = t / 2.0 * (t / (2.0 * PI)).ln() - t / 2.0 - PI / 8.0
            + 1.0 / (48.0 * t)
            + 7.0 / (5760.0 * t.powi(3))
            + 31.0 / (80640.0 * t.powi(5));
        let got = riemann_siegel_theta(t).unwrap();
        assert!((got - series).abs() < 1e-12 * t, "{t}: {got} vs {series}");
    }
}

#[test]
fn theta_turns_near_six() {
    // θ decreases until about t = 6.29 and increases after.
    let h = 1e-4;
    let slope = |t: f64| (riemann_siegel_theta(t + h).unwrap() - riemann_siegel_theta(t - h).unwrap()) / (2.0 * h);
    assert!(slope(6.27) < 0.0 && slope(6.31) > 0.0);
}

#[test]
fn hardy_z_is_real_on_a_grid() {
    let mut t = 1.0;
    while t < 1000.0 {
        hardy_z(t, 1e-9).unwrap();
        t += 7.31;
    }
}

#[test]
fn counting_function_small_heights() {
    assert_eq!(counting_n_integer(10.0).unwrap(), 0);
    assert_eq!(counting_n_integer(15.0).unwrap(), 1);
    assert_eq!(counting_n_integer(100.0).unwrap(), 29);
    assert_eq!(counting_n_integer(1000.0).unwrap(), 649);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schwarz_reflection(s in -4.0f64..4.0, t in 0.5f64..300.0) {
        // left of the line |ζ| grows like t^{1/2-σ}; ask for relative accuracy
        let tol = 1e-12 * t.powf(0.5 - s).max(1.0);
        let a = z(Complex64::new(s, t), tol);
        let b = z(Complex64::new(s, -t), tol);
        prop_assert!((a - b.conj()).norm() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn log_abs_agrees_with_value(s in 0.5f64..3.0, t in 1.0f64..200.0) {
        let p = ComplexPoint::new(s, t).unwrap();
        let v = z(Complex64::new(s, t), 1e-12);
        if let Ok(l) = log_abs_zeta(p, 1e-10) {
            prop_assert!((l - v.norm().ln()).abs() < 1e-10);
        }
    }

    #[test]
    fn log_derivative_matches_difference_quotient(s in 0.6f64..3.0, t in 1.0f64..100.0) {
        let c = Complex64::new(s, t);
        let h = 1e-5;
        let fd = (z(c + h, 1e-12) - z(c - h, 1e-12)) / (2.0 * h) / z(c, 1e-12);
        let ld = log_deriv_zeta(ComplexPoint::try_from(c).unwrap(), 1e-10).unwrap().value;
        prop_assert!((fd - ld).norm() < 1e-6 * (1.0 + ld.norm()));
    }
}
