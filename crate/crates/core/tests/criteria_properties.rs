use std::f64::consts::PI;
use std::sync::OnceLock;

use proptest::prelude::*;
use zeta_criteria::criteria::{
    double_integral_kernel, evaluate, full_equality, full_equality_from, gamma_alpha, gamma_from_double_pole_limit,
    lhs_value, rhs_value, zero_contribution, CriterionKind, CriterionResult, CriterionSpec, HypotheticalZero,
};
use zeta_criteria::zeros::{find_zeros_up_to, parse_zero_table, ZeroTable};
use zeta_criteria::zeta::EULER_GAMMA;
use zeta_criteria::Error;

fn table() -> &'static ZeroTable {
    static T: OnceLock<ZeroTable> = OnceLock::new();
    T.get_or_init(|| find_zeros_up_to(1000.0, 1e-10).unwrap())
}

fn base() -> &'static CriterionResult {
    static R: OnceLock<CriterionResult> = OnceLock::new();
    R.get_or_init(|| evaluate(&CriterionSpec::double_pole(0.5, 1.5).with_t_max(300.0), table()).unwrap())
}

#[test]
fn double_pole_contributions_are_positive_on_a_grid() {
    for a in [0.3, 0.5, 1.5, 3f64.sqrt() * 14.0] {
        for b in [0.5, 0.7] {
            let spec = CriterionSpec::double_pole(b, a);
            for i in 1..100 {
                let sigma = b + (1.0 - b) * f64::from(i) / 100.0;
                if sigma <= 0.5 || sigma >= 1.0 {
                    continue;
                }
                for j in 0..100 {
                    let t = 14.0 * (1e4f64 / 14.0).powf(f64::from(j) / 99.0);
                    let z = HypotheticalZero::new(sigma, t, 1).unwrap();
                    let c = zero_contribution(&spec, &z).unwrap();
                    assert!(c > 0.0, "a={a} b={b} σ={sigma} t={t}: {c}");
                }
            }
        }
    }
}

#[test]
fn line_vs_axis_contributions_share_one_sign() {
    let spec = CriterionSpec::line_vs_axis();
    for i in 1..50 {
        for j in 0..50 {
            let sigma = 0.5 + 0.5 * f64::from(i) / 50.0;
            let t = 1.0 + 100.0 * f64::from(j);
            let c = zero_contribution(&spec, &HypotheticalZero::new(sigma, t, 1).unwrap()).unwrap();
            assert!(c < 0.0);
        }
    }
}

#[test]
fn contributions_scale_with_order() {
    let spec = CriterionSpec::two_pole(0.5, 1.5, 3.5);
    let one = zero_contribution(&spec, &HypotheticalZero::new(0.7, 30.0, 1).unwrap()).unwrap();
    let three = zero_contribution(&spec, &HypotheticalZero::new(0.7, 30.0, 3).unwrap()).unwrap();
    assert!((three - 3.0 * one).abs() <= 1e-15 * three.abs());
}

#[test]
fn unsupported_contributions_are_refused() {
    let z = HypotheticalZero::new(0.7, 30.0, 1).unwrap();
    for spec in [CriterionSpec::gamma_alpha(0.1), CriterionSpec::double_integral()] {
        assert!(matches!(zero_contribution(&spec, &z), Err(Error::SpecViolation { .. })));
    }
    let left = HypotheticalZero::new(0.6, 30.0, 1).unwrap();
    assert!(zero_contribution(&CriterionSpec::double_pole(0.7, 1.0), &left).is_err());
    assert!(HypotheticalZero::new(0.5, 30.0, 1).is_err());
    assert!(HypotheticalZero::new(0.7, -1.0, 1).is_err());
    assert!(HypotheticalZero::new(0.7, 1.0, 0).is_err());
}

#[test]
fn double_integral_kernel_is_a_true_derivative() {
    let g = |t: f64| t / ((2.25 + t * t) * (0.25 + t * t));
    let wrong_sign = |t: f64| {
        let p = (2.25 + t * t) * (0.25 + t * t);
        (t.powi(4) + t * t / 2.0 + 0.5625) / (p * p)
    };
    let t = 2.0;
    let h = 1e-5;
    let fd = (g(t + h) - g(t - h)) / (2.0 * h);
    assert!((fd - double_integral_kernel(t)).abs() < 1e-9);
    assert!((fd - wrong_sign(t)).abs() > 1e-3);
}

#[test]
fn named_criteria_expand() {
    let eq3 = CriterionSpec::named("eq3").unwrap();
    assert_eq!((eq3.kind, eq3.b, eq3.c, eq3.d), (CriterionKind::TwoPole, 0.5, 1.5, 3.5));
    assert_eq!(CriterionSpec::named("eq6").unwrap().kind, CriterionKind::TwoPoleLimit);
    assert_eq!(CriterionSpec::named("eq10").unwrap().kind, CriterionKind::DoublePoleLimit);
    assert_eq!(CriterionSpec::named("eq14").unwrap().t_max, 5000.0);
    assert_eq!(CriterionSpec::named("eq16").unwrap().kind, CriterionKind::Volchkov);
    assert_eq!(CriterionSpec::named("eq17").unwrap().kind, CriterionKind::DoubleIntegral);
    assert!(CriterionSpec::named("eq99").is_none());
    for k in CriterionKind::ALL {
        assert_eq!(CriterionKind::from_cli_name(k.cli_name()), Some(k));
    }
}

#[test]
fn closed_forms_agree_across_families() {
    let limit = rhs_value(&CriterionSpec::double_pole_limit(0.5)).unwrap();
    let volchkov = rhs_value(&CriterionSpec::volchkov()).unwrap();
    assert_eq!(limit, volchkov);
    assert!((volchkov - PI / 2.0 * (EULER_GAMMA - 3.0)).abs() < 1e-15);
    assert!(rhs_value(&CriterionSpec::line_vs_axis()).is_err());
}

#[test]
fn gamma_at_zero_alpha_is_the_double_pole_limit_estimate() {
    let spec = CriterionSpec::double_pole_limit(0.5);
    let lhs = lhs_value(&spec, table()).unwrap().value;
    let via_limit = gamma_from_double_pole_limit(0.5, lhs);
    let via_sweep = gamma_alpha(0.0, 1000.0, spec.tol, table()).unwrap();
    assert!((via_limit - via_sweep).abs() < 1e-12);
    assert!((via_sweep - EULER_GAMMA).abs() < 1e-6);
}

#[test]
fn off_half_line_criterion_holds() {
    let spec = CriterionSpec::two_pole(0.6, 1.0, 2.5).with_t_max(300.0);
    let r = evaluate(&spec, table()).unwrap();
    assert!(r.passes());
    assert!(r.residual.abs() < 1e-7, "{}", r.residual);
}

#[test]
fn short_table_is_rejected() {
    let short = parse_zero_table("14.134725141734693790\n21.022039638771554993\n").unwrap();
    let r = evaluate(&CriterionSpec::named("eq3").unwrap(), &short);
    assert!(matches!(r, Err(Error::InsufficientZeroTable { .. })));
}

#[test]
fn full_equality_with_no_zeros_is_evaluate() {
    let spec = CriterionSpec::double_pole(0.5, 1.5).with_t_max(300.0);
    let r = full_equality(&spec, table(), &[]).unwrap();
    assert_eq!(&r, base());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjusted_residual_is_invariant(
        zs in prop::collection::vec((0.51f64..0.99, 15.0f64..900.0, 1u32..4), 1..6)
    ) {
        let hypo: Vec<_> = zs.iter().map(|&(s, t, n)| HypotheticalZero::new(s, t, n).unwrap()).collect();
        let b = base();
        let r = full_equality_from(b, &hypo).unwrap();
        let total: f64 = hypo.iter().map(|z| zero_contribution(&b.spec, z).unwrap()).sum();
        prop_assert!((r.adjusted_residual - b.residual).abs() <= 1e-12);
        prop_assert!((r.residual - b.residual - total).abs() <= 1e-12);
        prop_assert!(r.injected > 0.0);
    }
}
