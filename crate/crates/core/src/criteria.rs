//! Integral criteria for `arg ζ` and `ln|ζ|`: closed-form right sides,
//! quadrature left sides, residuals, and the shifts that hypothetical zeros
//! off the critical line would cause.
//!
//! Every arg criterion has the shape
//!
//! ```text
//! ∫_0^∞ K(t) arg ζ(b+it) dt = closed form + Σ_{zeros with σ > b} contribution
//! ```
//!
//! The left side is integrated up to `t_max` with all zero ordinates below it
//! as breakpoints, and the omitted tail is bounded separately.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::arg::{CriticalLinePhase, VerticalTrack};
use crate::error::{Error, Result};
use crate::quad::{
    improper_tail_bound_with, try_integrate_adaptive, try_integrate_principal_value, GrowthModel,
    IntegrationResult, KernelSpec, QuadOptions, TailBound,
};
use crate::zeros::ZeroTable;
use crate::zeta::{self, ComplexPoint, EULER_GAMMA};

/// Largest kernel parameter for which no off-line zero is known to interfere.
pub const MAX_KERNEL_PARAM: f64 = 9.4e8;

/// Slack on top of `quad_error + tail_bound` when classifying a residual.
pub const CLASSIFICATION_SLACK: f64 = 1.0e-7;

pub const DEFAULT_TOL: f64 = 1.0e-11;
pub const DEFAULT_T_MAX: f64 = 1000.0;
pub const DEFAULT_T_MAX_LINE_VS_AXIS: f64 = 5000.0;

/// Upper limit of the inner `σ` integral of the double-integral criterion.
pub const SIGMA_MAX: f64 = 60.0;

/// Upper limit of the numerically paired part of the real-axis integral.
const AXIS_SPLIT: f64 = 200.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionKind {
    /// Kernel `t/((c²+t²)(d²+t²))`.
    TwoPole,
    /// Kernel `t/((c²+t²)((1-b)²+t²))`.
    TwoPoleLimit,
    /// Kernel `t/(a²+t²)²`.
    DoublePole,
    /// Kernel `t/((1-b)²+t²)²`.
    DoublePoleLimit,
    /// `(1/π)∫ 2t arg ζ(1/2+it)/(1/4+t²)² dt = γ - 3`.
    Volchkov,
    /// `ln|ζ|` on the critical line against `ln ζ(x)(x-1)` on the real axis.
    LineVsAxis,
    /// `∫ K'(t) ∫ ln|ζ(σ+it)| dσ dt` for the two-pole-limit kernel at `b = 1/2`, `c = 3/2`.
    DoubleIntegral,
    /// Estimate of `γ` from the double-pole-limit kernel at `b = 1/2 + α`.
    GammaAlpha,
}

impl CriterionKind {
    pub const ALL: [CriterionKind; 8] = [
        Self::TwoPole,
        Self::TwoPoleLimit,
        Self::DoublePole,
        Self::DoublePoleLimit,
        Self::Volchkov,
        Self::LineVsAxis,
        Self::DoubleIntegral,
        Self::GammaAlpha,
    ];

    /// Name used on the command line and in reports.
    pub fn cli_name(self) -> &'static str {
        match self {
            Self::TwoPole => "theorem1",
            Self::TwoPoleLimit => "theorem1a",
            Self::DoublePole => "theorem2",
            Self::DoublePoleLimit => "theorem2a",
            Self::Volchkov => "volchkov",
            Self::LineVsAxis => "eq14",
            Self::DoubleIntegral => "eq17",
            Self::GammaAlpha => "gamma-alpha",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.cli_name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionSpec {
    pub kind: CriterionKind,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub a: f64,
    pub alpha: f64,
    pub t_max: f64,
    pub tol: f64,
}

impl CriterionSpec {
    fn base(kind: CriterionKind, b: f64) -> Self {
        let t_max = if kind == CriterionKind::LineVsAxis {
            DEFAULT_T_MAX_LINE_VS_AXIS
        } else {
            DEFAULT_T_MAX
        };
        Self {
            kind,
            b,
            c: 0.0,
            d: 0.0,
            a: 0.0,
            alpha: 0.0,
            t_max,
            tol: DEFAULT_TOL,
        }
    }

    pub fn two_pole(b: f64, c: f64, d: f64) -> Self {
        Self {
            c,
            d,
            ..Self::base(CriterionKind::TwoPole, b)
        }
    }

    pub fn two_pole_limit(b: f64, c: f64) -> Self {
        Self {
            c,
            ..Self::base(CriterionKind::TwoPoleLimit, b)
        }
    }

    pub fn double_pole(b: f64, a: f64) -> Self {
        Self {
            a,
            ..Self::base(CriterionKind::DoublePole, b)
        }
    }

    pub fn double_pole_limit(b: f64) -> Self {
        Self::base(CriterionKind::DoublePoleLimit, b)
    }

    pub fn volchkov() -> Self {
        Self::base(CriterionKind::Volchkov, 0.5)
    }

    pub fn line_vs_axis() -> Self {
        Self::base(CriterionKind::LineVsAxis, 0.5)
    }

    pub fn double_integral() -> Self {
        Self {
            c: 1.5,
            ..Self::base(CriterionKind::DoubleIntegral, 0.5)
        }
    }

    pub fn gamma_alpha(alpha: f64) -> Self {
        Self {
            alpha,
            ..Self::base(CriterionKind::GammaAlpha, 0.5 + alpha)
        }
    }

    pub fn with_t_max(self, t_max: f64) -> Self {
        Self { t_max, ..self }
    }

    pub fn with_tol(self, tol: f64) -> Self {
        Self { tol, ..self }
    }

    /// The named headline equalities: `eq3`, `eq6`, `eq10`, `eq14`, `eq16`, `eq17`.
    pub fn named(name: &str) -> Option<Self> {
        Some(match name {
            "eq3" => Self::two_pole(0.5, 1.5, 3.5),
            "eq6" => Self::two_pole_limit(0.5, 1.5),
            "eq10" => Self::double_pole_limit(0.5),
            "eq14" => Self::line_vs_axis(),
            "eq16" => Self::volchkov(),
            "eq17" => Self::double_integral(),
            _ => return None,
        })
    }

    fn violation(&self, constraint: impl Into<String>) -> Error {
        Error::SpecViolation {
            criterion: self.kind.cli_name(),
            constraint: constraint.into(),
        }
    }

    fn check_b(&self) -> Result<()> {
        if !(self.b >= 0.5 && self.b < 1.0) {
            return Err(self.violation(format!("1/2 ≤ b < 1 (got b = {})", self.b)));
        }
        Ok(())
    }

    fn check_param(&self, name: &str, v: f64) -> Result<()> {
        if !(v > 0.0) || !v.is_finite() {
            return Err(self.violation(format!("{name} > 0 (got {name} = {v})")));
        }
        if v > MAX_KERNEL_PARAM {
            return Err(self.violation(format!("{name} ≤ 9.4e8 (got {name} = {v})")));
        }
        Ok(())
    }

    fn check_not_one(&self, name: &str, v: f64) -> Result<()> {
        if self.b + v == 1.0 {
            return Err(self.violation(format!("b + {name} ≠ 1 (got b = {}, {name} = {v})", self.b)));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        use CriterionKind::*;
        match self.kind {
            TwoPole => {
                self.check_b()?;
                self.check_param("c", self.c)?;
                self.check_param("d", self.d)?;
                if self.c == self.d {
                    return Err(self.violation(format!("c ≠ d (got c = d = {})", self.c)));
                }
                self.check_not_one("c", self.c)?;
                self.check_not_one("d", self.d)?;
            }
            TwoPoleLimit => {
                self.check_b()?;
                self.check_param("c", self.c)?;
                self.check_not_one("c", self.c)?;
            }
            DoublePole => {
                self.check_b()?;
                self.check_param("a", self.a)?;
                if self.a + self.b == 1.0 {
                    return Err(self.violation(format!("a + b ≠ 1 (got a = {}, b = {})", self.a, self.b)));
                }
            }
            DoublePoleLimit => self.check_b()?,
            Volchkov | LineVsAxis | DoubleIntegral => {
                if self.b != 0.5 {
                    return Err(self.violation(format!("b = 1/2 (got b = {})", self.b)));
                }
            }
            GammaAlpha => {
                if !(self.alpha >= 0.0 && self.alpha < 0.5) {
                    return Err(self.violation(format!("0 ≤ alpha < 1/2 (got alpha = {})", self.alpha)));
                }
            }
        }
        if !(self.t_max >= 100.0) || self.t_max > 1.0e5 {
            return Err(self.violation(format!("100 ≤ t_max ≤ 1e5 (got t_max = {})", self.t_max)));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(self.violation(format!("tol > 0 (got tol = {})", self.tol)));
        }
        Ok(())
    }

    /// `1 - b`, the distance from the line to the pole.
    fn e(&self) -> f64 {
        1.0 - self.b
    }

    /// Kernel of the arg integral as `(kernel, KernelSpec)`.
    fn kernel(&self) -> Option<(Kernel, KernelSpec)> {
        use CriterionKind::*;
        let e = self.e();
        Some(match self.kind {
            TwoPole => (Kernel::TwoPole(self.c, self.d), KernelSpec::TwoPole { c: self.c, d: self.d }),
            TwoPoleLimit => (Kernel::TwoPole(self.c, e), KernelSpec::TwoPole { c: self.c, d: e }),
            DoublePole => (Kernel::DoublePole(self.a), KernelSpec::DoublePole { a: self.a }),
            DoublePoleLimit | GammaAlpha => (Kernel::DoublePole(e), KernelSpec::DoublePole { a: e }),
            Volchkov => (
                Kernel::Normalized(0.5),
                KernelSpec::Rational {
                    k: 2.0 / PI,
                    decay: 3.0,
                },
            ),
            LineVsAxis | DoubleIntegral => return None,
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum Kernel {
    TwoPole(f64, f64),
    DoublePole(f64),
    /// `(1/π) 2t/(a²+t²)²`.
    Normalized(f64),
}

impl Kernel {
    fn at(self, t: f64) -> f64 {
        let t2 = t * t;
        match self {
            Self::TwoPole(c, d) => t / ((c * c + t2) * (d * d + t2)),
            Self::DoublePole(a) => {
                let q = a * a + t2;
                t / (q * q)
            }
            Self::Normalized(a) => {
                let q = a * a + t2;
                2.0 * t / (PI * q * q)
            }
        }
    }
}

/// `ln|ζ(x)(x-1)|`, smooth through `x = 1`.
fn pole_product(x: f64) -> Result<f64> {
    zeta::log_zeta_pole_product(x)
}

/// `ζ'/ζ(x)` with a tolerance scaled to its size near the pole.
fn log_deriv_real(x: f64) -> Result<f64> {
    let tol = 1.0e-13 * (1.0 + 1.0 / (x - 1.0).abs());
    Ok(zeta::log_deriv_zeta(ComplexPoint::real(x)?, tol)?.value.re)
}

/// Closed-form right side. For [`CriterionKind::GammaAlpha`] this is `γ`.
pub fn rhs_value(spec: &CriterionSpec) -> Result<f64> {
    use CriterionKind::*;
    spec.validate()?;
    let b = spec.b;
    let e = spec.e();
    Ok(match spec.kind {
        TwoPole => {
            let (c, d) = (spec.c, spec.d);
            // ln|ζ(b+x)(x²-e²)| = ln|ζ(b+x)(b+x-1)| + ln(x+e)
            let upper = pole_product(b + d)? + (d + e).ln();
            let lower = pole_product(b + c)? + (c + e).ln();
            PI / (2.0 * (d * d - c * c)) * (upper - lower + 2.0 * (c / d).ln())
        }
        TwoPoleLimit => {
            let c = spec.c;
            let inner = pole_product(b + c)? + (c + e).ln() + e.ln() - 2f64.ln() - 2.0 * c.ln();
            PI / (2.0 * (c * c - e * e)) * inner
        }
        DoublePole => {
            let a = spec.a;
            // a² - e² = (a+b-1)(a+e), with a+b-1 taken from the same rounded
            // sum that ζ'/ζ sees so the two diverging terms cancel near a = e.
            let x = a + b;
            let ld = log_deriv_real(x)?;
            PI / (4.0 * a) * ld + PI / 2.0 * (1.0 / ((x - 1.0) * (a + e)) - 1.0 / (a * a))
        }
        DoublePoleLimit => PI / (4.0 * e) * (EULER_GAMMA - 3.0 / (2.0 * e)),
        Volchkov => PI / 2.0 * (EULER_GAMMA - 3.0),
        DoubleIntegral => PI / 4.0 * (27.0 / (PI * PI)).ln(),
        GammaAlpha => EULER_GAMMA,
        LineVsAxis => {
            return Err(Error::Domain(
                "the line-vs-axis right side is an integral; use eq14_rhs".into(),
            ))
        }
    })
}

enum Phase<'a> {
    Critical(CriticalLinePhase<'a>),
    Track(VerticalTrack),
}

impl Phase<'_> {
    fn new(b: f64, t_max: f64, zeros: &ZeroTable) -> Result<Phase<'_>> {
        if b == 0.5 {
            Ok(Phase::Critical(CriticalLinePhase::new(zeros.ts(), zeros.height())))
        } else {
            Ok(Phase::Track(VerticalTrack::for_zeta(b, t_max)?))
        }
    }

    fn arg(&self, t: f64) -> Result<f64> {
        match self {
            Phase::Critical(p) => p.arg(t),
            Phase::Track(p) => p.arg(t),
        }
    }
}

fn breakpoints(zeros: &ZeroTable, t_max: f64) -> Vec<f64> {
    zeros.between(0.0, t_max).to_vec()
}

/// Truncated left side `∫_0^{t_max}`. For [`CriterionKind::GammaAlpha`] it
/// is the raw kernel integral, before the affine map to `γ(α)`.
pub fn lhs_value(spec: &CriterionSpec, zeros: &ZeroTable) -> Result<IntegrationResult> {
    spec.validate()?;
    zeros.require(spec.t_max)?;
    match spec.kind {
        CriterionKind::LineVsAxis => eq14_lhs(spec.t_max, spec.tol, zeros),
        CriterionKind::DoubleIntegral => double_integral_lhs(spec.t_max, spec.tol, zeros),
        _ => {
            let (kernel, _) = spec.kernel().expect("arg criteria have a kernel");
            let phase = Phase::new(spec.b, spec.t_max, zeros)?;
            let bps = breakpoints(zeros, spec.t_max);
            try_integrate_adaptive(
                |t| Ok(kernel.at(t) * phase.arg(t)?),
                0.0,
                spec.t_max,
                &bps,
                spec.tol,
                QuadOptions::default(),
            )
        }
    }
}

/// Tail bound matching [`lhs_value`].
pub fn lhs_tail_bound(spec: &CriterionSpec) -> Result<TailBound> {
    spec.validate()?;
    match spec.kind {
        CriterionKind::LineVsAxis => improper_tail_bound_with(
            KernelSpec::DoublePole { a: 0.5 },
            spec.t_max,
            GrowthModel::LOG_MODULUS,
        ),
        CriterionKind::DoubleIntegral => improper_tail_bound_with(
            KernelSpec::Rational { k: 3.01, decay: 4.0 },
            spec.t_max,
            INNER_INTEGRAL_GROWTH,
        ),
        _ => {
            let (_, ks) = spec.kernel().expect("arg criteria have a kernel");
            improper_tail_bound_with(ks, spec.t_max, GrowthModel::ARG)
        }
    }
}

/// Growth of `∫_{1/2}^∞ ln|ζ(σ+it)| dσ`, whose `t`-derivative is
/// `arg ζ(1/2+it)`, so it stays within a constant of `π S_1(t) = O(ln t)`.
const INNER_INTEGRAL_GROWTH: GrowthModel = GrowthModel { a: 10.0, b: 1.0 };

/// `-∫_0^∞ t ln|ζ(1/2+it)(-1/2+it)| / (t²+1/4)² dt` with the `ζ` factor
/// truncated at `t_max`.
///
/// The elementary factor `ln|-1/2+it|` integrates in closed form over the
/// whole half-line to `ln 4 - 1`; only `ln|ζ|` is integrated numerically. Its
/// logarithmic singularities at the zero ordinates are registered as
/// breakpoints and flattened by endpoint clustering.
pub fn eq14_lhs(t_max: f64, tol: f64, zeros: &ZeroTable) -> Result<IntegrationResult> {
    if !(t_max >= 100.0) {
        return Err(Error::Domain(format!("t_max must be at least 100, got {t_max}")));
    }
    zeros.require(t_max)?;
    let bps = breakpoints(zeros, t_max);
    let f = |t: f64| -> Result<f64> {
        let z = zeta::zeta_working(Complex64::new(0.5, t))?.value;
        let q = t * t + 0.25;
        Ok(t * z.norm().max(f64::MIN_POSITIVE).ln() / (q * q))
    };
    let r = try_integrate_adaptive(f, 0.0, t_max, &bps, tol, QuadOptions::clustered())?;
    Ok(IntegrationResult {
        value: 4f64.ln() - 1.0 - r.value,
        ..r
    })
}

/// Principal value of `∫_{1/2}^∞ (x-1/2) ln(ζ(x)(x-1)) / (x²(x-1)²) dx`.
///
/// `[1/2, 200]` is paired about the pole; `[200, ∞)` is mapped onto `(0, 1]`
/// by `x = 200/u`.
pub fn eq14_rhs(tol: f64) -> Result<IntegrationResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let f = |x: f64| -> Result<f64> {
        let w = x * (x - 1.0);
        Ok((x - 0.5) * pole_product(x)? / (w * w))
    };
    let near = try_integrate_principal_value(f, 0.5, AXIS_SPLIT, 1.0, 0.5 * tol)?;
    let far = try_integrate_adaptive(
        |u: f64| {
            let x = AXIS_SPLIT / u;
            Ok(f(x)? * AXIS_SPLIT / (u * u))
        },
        0.0,
        1.0,
        &[],
        0.5 * tol,
        QuadOptions::default(),
    )?;
    Ok(IntegrationResult {
        value: near.value + far.value,
        error_estimate: near.error_estimate + far.error_estimate,
        evaluations: near.evaluations + far.evaluations,
        breakpoints_used: near.breakpoints_used,
    })
}

/// Derivative of `t/((9/4+t²)(1/4+t²))`.
pub fn double_integral_kernel(t: f64) -> f64 {
    let t2 = t * t;
    let p = (2.25 + t2) * (0.25 + t2);
    (-3.0 * t2 * t2 - 2.5 * t2 + 0.5625) / (p * p)
}

/// `∫_{1/2}^{SIGMA_MAX} ln|ζ(σ+it)| dσ`; the omitted part beyond is below 10⁻¹⁷.
pub fn inner_log_integral(t: f64, tol: f64) -> Result<IntegrationResult> {
    let f = |s: f64| -> Result<f64> {
        let z = zeta::zeta_working(Complex64::new(s, t))?.value;
        Ok(z.norm().max(f64::MIN_POSITIVE).ln())
    };
    try_integrate_adaptive(f, 0.5, SIGMA_MAX, &[1.0, 2.0, 8.0], tol, QuadOptions::clustered())
}

fn double_integral_lhs(t_max: f64, tol: f64, zeros: &ZeroTable) -> Result<IntegrationResult> {
    zeros.require(t_max)?;
    let bps = breakpoints(zeros, t_max);
    let inner_tol = (0.01 * tol).max(1.0e-13);
    try_integrate_adaptive(
        |t| Ok(double_integral_kernel(t) * inner_log_integral(t, inner_tol)?.value),
        0.0,
        t_max,
        &bps,
        tol,
        QuadOptions::default(),
    )
}

/// `γ` recovered from the double-pole-limit integral on the line `b`:
/// `(4(1-b)/π)·I + 3/(2(1-b))`.
pub fn gamma_from_double_pole_limit(b: f64, integral: f64) -> f64 {
    let e = 1.0 - b;
    4.0 * e / PI * integral + 3.0 / (2.0 * e)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionResult {
    pub spec: CriterionSpec,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub residual: f64,
    pub quad_error: f64,
    pub tail_bound: f64,
    pub zeros_used: usize,
    /// Sum of hypothetical-zero contributions folded into `lhs`.
    pub injected: f64,
    /// `residual - injected`.
    pub adjusted_residual: f64,
}

impl CriterionResult {
    pub fn bound(&self) -> f64 {
        self.quad_error + self.tail_bound + CLASSIFICATION_SLACK
    }

    /// `|residual| ≤ quad_error + tail_bound + 10⁻⁷`.
    pub fn passes(&self) -> bool {
        self.residual.abs() <= self.bound()
    }
}

/// Both sides of a criterion and their difference.
pub fn evaluate(spec: &CriterionSpec, zeros: &ZeroTable) -> Result<CriterionResult> {
    spec.validate()?;
    zeros.require(spec.t_max)?;
    let tail = lhs_tail_bound(spec)?.bound;
    let zeros_used = zeros.count_up_to(spec.t_max);
    let (lhs, rhs, quad_error, tail_bound) = match spec.kind {
        CriterionKind::LineVsAxis => {
            let l = eq14_lhs(spec.t_max, spec.tol, zeros)?;
            let r = eq14_rhs(spec.tol)?;
            (l.value, r.value, l.error_estimate + r.error_estimate, tail)
        }
        CriterionKind::GammaAlpha => {
            let l = lhs_value(spec, zeros)?;
            let scale = 4.0 * spec.e() / PI;
            (
                gamma_from_double_pole_limit(spec.b, l.value),
                EULER_GAMMA,
                scale * l.error_estimate,
                scale * tail,
            )
        }
        CriterionKind::Volchkov => {
            // Integrated in its own normalization and mapped back to the
            // double-pole-limit scale by π/2.
            let l = lhs_value(spec, zeros)?;
            let scale = PI / 2.0;
            (scale * l.value, rhs_value(spec)?, scale * l.error_estimate, scale * tail)
        }
        _ => {
            let l = lhs_value(spec, zeros)?;
            (l.value, rhs_value(spec)?, l.error_estimate, tail)
        }
    };
    let residual = lhs - rhs;
    Ok(CriterionResult {
        spec: *spec,
        lhs,
        rhs,
        residual,
        quad_error,
        tail_bound,
        zeros_used,
        injected: 0.0,
        adjusted_residual: residual,
    })
}

/// `(1/π)∫ 2t arg/(1/4+t²)²` and `γ - 3`, the Volchkov normalization of a
/// result on the double-pole-limit scale at `b = 1/2`.
pub fn volchkov_normalized(result: &CriterionResult) -> (f64, f64) {
    (2.0 / PI * result.lhs, 2.0 / PI * result.rhs)
}

/// A zero `σ + it` with `1/2 < σ < 1`, used only for sensitivity analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypotheticalZero {
    sigma: f64,
    t: f64,
    n: u32,
}

impl HypotheticalZero {
    pub fn new(sigma: f64, t: f64, n: u32) -> Result<Self> {
        if !(sigma > 0.5 && sigma < 1.0) {
            return Err(Error::Domain(format!("hypothetical zero needs 1/2 < σ < 1, got {sigma}")));
        }
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("hypothetical zero needs t > 0, got {t}")));
        }
        if n == 0 {
            return Err(Error::Domain("order must be positive".into()));
        }
        Ok(Self { sigma, t, n })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// `ln(((x²+t²-q²)² + 4t²q²) / (x²+t²)²)` without cancellation.
fn log_pair_ratio(x: f64, q: f64, t: f64) -> f64 {
    let m = x * x + t * t;
    let u = q * q * (q * q + 2.0 * t * t - 2.0 * x * x) / (m * m);
    u.ln_1p()
}

/// `1/(a²+t²) - Re 1/(a² - (q+it)²)`, in the cancellation-free form
/// `q²(3t² - a² + q²) / ((a²+t²)((a²-q²+t²)² + 4t²q²))`.
fn double_pole_pair(a: f64, q: f64, t: f64) -> f64 {
    let m = a * a - q * q + t * t;
    q * q * (3.0 * t * t - a * a + q * q) / ((a * a + t * t) * (m * m + 4.0 * t * t * q * q))
}

/// Shift of `lhs - rhs` caused by the zero pair `σ ± it` of order `n`.
pub fn zero_contribution(spec: &CriterionSpec, z: &HypotheticalZero) -> Result<f64> {
    use CriterionKind::*;
    let n = f64::from(z.n);
    let t = z.t;
    match spec.kind {
        LineVsAxis => {
            let q = z.sigma - 0.5;
            let m = 0.25 + t * t - q * q;
            return Ok(-2.0 * PI * n * q * t / (m * m + 4.0 * q * q * t * t));
        }
        GammaAlpha | DoubleIntegral => {
            return Err(spec.violation("zero contributions are defined for theorem1, theorem1a, theorem2, theorem2a, volchkov and eq14"));
        }
        _ => {}
    }
    if z.sigma < spec.b {
        return Err(spec.violation(format!(
            "hypothetical zero must satisfy σ ≥ b (got σ = {}, b = {})",
            z.sigma, spec.b
        )));
    }
    let q = z.sigma - spec.b;
    let e = spec.e();
    Ok(match spec.kind {
        TwoPole | TwoPoleLimit => {
            let (c, d) = if spec.kind == TwoPole { (spec.c, spec.d) } else { (spec.c, e) };
            -PI * n / (2.0 * (d * d - c * c)) * (log_pair_ratio(d, q, t) - log_pair_ratio(c, q, t))
        }
        DoublePole => PI * n * double_pole_pair(spec.a, q, t),
        DoublePoleLimit => PI * n * double_pole_pair(e, q, t),
        Volchkov => PI * n * double_pole_pair(0.5, q, t),
        LineVsAxis | GammaAlpha | DoubleIntegral => unreachable!(),
    })
}

/// Folds hypothetical zeros into an evaluated result.
pub fn full_equality_from(base: &CriterionResult, hypo: &[HypotheticalZero]) -> Result<CriterionResult> {
    let mut injected = 0.0;
    for z in hypo {
        injected += zero_contribution(&base.spec, z)?;
    }
    let lhs = base.lhs + injected;
    let residual = lhs - base.rhs;
    Ok(CriterionResult {
        lhs,
        residual,
        injected,
        adjusted_residual: residual - injected,
        ..base.clone()
    })
}

/// The unconditional identity: `lhs` as it would read with the hypothetical
/// zeros present, and `adjusted_residual = residual - Σ contributions`.
pub fn full_equality(spec: &CriterionSpec, zeros: &ZeroTable, hypo: &[HypotheticalZero]) -> Result<CriterionResult> {
    let base = evaluate(spec, zeros)?;
    full_equality_from(&base, hypo)
}

/// `γ(α)` from the double-pole-limit integral on `b = 1/2 + α`.
pub fn gamma_alpha(alpha: f64, t_max: f64, tol: f64, zeros: &ZeroTable) -> Result<f64> {
    let spec = CriterionSpec::gamma_alpha(alpha).with_t_max(t_max).with_tol(tol);
    Ok(evaluate(&spec, zeros)?.lhs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub gamma_alpha: f64,
    pub abs_error_vs_gamma: f64,
    pub t_max: f64,
}

/// `α = 0, 0.05, …, 0.45`.
pub fn default_alpha_grid() -> Vec<f64> {
    (0..10).map(|i| f64::from(i) * 0.05).collect()
}

pub fn gamma_alpha_sweep(alphas: &[f64], t_max: f64, tol: f64, zeros: &ZeroTable) -> Result<Vec<SweepRow>> {
    alphas
        .iter()
        .map(|&alpha| {
            let g = gamma_alpha(alpha, t_max, tol, zeros)?;
            Ok(SweepRow {
                alpha,
                gamma_alpha: g,
                abs_error_vs_gamma: (g - EULER_GAMMA).abs(),
                t_max,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eq13Check {
    pub sign: Sign,
    /// The candidate that matched.
    pub value: f64,
    pub plus: f64,
    pub minus: f64,
    /// `(4a/π)` times the double-pole closed form.
    pub expected: f64,
    /// `(4a/π)` times the quadrature left side, when a zero table is given.
    pub quadrature: Option<f64>,
}

/// Decides the sign of the last term in
/// `-2/a + ζ'/ζ(a+b) + 1/(a+b-1) ± 1/(a-b+1)` by comparing both readings
/// with `(4a/π)` times the double-pole closed form.
pub fn eq13_cross_check(a: f64, b: f64, t_max: f64, tol: f64, zeros: Option<&ZeroTable>) -> Result<Eq13Check> {
    let spec = CriterionSpec::double_pole(b, a).with_t_max(t_max).with_tol(tol);
    spec.validate()?;
    let scale = 4.0 * a / PI;
    let expected = scale * rhs_value(&spec)?;
    let ld = log_deriv_real(a + b)?;
    let common = -2.0 / a + ld + 1.0 / (a + b - 1.0);
    let plus = common + 1.0 / (a - b + 1.0);
    let minus = common - 1.0 / (a - b + 1.0);
    let (dp, dm) = ((plus - expected).abs(), (minus - expected).abs());
    let window = 10.0 * tol;
    let (sign, value) = match (dp <= window, dm <= window) {
        (true, false) => (Sign::Plus, plus),
        (false, true) => (Sign::Minus, minus),
        (true, true) if dp < dm => (Sign::Plus, plus),
        (true, true) => (Sign::Minus, minus),
        (false, false) => {
            return Err(Error::Inconclusive {
                plus: dp,
                minus: dm,
                tolerance: window,
            })
        }
    };
    let quadrature = match zeros {
        Some(z) => Some(scale * lhs_value(&spec, z)?.value),
        None => None,
    };
    Ok(Eq13Check {
        sign,
        value,
        plus,
        minus,
        expected,
        quadrature,
    })
}
