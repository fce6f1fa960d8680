//! Riemann zeta and its companions in double precision: `ζ(s)`, `ζ'(s)/ζ(s)`,
//! `ln|ζ(s)|`, principal-branch `ln Γ(s)`, the Riemann-Siegel theta function
//! and Hardy's `Z(t)`.
//!
//! `ζ` is evaluated by Euler-Maclaurin summation
//!
//! ```text
//! ζ(s) = Σ_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2 + Σ_{k=1..K} B_2k/(2k)! · s(s+1)…(s+2k-2) · N^(-s-2k+1) + R
//! ```
//!
//! with the cutoff `N` and correction order `K` chosen per call so that the
//! standard remainder bound `|R| ≤ |s+2K+1| / (Re s + 2K + 1) · |T_{K+1}|`
//! (`T_{K+1}` being the first omitted correction) falls below the requested
//! tolerance. When the real part is large a plain Dirichlet sum with an
//! integral tail bound is cheaper and is used instead. `ζ'` comes from the
//! same expansion differentiated term by term.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest `|Im s|` accepted by the evaluators.
pub const MAX_HEIGHT: f64 = 1.0e6;

/// Truncation target used by the integrand evaluators elsewhere in the crate.
pub(crate) const WORKING_TARGET: f64 = 1.0e-15;

const MAX_ORDER: usize = 60;
const MAX_CUTOFF: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathConstants {
    pub euler_gamma: f64,
    pub pi: f64,
}

pub const CONSTANTS: MathConstants = MathConstants {
    euler_gamma: EULER_GAMMA,
    pi: PI,
};

/// A finite point `σ + it` of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    re: f64,
    im: f64,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::Domain(format!("non-finite point {re} + {im}i")));
        }
        Ok(Self { re, im })
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.to_complex()
    }
}

impl TryFrom<Complex64> for ComplexPoint {
    type Error = Error;

    fn try_from(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }
}

/// A value together with an absolute error bound. The bound is the
/// certified truncation bound of the series plus an estimate of rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_error_bound: f64,
}

/// `ζ(2k)` for `k ≥ 5`, where 200 terms are already exact to double precision.
fn even_zeta(k: usize) -> f64 {
    (1..=200u32)
        .rev()
        .map(|n| f64::from(n).powi(-2 * k as i32))
        .sum()
}

/// `B_2k / (2k)!` for `k = 0..=MAX_ORDER + 1`; beyond the first few exact
/// values it uses `B_2k = (-1)^(k+1) 2 (2k)! ζ(2k) / (2π)^2k`.
fn bernoulli_ratios() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let two_pi = 2.0 * PI;
        let mut table = vec![1.0, 1.0 / 12.0, -1.0 / 720.0, 1.0 / 30_240.0, -1.0 / 1_209_600.0];
        for k in 5..=MAX_ORDER + 1 {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            table.push(sign * 2.0 * even_zeta(k) / two_pi.powi(2 * k as i32));
        }
        table
    })
}

#[derive(Debug, Clone, Copy)]
enum Scheme {
    Direct { terms: usize, tail: f64, dtail: f64 },
    EulerMaclaurin { cutoff: usize, order: usize },
}

/// Number of Dirichlet terms so that `Σ_{n>M} n^-σ ≤ ∫_M^∞ x^-σ dx ≤ target`.
fn direct_plan(sigma: f64, target: f64) -> Option<Scheme> {
    if sigma <= 1.5 {
        return None;
    }
    let e = sigma - 1.0;
    let m = (1.0 / (target * e)).powf(1.0 / e).ceil().max(2.0);
    if m > 1.0e7 {
        return None;
    }
    let tail = m.powf(-e) / e;
    let dtail = m.powf(-e) * (m.ln() / e + 1.0 / (e * e));
    Some(Scheme::Direct {
        terms: m as usize,
        tail,
        dtail,
    })
}

fn em_plan(s: Complex64, target: f64) -> Option<Scheme> {
    let c = bernoulli_ratios();
    let abs_s = s.norm();
    let mut n = ((abs_s / (1.5 * PI)).ceil() as usize).max(8);
    while n <= MAX_CUTOFF {
        let nf = n as f64;
        let mut mag = c[1].abs() * abs_s * nf.powf(-s.re - 1.0);
        for k in 1..=MAX_ORDER {
            let kf = k as f64;
            let grow = (c[k + 1] / c[k]).abs() * (s + (2.0 * kf - 1.0)).norm() * (s + 2.0 * kf).norm()
                / (nf * nf);
            let next = mag * grow;
            let denom = s.re + 2.0 * kf + 1.0;
            if denom > 0.0 && next * (s + (2.0 * kf + 1.0)).norm() / denom <= target {
                return Some(Scheme::EulerMaclaurin {
                    cutoff: n,
                    order: k,
                });
            }
            if grow >= 1.0 {
                break;
            }
            mag = next;
        }
        n += n / 4 + 1;
    }
    None
}

fn plan(s: Complex64, target: f64) -> Option<Scheme> {
    let em = em_plan(s, target);
    match (direct_plan(s.re, target), em) {
        (Some(Scheme::Direct { terms, tail, dtail }), Some(Scheme::EulerMaclaurin { cutoff, .. }))
            if terms <= cutoff =>
        {
            Some(Scheme::Direct { terms, tail, dtail })
        }
        (direct, None) => direct,
        (_, em) => em,
    }
}

/// Pieces of one evaluation, kept apart so that `ζ(s)(s-1) - 1` can be
/// assembled without cancellation near the pole.
#[derive(Debug, Clone, Copy)]
struct Expansion {
    /// `Σ_{n<N} n^-s` (or the whole truncated Dirichlet sum).
    partial: Complex64,
    dpartial: Complex64,
    /// `N^-s/2 + N^-s Σ corrections`; zero for the direct scheme.
    boundary: Complex64,
    dboundary: Complex64,
    /// `ln N` for Euler-Maclaurin, `None` for the direct scheme.
    log_cutoff: Option<f64>,
    trunc: f64,
    dtrunc: f64,
    rounding: f64,
    drounding: f64,
}

impl Expansion {
    fn pole_term(&self, s: Complex64) -> (Complex64, Complex64) {
        match self.log_cutoff {
            Some(ln_n) => {
                let t = (-(s - 1.0) * ln_n).exp() / (s - 1.0);
                (t, -t * ln_n - t / (s - 1.0))
            }
            None => (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
        }
    }

    fn zeta(&self, s: Complex64) -> Complex64 {
        self.partial + self.boundary + self.pole_term(s).0
    }

    fn dzeta(&self, s: Complex64) -> Complex64 {
        self.dpartial + self.dboundary + self.pole_term(s).1
    }
}

fn dirichlet_partial(s: Complex64, upto: usize, derivative: bool) -> (Complex64, Complex64, f64, f64) {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut dsum = Complex64::new(0.0, 0.0);
    let mut r2 = 0.0;
    let mut dr2 = 0.0;
    let t = s.im;
    for n in 1..upto {
        let ln_n = (n as f64).ln();
        let mag = (-s.re * ln_n).exp();
        let (sin, cos) = (t * ln_n).sin_cos();
        let term = Complex64::new(mag * cos, -mag * sin);
        sum += term;
        let spread = mag * (1.0 + t.abs() * ln_n);
        r2 += spread * spread;
        if derivative {
            dsum -= term * ln_n;
            dr2 += (spread * ln_n) * (spread * ln_n);
        }
    }
    (sum, dsum, f64::EPSILON * r2.sqrt(), f64::EPSILON * dr2.sqrt())
}

fn expand(s: Complex64, scheme: Scheme, derivative: bool) -> Expansion {
    match scheme {
        Scheme::Direct { terms, tail, dtail } => {
            let (partial, dpartial, rounding, drounding) = dirichlet_partial(s, terms + 1, derivative);
            Expansion {
                partial,
                dpartial,
                boundary: Complex64::new(0.0, 0.0),
                dboundary: Complex64::new(0.0, 0.0),
                log_cutoff: None,
                trunc: tail,
                dtrunc: dtail,
                rounding,
                drounding,
            }
        }
        Scheme::EulerMaclaurin { cutoff, order } => {
            let (partial, dpartial, rounding, drounding) = dirichlet_partial(s, cutoff, derivative);
            let c = bernoulli_ratios();
            let nf = cutoff as f64;
            let ln_n = nf.ln();
            let n_pow = (-s * ln_n).exp();

            // u = c_k P_k(s) N^(1-2k) and du = c_k P_k'(s) N^(1-2k),
            // with P_k(s) = s(s+1)…(s+2k-2).
            let mut u = s * (c[1] / nf);
            let mut du = Complex64::new(c[1] / nf, 0.0);
            let mut corr = Complex64::new(0.0, 0.0);
            let mut dcorr = Complex64::new(0.0, 0.0);
            for k in 1..=order {
                corr += u;
                dcorr += du;
                let kf = k as f64;
                let a = s + (2.0 * kf - 1.0);
                let b = s + 2.0 * kf;
                let scale = c[k + 1] / c[k] / (nf * nf);
                let next_u = u * a * b * scale;
                let next_du = (du * a * b + u * (a + b)) * scale;
                u = next_u;
                du = next_du;
            }
            let of = order as f64;
            let factor = (s + (2.0 * of + 1.0)).norm() / (s.re + 2.0 * of + 1.0);
            let n_abs = n_pow.norm();
            let trunc = factor * u.norm() * n_abs;
            let dtrunc = factor * ((du - u * ln_n).norm() + u.norm()) * n_abs;

            let boundary = n_pow * (corr + 0.5);
            let dboundary = n_pow * (dcorr - 0.5 * ln_n - corr * ln_n);
            let phase_err =
                f64::EPSILON * (1.0 + s.im.abs() * ln_n) * n_abs * (nf / (s - 1.0).norm() + 0.5 + corr.norm());
            Expansion {
                partial,
                dpartial,
                boundary,
                dboundary,
                log_cutoff: Some(ln_n),
                trunc,
                dtrunc,
                rounding: rounding + phase_err,
                drounding: drounding + phase_err * (1.0 + ln_n),
            }
        }
    }
}

fn check_argument(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {s}")));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::PoleAtOne);
    }
    if s.im.abs() > MAX_HEIGHT {
        return Err(Error::Domain(format!(
            "|Im s| = {} exceeds the supported height {MAX_HEIGHT}",
            s.im.abs()
        )));
    }
    Ok(())
}

fn expansion(s: Complex64, target: f64, derivative: bool) -> Result<Expansion> {
    check_argument(s)?;
    let scheme = plan(s, target).ok_or(Error::ToleranceUnachievable {
        requested: target,
        achievable: f64::INFINITY,
    })?;
    Ok(expand(s, scheme, derivative))
}

/// `ζ(s)` with `abs_error_bound ≤ tol`.
pub fn zeta(s: ComplexPoint, tol: f64) -> Result<EvalResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let s = s.to_complex();
    let ex = expansion(s, 0.5 * tol, false)?;
    let bound = ex.trunc + ex.rounding;
    if bound > tol {
        return Err(Error::ToleranceUnachievable {
            requested: tol,
            achievable: bound,
        });
    }
    Ok(EvalResult {
        value: ex.zeta(s),
        abs_error_bound: bound,
    })
}

/// `ζ(s)` at full working accuracy, without a tolerance gate.
pub(crate) fn zeta_working(s: Complex64) -> Result<EvalResult> {
    let ex = expansion(s, WORKING_TARGET, false)?;
    Ok(EvalResult {
        value: ex.zeta(s),
        abs_error_bound: ex.trunc + ex.rounding,
    })
}

/// `(ζ(s), ζ'(s))` at working accuracy.
pub(crate) fn zeta_and_derivative(s: Complex64) -> Result<(EvalResult, EvalResult)> {
    let ex = expansion(s, WORKING_TARGET, true)?;
    Ok((
        EvalResult {
            value: ex.zeta(s),
            abs_error_bound: ex.trunc + ex.rounding,
        },
        EvalResult {
            value: ex.dzeta(s),
            abs_error_bound: ex.dtrunc + ex.drounding,
        },
    ))
}

/// `ζ(x)` for real `x ≠ 1`.
pub fn zeta_real(x: f64) -> Result<f64> {
    Ok(zeta_working(Complex64::new(x, 0.0))?.value.re)
}

/// `ln|ζ(s)|`.
pub fn log_abs_zeta(s: ComplexPoint, tol: f64) -> Result<f64> {
    let z = zeta(s, tol)?;
    let m = z.value.norm();
    if m == 0.0 || m <= z.abs_error_bound {
        return Err(Error::LogOfZero {
            re: s.re(),
            im: s.im(),
        });
    }
    Ok(m.ln())
}

/// `ζ'(s)/ζ(s)` from the differentiated expansion.
pub fn log_deriv_zeta(s: ComplexPoint, tol: f64) -> Result<EvalResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if s.re() <= 0.0 {
        return Err(Error::Domain(format!(
            "log-derivative requires Re s > 0, got {}",
            s.re()
        )));
    }
    let sc = s.to_complex();
    let mut target = 0.1 * tol;
    let mut achieved = f64::INFINITY;
    for _ in 0..3 {
        let ex = expansion(sc, target, true)?;
        let z = ex.zeta(sc);
        let e = ex.trunc + ex.rounding;
        if z.norm() <= e {
            return Err(Error::ZeroDenominator {
                re: s.re(),
                im: s.im(),
            });
        }
        let ratio = ex.dzeta(sc) / z;
        let de = ex.dtrunc + ex.drounding;
        let bound = (de + ratio.norm() * e) / (z.norm() - e);
        if bound <= tol {
            return Ok(EvalResult {
                value: ratio,
                abs_error_bound: bound,
            });
        }
        achieved = achieved.min(bound);
        target *= 0.5 * tol / bound;
        if target < 1.0e-18 {
            return Err(Error::ToleranceUnachievable {
                requested: tol,
                achievable: bound,
            });
        }
    }
    Err(Error::ToleranceUnachievable {
        requested: tol,
        achievable: achieved,
    })
}

/// `ln(ζ(x)·(x-1))` for real `x > 0`. The product is positive on the whole
/// half-line and tends to 1 at `x = 1`, where the pole cancels.
pub fn log_zeta_pole_product(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("expected finite x > 0, got {x}")));
    }
    if x == 1.0 {
        return Ok(0.0);
    }
    if (x - 1.0).abs() >= 0.5 {
        let z = zeta_real(x)?;
        return Ok((z * (x - 1.0)).abs().ln());
    }
    // ζ(x)(x-1) - 1 = (x-1)[Σ_{n<N} n^-x + boundary] + (N^(1-x) - 1)
    let s = Complex64::new(x, 0.0);
    let ex = expansion(s, WORKING_TARGET, false)?;
    let ln_n = ex.log_cutoff.expect("Euler-Maclaurin is used near the pole");
    let offset = (x - 1.0) * (ex.partial.re + ex.boundary.re) + ((1.0 - x) * ln_n).exp_m1();
    Ok(offset.ln_1p())
}

/// `B_2k / (2k(2k-1))` for `k = 1..=10`.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Principal branch of `ln Γ(s)` for `Re s > 0`.
///
/// Shifts the argument up by the recurrence `Γ(s+1) = sΓ(s)` until
/// `Re s ≥ 10` and then applies the Stirling series. The logs of the shift
/// factors are summed one by one, which keeps the result on the branch that
/// is continuous from the positive real axis.
pub fn log_gamma(s: ComplexPoint) -> Result<Complex64> {
    if s.re() <= 0.0 {
        return Err(Error::Domain(format!(
            "log_gamma requires Re s > 0, got {}",
            s.re()
        )));
    }
    Ok(log_gamma_right(s.to_complex()))
}

fn log_gamma_right(s: Complex64) -> Complex64 {
    let mut z = s;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < 10.0 {
        shift += z.ln();
        z += 1.0;
    }
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut power = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for coef in STIRLING {
        series += power * coef;
        power *= inv2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series - shift
}

/// `θ(t) = Im ln Γ(1/4 + it/2) - (t/2) ln π`.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("theta requires finite t ≥ 0, got {t}")));
    }
    Ok(theta_unchecked(t))
}

pub(crate) fn theta_unchecked(t: f64) -> f64 {
    log_gamma_right(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real for real `t`.
pub fn hardy_z(t: f64, tol: f64) -> Result<f64> {
    let theta = riemann_siegel_theta(t)?;
    let z = zeta(ComplexPoint::new(0.5, t)?, tol)?;
    rotate_to_real(t, theta, z.value)
}

pub(crate) fn hardy_z_working(t: f64) -> Result<f64> {
    let theta = riemann_siegel_theta(t)?;
    let z = zeta_working(Complex64::new(0.5, t))?;
    rotate_to_real(t, theta, z.value)
}

fn rotate_to_real(t: f64, theta: f64, zeta: Complex64) -> Result<f64> {
    let rotated = zeta * Complex64::from_polar(1.0, theta);
    if rotated.im.abs() >= 1.0e-8 * (1.0 + rotated.re.abs()) {
        return Err(Error::NotReal {
            t,
            residue: rotated.im,
        });
    }
    Ok(rotated.re)
}
