//! Adaptive Gauss-Kronrod quadrature with breakpoints, principal values
//! across a simple pole, and tail bounds for truncated improper integrals.
//!
//! Each piece between consecutive breakpoints is integrated by globally
//! adaptive bisection with the 15-point Kronrod rule and its embedded 7-point
//! Gauss rule, using the QUADPACK error heuristic. Pieces are independent and
//! run on the rayon pool; their results are summed in interval order, so the
//! value does not depend on scheduling.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639,
    0.949_107_912_342_758_525,
    0.864_864_423_359_769_073,
    0.741_531_185_599_394_440,
    0.586_087_235_467_691_130,
    0.405_845_151_377_397_167,
    0.207_784_955_007_898_468,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_553,
    0.104_790_010_322_250_184,
    0.140_653_259_715_525_919,
    0.169_004_726_639_267_903,
    0.190_350_578_064_785_410,
    0.204_432_940_075_298_892,
    0.209_482_141_084_727_828,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5] and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693,
    0.279_705_391_489_276_668,
    0.381_830_050_505_118_945,
    0.417_959_183_673_469_388,
];

#[derive(Debug, Clone, PartialEq)]
pub struct IntegrationResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub breakpoints_used: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    /// Maximum number of bisections of any panel.
    pub max_depth: u32,
    /// Maximum number of panels per piece.
    pub max_panels: usize,
    /// Substitute `x = a + (b-a)φ(u)` on every piece, with `φ' ∝ u³(1-u)³`.
    /// This flattens integrable endpoint singularities such as `ln|x - a|`.
    pub cluster_endpoints: bool,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            max_depth: 60,
            max_panels: 50_000,
            cluster_endpoints: false,
        }
    }
}

impl QuadOptions {
    pub fn clustered() -> Self {
        Self {
            cluster_endpoints: true,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    resabs: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gk15<F: Fn(f64) -> Result<f64>>(f: &F, a: f64, b: f64, depth: u32) -> Result<Panel> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre)?;
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    let mut resabs = resk.abs();
    let mut fv = [(0.0, 0.0); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx)?;
        let f2 = f(centre + dx)?;
        fv[j] = (f1, f2);
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j].0 - mean).abs() + (fv[j].1 - mean).abs());
    }
    let value = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut error = ((resk - resg) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    if !value.is_finite() || !error.is_finite() {
        return Err(Error::NonConvergent {
            a,
            b,
            estimate: f64::INFINITY,
        });
    }
    Ok(Panel {
        a,
        b,
        value,
        error,
        resabs,
        depth,
    })
}

struct PieceResult {
    value: f64,
    error: f64,
    evaluations: usize,
}

fn adapt<F: Fn(f64) -> Result<f64>>(f: &F, a: f64, b: f64, tol: f64, opts: &QuadOptions) -> Result<PieceResult> {
    let mut heap = BinaryHeap::new();
    let first = gk15(f, a, b, 0)?;
    let mut evaluations = 15;
    let mut total_err = first.error;
    let mut total_abs = first.resabs;
    heap.push(first);
    loop {
        let floor = 100.0 * f64::EPSILON * total_abs;
        if total_err <= tol || total_err <= floor {
            break;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if worst.depth >= opts.max_depth || heap.len() + 2 > opts.max_panels || mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            let value = heap.iter().map(|p| p.value).sum();
            return Err(Error::NonConvergent {
                a,
                b,
                estimate: if total_err.is_finite() { total_err } else { value },
            });
        }
        let left = gk15(f, worst.a, mid, worst.depth + 1)?;
        let right = gk15(f, mid, worst.b, worst.depth + 1)?;
        evaluations += 30;
        total_err += left.error + right.error - worst.error;
        total_abs += left.resabs + right.resabs - worst.resabs;
        heap.push(left);
        heap.push(right);
        // Re-sum periodically to keep the running totals from drifting.
        if heap.len() % 64 == 0 {
            total_err = heap.iter().map(|p| p.error).sum();
            total_abs = heap.iter().map(|p| p.resabs).sum();
        }
    }
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    Ok(PieceResult {
        value: panels.iter().map(|p| p.value).sum(),
        error: panels.iter().map(|p| p.error).sum(),
        evaluations,
    })
}

fn smoothstep(u: f64) -> (f64, f64) {
    let u2 = u * u;
    let u3 = u2 * u;
    let v = 1.0 - u;
    let phi = u3 * u * (35.0 + u * (-84.0 + u * (70.0 - 20.0 * u)));
    let dphi = 140.0 * u3 * v * v * v;
    (phi, dphi)
}

fn piece<F: Fn(f64) -> Result<f64> + Sync>(f: &F, a: f64, b: f64, tol: f64, opts: &QuadOptions) -> Result<PieceResult> {
    if opts.cluster_endpoints {
        let width = b - a;
        // φ(u) = 1 - φ(1-u), so each half is mapped from its own endpoint.
        // Nodes that round onto an endpoint carry a negligible weight and
        // are dropped, since the integrand may be singular there.
        let g = |u: f64| -> Result<f64> {
            let x = if u <= 0.5 {
                a + width * smoothstep(u).0
            } else {
                b - width * smoothstep(1.0 - u).0
            };
            if x <= a || x >= b {
                return Ok(0.0);
            }
            Ok(f(x)? * width * smoothstep(u).1)
        };
        adapt(&g, 0.0, 1.0, tol, opts)
    } else {
        adapt(f, a, b, tol, opts)
    }
}

fn check_interval(a: f64, b: f64, breakpoints: &[f64], tol: f64) -> Result<()> {
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::Domain(format!("integration needs finite a < b, got [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut prev = a;
    for &p in breakpoints {
        if !(p > prev) || !(p < b) {
            return Err(Error::Domain(format!(
                "breakpoints must be strictly increasing inside ({a}, {b}); offending value {p}"
            )));
        }
        prev = p;
    }
    Ok(())
}

/// `∫_a^b f` with `f` allowed to fail.
pub fn try_integrate_adaptive<F>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    tol: f64,
    opts: QuadOptions,
) -> Result<IntegrationResult>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    check_interval(a, b, breakpoints, tol)?;
    let mut edges = Vec::with_capacity(breakpoints.len() + 2);
    edges.push(a);
    edges.extend_from_slice(breakpoints);
    edges.push(b);
    let piece_tol = tol / (edges.len() - 1) as f64;
    let results: Vec<Result<PieceResult>> = edges
        .par_windows(2)
        .map(|w| piece(&f, w[0], w[1], piece_tol, &opts))
        .collect();
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    for r in results {
        let r = r?;
        value += r.value;
        error += r.error;
        evaluations += r.evaluations;
    }
    Ok(IntegrationResult {
        value,
        error_estimate: error,
        evaluations,
        breakpoints_used: breakpoints.to_vec(),
    })
}

/// `∫_a^b f`, split at `breakpoints` (strictly increasing, inside `(a, b)`),
/// each piece to `tol / #pieces`.
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, breakpoints: &[f64], tol: f64) -> Result<IntegrationResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    try_integrate_adaptive(|x| Ok(f(x)), a, b, breakpoints, tol, QuadOptions::default())
}

/// Cauchy principal value of `∫_a^b f` across a simple pole at `pole`.
pub fn integrate_principal_value<F>(f: F, a: f64, b: f64, pole: f64, tol: f64) -> Result<IntegrationResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    try_integrate_principal_value(|x| Ok(f(x)), a, b, pole, tol)
}

/// Principal value by pairing `g(u) = f(pole+u) + f(pole-u)` on
/// `(0, r)`, `r = min(pole-a, b-pole)`, plus the one-sided remainder. The
/// result is cross-checked by re-splitting the paired integral at
/// `u = 10⁻³r` and `u = 10⁻⁴r`.
pub fn try_integrate_principal_value<F>(f: F, a: f64, b: f64, pole: f64, tol: f64) -> Result<IntegrationResult>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    check_interval(a, b, &[], tol)?;
    if !(pole > a && pole < b) {
        return Err(Error::Domain(format!("pole {pole} must lie inside ({a}, {b})")));
    }
    let r = (pole - a).min(b - pole);
    // Offsets are rounded to what `pole + u` can represent so that the two
    // samples sit exactly symmetric about the pole.
    let paired = |u: f64| -> Result<f64> {
        let v = (pole + u) - pole;
        if v == 0.0 {
            return Ok(0.0);
        }
        Ok(f(pole + v)? + f(pole - v)?)
    };

    let (u1, u2) = (1.0e-6 * r, 1.0e-8 * r);
    let (f1, f2) = (f(pole + u1)?.abs() * u1, f(pole + u2)?.abs() * u2);
    if f2 > 0.0 && f2 >= 0.5 * f1 && paired(u2)?.abs() * u2 > 1.0e-3 * f2 {
        return Err(Error::NotSimplePole { pole });
    }

    let leftover = if pole - a > r {
        Some((a, pole - r))
    } else if b - pole > r {
        Some((pole + r, b))
    } else {
        None
    };
    let share = if leftover.is_some() { 0.5 * tol } else { tol };
    let opts = QuadOptions::default();
    let main = try_integrate_adaptive(paired, 0.0, r, &[], share, opts)?;
    let mut value = main.value;
    let mut error = main.error_estimate;
    let mut evaluations = main.evaluations + 4;
    if let Some((lo, hi)) = leftover {
        let side = try_integrate_adaptive(&f, lo, hi, &[], share, opts)?;
        value += side.value;
        error += side.error_estimate;
        evaluations += side.evaluations;
    }

    for eps in [1.0e-3 * r, 1.0e-4 * r] {
        let inner = try_integrate_adaptive(paired, 0.0, eps, &[], tol, opts)?;
        let outer = try_integrate_adaptive(paired, eps, r, &[], tol, opts)?;
        evaluations += inner.evaluations + outer.evaluations;
        let split = inner.value + outer.value;
        if (split - main.value).abs() > 10.0 * tol {
            return Err(Error::NonConvergent {
                a,
                b,
                estimate: (split - main.value).abs(),
            });
        }
    }

    Ok(IntegrationResult {
        value,
        error_estimate: error,
        evaluations,
        breakpoints_used: vec![pole],
    })
}

/// Kernel families with known decay beyond the truncation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    /// `t / ((c² + t²)(d² + t²))`.
    TwoPole { c: f64, d: f64 },
    /// `t / (a² + t²)²`.
    DoublePole { a: f64 },
    /// Any kernel with `|k(t)| ≤ k / t^decay` for `t ≥ t_cut`.
    Rational { k: f64, decay: f64 },
}

/// Growth model `|h(t)| ≤ a + b ln t` for the factor multiplying the kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthModel {
    pub a: f64,
    pub b: f64,
}

impl GrowthModel {
    /// `|arg ζ(b+it)|` for `b ≥ 1/2`.
    pub const ARG: Self = Self { a: 2.0, b: 1.0 };
    /// `|ln|ζ(1/2+it)(-1/2+it)||`.
    pub const LOG_MODULUS: Self = Self { a: 1.0, b: 1.5 };
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub t_cut: f64,
    pub bound: f64,
}

/// Bound on `∫_{t_cut}^∞ |kernel · arg ζ|` under [`GrowthModel::ARG`].
pub fn improper_tail_bound(kernel: KernelSpec, t_cut: f64) -> Result<TailBound> {
    improper_tail_bound_with(kernel, t_cut, GrowthModel::ARG)
}

/// `K [A/(2T²) + B(ln T/(2T²) + 1/(4T²))]`, where `K/t³` dominates the kernel.
pub fn improper_tail_bound_with(kernel: KernelSpec, t_cut: f64, growth: GrowthModel) -> Result<TailBound> {
    if !(t_cut >= 100.0) || !t_cut.is_finite() {
        return Err(Error::Domain(format!("tail bound needs t_cut ≥ 100, got {t_cut}")));
    }
    let k = match kernel {
        KernelSpec::TwoPole { .. } | KernelSpec::DoublePole { .. } => 1.0,
        KernelSpec::Rational { k, decay } => {
            if !(decay >= 3.0) {
                return Err(Error::UnsupportedKernel(format!(
                    "kernel decays like t^-{decay}, slower than t^-3"
                )));
            }
            k.abs() * t_cut.powf(3.0 - decay)
        }
    };
    let t2 = t_cut * t_cut;
    let bound = k * (growth.a / (2.0 * t2) + growth.b * (t_cut.ln() / (2.0 * t2) + 1.0 / (4.0 * t2)));
    Ok(TailBound { t_cut, bound })
}
