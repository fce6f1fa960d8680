//! Continuous argument of `ζ` and the zero-counting function.
//!
//! `arg ζ(b+it)` is defined by continuous variation along the polyline
//! `2 → 2+it → b+it`, starting from 0 at `ζ(2) > 0`. Each leg is sampled at a
//! fixed base density and any step whose wrapped phase increment reaches
//! `π/2` is bisected. The accumulated value is finally snapped onto the branch
//! of the principal argument at the endpoint nearest to it, so it carries no
//! summation round-off.
//!
//! The integrands along a whole vertical line need many evaluations, so two
//! cheaper branch selectors are provided as well. [`CriticalLinePhase`] uses
//! the exact identity `arg ζ(1/2+it) = π(N(t) - 1) - θ(t)` with `N` read off a
//! zero table. [`VerticalTrack`] marches once along `b+it` and afterwards picks
//! the branch nearest to the interpolated march.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::zeta::{self, ComplexPoint};

/// Base number of samples per polyline leg.
pub const BASE_DENSITY: usize = 64;

const MAX_BISECTIONS: u32 = 40;
const GUARD_RADIUS: f64 = 1.0e-9;
const GUARD_TRIGGER: f64 = 1.0e-6;

/// An analytic function whose phase is tracked. `derivative` is only needed
/// by the near-zero guard.
pub trait PhaseSource: Sync {
    fn value(&self, s: Complex64) -> Result<Complex64>;
    fn derivative(&self, s: Complex64) -> Result<Complex64>;
}

/// The Riemann zeta function.
#[derive(Debug, Clone, Copy, Default)]
pub struct Zeta;

impl PhaseSource for Zeta {
    fn value(&self, s: Complex64) -> Result<Complex64> {
        Ok(zeta::zeta_working(s)?.value)
    }

    fn derivative(&self, s: Complex64) -> Result<Complex64> {
        Ok(zeta::zeta_and_derivative(s)?.1.value)
    }
}

/// Adapts a pair of closures `(f, f')` into a [`PhaseSource`].
pub struct FnSource<F, D> {
    pub f: F,
    pub df: D,
}

impl<F, D> PhaseSource for FnSource<F, D>
where
    F: Fn(Complex64) -> Complex64 + Sync,
    D: Fn(Complex64) -> Complex64 + Sync,
{
    fn value(&self, s: Complex64) -> Result<Complex64> {
        Ok((self.f)(s))
    }

    fn derivative(&self, s: Complex64) -> Result<Complex64> {
        Ok((self.df)(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSample {
    pub point: ComplexPoint,
    pub accumulated_arg: f64,
}

/// The sampled polyline `anchor → corner → endpoint`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePath {
    pub anchor: ComplexPoint,
    pub corner: ComplexPoint,
    pub endpoint: ComplexPoint,
    pub samples: Vec<PhaseSample>,
    pub final_arg: f64,
}

fn guard<S: PhaseSource + ?Sized>(src: &S, s: Complex64, v: Complex64) -> Result<()> {
    let m = v.norm();
    if m < GUARD_TRIGGER {
        let d = src.derivative(s)?.norm();
        let distance = if d > 0.0 { m / d } else { 0.0 };
        if distance < GUARD_RADIUS {
            return Err(Error::PathThroughZero {
                re: s.re,
                im: s.im,
                distance,
            });
        }
    }
    Ok(())
}

struct Tracker<'a, S: PhaseSource + ?Sized> {
    src: &'a S,
    samples: Option<&'a mut Vec<PhaseSample>>,
}

impl<S: PhaseSource + ?Sized> Tracker<'_, S> {
    fn record(&mut self, s: Complex64, arg: f64) {
        if let Some(samples) = self.samples.as_deref_mut() {
            samples.push(PhaseSample {
                point: ComplexPoint::new(s.re, s.im).expect("finite path point"),
                accumulated_arg: arg,
            });
        }
    }

    /// Phase change from `(p0, v0)` to `(p1, v1)`, bisecting until every
    /// sub-step increment is below `π/2`.
    fn step(
        &mut self,
        p0: Complex64,
        v0: Complex64,
        p1: Complex64,
        v1: Complex64,
        arg0: f64,
        depth: u32,
    ) -> Result<f64> {
        let inc = (v1 / v0).arg();
        if inc.abs() < FRAC_PI_2 {
            self.record(p1, arg0 + inc);
            return Ok(inc);
        }
        if depth >= MAX_BISECTIONS {
            return Err(Error::PathThroughZero {
                re: p1.re,
                im: p1.im,
                distance: (p1 - p0).norm(),
            });
        }
        let pm = 0.5 * (p0 + p1);
        let vm = self.src.value(pm)?;
        guard(self.src, pm, vm)?;
        let first = self.step(p0, v0, pm, vm, arg0, depth + 1)?;
        let second = self.step(pm, vm, p1, v1, arg0 + first, depth + 1)?;
        Ok(first + second)
    }

    fn leg(&mut self, from: Complex64, to: Complex64, v_from: Complex64, arg: f64, density: usize) -> Result<(f64, Complex64)> {
        if from == to {
            return Ok((arg, v_from));
        }
        let mut p0 = from;
        let mut v0 = v_from;
        let mut acc = arg;
        for j in 1..=density {
            let p1 = if j == density {
                to
            } else {
                from + (to - from) * (j as f64 / density as f64)
            };
            let v1 = self.src.value(p1)?;
            guard(self.src, p1, v1)?;
            acc += self.step(p0, v0, p1, v1, acc, 0)?;
            p0 = p1;
            v0 = v1;
        }
        Ok((acc, v0))
    }
}

fn snap(accumulated: f64, value: Complex64) -> f64 {
    let principal = value.arg();
    principal + 2.0 * PI * ((accumulated - principal) / (2.0 * PI)).round()
}

fn check_path(b: f64, t: f64) -> Result<()> {
    if !b.is_finite() || !t.is_finite() {
        return Err(Error::Domain(format!("non-finite path end {b} + {t}i")));
    }
    if b <= -2.0 {
        return Err(Error::Domain(format!("arg requires b > -2, got {b}")));
    }
    if t == 0.0 && b <= 1.0 {
        return Err(Error::Domain(format!(
            "path from 2 to {b} along the real axis crosses the pole at 1"
        )));
    }
    Ok(())
}

fn track_polyline<S: PhaseSource + ?Sized>(
    src: &S,
    b: f64,
    t: f64,
    density: usize,
    samples: Option<&mut Vec<PhaseSample>>,
) -> Result<(f64, Complex64)> {
    check_path(b, t)?;
    let anchor = Complex64::new(2.0, 0.0);
    let corner = Complex64::new(2.0, t);
    let end = Complex64::new(b, t);
    let v_anchor = src.value(anchor)?;
    let mut tracker = Tracker { src, samples };
    let start = v_anchor.arg();
    tracker.record(anchor, start);
    let (acc, v_corner) = tracker.leg(anchor, corner, v_anchor, start, density.max(1))?;
    let (acc, v_end) = tracker.leg(corner, end, v_corner, acc, density.max(1))?;
    Ok((snap(acc, v_end), v_end))
}

/// Continuous argument of an arbitrary source along `2 → 2+it → b+it`,
/// measured from its principal argument at 2.
pub fn arg_along_polyline<S: PhaseSource + ?Sized>(src: &S, b: f64, t: f64) -> Result<f64> {
    Ok(track_polyline(src, b, t, BASE_DENSITY, None)?.0)
}

/// The sampled polyline for `ζ` with the base density.
pub fn phase_path(b: f64, t: f64) -> Result<PhasePath> {
    phase_path_with_density(b, t, BASE_DENSITY)
}

pub fn phase_path_with_density(b: f64, t: f64, density: usize) -> Result<PhasePath> {
    let mut samples = Vec::with_capacity(2 * density + 1);
    let (final_arg, _) = track_polyline(&Zeta, b, t, density, Some(&mut samples))?;
    Ok(PhasePath {
        anchor: ComplexPoint::new(2.0, 0.0)?,
        corner: ComplexPoint::new(2.0, t)?,
        endpoint: ComplexPoint::new(b, t)?,
        samples,
        final_arg,
    })
}

/// `arg ζ(b+it)` by continuous variation. Negative `t` follows the mirrored
/// path, so `arg_zeta(b, -t) = -arg_zeta(b, t)`.
///
/// The result lies on a branch of the principal argument at the endpoint, so
/// its error is that of `ζ(b+it)` divided by `|ζ(b+it)|`; `tol` bounds this.
pub fn arg_zeta(b: f64, t: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let (arg, v) = track_polyline(&Zeta, b, t, BASE_DENSITY, None)?;
    let err = zeta::zeta_working(Complex64::new(b, t))?.abs_error_bound / v.norm();
    if err > tol {
        return Err(Error::ToleranceUnachievable {
            requested: tol,
            achievable: err,
        });
    }
    Ok(arg)
}

/// `N(x) = 1 + θ(x)/π + arg ζ(1/2+ix)/π`, the number of zeros with
/// `0 < Im ρ ≤ x`, before rounding.
pub fn counting_n(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("counting function needs x > 0, got {x}")));
    }
    let arg = arg_along_polyline(&Zeta, 0.5, x)?;
    let value = 1.0 + (zeta::theta_unchecked(x) + arg) / PI;
    let nearest = value.round();
    if (value - nearest).abs() > 1.0e-3 || nearest < 0.0 {
        return Err(Error::UnwrapInconsistent { x, value });
    }
    Ok(value)
}

/// [`counting_n`] rounded to the integer it certifies.
pub fn counting_n_integer(x: f64) -> Result<u64> {
    Ok(counting_n(x)?.round() as u64)
}

/// `arg ζ(1/2+it)` for `t ≥ 0` with the branch fixed by a complete list of
/// zero ordinates.
#[derive(Debug, Clone, Copy)]
pub struct CriticalLinePhase<'a> {
    ordinates: &'a [f64],
    height: f64,
}

impl<'a> CriticalLinePhase<'a> {
    /// `ordinates` must be sorted and contain every zero up to `height`.
    pub fn new(ordinates: &'a [f64], height: f64) -> Self {
        Self { ordinates, height }
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    /// Value from the counting identity alone.
    pub fn reference(&self, t: f64) -> f64 {
        let n = self.ordinates.partition_point(|&z| z <= t) as f64;
        PI * (n - 1.0) - zeta::theta_unchecked(t)
    }

    pub fn arg(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) || t > self.height {
            return Err(Error::Domain(format!(
                "t = {t} outside the zero table range [0, {}]",
                self.height
            )));
        }
        let reference = self.reference(t);
        let v = zeta::zeta_working(Complex64::new(0.5, t))?.value;
        let value = snap(reference, v);
        if (value - reference).abs() > 1.0e-6 {
            return Err(Error::UnwrapInconsistent {
                x: t,
                value: 1.0 + (zeta::theta_unchecked(t) + value) / PI,
            });
        }
        Ok(value)
    }
}

/// `arg` of a source along the vertical line `b+it`, `0 ≤ t ≤ t_max`,
/// tracked once and then queried by branch selection.
#[derive(Debug, Clone)]
pub struct VerticalTrack {
    b: f64,
    ts: Vec<f64>,
    args: Vec<f64>,
}

const TRACK_MAX_STEP: f64 = 0.25;
const TRACK_MIN_STEP: f64 = 1.0e-9;
const TRACK_SEED: f64 = 1.0;

impl VerticalTrack {
    pub fn for_zeta(b: f64, t_max: f64) -> Result<Self> {
        Self::new(&Zeta, b, t_max)
    }

    pub fn new<S: PhaseSource + ?Sized>(src: &S, b: f64, t_max: f64) -> Result<Self> {
        if !(t_max > 0.0) || !t_max.is_finite() {
            return Err(Error::Domain(format!("t_max must be positive, got {t_max}")));
        }
        let seed = TRACK_SEED.min(t_max);
        let seed_arg = arg_along_polyline(src, b, seed)?;
        let seed_val = src.value(Complex64::new(b, seed))?;
        let down = march(src, b, seed, seed_arg, seed_val, 0.0)?;
        let up = march(src, b, seed, seed_arg, seed_val, t_max)?;
        let mut ts: Vec<f64> = down.iter().rev().map(|p| p.0).collect();
        let mut args: Vec<f64> = down.iter().rev().map(|p| p.1).collect();
        ts.push(seed);
        args.push(seed_arg);
        ts.extend(up.iter().map(|p| p.0));
        args.extend(up.iter().map(|p| p.1));
        Ok(Self { b, ts, args })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn t_max(&self) -> f64 {
        *self.ts.last().expect("track is never empty")
    }

    pub fn len(&self) -> usize {
        self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ts.is_empty()
    }

    fn interpolate(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) || t > self.t_max() {
            return Err(Error::Domain(format!(
                "t = {t} outside the tracked range [0, {}]",
                self.t_max()
            )));
        }
        let i = self.ts.partition_point(|&x| x <= t).clamp(1, self.ts.len() - 1);
        let (t0, t1) = (self.ts[i - 1], self.ts[i]);
        let (a0, a1) = (self.args[i - 1], self.args[i]);
        if t1 == t0 {
            return Ok(a0);
        }
        Ok(a0 + (a1 - a0) * (t - t0) / (t1 - t0))
    }

    /// `arg ζ(b+it)`.
    pub fn arg(&self, t: f64) -> Result<f64> {
        self.arg_of(&Zeta, t)
    }

    /// Argument of `src(b+it)`; `src` must be the source the track was built from.
    pub fn arg_of<S: PhaseSource + ?Sized>(&self, src: &S, t: f64) -> Result<f64> {
        let reference = self.interpolate(t)?;
        let v = src.value(Complex64::new(self.b, t))?;
        Ok(snap(reference, v))
    }
}

fn march<S: PhaseSource + ?Sized>(
    src: &S,
    b: f64,
    start: f64,
    start_arg: f64,
    start_val: Complex64,
    stop: f64,
) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let dir = if stop >= start { 1.0 } else { -1.0 };
    let mut t = start;
    let mut arg = start_arg;
    let mut v = start_val;
    let mut h = TRACK_MAX_STEP;
    while (stop - t) * dir > 0.0 {
        let step = h.min((stop - t).abs());
        let next = if step == (stop - t).abs() { stop } else { t + dir * step };
        let s = Complex64::new(b, next);
        let w = src.value(s)?;
        let inc = (w / v).arg();
        if inc.abs() >= FRAC_PI_4 {
            h *= 0.5;
            if h < TRACK_MIN_STEP {
                return Err(Error::PathThroughZero {
                    re: b,
                    im: next,
                    distance: h,
                });
            }
            continue;
        }
        guard(src, s, w)?;
        arg += inc;
        t = next;
        v = w;
        let snapped = snap(arg, v);
        arg = snapped;
        out.push((t, arg));
        if inc.abs() < FRAC_PI_4 / 4.0 {
            h = (h * 1.5).min(TRACK_MAX_STEP);
        }
    }
    Ok(out)
}
