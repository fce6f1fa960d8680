//! Zero ordinates on the critical line: search, import, caching and the
//! completeness check against the counting function.
//!
//! The search evaluates Hardy's `Z` at Gram points `θ(g_n) = nπ`. Between two
//! consecutive "good" Gram points (`(-1)^n Z(g_n) > 0`) a Rosser block is
//! expected to hold as many zeros as it spans Gram intervals; blocks that show
//! fewer sign changes are rescanned on a finer grid. Every bracket is then
//! refined by the Illinois variant of regula falsi.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::arg;
use crate::error::{Error, Result};
use crate::zeta;

/// Largest height accepted by [`find_zeros_up_to`].
pub const MAX_SEARCH_HEIGHT: f64 = 1.0e5;

/// Default refinement tolerance for located ordinates.
pub const DEFAULT_TOL: f64 = 1.0e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSource {
    Computed,
    Imported,
    Hypothetical,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroOrdinate {
    pub t: f64,
    pub multiplicity: u32,
    pub source: ZeroSource,
    pub sigma: f64,
}

impl ZeroOrdinate {
    pub fn on_line(t: f64, source: ZeroSource) -> Self {
        Self {
            t,
            multiplicity: 1,
            source,
            sigma: 0.5,
        }
    }
}

/// Critical-line zeros, sorted, complete up to `height`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<ZeroOrdinate>,
    ts: Vec<f64>,
    height: f64,
}

impl ZeroTable {
    pub fn new(ordinates: Vec<ZeroOrdinate>, height: f64) -> Result<Self> {
        if !(height >= 0.0) || !height.is_finite() {
            return Err(Error::Domain(format!("invalid table height {height}")));
        }
        let mut prev = 0.0;
        for (i, z) in ordinates.iter().enumerate() {
            if z.source == ZeroSource::Hypothetical || z.sigma != 0.5 {
                return Err(Error::Domain(format!(
                    "entry {} is not a critical-line zero (sigma {}, {:?})",
                    i + 1,
                    z.sigma,
                    z.source
                )));
            }
            if z.multiplicity == 0 {
                return Err(Error::Domain(format!("entry {} has multiplicity 0", i + 1)));
            }
            if !z.t.is_finite() || !(z.t > prev) {
                return Err(Error::NotMonotone { line: i + 1, value: z.t });
            }
            if z.t > height {
                return Err(Error::Domain(format!(
                    "ordinate {} lies above the table height {height}",
                    z.t
                )));
            }
            prev = z.t;
        }
        let ts = ordinates.iter().map(|z| z.t).collect();
        Ok(Self {
            ordinates,
            ts,
            height,
        })
    }

    pub fn empty() -> Self {
        Self {
            ordinates: Vec::new(),
            ts: Vec::new(),
            height: 0.0,
        }
    }

    pub fn ordinates(&self) -> &[ZeroOrdinate] {
        &self.ordinates
    }

    /// The ordinates as plain numbers.
    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// `#{t_k ≤ x}`.
    pub fn count_up_to(&self, x: f64) -> usize {
        self.ts.partition_point(|&t| t <= x)
    }

    /// Ordinates strictly inside `(lo, hi)`.
    pub fn between(&self, lo: f64, hi: f64) -> &[f64] {
        let i = self.ts.partition_point(|&t| t <= lo);
        let j = self.ts.partition_point(|&t| t < hi);
        &self.ts[i..j.max(i)]
    }

    /// The same zeros cut down to a lower height.
    pub fn truncated(&self, height: f64) -> Self {
        let h = height.min(self.height);
        let n = self.count_up_to(h);
        Self {
            ordinates: self.ordinates[..n].to_vec(),
            ts: self.ts[..n].to_vec(),
            height: h,
        }
    }

    /// Fails unless the table reaches `required`.
    pub fn require(&self, required: f64) -> Result<()> {
        if self.height < required {
            return Err(Error::InsufficientZeroTable {
                height: self.height,
                required,
            });
        }
        Ok(())
    }

    /// Cache/import text: a `# height=` header and one ordinate per line,
    /// written in shortest round-trip form.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(20 * self.len() + 32);
        let _ = writeln!(out, "# height={}", self.height);
        for t in &self.ts {
            let _ = writeln!(out, "{t}");
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir)?;
            }
        }
        fs::write(path, self.to_text())?;
        Ok(())
    }
}

/// `true` iff `|#{t_k ≤ x} - N(x)| < 10⁻³`.
pub fn verify_zero_count(table: &ZeroTable, x: f64) -> bool {
    if !(x > 0.0) || x > table.height() {
        return false;
    }
    match arg::counting_n(x) {
        Ok(n) => (table.count_up_to(x) as f64 - n).abs() < 1.0e-3,
        Err(_) => false,
    }
}

/// Parses the one-ordinate-per-line format. Blank lines and `#` comments are
/// skipped; a `# height=T` comment sets the completeness height, which
/// otherwise defaults to the last ordinate. Non-empty tables are checked
/// against the counting function at their height.
pub fn parse_zero_table(text: &str) -> Result<ZeroTable> {
    let mut header: Option<f64> = None;
    let mut ts: Vec<f64> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("height=") {
                let h: f64 = value.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("bad height header {value:?}"),
                })?;
                if !(h >= 0.0) || !h.is_finite() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("bad height {h}"),
                    });
                }
                header = Some(h);
            }
            continue;
        }
        let t: f64 = line.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("expected a decimal ordinate, found {line:?}"),
        })?;
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("ordinate must be positive and finite, found {line}"),
            });
        }
        if let Some(&prev) = ts.last() {
            if t <= prev {
                return Err(Error::NotMonotone { line: lineno, value: t });
            }
        }
        ts.push(t);
    }
    let top = ts.last().copied().unwrap_or(0.0);
    let height = header.unwrap_or(top);
    if top > height {
        return Err(Error::Parse {
            line: 0,
            message: format!("ordinate {top} exceeds declared height {height}"),
        });
    }
    if height > 0.0 {
        // Stored ordinates are rounded, so when the height is the top zero
        // itself the count is taken just above it.
        let x = if header.is_some() && height > top { height } else { top + 1.0e-6 };
        let expected = arg::counting_n(x)?;
        let count = ts.partition_point(|&t| t <= x);
        if (count as f64 - expected).abs() >= 1.0e-3 {
            return Err(Error::CountMismatch {
                count,
                expected,
                height: x,
            });
        }
    }
    let ordinates = ts
        .iter()
        .map(|&t| ZeroOrdinate::on_line(t, ZeroSource::Imported))
        .collect();
    ZeroTable::new(ordinates, height)
}

pub fn load_zero_table(path: &Path) -> Result<ZeroTable> {
    parse_zero_table(&fs::read_to_string(path)?)
}

/// Gram point `g_n`, `θ(g_n) = nπ`, for `n ≥ -1`, by Newton iteration from
/// `guess` with `θ'(t) ≈ ln(t/2π)/2`.
pub fn gram_point(n: i64, guess: f64) -> Result<f64> {
    if n < -1 {
        return Err(Error::Domain(format!("Gram points are indexed from -1, got {n}")));
    }
    let target = n as f64 * PI;
    let mut t = guess.max(9.0);
    for _ in 0..60 {
        let slope = 0.5 * (t / (2.0 * PI)).ln().max(0.05);
        let step = (zeta::theta_unchecked(t) - target) / slope;
        t = (t - step).max(7.0);
        if step.abs() <= 1.0e-12 * t {
            return Ok(t);
        }
    }
    Err(Error::Domain(format!("Gram point {n} did not converge")))
}

fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Root of `Z` in a sign-change bracket, to `|Δt| ≤ tol`.
fn refine(mut lo: f64, mut flo: f64, mut hi: f64, mut fhi: f64, tol: f64) -> Result<f64> {
    let mut side = 0i8;
    let mut last = f64::NAN;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mut x = (lo * fhi - hi * flo) / (fhi - flo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let close = (x - last).abs() < tol;
        last = x;
        let fx = zeta::hardy_z_working(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if sign(fx) == sign(fhi) {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        } else {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        }
        // Once the iterates stall, probe half a tolerance past the latest
        // one to close the bracket from the other side.
        if close && hi - lo > tol {
            let probe = if side == 1 { x - 0.5 * tol } else { x + 0.5 * tol };
            if probe > lo && probe < hi {
                let fp = zeta::hardy_z_working(probe)?;
                if sign(fp) == sign(fhi) {
                    hi = probe;
                    fhi = fp;
                } else {
                    lo = probe;
                    flo = fp;
                }
            }
        }
    }
    if hi - lo > tol {
        return Err(Error::Domain(format!("root refinement stalled in [{lo}, {hi}]")));
    }
    Ok(if flo.abs() < fhi.abs() { lo } else { hi })
}

const MAX_BLOCK_DOUBLINGS: u32 = 10;

/// All ordinates of zeros of `ζ(1/2+it)` with `0 < t ≤ height`, refined to
/// `tol`, checked against `N(height)`.
pub fn find_zeros_up_to(height: f64, tol: f64) -> Result<ZeroTable> {
    if !(height > 0.0) || height > MAX_SEARCH_HEIGHT {
        return Err(Error::Domain(format!(
            "search height must lie in (0, {MAX_SEARCH_HEIGHT}], got {height}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }

    // Gram points from g_{-1} until a good one above `height`. No zero lies
    // below g_{-1} ≈ 9.67.
    let mut grams: Vec<(f64, f64)> = Vec::new();
    let mut n: i64 = -1;
    let mut guess = 9.7;
    loop {
        let g = gram_point(n, guess)?;
        let z = zeta::hardy_z_working(g)?;
        grams.push((g, z));
        let parity = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        if g > height && parity * z > 0.0 {
            break;
        }
        let slope = 0.5 * (g / (2.0 * PI)).ln().max(0.1);
        guess = g + PI / slope;
        n += 1;
    }
    let good: Vec<usize> = grams
        .iter()
        .enumerate()
        .filter(|(i, (_, z))| {
            let parity = if i % 2 == 1 { 1.0 } else { -1.0 };
            parity * z > 0.0
        })
        .map(|(i, _)| i)
        .collect();

    let mut brackets: Vec<(f64, f64, f64, f64)> = Vec::new();
    let first_good = good.first().copied().unwrap_or(0);
    let mut pairs: Vec<(usize, usize)> = good.windows(2).map(|w| (w[0], w[1])).collect();
    if first_good > 0 {
        pairs.insert(0, (0, first_good));
    }
    for (j, k) in pairs {
        let expected = k - j;
        let mut pts: Vec<(f64, f64)> = grams[j..=k].to_vec();
        let mut doublings = 0;
        loop {
            let changes = pts.windows(2).filter(|w| sign(w[0].1) * sign(w[1].1) < 0).count();
            if changes >= expected || pts[0].0 > height {
                break;
            }
            if doublings == MAX_BLOCK_DOUBLINGS {
                break;
            }
            let mut finer = Vec::with_capacity(2 * pts.len());
            for w in pts.windows(2) {
                finer.push(w[0]);
                let m = 0.5 * (w[0].0 + w[1].0);
                finer.push((m, zeta::hardy_z_working(m)?));
            }
            finer.push(*pts.last().expect("block has two ends"));
            pts = finer;
            doublings += 1;
        }
        for w in pts.windows(2) {
            if sign(w[0].1) * sign(w[1].1) < 0 && w[0].0 <= height {
                brackets.push((w[0].0, w[0].1, w[1].0, w[1].1));
            }
        }
    }

    let mut ts = Vec::with_capacity(brackets.len());
    for (lo, flo, hi, fhi) in brackets {
        let t = refine(lo, flo, hi, fhi, tol)?;
        if t <= height {
            ts.push(t);
        }
    }

    let expected = certify_count(height)?;
    if (ts.len() as u64) < expected {
        return Err(Error::MissedZero {
            height,
            found: ts.len(),
            expected,
        });
    }
    if ts.len() as u64 > expected {
        return Err(Error::CountMismatch {
            count: ts.len(),
            expected: expected as f64,
            height,
        });
    }
    let ordinates = ts
        .into_iter()
        .map(|t| ZeroOrdinate::on_line(t, ZeroSource::Computed))
        .collect();
    ZeroTable::new(ordinates, height)
}

/// `N(x)` as an integer, nudging `x` off a zero ordinate if needed.
fn certify_count(x: f64) -> Result<u64> {
    match arg::counting_n_integer(x) {
        Err(Error::PathThroughZero { .. }) => arg::counting_n_integer(x - 1.0e-7),
        other => other,
    }
}

/// Environment variable that overrides the cache directory.
pub const CACHE_ENV: &str = "ZETA_CRITERIA_CACHE_DIR";

/// On-disk cache of the largest zero table computed so far.
#[derive(Debug, Clone)]
pub struct ZeroCache {
    dir: PathBuf,
}

impl ZeroCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join("zeros.txt")
    }

    /// A table complete up to `height`, read from the cache when it reaches
    /// far enough and computed (and stored) otherwise.
    pub fn table_up_to(&self, height: f64) -> Result<ZeroTable> {
        let path = self.path();
        if path.exists() {
            if let Ok(table) = load_zero_table(&path) {
                if table.height() >= height {
                    return Ok(table.truncated(height));
                }
            }
        }
        let table = find_zeros_up_to(height, DEFAULT_TOL)?;
        table.save(&path)?;
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_points_start_where_expected() {
        let gm1 = gram_point(-1, 9.7).unwrap();
        assert!((gm1 - 9.666_908_056).abs() < 1e-6, "{gm1}");
        let g0 = gram_point(0, 17.0).unwrap();
        assert!((g0 - 17.845_599_5).abs() < 1e-6, "{g0}");
    }

    #[test]
    fn first_zero() {
        let t = find_zeros_up_to(15.0, 1e-11).unwrap();
        assert_eq!(t.len(), 1);
        assert!((t.ts()[0] - 14.134_725_141_734_693).abs() < 1e-9);
        assert!(find_zeros_up_to(10.0, 1e-10).unwrap().is_empty());
    }

    #[test]
    fn parse_small_file() {
        let t = parse_zero_table("14.134725142\n21.022039639\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.ordinates()[0].source, ZeroSource::Imported);
        let e = parse_zero_table("").unwrap();
        assert!(e.is_empty());
        assert_eq!(e.height(), 0.0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_zero_table("14.13\nabc\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_zero_table("21.02\n14.13\n"),
            Err(Error::NotMonotone { line: 2, .. })
        ));
        assert!(matches!(
            parse_zero_table("14.134725142\n25.010857580\n"),
            Err(Error::CountMismatch { .. })
        ));
    }

    #[test]
    fn hypothetical_entries_rejected() {
        let z = ZeroOrdinate {
            t: 20.0,
            multiplicity: 1,
            source: ZeroSource::Hypothetical,
            sigma: 0.7,
        };
        assert!(ZeroTable::new(vec![z], 30.0).is_err());
    }

    #[test]
    fn text_round_trip() {
        let t = find_zeros_up_to(40.0, 1e-10).unwrap();
        let back = parse_zero_table(&t.to_text()).unwrap();
        assert_eq!(back.ts(), t.ts());
        assert_eq!(back.height(), t.height());
    }
}
