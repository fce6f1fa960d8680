//! Command-line front end.
//!
//! Machine formats print the shortest decimal that round-trips each `f64`,
//! so repeated runs are byte-identical (`--no-timing` zeroes the wall clock).

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arg::{arg_zeta, counting_n};
use crate::criteria::{
    default_alpha_grid, evaluate, full_equality_from, gamma_alpha_sweep, CriterionKind, CriterionResult,
    CriterionSpec, HypotheticalZero, SweepRow, DEFAULT_T_MAX, DEFAULT_TOL,
};
use crate::error::{Error, Result};
use crate::zeros::{load_zero_table, verify_zero_count, ZeroCache, ZeroTable, CACHE_ENV};
use crate::zeta::{self, ComplexPoint};

#[derive(Debug, Parser)]
#[command(name = "zeta-criteria", version, about = "Integral criteria for the Riemann zeta function")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub output: OutputFormat,

    /// Zero table to use instead of the cache (one ordinate per line).
    #[arg(long, global = true)]
    pub zeros_file: Option<PathBuf>,

    #[arg(long, global = true, env = CACHE_ENV, default_value = ".zeta-cache")]
    pub cache_dir: PathBuf,

    /// Report wall_ms as 0.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one of the zeta-family functions at a point.
    Eval(EvalArgs),
    /// Compute or import the zero ordinates up to a height and cache them.
    Zeros {
        #[arg(long)]
        up_to: f64,
    },
    /// Evaluate one criterion.
    Verify(CriterionArgs),
    /// Estimate γ(α) over a grid of α.
    Sweep(SweepArgs),
    /// Evaluate several named criteria.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Zeta,
    LogAbs,
    LogDeriv,
    HardyZ,
    Theta,
    Arg,
    LogGamma,
    CountingN,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub function: Function,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub sigma: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub t: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct CriterionArgs {
    /// eq3, eq6, eq10, eq14, eq16, eq17, theorem1, theorem1a, theorem2,
    /// theorem2a, volchkov or gamma-alpha.
    #[arg(long)]
    pub criterion: String,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Hypothetical zero `sigma,t[,order]`; may be repeated.
    #[arg(long = "hypothetical")]
    pub hypothetical: Vec<String>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated α values; defaults to 0, 0.05, …, 0.45.
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    #[arg(long, default_value_t = DEFAULT_T_MAX)]
    pub t_max: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, value_delimiter = ',', default_value = "eq3,eq6,eq10,eq16,eq14,eq17")]
    pub criteria: Vec<String>,
    /// Overrides every criterion's default t_max.
    #[arg(long)]
    pub t_max: Option<f64>,
}

/// Process exit status for a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// A residual exceeded its classification bound.
    Exceeded,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Exceeded => 2,
        }
    }
}

fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:e}")
    } else {
        "null".into()
    }
}

fn required(spec_kind: CriterionKind, name: &str, v: Option<f64>) -> Result<f64> {
    v.ok_or_else(|| Error::SpecViolation {
        criterion: spec_kind.cli_name(),
        constraint: format!("--{name} is required"),
    })
}

impl CriterionArgs {
    pub fn spec(&self) -> Result<CriterionSpec> {
        use CriterionKind::*;
        let name = self.criterion.as_str();
        let mut spec = if let Some(s) = CriterionSpec::named(name) {
            s
        } else {
            let kind = CriterionKind::from_cli_name(name)
                .ok_or_else(|| Error::Domain(format!("unknown criterion {name:?}")))?;
            let b = self.b.unwrap_or(0.5);
            match kind {
                TwoPole => CriterionSpec::two_pole(b, required(kind, "c", self.c)?, required(kind, "d", self.d)?),
                TwoPoleLimit => CriterionSpec::two_pole_limit(b, required(kind, "c", self.c)?),
                DoublePole => CriterionSpec::double_pole(b, required(kind, "a", self.a)?),
                DoublePoleLimit => CriterionSpec::double_pole_limit(b),
                Volchkov => CriterionSpec::volchkov(),
                LineVsAxis => CriterionSpec::line_vs_axis(),
                DoubleIntegral => CriterionSpec::double_integral(),
                GammaAlpha => CriterionSpec::gamma_alpha(self.alpha.unwrap_or(0.0)),
            }
        };
        if let Some(t) = self.t_max {
            spec = spec.with_t_max(t);
        }
        if let Some(tol) = self.tol {
            spec = spec.with_tol(tol);
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn hypothetical_zeros(&self) -> Result<Vec<HypotheticalZero>> {
        self.hypothetical.iter().map(|s| parse_hypothetical(s)).collect()
    }
}

fn parse_hypothetical(s: &str) -> Result<HypotheticalZero> {
    let bad = || Error::Domain(format!("hypothetical zero must be sigma,t[,order], got {s:?}"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(bad());
    }
    let sigma: f64 = parts[0].parse().map_err(|_| bad())?;
    let t: f64 = parts[1].parse().map_err(|_| bad())?;
    let n: u32 = match parts.get(2) {
        Some(p) => p.parse().map_err(|_| bad())?,
        None => 1,
    };
    HypotheticalZero::new(sigma, t, n)
}

struct Context {
    zeros_file: Option<PathBuf>,
    cache: ZeroCache,
    timing: bool,
}

impl Context {
    fn table(&self, height: f64) -> Result<ZeroTable> {
        match &self.zeros_file {
            Some(p) => {
                let t = load_zero_table(p)?;
                t.require(height)?;
                Ok(t)
            }
            None => self.cache.table_up_to(height),
        }
    }

    fn elapsed_ms(&self, start: Instant) -> u128 {
        if self.timing {
            start.elapsed().as_millis()
        } else {
            0
        }
    }
}

/// Runs a parsed command line, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let ctx = Context {
        zeros_file: cli.zeros_file.clone(),
        cache: ZeroCache::new(cli.cache_dir.clone()),
        timing: !cli.no_timing,
    };
    let text = match &cli.command {
        Command::Eval(args) => run_eval(args, cli.output)?,
        Command::Zeros { up_to } => run_zeros(&ctx, *up_to, cli.output)?,
        Command::Verify(args) => {
            let spec = args.spec()?;
            let hypo = args.hypothetical_zeros()?;
            let row = verify_one(&ctx, &spec, &hypo)?;
            let outcome = classify(std::slice::from_ref(&row));
            write_out(out, &render_reports(&[row], cli.output))?;
            return Ok(outcome);
        }
        Command::Sweep(args) => {
            let alphas = args.alphas.clone().unwrap_or_else(default_alpha_grid);
            let table = ctx.table(args.t_max)?;
            let rows = gamma_alpha_sweep(&alphas, args.t_max, args.tol, &table)?;
            render_sweep(&rows, cli.output)
        }
        Command::Report(args) => {
            let mut rows = Vec::new();
            for name in &args.criteria {
                let spec = CriterionArgs {
                    criterion: name.clone(),
                    b: None,
                    c: None,
                    d: None,
                    a: None,
                    alpha: None,
                    t_max: args.t_max,
                    tol: None,
                    hypothetical: Vec::new(),
                }
                .spec()?;
                rows.push(verify_one(&ctx, &spec, &[])?);
            }
            let outcome = classify(&rows);
            write_out(out, &render_reports(&rows, cli.output))?;
            return Ok(outcome);
        }
    };
    write_out(out, &text)?;
    Ok(Outcome::Ok)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn classify(rows: &[Report]) -> Outcome {
    if rows.iter().all(|r| r.result.passes()) {
        Outcome::Ok
    } else {
        Outcome::Exceeded
    }
}

struct Report {
    name: String,
    result: CriterionResult,
    hypothetical: bool,
    wall_ms: u128,
}

fn verify_one(ctx: &Context, spec: &CriterionSpec, hypo: &[HypotheticalZero]) -> Result<Report> {
    let table = ctx.table(spec.t_max)?;
    let start = Instant::now();
    let base = evaluate(spec, &table)?;
    let result = if hypo.is_empty() {
        base
    } else {
        full_equality_from(&base, hypo)?
    };
    Ok(Report {
        name: spec.kind.cli_name().to_string(),
        result,
        hypothetical: !hypo.is_empty(),
        wall_ms: ctx.elapsed_ms(start),
    })
}

fn params(spec: &CriterionSpec) -> Vec<(&'static str, f64)> {
    use CriterionKind::*;
    let mut p = vec![("b", spec.b)];
    match spec.kind {
        TwoPole => p.extend([("c", spec.c), ("d", spec.d)]),
        TwoPoleLimit | DoubleIntegral => p.push(("c", spec.c)),
        DoublePole => p.push(("a", spec.a)),
        GammaAlpha => p.push(("alpha", spec.alpha)),
        DoublePoleLimit | Volchkov | LineVsAxis => {}
    }
    p.push(("tol", spec.tol));
    p
}

fn render_reports(rows: &[Report], format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Json => {
            let objs: Vec<String> = rows.iter().map(report_json).collect();
            if objs.len() == 1 {
                s.push_str(&objs[0]);
            } else {
                s.push('[');
                s.push_str(&objs.join(","));
                s.push(']');
            }
            s.push('\n');
        }
        OutputFormat::Csv => {
            s.push_str("criterion,lhs,rhs,residual,quad_error,tail_bound,zeros_used,t_max,wall_ms\n");
            for r in rows {
                let c = &r.result;
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    r.name,
                    num(c.lhs),
                    num(c.rhs),
                    num(c.residual),
                    num(c.quad_error),
                    num(c.tail_bound),
                    c.zeros_used,
                    num(c.spec.t_max),
                    r.wall_ms
                );
            }
        }
        OutputFormat::Human => {
            for r in rows {
                let c = &r.result;
                let _ = writeln!(s, "{}", r.name);
                let ps: Vec<String> = params(&c.spec)
                    .iter()
                    .map(|(k, v)| if *k == "tol" { format!("{k}={v:e}") } else { format!("{k}={v}") })
                    .collect();
                let _ = writeln!(s, "  params      {}", ps.join(" "));
                let _ = writeln!(s, "  lhs         {:.15}", c.lhs);
                let _ = writeln!(s, "  rhs         {:.15}", c.rhs);
                let _ = writeln!(s, "  residual    {:.6e}", c.residual);
                let _ = writeln!(s, "  quad_error  {:.3e}", c.quad_error);
                let _ = writeln!(s, "  tail_bound  {:.3e}", c.tail_bound);
                if r.hypothetical {
                    let _ = writeln!(s, "  injected    {:.6e}", c.injected);
                    let _ = writeln!(s, "  adjusted    {:.6e}", c.adjusted_residual);
                }
                let _ = writeln!(s, "  zeros_used  {}", c.zeros_used);
                let _ = writeln!(s, "  t_max       {}", c.spec.t_max);
                let _ = writeln!(s, "  wall_ms     {}", r.wall_ms);
                let verdict = if c.passes() { "within bound" } else { "EXCEEDS bound" };
                let _ = writeln!(s, "  status      {verdict} ({:.3e})", c.bound());
            }
        }
    }
    s
}

fn report_json(r: &Report) -> String {
    let c = &r.result;
    let ps: Vec<String> = params(&c.spec)
        .iter()
        .map(|(k, v)| format!("\"{k}\":{}", num(*v)))
        .collect();
    let mut s = format!(
        "{{\"criterion\":\"{}\",\"params\":{{{}}},\"lhs\":{},\"rhs\":{},\"residual\":{},\"quad_error\":{},\"tail_bound\":{},\"zeros_used\":{},\"t_max\":{},\"wall_ms\":{}",
        r.name,
        ps.join(","),
        num(c.lhs),
        num(c.rhs),
        num(c.residual),
        num(c.quad_error),
        num(c.tail_bound),
        c.zeros_used,
        num(c.spec.t_max),
        r.wall_ms
    );
    if r.hypothetical {
        let _ = write!(
            s,
            ",\"injected\":{},\"adjusted_residual\":{}",
            num(c.injected),
            num(c.adjusted_residual)
        );
    }
    s.push('}');
    s
}

fn render_sweep(rows: &[SweepRow], format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Csv => {
            s.push_str("alpha,gamma_alpha,abs_error_vs_gamma,t_max\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    num(r.alpha),
                    num(r.gamma_alpha),
                    num(r.abs_error_vs_gamma),
                    num(r.t_max)
                );
            }
        }
        OutputFormat::Json => {
            let objs: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{{\"alpha\":{},\"gamma_alpha\":{},\"abs_error_vs_gamma\":{},\"t_max\":{}}}",
                        num(r.alpha),
                        num(r.gamma_alpha),
                        num(r.abs_error_vs_gamma),
                        num(r.t_max)
                    )
                })
                .collect();
            let _ = writeln!(s, "[{}]", objs.join(","));
        }
        OutputFormat::Human => {
            let _ = writeln!(s, "{:>6}  {:>20}  {:>12}", "alpha", "gamma(alpha)", "|error|");
            for r in rows {
                let _ = writeln!(s, "{:>6.3}  {:>20.15}  {:>12.3e}", r.alpha, r.gamma_alpha, r.abs_error_vs_gamma);
            }
        }
    }
    s
}

fn run_zeros(ctx: &Context, up_to: f64, format: OutputFormat) -> Result<String> {
    let table = match &ctx.zeros_file {
        Some(p) => {
            let t = load_zero_table(p)?;
            t.require(up_to)?;
            let t = t.truncated(up_to);
            t.save(&ctx.cache.path())?;
            t
        }
        None => ctx.cache.table_up_to(up_to)?,
    };
    let verified = verify_zero_count(&table, up_to);
    if !verified {
        return Err(Error::CountMismatch {
            count: table.count_up_to(up_to),
            expected: counting_n(up_to)?,
            height: up_to,
        });
    }
    let count = table.count_up_to(up_to);
    let path = ctx.cache.path();
    Ok(match format {
        OutputFormat::Json => format!(
            "{{\"up_to\":{},\"count\":{},\"verified\":{},\"path\":\"{}\"}}\n",
            num(up_to),
            count,
            verified,
            path.display().to_string().replace('\\', "\\\\").replace('"', "\\\"")
        ),
        OutputFormat::Csv => format!("up_to,count,verified\n{},{},{}\n", num(up_to), count, verified),
        OutputFormat::Human => format!(
            "{count} zeros up to {up_to}, count verified against N(T)\ncache: {}\n",
            path.display()
        ),
    })
}

fn run_eval(args: &EvalArgs, format: OutputFormat) -> Result<String> {
    let (sigma, t, tol) = (args.sigma, args.t, args.tol);
    let (re, im, bound) = match args.function {
        Function::Zeta => {
            let r = zeta::zeta(ComplexPoint::new(sigma, t)?, tol)?;
            (r.value.re, r.value.im, Some(r.abs_error_bound))
        }
        Function::LogAbs => (zeta::log_abs_zeta(ComplexPoint::new(sigma, t)?, tol)?, 0.0, None),
        Function::LogDeriv => {
            let r = zeta::log_deriv_zeta(ComplexPoint::new(sigma, t)?, tol)?;
            (r.value.re, r.value.im, Some(r.abs_error_bound))
        }
        Function::HardyZ => (zeta::hardy_z(t, tol)?, 0.0, None),
        Function::Theta => (zeta::riemann_siegel_theta(t)?, 0.0, None),
        Function::Arg => (arg_zeta(sigma, t, tol)?, 0.0, None),
        Function::LogGamma => {
            let v = zeta::log_gamma(ComplexPoint::new(sigma, t)?)?;
            (v.re, v.im, None)
        }
        Function::CountingN => (counting_n(t)?, 0.0, None),
    };
    let name = args.function.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Ok(match format {
        OutputFormat::Json => {
            let b = bound.map(num).unwrap_or_else(|| "null".into());
            format!(
                "{{\"function\":\"{name}\",\"sigma\":{},\"t\":{},\"re\":{},\"im\":{},\"abs_error_bound\":{b}}}\n",
                num(sigma),
                num(t),
                num(re),
                num(im)
            )
        }
        OutputFormat::Csv => format!(
            "function,sigma,t,re,im,abs_error_bound\n{name},{},{},{},{},{}\n",
            num(sigma),
            num(t),
            num(re),
            num(im),
            bound.map(num).unwrap_or_default()
        ),
        OutputFormat::Human => {
            let mut s = format!("{name}({sigma} + {t}i) = {re:.15}");
            if im != 0.0 {
                let _ = write!(s, " {} {:.15}i", if im < 0.0 { "-" } else { "+" }, im.abs());
            }
            if let Some(b) = bound {
                let _ = write!(s, "  (error ≤ {b:.1e})");
            }
            s.push('\n');
            s
        }
    })
}
