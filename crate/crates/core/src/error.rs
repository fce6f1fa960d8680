use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zeta has a pole at s = 1")]
    PoleAtOne,

    #[error("tolerance {requested:e} cannot be certified (best achievable {achievable:e})")]
    ToleranceUnachievable { requested: f64, achievable: f64 },

    #[error("log of zeta requested at a numerical zero s = {re} + {im}i")]
    LogOfZero { re: f64, im: f64 },

    #[error("zeta vanishes numerically at s = {re} + {im}i; log-derivative undefined")]
    ZeroDenominator { re: f64, im: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("Z({t}) is not real: imaginary residue {residue:e}")]
    NotReal { t: f64, residue: f64 },

    #[error("phase path passes within {distance:e} of a zero near s = {re} + {im}i")]
    PathThroughZero { re: f64, im: f64, distance: f64 },

    #[error("counting function at x = {x} is {value}, not close to an integer")]
    UnwrapInconsistent { x: f64, value: f64 },

    #[error("zero search up to {height}: found {found} zeros, counting function expects {expected}")]
    MissedZero { height: f64, found: usize, expected: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: ordinate {value} does not exceed the previous one")]
    NotMonotone { line: usize, value: f64 },

    #[error("table holds {count} ordinates up to {height}, counting function gives {expected}")]
    CountMismatch { count: usize, expected: f64, height: f64 },

    #[error("adaptive quadrature on [{a}, {b}] did not converge (estimate {estimate:e})")]
    NonConvergent { a: f64, b: f64, estimate: f64 },

    #[error("unsupported kernel: {0}")]
    UnsupportedKernel(String),

    #[error("integrand does not have a simple symmetric pole at {pole}")]
    NotSimplePole { pole: f64 },

    #[error("{criterion} constraint violated: {constraint}")]
    SpecViolation { criterion: &'static str, constraint: String },

    #[error("zero table reaches {height}, but {required} is required")]
    InsufficientZeroTable { height: f64, required: f64 },

    #[error("neither sign variant matches within {tolerance:e} (plus {plus:e}, minus {minus:e})")]
    Inconclusive { plus: f64, minus: f64, tolerance: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
