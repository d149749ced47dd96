//! Interval arithmetic that never lies.
//!
//! Dyadic endpoints (BigInt mantissa times a power of two) with directed
//! outward rounding, comparison verdicts that refuse to certify what the
//! enclosures cannot decide, and elementary functions with explicit Taylor
//! tails. Everything downstream (special functions, saddle-point bounds,
//! the threshold scan) is built from these primitives, so the containment
//! contract here is the soundness root of the whole workspace:
//!
//!   x in X, y in Y  ==>  x op y in X.op(Y, p)   for every precision p.
//!
//! Widths shrink as precision grows (dyadic grids nest), which is what makes
//! the Indeterminate-then-refine loop terminate meaningfully.

mod consts;
mod dyadic;
mod elem;
mod interval;
mod report;

pub use consts::{euler_gamma, gamma_quarter, ln2, pi};
pub use dyadic::{add_dir, div_dir, mul_dir, sqrt_dir, Dir, Dyadic};
pub use elem::{atan, cos, exp, log, sin};
pub use interval::{refine, Interval, Prec, Verdict};
pub use report::BoundReport;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IvError {
    #[error("precision {0} outside supported range [53, 2^20]")]
    PrecisionOutOfRange(u32),
    #[error("division by an interval containing zero")]
    DivisorContainsZero,
    #[error("square root of an interval with negative points")]
    SqrtOfNegative,
    #[error("logarithm of an interval with non-positive points")]
    LogOfNonPositive,
    #[error("{0} argument too large for sound reduction")]
    ArgTooLarge(&'static str),
    #[error("malformed decimal literal: {0}")]
    BadDecimalLiteral(String),
}
