//! Exact truncated power series over big integers.
//!
//! Expands the product
//!
//!   G(q) = prod_{n>=0} 1/((1 - q^{4n+1})(1 + q^{4n+3}))
//!
//! to any order, with every coefficient an exact integer, and scans the
//! result for negative coefficients. Each inverse factor is applied by the
//! in-place recurrence c[n] +-= c[n - p] (ascending n), so no big-integer
//! division or generic series inversion is ever needed.
//!
//! A framed binary cache with an integrity hash lets downstream tools reuse
//! long expansions.

mod cache;
mod series;

pub use cache::{read_cache, write_cache, CacheError};
pub use series::{
    expand_g, expand_inverse_pochhammer, scan_nonnegative, series_mul, FactorSign,
    PochhammerFactor, QSeries, ScanOutcome,
};

#[derive(thiserror::Error, Debug)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
}
