//! Exact Bernoulli machinery and rigorous enclosures of the special
//! functions the bound checks need.
//!
//! - Bernoulli numbers B_n and polynomials B_n(x) as exact big rationals
//!   (convention B_1 = -1/2).
//! - lehmer_bound(n): enclosure of 2 zeta(n) n!/(2 pi)^n, which dominates
//!   |B_n(x)| on [0, 1].
//! - hurwitz_zeta2(a): sum_{m>=0} 1/(m+a)^2 for rational 0 < a <= 1, via
//!   closed pi^2 forms at a = 1, 1/2 and effective Euler-Maclaurin tails
//!   elsewhere.
//! - digamma_at(a): the two required points, psi(1) = -gamma and
//!   psi(1/2) = -2 log 2 - gamma.
//! - bessel_i_m34(x): the modified Bessel function I_{-3/4} on positive
//!   arguments, by its ascending series with a geometric tail bound.
//! - h_a_identity_check: certifies the exponential-sum identity
//!   sum_{m>=0} e^{-(m+a)x}/(m+a)
//!     + sum_{n>=0} B_{n+1}(a) (-x)^{n+1} / ((n+1) (n+1)!)
//!     = -log x - gamma - psi(a)   for 0 < x < 2 pi,
//!   used to pin down the logarithmic terms of the kernel sums.
//!
//! Everything returns intervals whose containment is inherited from the
//! rigor-interval kernel; truncation tails are always added to the
//! enclosure, never dropped.

use num_rational::BigRational;
use rigor_interval::{Interval, IvError, Prec};

mod bernoulli;
mod bessel;
mod digamma;
mod h_identity;
mod zeta;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, binomial};
pub use bessel::{bessel_i_m34, bessel_i_m34_with_order};
pub use digamma::digamma_at;
pub use h_identity::h_a_identity_check;
pub use zeta::{hurwitz_zeta2, lehmer_bound, zeta_int};

#[derive(thiserror::Error, Debug)]
pub enum SfError {
    #[error("argument outside the supported set: {0}")]
    UnsupportedArgument(String),
    #[error("argument must be strictly positive")]
    NonPositiveArgument,
    #[error("argument outside the convergence region: {0}")]
    ArgumentOutOfRange(String),
    #[error(transparent)]
    Interval(#[from] IvError),
}

/// Enclosure of an exact rational at precision p.
pub fn rat_to_interval(q: &BigRational, p: Prec) -> Interval {
    Interval::from_big_ratio(q.numer(), q.denom(), p).expect("reduced rational has nonzero denominator")
}

/// Shorthand for building a rational from two machine integers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
