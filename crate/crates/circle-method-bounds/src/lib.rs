//! Certified bounds for the circle-method analysis of
//! G(q) = 1/((q; q^4)oo (-q^3; q^4)oo) near the dominant pole q -> 1.
//!
//! Everything is phrased in the variable z = x + iy with q = e^{-z}, x > 0.
//! The building block is the kernel
//!
//!   B_{r,t}(z) = e^{-(r/t)z} / (z (1 - e^{-z})),
//!
//! whose Laurent coefficients are Bernoulli-polynomial values ([`laurent`]).
//! Sums sum_{m>=0} B_{r,t}((m+a)z) are approximated by a main term
//! F_a^{r,t}(z) with an explicit error majorant E_a^{r,t}(z) ([`approx`]);
//! the constants J in E come from a certified quadrature of |g''| for the
//! smooth remainders g ([`quadrature`]). On the major arc |y| < 30x these
//! pieces combine into a bound for Log G(q) ([`arcs`]); on the minor arc
//! the modulus of G is beaten down by trigonometric positivity constants
//! and a theta-transform estimate ([`minor`]); and the endgame compares a
//! Bessel lower bound against an explicit error budget E(n) for every n in
//! a scanned range ([`budget`]).
//!
//! All numeric claims are produced as [`BoundReport`]s whose verdicts come
//! from interval comparisons only: `Verified` and `Failed` are certified,
//! `Indeterminate` means the precision did not decide.

pub mod approx;
pub mod arcs;
pub mod budget;
pub mod complex;
pub mod laurent;
pub mod minor;
pub mod quadrature;

use rigor_interval::{Interval, IvError, Prec, Verdict};
use special_functions::SfError;
use thiserror::Error;

pub use approx::{brt_instance_check, eval_e, eval_f, kernel_value, DEFAULT_ORDER};
pub use arcs::{
    lemma_f_alpha0_form_check, lemma_f_check, lemma_f_combination, lemma_f_constants,
    log_g_direct, major_arc_check, LemmaFConstants,
};
pub use budget::{
    error_budget_e, exponent_gap_report, final_reduction_check, threshold_scan, ScanSummary,
};
pub use complex::CxInterval;
pub use laurent::{beta_rt, brt_laurent, LaurentCoeffs};
pub use minor::{
    alpha_m_margin_at, alpha_m_verify, eta_transform_bound, log_odd_product_direct,
    log_odd_product_transformed, minor_arc_final_constant, re_log_g, ALPHA_SQ,
};
pub use quadrature::j_g_quadrature;

#[derive(Debug, Error)]
pub enum CmbError {
    #[error("argument must lie strictly inside the disk of convergence")]
    OutOfDisk,
    #[error("point is not certified to lie on the major arc |y| < 30x")]
    NotOnMajorArc,
    #[error("unsupported arguments for this routine")]
    UnsupportedArguments,
    #[error("complex log needs a rectangle certifiably in Re z > 0")]
    LeftHalfPlaneLog,
    #[error("ordering undecidable at the working precision")]
    UndecidableOrdering,
    #[error(transparent)]
    Interval(#[from] IvError),
    #[error(transparent)]
    Special(#[from] SfError),
}

/// Side of the |y| = 30x cone a point z = x + iy falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcClass {
    Major,
    Minor,
}

/// A point z = x + iy on the integration contour, x = Re z > 0, |y| < pi.
///
/// `Major` means |y| < 30x is certified, `Minor` means 30x <= |y| < pi is
/// certified; a point whose side cannot be decided at the given precision
/// is rejected rather than guessed.
#[derive(Clone, Debug)]
pub struct ArcPoint {
    x: Interval,
    y: Interval,
    class: ArcClass,
}

impl ArcPoint {
    pub fn new(x: Interval, y: Interval, p: Prec) -> Result<ArcPoint, CmbError> {
        if !x.is_positive().is_verified() {
            return Err(CmbError::UnsupportedArguments);
        }
        let pi = rigor_interval::pi(p);
        let abs_y = y.abs();
        if !abs_y.lt(&pi).is_verified() {
            return Err(CmbError::UnsupportedArguments);
        }
        let cone = x.mul_i64(30, p);
        let class = match abs_y.lt(&cone) {
            Verdict::Verified => ArcClass::Major,
            _ => match cone.le(&abs_y) {
                Verdict::Verified => ArcClass::Minor,
                _ => return Err(CmbError::UndecidableOrdering),
            },
        };
        Ok(ArcPoint { x, y, class })
    }

    pub fn x(&self) -> &Interval {
        &self.x
    }

    pub fn y(&self) -> &Interval {
        &self.y
    }

    pub fn classification(&self) -> ArcClass {
        self.class
    }

    pub fn z(&self) -> CxInterval {
        CxInterval::new(self.x.clone(), self.y.clone())
    }
}
