//! Dense truncated power series and the inverse-Pochhammer expansions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::SeriesError;

/// Truncated power series with exact big-integer coefficients 0..=order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> QSeries {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        QSeries { order, coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> QSeries {
        assert!(!coeffs.is_empty(), "a series has at least the constant term");
        QSeries {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// One inverse factor family prod_{k>=0} (1 - sign q^{t k + r})^{-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochhammerFactor {
    pub r: u32,
    pub t: u32,
    pub sign: FactorSign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSign {
    Plus,
    Minus,
}

impl PochhammerFactor {
    pub fn new(r: u32, t: u32, sign: FactorSign) -> PochhammerFactor {
        assert!(0 < r && r <= t, "need 0 < r <= t");
        PochhammerFactor { r, t, sign }
    }
}

/// Multiply `coeffs` in place by (1 - sign q^p)^{-1}.
///
/// For sign = +1 the result d satisfies d = c + q^p d, i.e. ascending
/// d[n] = c[n] + d[n-p]; for sign = -1, d = c - q^p d. Ascending order makes
/// the already-updated entries exactly the d values the recurrence needs.
fn apply_inverse_factor(coeffs: &mut [BigInt], p: usize, sign: FactorSign) {
    for n in p..coeffs.len() {
        let (lo, hi) = coeffs.split_at_mut(n);
        match sign {
            FactorSign::Plus => hi[0] += &lo[n - p],
            FactorSign::Minus => hi[0] -= &lo[n - p],
        }
    }
}

/// Truncation to order N of prod_{k>=0} (1 - sign q^{t k + r})^{-1}.
pub fn expand_inverse_pochhammer(f: PochhammerFactor, n: usize) -> QSeries {
    let mut s = QSeries::one(n);
    let mut p = f.r as usize;
    while p <= n {
        apply_inverse_factor(&mut s.coeffs, p, f.sign);
        p += f.t as usize;
    }
    s
}

/// Exact truncated Cauchy product; both inputs must have equal order.
pub fn series_mul(a: &QSeries, b: &QSeries) -> Result<QSeries, SeriesError> {
    if a.order != b.order {
        return Err(SeriesError::OrderMismatch {
            left: a.order,
            right: b.order,
        });
    }
    let n = a.order;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().take(n + 1 - i).enumerate() {
            if !bj.is_zero() {
                coeffs[i + j] += ai * bj;
            }
        }
    }
    Ok(QSeries { order: n, coeffs })
}

/// The coefficients of G(q) = 1/((q; q^4)_inf (-q^3; q^4)_inf) to order N:
/// equal to the product of the (1,4,+) and (3,4,-) inverse expansions, but
/// computed by applying every factor to one vector, which needs only
/// big-integer additions.
pub fn expand_g(n: usize) -> QSeries {
    let mut s = QSeries::one(n);
    let mut p = 1usize;
    while p <= n {
        apply_inverse_factor(&mut s.coeffs, p, FactorSign::Plus);
        p += 4;
    }
    let mut p = 3usize;
    while p <= n {
        apply_inverse_factor(&mut s.coeffs, p, FactorSign::Minus);
        p += 4;
    }
    s
}

/// Outcome of a coefficient non-negativity scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    AllNonNegative,
    FirstNegativeAt(usize),
}

pub fn scan_nonnegative(s: &QSeries) -> ScanOutcome {
    for (n, c) in s.coeffs.iter().enumerate() {
        if c.is_negative() {
            return ScanOutcome::FirstNegativeAt(n);
        }
    }
    ScanOutcome::AllNonNegative
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn inverse_pochhammer_examples() {
        let a = expand_inverse_pochhammer(PochhammerFactor::new(1, 4, FactorSign::Plus), 5);
        assert_eq!(a.coeffs(), &ints(&[1, 1, 1, 1, 1, 2]));
        let b = expand_inverse_pochhammer(PochhammerFactor::new(3, 4, FactorSign::Minus), 6);
        assert_eq!(b.coeffs(), &ints(&[1, 0, 0, -1, 0, 0, 1]));
        let c = expand_inverse_pochhammer(PochhammerFactor::new(2, 7, FactorSign::Plus), 0);
        assert_eq!(c.coeffs(), &ints(&[1]));
    }

    #[test]
    fn mul_examples() {
        let a = QSeries::from_coeffs(ints(&[1, 1, 1]));
        let b = QSeries::from_coeffs(ints(&[1, -1, 0]));
        assert_eq!(series_mul(&a, &b).unwrap().coeffs(), &ints(&[1, 0, 0]));
        let id = QSeries::one(2);
        assert_eq!(series_mul(&id, &a).unwrap(), a);
        let c = QSeries::from_coeffs(ints(&[1, 1]));
        assert_eq!(series_mul(&c, &c).unwrap().coeffs(), &ints(&[1, 2]));
        let short = QSeries::one(1);
        assert!(matches!(
            series_mul(&a, &short),
            Err(SeriesError::OrderMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn expand_g_smallest_orders() {
        assert_eq!(expand_g(0).coeffs(), &ints(&[1]));
        assert_eq!(expand_g(7).coeffs(), &ints(&[1, 1, 1, 0, 0, 1, 2, 1]));
    }

    #[test]
    fn expand_g_equals_factor_product() {
        let n = 300;
        let g = expand_g(n);
        let a = expand_inverse_pochhammer(PochhammerFactor::new(1, 4, FactorSign::Plus), n);
        let b = expand_inverse_pochhammer(PochhammerFactor::new(3, 4, FactorSign::Minus), n);
        assert_eq!(g, series_mul(&a, &b).unwrap());
    }

    #[test]
    fn scan_outcomes() {
        let ok = QSeries::from_coeffs(ints(&[1, 0, 2]));
        assert_eq!(scan_nonnegative(&ok), ScanOutcome::AllNonNegative);
        let bad = QSeries::from_coeffs(ints(&[1, -1]));
        assert_eq!(scan_nonnegative(&bad), ScanOutcome::FirstNegativeAt(1));
    }
}
