//! Exact Laurent data of the kernel B_{r,t}(z) = e^{-Az}/(z(1-e^{-z})),
//! A = r/t.
//!
//! From z e^{(1-A)z}/(e^z - 1) = sum_{k>=0} B_k(1-A) z^k/k! one reads off
//!
//!   B_{r,t}(z) = sum_{n>=-2} c_n z^n,     c_n = B_{n+2}(1-A)/(n+2)!,
//!
//! so c_{-2} = 1 and c_{-1} = B_1(1-A) = 1/2 - A. The comparison series
//! replaces c_n for n >= N = 1 by the coefficients of the elementary
//! function c_{-1} e^{-Az}/z, namely
//!
//!   c*_n = (-A)^{n+1} c_{-1} / (n+1)!      (n >= 1),   c*_0 = c_0,
//!
//! and the remainder coefficients are b_n = c_n - c*_n (so b_0 = 0). All
//! of this is exact rational arithmetic; nothing here rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rigor_interval::{log, pi, Interval, Prec};
use special_functions::{bernoulli_polynomial, rat};

use crate::CmbError;

/// Exact Laurent coefficients c_n (n >= -2), comparison coefficients c*_n
/// and differences b_n (n >= 0) for one kernel B_{r,t}.
#[derive(Clone, Debug)]
pub struct LaurentCoeffs {
    r: i64,
    t: i64,
    c: Vec<BigRational>,      // index i holds c_{i-2}, i = 0..=max_n+2
    c_star: Vec<BigRational>, // index n, n = 0..=max_n
    b: Vec<BigRational>,      // index n, n = 0..=max_n
}

impl LaurentCoeffs {
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    /// A = r/t as an exact rational.
    pub fn a(&self) -> BigRational {
        rat(self.r, self.t)
    }

    pub fn max_n(&self) -> usize {
        self.b.len() - 1
    }

    /// c_n for -2 <= n <= max_n.
    pub fn c(&self, n: i64) -> &BigRational {
        assert!(n >= -2 && n <= self.max_n() as i64, "c_n out of range");
        &self.c[(n + 2) as usize]
    }

    /// c*_n for 0 <= n <= max_n.
    pub fn c_star(&self, n: usize) -> &BigRational {
        &self.c_star[n]
    }

    /// b_n = c_n - c*_n for 0 <= n <= max_n; b_0 = 0.
    pub fn b(&self, n: usize) -> &BigRational {
        &self.b[n]
    }
}

/// Exact Laurent data for B_{r,t} through z^max_n. Requires 0 < r <= t
/// and max_n >= 1.
pub fn brt_laurent(r: i64, t: i64, max_n: usize) -> Result<LaurentCoeffs, CmbError> {
    if r <= 0 || t < r || max_n < 1 {
        return Err(CmbError::UnsupportedArguments);
    }
    let a = rat(r, t);
    let one_minus_a = BigRational::one() - &a;
    let c_minus_1 = rat(1, 2) - &a;

    let mut c = Vec::with_capacity(max_n + 3);
    let mut factorial = BigRational::one();
    for k in 0..=(max_n + 2) {
        if k > 0 {
            factorial *= BigRational::from_integer(BigInt::from(k));
        }
        c.push(bernoulli_polynomial(k, &one_minus_a) / &factorial);
    }

    let mut c_star = Vec::with_capacity(max_n + 1);
    let mut b = Vec::with_capacity(max_n + 1);
    c_star.push(c[2].clone()); // c*_0 = c_0
    b.push(BigRational::zero());
    let mut pow = -a.clone(); // (-A)^{n+1} starts at n = 0 with -A
    let mut fact = BigRational::one(); // (n+1)! starts at 1! = 1
    for n in 1..=max_n {
        pow *= -&a;
        fact *= BigRational::from_integer(BigInt::from(n + 1));
        let star = &pow * &c_minus_1 / &fact;
        b.push(&c[n + 2] - &star);
        c_star.push(star);
    }
    Ok(LaurentCoeffs { r, t, c, c_star, b })
}

/// beta_{r,t} = log Gamma(r/t) - (1/2) log(2 pi), for (r,t) in
/// {(1,4), (3,4)} only. Gamma(3/4) comes from the reflection identity
/// Gamma(1/4) Gamma(3/4) = pi / sin(pi/4) = pi sqrt(2).
pub fn beta_rt(r: i64, t: i64, p: Prec) -> Result<Interval, CmbError> {
    let w = p.plus(32);
    let g4 = rigor_interval::gamma_quarter(w);
    let log_g4 = log(&g4, w)?;
    let half_log_2pi = log(&pi(w).scale2(1), w)?.scale2(-1);
    match (r, t) {
        (1, 4) => Ok(log_g4.sub(&half_log_2pi, w).round_to(p)),
        (3, 4) => {
            // log Gamma(3/4) = log pi + (1/2) log 2 - log Gamma(1/4)
            let log_pi = log(&pi(w), w)?;
            let half_log2 = rigor_interval::ln2(w).scale2(-1);
            let log_g34 = log_pi.add(&half_log2, w).sub(&log_g4, w);
            Ok(log_g34.sub(&half_log_2pi, w).round_to(p))
        }
        _ => Err(CmbError::UnsupportedArguments),
    }
}
