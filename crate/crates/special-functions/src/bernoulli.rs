//! Exact Bernoulli numbers and polynomials over big rationals.
//!
//! Convention: B_1 = -1/2, i.e. the generating function z e^{xz}/(e^z - 1)
//! for B_n(x) with B_n = B_n(0). Numbers are memoized behind a mutex;
//! polynomials expand as B_n(x) = sum_k C(n,k) B_k x^{n-k}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

static TABLE: Lazy<Mutex<Vec<BigRational>>> =
    Lazy::new(|| Mutex::new(vec![BigRational::one()]));

/// C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den // exact: the falling factorial is divisible by k!
}

/// Exact B_n (B_1 = -1/2).
pub fn bernoulli_number(n: usize) -> BigRational {
    let mut t = TABLE.lock().unwrap();
    while t.len() <= n {
        let m = t.len();
        if m > 1 && m % 2 == 1 {
            t.push(BigRational::zero());
            continue;
        }
        // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
        let mut s = BigRational::zero();
        for (k, bk) in t.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            s += BigRational::from(binomial(m as u64 + 1, k as u64)) * bk;
        }
        let b = -s / BigRational::from(BigInt::from(m as i64 + 1));
        t.push(b);
    }
    t[n].clone()
}

/// Exact B_n(x).
pub fn bernoulli_polynomial(n: usize, x: &BigRational) -> BigRational {
    bernoulli_number(n); // fill the table up front
    let t = TABLE.lock().unwrap();
    let mut xpow = BigRational::one();
    let mut acc = BigRational::zero();
    for k in (0..=n).rev() {
        if !t[k].is_zero() {
            acc += BigRational::from(binomial(n as u64, k as u64)) * &t[k] * &xpow;
        }
        xpow *= x;
    }
    acc
}
