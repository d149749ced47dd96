//! Cross-check via the logarithmic derivative, entirely in exact rationals.
//!
//! log G(q) = sum_{m>=1} (1/m) [ q^m/(1-q^(4m)) * ... ] expands, factor by
//! factor, as
//!
//!   log 1/(1-q^p) = sum_{j>=1} q^(pj)/j
//!   log 1/(1+q^p) = sum_{j>=1} (-1)^j q^(pj)/j
//!
//! over p = 1,5,9,... (plus signs in the product) and p = 3,7,11,...
//! (minus signs).  Writing p = m and collecting q^(m(2j+1)) style indices is
//! unnecessary: we accumulate l[k] directly.  Then the exponential recurrence
//!
//!   n e[n] = sum_{k=1}^{n} k l[k] e[n-k],  e[0] = 1
//!
//! must reproduce the integer coefficients.  This exercises a completely
//! different algebraic route than the in-place divisor updates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use series_engine::expand_g;

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn exponential_of_log_series_matches() {
    const N: usize = 200;
    let mut l = vec![BigRational::zero(); N + 1];

    // parts congruent to 1 mod 4 contribute log 1/(1-q^p)
    let mut p = 1usize;
    while p <= N {
        let mut j = 1usize;
        while p * j <= N {
            l[p * j] += big(1) / big(j as i64);
            j += 1;
        }
        p += 4;
    }
    // parts congruent to 3 mod 4 contribute log 1/(1+q^p)
    let mut p = 3usize;
    while p <= N {
        let mut j = 1usize;
        while p * j <= N {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            l[p * j] += big(sign) / big(j as i64);
            j += 1;
        }
        p += 4;
    }

    let mut e = vec![BigRational::zero(); N + 1];
    e[0] = BigRational::one();
    for n in 1..=N {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            if !l[k].is_zero() && !e[n - k].is_zero() {
                acc += big(k as i64) * &l[k] * &e[n - k];
            }
        }
        e[n] = acc / big(n as i64);
    }

    let g = expand_g(N);
    for n in 0..=N {
        assert!(e[n].is_integer(), "e[{n}] is not an integer");
        assert_eq!(
            e[n].to_integer(),
            g.coeff(n).clone(),
            "mismatch at n={n}"
        );
    }
}
