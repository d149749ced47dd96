//! Zeta-type enclosures: zeta(s) at integer s >= 2, the Hurwitz sum
//! sum 1/(m+a)^2, and the factorial-over-(2 pi)^n envelope that dominates
//! Bernoulli polynomials on [0, 1].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};
use rigor_interval::{pi, Dyadic, Interval, Prec};

use crate::bernoulli::bernoulli_number;
use crate::{rat, rat_to_interval, SfError};

/// Enclosure of T(y) = sum_{k>=0} (y+k)^{-s} for integer s >= 2 and y >= 8,
/// by effective Euler-Maclaurin:
///
///   T(y) = y^{1-s}/(s-1) + y^{-s}/2
///          + sum_{j=1}^{J} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * y^{-(s+2j-1)}
///          + R_J.
///
/// f(u) = (y+u)^{-s} has every even derivative positive on [0, inf), so the
/// remainder R_J is bounded in magnitude by the first omitted term and has
/// its sign; the hull of that term with 0 is added to the enclosure.
fn inverse_power_tail(s: u32, y: &Interval, p: Prec) -> Interval {
    assert!(s >= 2, "tail formula needs s >= 2");
    assert!(y.lo() >= &Dyadic::from_i64(8), "tail formula wants y >= 8");
    let w = p.plus(32);
    let s_i = s as i32;
    let head = y
        .pow_int(1 - s_i, w)
        .expect("y > 0")
        .div_i64(s as i64 - 1, w)
        .expect("s >= 2")
        .add(&y.pow_int(-s_i, w).expect("y > 0").scale2(-1), w);
    let y2inv = y.pow_int(-2, w).expect("y > 0");
    let mut ypow = y.pow_int(-s_i - 1, w).expect("y > 0");
    let mut pprod = BigInt::from(s); // s(s+1)...(s+2j-2), here j = 1
    let mut fact = BigInt::from(2); // (2j)!
    let mut sum = head;
    let mut prev_mag: Option<Dyadic> = None;
    let mut j = 1u64;
    loop {
        let coeff = bernoulli_number(2 * j as usize)
            * BigRational::new(pprod.clone(), fact.clone());
        let term = rat_to_interval(&coeff, w).mul(&ypow, w);
        let mag = term.abs_upper();
        let shrinking = prev_mag.as_ref().map_or(true, |pm| mag < *pm);
        let tiny = mag
            .mag_exp()
            .map_or(true, |m| m < -(w.get() as i64) - 8);
        if !shrinking || tiny {
            // this term is the first omitted one; it brackets the remainder
            let lo = term.lo().min_val(&Dyadic::zero());
            let hi = term.hi().max_val(&Dyadic::zero());
            sum = sum.add(&Interval::new(lo, hi), w);
            return sum.round_to(p);
        }
        sum = sum.add(&term, w);
        prev_mag = Some(mag);
        j += 1;
        pprod *= BigInt::from(s as u64 + 2 * j - 3) * BigInt::from(s as u64 + 2 * j - 2);
        fact *= BigInt::from(2 * j - 1) * BigInt::from(2 * j);
        ypow = ypow.mul(&y2inv, w);
        assert!(j < 100_000, "Euler-Maclaurin tail failed to terminate");
    }
}

/// Enclosure of zeta(s) for integer s >= 2.
pub fn zeta_int(s: u32, p: Prec) -> Interval {
    assert!(s >= 2, "zeta enclosure needs s >= 2");
    let w = p.plus(16);
    let m = 24.max(w.get() as i64 / 6);
    let mut sum = Interval::one(); // k = 1 term
    for k in 2..m {
        let kn = BigInt::from(k).pow(s);
        sum = sum.add(&Interval::from_big_ratio(&BigInt::one(), &kn, w).unwrap(), w);
    }
    sum.add(&inverse_power_tail(s, &Interval::from_i64(m), w), w)
        .round_to(p)
}

/// Upper enclosure of max_{0<=x<=1} |B_n(x)|, as 2 zeta(n) n! / (2 pi)^n.
pub fn lehmer_bound(n: u32, p: Prec) -> Interval {
    assert!(n >= 2, "envelope bound needs n >= 2");
    let w = p.plus(16);
    let z = zeta_int(n, w);
    let mut fact = BigInt::one();
    for i in 2..=n as i64 {
        fact *= BigInt::from(i);
    }
    let two_pi_n = pi(w).scale2(1).pow_int(n as i32, w).expect("positive base");
    z.scale2(1)
        .mul(&Interval::from_bigint(&fact), w)
        .div(&two_pi_n, w)
        .expect("(2 pi)^n > 0")
        .round_to(p)
}

/// Enclosure of sum_{m>=0} 1/(m+a)^2 for rational 0 < a <= 1. Closed pi^2
/// forms at a = 1 and a = 1/2; otherwise a partial sum of exact rational
/// terms plus the Euler-Maclaurin tail.
pub fn hurwitz_zeta2(a: &BigRational, p: Prec) -> Result<Interval, SfError> {
    if !a.is_positive() || *a > BigRational::one() {
        return Err(SfError::UnsupportedArgument(format!(
            "hurwitz_zeta2 needs 0 < a <= 1, got {a}"
        )));
    }
    let w = p.plus(16);
    if *a == BigRational::one() {
        return Ok(pi(w).pow_int(2, w)?.div_i64(6, w)?.round_to(p));
    }
    if *a == rat(1, 2) {
        return Ok(pi(w).pow_int(2, w)?.scale2(-1).round_to(p));
    }
    let m = 24.max(w.get() as i64 / 4);
    let num = a.numer();
    let den = a.denom();
    let den2 = den * den;
    let mut sum = Interval::zero();
    for k in 0..m {
        let kd = BigInt::from(k) * den + num;
        sum = sum.add(&Interval::from_big_ratio(&den2, &(&kd * &kd), w)?, w);
    }
    let y = Interval::from_big_ratio(&(BigInt::from(m) * den + num), den, w)?;
    Ok(sum.add(&inverse_power_tail(2, &y, w), w).round_to(p))
}
