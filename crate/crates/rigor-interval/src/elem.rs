//! Elementary functions on intervals: exp, log, cos, sin, atan.
//!
//! Each is a Taylor evaluation after argument reduction, with the truncation
//! tail added back as an explicit interval, so enclosures remain sound at
//! every precision. sin and atan exist to support the complex layer built on
//! top (rectangles need both components of e^{i y} and an argument function);
//! this is not a general transcendental library.

use crate::consts;
use crate::dyadic::Dyadic;
use crate::interval::{Interval, Prec};
use crate::IvError;

/// |x| may not exceed this for cos/sin: beyond it the pi-multiple reduction
/// would need disproportionate precision to stay meaningful.
const TRIG_ARG_CAP_MAG: i64 = 16; // 2^16

/// exp arguments are capped where the result exponent would leave i64 range
/// comfortably; nothing in this workspace gets near it.
const EXP_ARG_CAP_MAG: i64 = 31; // 2^31

/// e^x. Monotone, so the enclosure is [exp(lo) down, exp(hi) up].
pub fn exp(x: &Interval, p: Prec) -> Result<Interval, IvError> {
    if x.mag_upper().unwrap_or(i64::MIN) > EXP_ARG_CAP_MAG {
        return Err(IvError::ArgTooLarge("exp"));
    }
    if x.is_thin() {
        let e = exp_point(x.lo(), p);
        return Ok(e);
    }
    let lo = exp_point(x.lo(), p);
    let hi = exp_point(x.hi(), p);
    Ok(Interval::new(lo.lo().clone(), hi.hi().clone()))
}

/// Enclosure of e^d for a single dyadic d.
///
/// Reduce y = d / 2^s with |y| <= 1/2, run the Taylor series with an explicit
/// geometric tail, then square s times. Working precision grows with s since
/// each squaring doubles the relative error.
fn exp_point(d: &Dyadic, p: Prec) -> Interval {
    if d.is_zero() {
        return Interval::one();
    }
    let s = (d.mag_exp().unwrap() + 1).max(0) as u32;
    let w = p.plus(s + 24);
    let y = Interval::thin(d.scale2(-(s as i64)));
    // sum_j y^j / j!
    let mut term = Interval::one();
    let mut sum = Interval::one();
    let mut j: i64 = 0;
    loop {
        j += 1;
        term = term.mul(&y, w).div_i64(j, w).unwrap();
        sum = sum.add(&term, w);
        let small = term
            .abs_upper()
            .mag_exp()
            .map_or(true, |m| m < -(w.get() as i64) - 8);
        if small && j >= 2 {
            // |y| <= 1/2 so the next terms are dominated by a ratio-1/2
            // geometric series: tail <= |term| * |y| / (j+1) * 2 <= |term|
            let tail = term.abs_upper();
            sum = sum.add(&Interval::new(tail.neg(), tail), w);
            break;
        }
        assert!(j < 100_000, "exp series failed to converge");
    }
    let mut r = sum;
    for _ in 0..s {
        r = r.mul(&r, w);
    }
    r.round_to(p)
}

/// Natural logarithm. Requires lo > 0.
pub fn log(x: &Interval, p: Prec) -> Result<Interval, IvError> {
    if x.lo().signum() <= 0 {
        return Err(IvError::LogOfNonPositive);
    }
    if x.is_thin() {
        return Ok(log_point(x.lo(), p));
    }
    let lo = log_point(x.lo(), p);
    let hi = log_point(x.hi(), p);
    Ok(Interval::new(lo.lo().clone(), hi.hi().clone()))
}

/// log d for a single positive dyadic: write d = mu * 2^t with mu in
/// [3/4, 3/2), then log mu = 2 atanh((mu-1)/(mu+1)) with |u| <= 1/5.
fn log_point(d: &Dyadic, p: Prec) -> Interval {
    let w = p.plus(32);
    let mut t = d.mag_exp().unwrap(); // d in [2^(t-1), 2^t)
    let mut mu = d.scale2(-(t - 1)); // in [1, 2)
    let three_halves = Dyadic::new(num_bigint::BigInt::from(3), -1);
    if mu >= three_halves {
        mu = mu.scale2(-1);
        t += 1;
    }
    t -= 1; // d = mu * 2^t, mu in [3/4, 3/2)
    let mu = Interval::thin(mu);
    let num = mu.sub(&Interval::one(), w);
    let den = mu.add(&Interval::one(), w);
    let u = num.div(&den, w).expect("mu + 1 > 0");
    let log_mu = consts::atanh_taylor(&u, w).scale2(1);
    let ln2 = consts::ln2(w);
    ln2.mul_i64(t, w).add(&log_mu, w).round_to(p)
}

/// cos x. Arguments wider than a few periods return [-1, 1] directly; thin
/// arguments are reduced modulo 2 pi. Errors if |x| > 2^16.
pub fn cos(x: &Interval, p: Prec) -> Result<Interval, IvError> {
    if x.mag_upper().unwrap_or(i64::MIN) > TRIG_ARG_CAP_MAG {
        return Err(IvError::ArgTooLarge("cos"));
    }
    let w = p.plus(48);
    let full = Interval::new(Dyadic::from_i64(-1), Dyadic::from_i64(1));
    if x.width(w) >= Dyadic::from_i64(8) {
        return Ok(full); // more than a full period: no information
    }
    let ca = cos_point(x.lo(), w);
    let mut res = if x.is_thin() {
        ca
    } else {
        let cb = cos_point(x.hi(), w);
        let mut res = ca.hull(&cb);
        // extrema: cos(k pi) = +-1 whenever some integer k lies in x / pi.
        // Conservative: any integer possibly inside counts.
        let t = x.div(&consts::pi(w), w).expect("pi > 0");
        let k_lo = t.lo().floor_i64().ok_or(IvError::ArgTooLarge("cos"))?;
        let k_hi = t.hi().ceil_i64().ok_or(IvError::ArgTooLarge("cos"))?;
        for k in k_lo..=k_hi {
            let ki = Interval::from_i64(k);
            // k is relevant only if [t] actually may contain it
            if t.lo() <= ki.hi() && ki.lo() <= t.hi() {
                if k.rem_euclid(2) == 0 {
                    res = res.hull(&Interval::one());
                } else {
                    res = res.hull(&Interval::from_i64(-1));
                }
            }
        }
        res
    };
    // cos never leaves [-1, 1]; intersect to keep enclosures sane
    res = Interval::new(
        res.lo().max_val(full.lo()),
        res.hi().min_val(full.hi()),
    );
    Ok(res.round_to(p))
}

/// cos of a single dyadic after reduction by the nearest multiple of 2 pi.
fn cos_point(d: &Dyadic, p: Prec) -> Interval {
    let w = p.plus(16);
    let two_pi = consts::pi(w).scale2(1);
    let q = Interval::thin(d.clone()).div(&two_pi, w).expect("2 pi > 0");
    let k = ((q.lo().to_f64() + q.hi().to_f64()) / 2.0).round() as i64;
    let r = Interval::thin(d.clone()).sub(&two_pi.mul_i64(k, w), w);
    debug_assert!(r.abs_upper().to_f64() < 3.5);
    cos_taylor(&r, w).round_to(p)
}

/// Taylor cosine on a reduced interval |r| <= 3.5 or so.
fn cos_taylor(r: &Interval, p: Prec) -> Interval {
    let w = p.plus(16);
    let r2 = r.mul(r, w);
    let mut term = Interval::one();
    let mut sum = Interval::one();
    let mut j: i64 = 0;
    loop {
        j += 1;
        term = term
            .mul(&r2, w)
            .div_i64((2 * j - 1) * (2 * j), w)
            .unwrap()
            .neg();
        sum = sum.add(&term, w);
        // next term magnitude <= |term| * r2.hi / ((2j+1)(2j+2)); once that
        // ratio is <= 1/2 the tail is a geometric series
        let next_den = (2 * j + 1) * (2 * j + 2);
        let ratio_ok = r2.abs_upper() <= Dyadic::from_i64(next_den / 2);
        let small = term
            .abs_upper()
            .mag_exp()
            .map_or(true, |m| m < -(w.get() as i64) - 8);
        if ratio_ok && small {
            let tail = term.abs_upper(); // |next| * sum 2^-i <= |term|
            sum = sum.add(&Interval::new(tail.neg(), tail), w);
            return sum.round_to(p);
        }
        assert!(j < 100_000, "cos series failed to converge");
    }
}

/// sin x = cos(x - pi/2).
pub fn sin(x: &Interval, p: Prec) -> Result<Interval, IvError> {
    let w = p.plus(16);
    let half_pi = consts::pi(w).scale2(-1);
    cos(&x.sub(&half_pi, w), p)
}

/// atan x. Monotone increasing over all of R.
pub fn atan(x: &Interval, p: Prec) -> Result<Interval, IvError> {
    if x.is_thin() {
        return Ok(atan_point(x.lo(), p));
    }
    let lo = atan_point(x.lo(), p);
    let hi = atan_point(x.hi(), p);
    Ok(Interval::new(lo.lo().clone(), hi.hi().clone()))
}

fn atan_point(d: &Dyadic, p: Prec) -> Interval {
    if d.is_zero() {
        return Interval::zero();
    }
    let w = p.plus(32);
    let neg = d.signum() < 0;
    let u = Interval::thin(d.abs());
    let r = if u.lo() > &Dyadic::one() {
        // atan u = pi/2 - atan(1/u)
        let inv = u.recip(w).expect("u > 1");
        consts::pi(w).scale2(-1).sub(&atan_core(&inv, w), w)
    } else {
        atan_core(&u, w)
    };
    let r = if neg { r.neg() } else { r };
    r.round_to(p)
}

/// atan for 0 <= u <= 1: two angle halvings u <- u / (1 + sqrt(1 + u^2))
/// bring u below tan(pi/16) < 0.2, then the alternating series applies.
fn atan_core(u: &Interval, p: Prec) -> Interval {
    let w = p.plus(16);
    let mut v = u.clone();
    for _ in 0..2 {
        let root = v.mul(&v, w).add(&Interval::one(), w).sqrt(w).unwrap();
        v = v.div(&root.add(&Interval::one(), w), w).unwrap();
    }
    atan_taylor(&v, w).scale2(2).round_to(p)
}

/// Alternating atan series; requires |u| <= 1/2 so terms decrease and the
/// truncation error is bounded by the first omitted term.
pub(crate) fn atan_taylor(u: &Interval, p: Prec) -> Interval {
    assert!(
        u.abs_upper() <= Dyadic::new(num_bigint::BigInt::from(1), -1),
        "atan_taylor needs |u| <= 1/2"
    );
    let w = p.plus(16);
    let u2 = u.mul(u, w);
    let mut power = u.clone();
    let mut sum = u.clone();
    let mut i: i64 = 0;
    loop {
        i += 1;
        power = power.mul(&u2, w);
        let term = power.div_i64(2 * i + 1, w).unwrap();
        sum = if i % 2 == 1 {
            sum.sub(&term, w)
        } else {
            sum.add(&term, w)
        };
        let small = term
            .abs_upper()
            .mag_exp()
            .map_or(true, |m| m < -(w.get() as i64) - 8);
        if small {
            let tail = power.abs_upper(); // next term < |power * u^2| < |power|
            sum = sum.add(&Interval::new(tail.neg(), tail), w);
            return sum.round_to(p);
        }
        assert!(i < 100_000, "atan series failed to converge");
    }
}
