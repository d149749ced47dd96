//! Enclosures of the mathematical constants the bound checks need:
//! pi, log 2, Euler's gamma, Gamma(1/4).
//!
//! pi and log 2 are computed from scratch (Machin / atanh series with
//! explicit tails) and cross-checked against guarded literals. gamma and
//! Gamma(1/4) are literal backed: two independently sourced strings must
//! agree, each protected by a position-weighted digit checksum so a silent
//! edit cannot pass. Literal-backed enclosures bottom out at ~10^-60 width;
//! that is far below every tolerance in this workspace.

use std::collections::BTreeMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::elem::atan_taylor;
use crate::interval::{Interval, Prec};

const PI_LIT: &str = "3.1415926535897932384626433832795028841971693993751058209749446";
const PI_SUM: u32 = 9840;
const LN2_LIT: &str = "0.69314718055994530941723212145817656807550013436025525412068001";
const LN2_SUM: u32 = 6876;
const GAMMA_LIT: &str = "0.57721566490153286060651209008240243104215933593992359880576723";
const GAMMA_SUM: u32 = 8751;
// second source: the -integral of exp(-x) log x route
const GAMMA_LIT2: &str = "0.57721566490153286060651209008240243104215933593992";
const GAMMA_SUM2: u32 = 5153;
const G14_LIT: &str = "3.625609908221908311930685155867672002995167682880065467433378";
const G14_SUM: u32 = 8984;
// second source: the lemniscatic route Gamma(1/4) = sqrt((2 pi)^(3/2) / agm(1, sqrt 2))
const G14_LIT2: &str = "3.6256099082219083119306851558676720029951676828800";
const G14_SUM2: u32 = 5843;

fn digit_checksum(lit: &str) -> u32 {
    let mut sum: u64 = 0;
    let mut pos: u64 = 0;
    for c in lit.chars() {
        if let Some(d) = c.to_digit(10) {
            pos += 1;
            sum += (d as u64) * pos;
        }
    }
    (sum % 9973) as u32
}

fn frac_digits(lit: &str) -> u32 {
    lit.split_once('.').map_or(0, |(_, f)| f.len() as u32)
}

/// Enclosure of a constant printed round-to-nearest to its last digit.
fn checked_literal(lit: &str, checksum: u32, p: Prec) -> Interval {
    assert_eq!(
        digit_checksum(lit),
        checksum,
        "constant literal failed its checksum: {lit}"
    );
    let wp = p.plus(16);
    Interval::from_decimal_str(lit, wp)
        .expect("constant literal must parse")
        .widen_ulp10(frac_digits(lit), 1, wp)
}

fn assert_consistent(what: &str, a: &Interval, b: &Interval) {
    assert!(
        a.lo() <= b.hi() && b.lo() <= a.hi(),
        "inconsistent enclosures for {what}: {a} vs {b}"
    );
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Pi,
    Ln2,
    Gamma,
    GammaQuarter,
}

static CACHE: Lazy<Mutex<BTreeMap<(Kind, u32), Interval>>> =
    Lazy::new(|| Mutex::new(BTreeMap::new()));

fn cached(kind: Kind, p: Prec, build: impl FnOnce() -> Interval) -> Interval {
    if let Some(v) = CACHE.lock().unwrap().get(&(kind, p.get())) {
        return v.clone();
    }
    let v = build();
    CACHE
        .lock()
        .unwrap()
        .insert((kind, p.get()), v.clone());
    v
}

/// pi, via Machin's formula pi = 16 atan(1/5) - 4 atan(1/239).
pub fn pi(p: Prec) -> Interval {
    cached(Kind::Pi, p, || {
        let w = p.plus(32);
        let a = atan_taylor(&Interval::from_ratio(1, 5, w).unwrap(), w);
        let b = atan_taylor(&Interval::from_ratio(1, 239, w).unwrap(), w);
        let v = a.scale2(4).sub(&b.scale2(2), w).round_to(p);
        assert_consistent("pi", &v, &checked_literal(PI_LIT, PI_SUM, p));
        v
    })
}

/// log 2 = 2 atanh(1/3) = 2 sum_{i>=0} (1/3)^{2i+1} / (2i+1).
pub fn ln2(p: Prec) -> Interval {
    cached(Kind::Ln2, p, || {
        let w = p.plus(32);
        let u = Interval::from_ratio(1, 3, w).unwrap();
        let v = atanh_taylor(&u, w).scale2(1).round_to(p);
        assert_consistent("log 2", &v, &checked_literal(LN2_LIT, LN2_SUM, p));
        v
    })
}

/// Euler's constant gamma (literal backed).
pub fn euler_gamma(p: Prec) -> Interval {
    cached(Kind::Gamma, p, || {
        let a = checked_literal(GAMMA_LIT, GAMMA_SUM, p);
        let b = checked_literal(GAMMA_LIT2, GAMMA_SUM2, p);
        assert_consistent("gamma", &a, &b);
        a.round_to(p)
    })
}

/// Gamma(1/4) (literal backed).
pub fn gamma_quarter(p: Prec) -> Interval {
    cached(Kind::GammaQuarter, p, || {
        let a = checked_literal(G14_LIT, G14_SUM, p);
        let b = checked_literal(G14_LIT2, G14_SUM2, p);
        assert_consistent("Gamma(1/4)", &a, &b);
        a.round_to(p)
    })
}

/// atanh by its odd power series; requires |u| < 1.
/// Tail: sum_{i>I} |u|^{2i+1}/(2i+1) <= |u|^{2I+1} u^2 / (1 - u^2).
pub(crate) fn atanh_taylor(u: &Interval, p: Prec) -> Interval {
    let w = p.plus(16);
    assert!(
        u.abs_upper().mag_exp().unwrap_or(i64::MIN) <= 0,
        "atanh_taylor needs |u| < 1"
    );
    let u2 = u.mul(u, w);
    let one_minus = Interval::one().sub(&u2, w);
    assert!(one_minus.lo().signum() > 0, "atanh_taylor needs |u| < 1");
    let mut power = u.clone(); // u^{2i+1}
    let mut sum = u.clone();
    let mut i = 0u32;
    loop {
        i += 1;
        power = power.mul(&u2, w);
        let term = power.div_i64(2 * i as i64 + 1, w).unwrap();
        sum = sum.add(&term, w);
        let small = term
            .abs_upper()
            .mag_exp()
            .map_or(true, |m| m < -(w.get() as i64) - 8);
        if small {
            let tail = power
                .abs()
                .mul(&u2, w)
                .div(&one_minus, w)
                .unwrap()
                .abs_upper();
            let t = Interval::new(tail.neg(), tail);
            return sum.add(&t, w).round_to(p);
        }
        assert!(i < 100_000, "atanh series failed to converge");
    }
}
