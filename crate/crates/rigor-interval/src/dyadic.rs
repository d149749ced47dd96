//! Dyadic floating point: m * 2^e with an arbitrary-precision mantissa.
//!
//! Every inexact operation takes an explicit rounding direction, so interval
//! endpoints can always be pushed outward. A Dyadic is exact: rounding only
//! happens where an operation result does not fit in the requested number of
//! mantissa bits.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Rounding direction on the real line. `Down` rounds toward -infinity,
/// `Up` toward +infinity, regardless of sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dir {
    Down,
    Up,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Down => Dir::Up,
            Dir::Up => Dir::Down,
        }
    }
}

/// m * 2^e. Canonical form: m odd or zero; zero has e = 0.
#[derive(Clone, Debug)]
pub struct Dyadic {
    m: BigInt,
    e: i64,
}

impl Dyadic {
    pub fn new(m: BigInt, e: i64) -> Dyadic {
        if m.is_zero() {
            return Dyadic { m, e: 0 };
        }
        // strip trailing zero bits so equal values have equal representations
        let tz = m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            Dyadic {
                m: m >> tz,
                e: e + tz as i64,
            }
        } else {
            Dyadic { m, e }
        }
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            m: BigInt::zero(),
            e: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(m: BigInt) -> Dyadic {
        Dyadic::new(m, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// -1, 0, or +1.
    pub fn signum(&self) -> i32 {
        if self.m.is_zero() {
            0
        } else if self.m.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.m
    }

    pub fn exponent(&self) -> i64 {
        self.e
    }

    /// Bit length of the mantissa (0 for zero).
    pub fn bits(&self) -> u64 {
        self.m.bits()
    }

    /// Magnitude exponent: the unique k with 2^(k-1) <= |value| < 2^k.
    /// None for zero.
    pub fn mag_exp(&self) -> Option<i64> {
        if self.m.is_zero() {
            None
        } else {
            Some(self.e + self.m.bits() as i64)
        }
    }

    /// Multiply by 2^k (exact).
    pub fn scale2(&self, k: i64) -> Dyadic {
        if self.m.is_zero() {
            Dyadic::zero()
        } else {
            Dyadic {
                m: self.m.clone(),
                e: self.e + k,
            }
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            m: -self.m.clone(),
            e: self.e,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            m: self.m.abs(),
            e: self.e,
        }
    }

    /// Round to at most p mantissa bits in direction `dir`.
    pub fn round(&self, p: u32, dir: Dir) -> Dyadic {
        let bits = self.m.bits();
        if bits <= p as u64 {
            return self.clone();
        }
        let shift = (bits - p as u64) as i64;
        // BigInt >> floors (rounds toward -infinity), which is Dir::Down
        let q = &self.m >> shift as u64;
        let exact = (&q << shift as u64) == self.m;
        let q = if !exact && dir == Dir::Up { q + 1 } else { q };
        // the +1 can carry into p+1 bits; renormalize (carry leaves a
        // trailing zero, so the shift is exact)
        let mut r = Dyadic::new(q, self.e + shift);
        if r.m.bits() > p as u64 {
            let extra = (r.m.bits() - p as u64) as i64;
            r = Dyadic::new(&r.m >> extra as u64, r.e + extra);
        }
        r
    }

    /// Move one ulp (at precision p) in direction `dir`. Used to absorb a
    /// discarded far-smaller addend soundly.
    fn nudge(&self, p: u32, dir: Dir) -> Dyadic {
        let ulp_e = match self.mag_exp() {
            Some(k) => k - p as i64,
            None => -(p as i64),
        };
        let ulp = Dyadic::new(BigInt::from(1), ulp_e);
        let step = match dir {
            Dir::Down => ulp.neg(),
            Dir::Up => ulp,
        };
        add_exact(self, &step)
    }

    pub fn value_cmp(&self, other: &Dyadic) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // same nonzero sign: compare magnitude exponents first to keep
        // shifts bounded
        let (ka, kb) = (self.mag_exp().unwrap(), other.mag_exp().unwrap());
        if ka != kb {
            let mag = ka.cmp(&kb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        // equal msb position: exponent gap is bounded by the mantissa widths
        let gap = self.e - other.e;
        if gap >= 0 {
            (&self.m << gap as u64).cmp(&other.m)
        } else {
            self.m.cmp(&(&other.m << (-gap) as u64))
        }
    }

    pub fn min_val(&self, other: &Dyadic) -> Dyadic {
        if self.value_cmp(other) == Ordering::Greater {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn max_val(&self, other: &Dyadic) -> Dyadic {
        if self.value_cmp(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// Largest integer <= value, if it fits in i64.
    pub fn floor_i64(&self) -> Option<i64> {
        if self.m.is_zero() {
            return Some(0);
        }
        if self.mag_exp().unwrap() > 62 {
            return None;
        }
        let v = if self.e >= 0 {
            &self.m << self.e as u64
        } else {
            &self.m >> (-self.e) as u64 // floors, which is what we want
        };
        v.to_i64()
    }

    pub fn ceil_i64(&self) -> Option<i64> {
        self.neg().floor_i64().map(|v| -v)
    }

    /// Approximate conversion for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        if self.m.is_zero() {
            return 0.0;
        }
        // take the top 63 bits (a 64-bit magnitude cannot fit in i64)
        let bits = self.m.bits();
        let (top, e) = if bits > 63 {
            let sh = bits - 63;
            ((&self.m >> sh).to_i64().expect("63-bit value fits"), self.e + sh as i64)
        } else {
            (self.m.to_i64().expect("63-bit value fits"), self.e)
        };
        if e > 2000 {
            return if top > 0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if e < -2000 {
            // exact zero would be misleading for signed diagnostics
            return if top > 0 { 0.0 } else { -0.0 };
        }
        (top as f64) * 2f64.powi(e as i32)
    }
}

/// Exact sum; caller is responsible for the exponent gap being sane.
fn add_exact(a: &Dyadic, b: &Dyadic) -> Dyadic {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.e >= b.e {
        let m = (&a.m << (a.e - b.e) as u64) + &b.m;
        Dyadic::new(m, b.e)
    } else {
        let m = &a.m + (&b.m << (b.e - a.e) as u64);
        Dyadic::new(m, a.e)
    }
}

/// a + b rounded to p bits in direction `dir`. If the operands' scales are
/// too far apart for an exact sum to be worthwhile, the smaller one is
/// absorbed into a one-ulp nudge (sound for the requested direction).
pub fn add_dir(a: &Dyadic, b: &Dyadic, p: u32, dir: Dir) -> Dyadic {
    if a.is_zero() {
        return b.round(p, dir);
    }
    if b.is_zero() {
        return a.round(p, dir);
    }
    let (big, small) = if a.mag_exp().unwrap() >= b.mag_exp().unwrap() {
        (a, b)
    } else {
        (b, a)
    };
    let gap = big.mag_exp().unwrap() - small.mag_exp().unwrap();
    if gap > p as i64 + 8 {
        // |small| < one ulp of the rounded big value; drop it and nudge if
        // dropping moved against the rounding direction
        let r = big.round(p, dir);
        let drop_moves_down = small.signum() > 0;
        let sound = match dir {
            Dir::Down => drop_moves_down,
            Dir::Up => !drop_moves_down,
        };
        return if sound { r } else { r.nudge(p, dir) };
    }
    add_exact(a, b).round(p, dir)
}

/// a * b rounded to p bits (the product itself is exact).
pub fn mul_dir(a: &Dyadic, b: &Dyadic, p: u32, dir: Dir) -> Dyadic {
    Dyadic::new(&a.m * &b.m, a.e + b.e).round(p, dir)
}

/// a / b rounded to p bits; b must be nonzero.
pub fn div_dir(a: &Dyadic, b: &Dyadic, p: u32, dir: Dir) -> Dyadic {
    assert!(!b.is_zero(), "division by zero dyadic");
    if a.is_zero() {
        return Dyadic::zero();
    }
    let la = a.m.bits() as i64;
    let lb = b.m.bits() as i64;
    // scale the numerator so the integer quotient carries p + 3 bits
    let t = (lb - la + p as i64 + 3).max(0);
    let num = &a.m << t as u64;
    let (q, r) = num.div_rem(&b.m);
    let exact = r.is_zero();
    let positive = a.signum() * b.signum() > 0;
    // BigInt division truncates toward zero; fix up to floor/ceil
    let q = if exact {
        q
    } else {
        match dir {
            Dir::Down if !positive => q - 1,
            Dir::Up if positive => q + 1,
            _ => q,
        }
    };
    Dyadic::new(q, a.e - b.e - t).round(p, dir)
}

/// sqrt(a) rounded to p bits; a must be >= 0.
pub fn sqrt_dir(a: &Dyadic, p: u32, dir: Dir) -> Dyadic {
    assert!(a.signum() >= 0, "sqrt of negative dyadic");
    if a.is_zero() {
        return Dyadic::zero();
    }
    let mut m = a.m.clone();
    let mut e = a.e;
    if e.rem_euclid(2) == 1 {
        m <<= 1;
        e -= 1;
    }
    let l = m.bits() as i64;
    let t = ((p as i64 + 3) - l / 2).max(0);
    m <<= (2 * t) as u64;
    e -= 2 * t;
    let s = m.sqrt(); // floor square root
    let exact = &s * &s == m;
    let q = match dir {
        Dir::Down => s,
        Dir::Up => {
            if exact {
                s
            } else {
                s + 1
            }
        }
    };
    Dyadic::new(q, e / 2).round(p, dir)
}

/// a^n (n >= 1) rounded outward in `dir`, for a >= 0. Repeated squaring with
/// directed rounding at each step; monotone because all factors are >= 0.
pub fn pow_dir_nonneg(a: &Dyadic, n: u32, p: u32, dir: Dir) -> Dyadic {
    debug_assert!(a.signum() >= 0 && n >= 1);
    let w = p + 16;
    let mut base = a.round(w, dir);
    let mut acc: Option<Dyadic> = None;
    let mut k = n;
    loop {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(v) => mul_dir(&v, &base, w, dir),
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = mul_dir(&base, &base, w, dir);
    }
    acc.unwrap().round(p, dir)
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        // canonical representation makes structural equality value equality
        self.e == other.e && self.m == other.m
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.value_cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value_cmp(other)
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Dyadic", 2)?;
        s.serialize_field("mantissa", &self.m.to_string())?;
        s.serialize_field("exponent", &self.e)?;
        s.end()
    }
}

impl std::fmt::Display for Dyadic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(v), e)
    }

    #[test]
    fn canonical_form() {
        let x = d(8, 0);
        assert_eq!(x.mantissa(), &BigInt::from(1));
        assert_eq!(x.exponent(), 3);
        assert_eq!(d(0, 5), Dyadic::zero());
    }

    #[test]
    fn rounding_directions() {
        // 0b1011 = 11; to 3 bits: down -> 0b101*2 = 10, up -> 0b110*2 = 12
        let x = d(11, 0);
        assert_eq!(x.round(3, Dir::Down), d(10, 0));
        assert_eq!(x.round(3, Dir::Up), d(12, 0));
        let y = d(-11, 0);
        assert_eq!(y.round(3, Dir::Down), d(-12, 0));
        assert_eq!(y.round(3, Dir::Up), d(-10, 0));
        // carry renormalization: 0b1111 up to 3 bits = 0b10000
        assert_eq!(d(15, 0).round(3, Dir::Up), d(16, 0));
    }

    #[test]
    fn directed_division_brackets_quotient() {
        let a = d(1, 0);
        let b = d(3, 0);
        let lo = div_dir(&a, &b, 64, Dir::Down);
        let hi = div_dir(&a, &b, 64, Dir::Up);
        assert!(lo < hi);
        // 3*lo < 1 < 3*hi
        assert!(mul_dir(&lo, &b, 128, Dir::Down) < a);
        assert!(mul_dir(&hi, &b, 128, Dir::Up) > a);
        // negative quotient directions
        let lo = div_dir(&a.neg(), &b, 64, Dir::Down);
        let hi = div_dir(&a.neg(), &b, 64, Dir::Up);
        assert!(lo < hi && hi.signum() < 0);
    }

    #[test]
    fn sqrt_brackets() {
        let two = d(2, 0);
        let lo = sqrt_dir(&two, 80, Dir::Down);
        let hi = sqrt_dir(&two, 80, Dir::Up);
        assert!(mul_dir(&lo, &lo, 200, Dir::Up) < two);
        assert!(mul_dir(&hi, &hi, 200, Dir::Down) > two);
        assert_eq!(sqrt_dir(&d(4, 0), 80, Dir::Down), d(2, 0));
        assert_eq!(sqrt_dir(&d(4, 0), 80, Dir::Up), d(2, 0));
    }

    #[test]
    fn far_apart_addends_absorbed_soundly() {
        let big = d(1, 0);
        let tiny = d(1, -500);
        let lo = add_dir(&big, &tiny, 64, Dir::Down);
        let hi = add_dir(&big, &tiny, 64, Dir::Up);
        assert!(lo <= big && big <= hi);
        assert!(lo < hi || lo == big); // down may keep 1 exactly
        let lo2 = add_dir(&big, &tiny.neg(), 64, Dir::Down);
        assert!(lo2 < big);
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(d(7, -1).floor_i64(), Some(3)); // 3.5
        assert_eq!(d(7, -1).ceil_i64(), Some(4));
        assert_eq!(d(-7, -1).floor_i64(), Some(-4));
        assert_eq!(d(-7, -1).ceil_i64(), Some(-3));
        assert_eq!(d(6, -1).floor_i64(), Some(3));
    }
}
