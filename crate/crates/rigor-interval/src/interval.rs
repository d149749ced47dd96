//! Closed real intervals [lo, hi] with dyadic endpoints and outward rounding.
//!
//! The containment guarantee is the only contract: if x is in X and y is in
//! Y then x op y is in X.op(Y, p) for every precision p. Tightness is best
//! effort; correctness never depends on it.

use num_bigint::BigInt;
use serde::Serialize;

use crate::dyadic::{add_dir, div_dir, mul_dir, pow_dir_nonneg, sqrt_dir, Dir, Dyadic};
use crate::IvError;

/// Working precision in mantissa bits. At least 53 so every double is
/// representable; default 128.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Prec(u32);

impl Prec {
    pub const MIN: u32 = 53;
    pub const MAX: u32 = 1 << 20;
    pub const DEFAULT: Prec = Prec(128);
    /// Auto-refinement stops doubling at this precision.
    pub const REFINE_CAP: Prec = Prec(1024);

    pub fn new(bits: u32) -> Result<Prec, IvError> {
        if (Self::MIN..=Self::MAX).contains(&bits) {
            Ok(Prec(bits))
        } else {
            Err(IvError::PrecisionOutOfRange(bits))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Add guard bits (for internal working precision).
    pub fn plus(self, guard: u32) -> Prec {
        Prec((self.0 + guard).min(Self::MAX))
    }

    pub fn double(self) -> Prec {
        Prec((self.0 * 2).min(Self::MAX))
    }
}

impl Default for Prec {
    fn default() -> Self {
        Prec::DEFAULT
    }
}

/// Three-valued outcome of an interval comparison or a checked claim.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    /// The claim holds for every point of the enclosures.
    Verified,
    /// The claim fails for every point of the enclosures.
    Failed,
    /// The enclosures overlap; nothing is certified either way.
    Indeterminate,
}

impl Verdict {
    pub fn is_verified(self) -> bool {
        self == Verdict::Verified
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Verified => "Verified",
            Verdict::Failed => "Failed",
            Verdict::Indeterminate => "Indeterminate",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Interval {
        debug_assert!(lo <= hi, "inverted interval endpoints");
        Interval { lo, hi }
    }

    pub fn thin(d: Dyadic) -> Interval {
        Interval {
            lo: d.clone(),
            hi: d,
        }
    }

    pub fn zero() -> Interval {
        Interval::thin(Dyadic::zero())
    }

    pub fn one() -> Interval {
        Interval::thin(Dyadic::one())
    }

    pub fn from_i64(v: i64) -> Interval {
        Interval::thin(Dyadic::from_i64(v))
    }

    pub fn from_bigint(v: &BigInt) -> Interval {
        Interval::thin(Dyadic::from_bigint(v.clone()))
    }

    /// Enclosure of the exact rational n/d.
    pub fn from_ratio(n: i64, d: i64, p: Prec) -> Result<Interval, IvError> {
        Interval::from_big_ratio(&BigInt::from(n), &BigInt::from(d), p)
    }

    pub fn from_big_ratio(n: &BigInt, d: &BigInt, p: Prec) -> Result<Interval, IvError> {
        use num_traits::Zero;
        if d.is_zero() {
            return Err(IvError::DivisorContainsZero);
        }
        let (n, d) = if d < &BigInt::zero() {
            (-n, -d)
        } else {
            (n.clone(), d.clone())
        };
        let a = Dyadic::from_bigint(n);
        let b = Dyadic::from_bigint(d);
        Ok(Interval {
            lo: div_dir(&a, &b, p.get(), Dir::Down),
            hi: div_dir(&a, &b, p.get(), Dir::Up),
        })
    }

    /// Enclosure of a decimal literal like "-3.14159e-2". The string value
    /// itself is enclosed exactly (to precision p); use [`Interval::widen_ulp10`]
    /// if the literal is a rounded print of some other constant.
    pub fn from_decimal_str(s: &str, p: Prec) -> Result<Interval, IvError> {
        let bad = || IvError::BadDecimalLiteral(s.to_string());
        let s = s.trim();
        let (mant_str, exp10) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i64>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (int_part, frac_part) = match mant_str.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mant_str, ""),
        };
        if frac_part.contains(['+', '-']) {
            return Err(bad());
        }
        let digits: String = format!("{}{}", int_part, frac_part);
        if digits.is_empty() || digits == "-" || digits == "+" {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let k = frac_part.len() as i64 - exp10;
        // value = n / 10^k
        let ten = BigInt::from(10);
        if k >= 0 {
            let d = num_traits::pow(ten, k as usize);
            Interval::from_big_ratio(&n, &d, p)
        } else {
            let f = num_traits::pow(ten, (-k) as usize);
            Ok(Interval::from_bigint(&(n * f)))
        }
    }

    /// Widen by `count` units in the last of `digits` decimal places, on both
    /// sides. For literals printed round-to-nearest, count = 1 is sound.
    pub fn widen_ulp10(&self, digits: u32, count: u32, p: Prec) -> Interval {
        let ulp = Interval::from_big_ratio(
            &BigInt::from(count),
            &num_traits::pow(BigInt::from(10), digits as usize),
            p,
        )
        .expect("power of ten is nonzero");
        Interval {
            lo: add_dir(&self.lo, &ulp.hi.neg(), p.get(), Dir::Down),
            hi: add_dir(&self.hi, &ulp.hi, p.get(), Dir::Up),
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn is_thin(&self) -> bool {
        self.lo == self.hi
    }

    /// hi - lo, rounded up.
    pub fn width(&self, p: Prec) -> Dyadic {
        add_dir(&self.hi, &self.lo.neg(), p.get(), Dir::Up)
    }

    /// max(|lo|, |hi|) as a dyadic upper bound for |x|.
    pub fn abs_upper(&self) -> Dyadic {
        self.lo.abs().max_val(&self.hi.abs())
    }

    /// Magnitude exponent of the largest absolute value, None if [0,0].
    pub fn mag_upper(&self) -> Option<i64> {
        self.abs_upper().mag_exp()
    }

    pub fn contains_dyadic(&self, d: &Dyadic) -> bool {
        self.lo <= *d && *d <= self.hi
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_dyadic(&Dyadic::zero())
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min_val(&other.lo),
            hi: self.hi.max_val(&other.hi),
        }
    }

    pub fn round_to(&self, p: Prec) -> Interval {
        Interval {
            lo: self.lo.round(p.get(), Dir::Down),
            hi: self.hi.round(p.get(), Dir::Up),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn abs(&self) -> Interval {
        if self.lo.signum() >= 0 {
            self.clone()
        } else if self.hi.signum() <= 0 {
            self.neg()
        } else {
            Interval {
                lo: Dyadic::zero(),
                hi: self.lo.abs().max_val(&self.hi.abs()),
            }
        }
    }

    pub fn add(&self, rhs: &Interval, p: Prec) -> Interval {
        Interval {
            lo: add_dir(&self.lo, &rhs.lo, p.get(), Dir::Down),
            hi: add_dir(&self.hi, &rhs.hi, p.get(), Dir::Up),
        }
    }

    pub fn sub(&self, rhs: &Interval, p: Prec) -> Interval {
        self.add(&rhs.neg(), p)
    }

    pub fn mul(&self, rhs: &Interval, p: Prec) -> Interval {
        // endpoint products are exact, so min/max before rounding is sound
        let cands = [
            mul_dir(&self.lo, &rhs.lo, u32::MAX, Dir::Down),
            mul_dir(&self.lo, &rhs.hi, u32::MAX, Dir::Down),
            mul_dir(&self.hi, &rhs.lo, u32::MAX, Dir::Down),
            mul_dir(&self.hi, &rhs.hi, u32::MAX, Dir::Down),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            lo = lo.min_val(c);
            hi = hi.max_val(c);
        }
        Interval {
            lo: lo.round(p.get(), Dir::Down),
            hi: hi.round(p.get(), Dir::Up),
        }
    }

    pub fn mul_i64(&self, k: i64, p: Prec) -> Interval {
        self.mul(&Interval::from_i64(k), p)
    }

    pub fn div(&self, rhs: &Interval, p: Prec) -> Result<Interval, IvError> {
        if rhs.contains_zero() {
            return Err(IvError::DivisorContainsZero);
        }
        let corners = [(&self.lo, &rhs.lo), (&self.lo, &rhs.hi), (&self.hi, &rhs.lo), (&self.hi, &rhs.hi)];
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for (a, b) in corners {
            let d = div_dir(a, b, p.get(), Dir::Down);
            let u = div_dir(a, b, p.get(), Dir::Up);
            lo = Some(match lo {
                None => d,
                Some(v) => v.min_val(&d),
            });
            hi = Some(match hi {
                None => u,
                Some(v) => v.max_val(&u),
            });
        }
        Ok(Interval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        })
    }

    pub fn div_i64(&self, k: i64, p: Prec) -> Result<Interval, IvError> {
        self.div(&Interval::from_i64(k), p)
    }

    pub fn recip(&self, p: Prec) -> Result<Interval, IvError> {
        Interval::one().div(self, p)
    }

    /// Multiply by 2^k (exact).
    pub fn scale2(&self, k: i64) -> Interval {
        Interval {
            lo: self.lo.scale2(k),
            hi: self.hi.scale2(k),
        }
    }

    pub fn sqrt(&self, p: Prec) -> Result<Interval, IvError> {
        if self.lo.signum() < 0 {
            return Err(IvError::SqrtOfNegative);
        }
        Ok(Interval {
            lo: sqrt_dir(&self.lo, p.get(), Dir::Down),
            hi: sqrt_dir(&self.hi, p.get(), Dir::Up),
        })
    }

    /// x^n for integer n. Even powers use |x| first so [-1, 2]^2 = [0, 4].
    pub fn pow_int(&self, n: i32, p: Prec) -> Result<Interval, IvError> {
        if n == 0 {
            return Ok(Interval::one());
        }
        if n < 0 {
            return self.pow_int(-n, p)?.recip(p);
        }
        let n = n as u32;
        if n == 1 {
            return Ok(self.round_to(p));
        }
        if n % 2 == 0 {
            let a = self.abs();
            Ok(Interval {
                lo: if a.lo.is_zero() {
                    Dyadic::zero()
                } else {
                    pow_dir_nonneg(&a.lo, n, p.get(), Dir::Down)
                },
                hi: pow_dir_nonneg(&a.hi, n, p.get(), Dir::Up),
            })
        } else {
            // odd powers are monotone; x^n = -(|x|^n) for x < 0
            let f = |d: &Dyadic, dir: Dir| -> Dyadic {
                match d.signum() {
                    0 => Dyadic::zero(),
                    s if s > 0 => pow_dir_nonneg(d, n, p.get(), dir),
                    _ => pow_dir_nonneg(&d.abs(), n, p.get(), dir.flip()).neg(),
                }
            };
            Ok(Interval {
                lo: f(&self.lo, Dir::Down),
                hi: f(&self.hi, Dir::Up),
            })
        }
    }

    /// Verdict for the claim "x < y" (strict). Touching endpoints are
    /// Indeterminate.
    pub fn lt(&self, rhs: &Interval) -> Verdict {
        if self.hi < rhs.lo {
            Verdict::Verified
        } else if self.lo >= rhs.hi {
            Verdict::Failed
        } else {
            Verdict::Indeterminate
        }
    }

    pub fn gt(&self, rhs: &Interval) -> Verdict {
        rhs.lt(self)
    }

    /// Verdict for the claim "x <= y".
    pub fn le(&self, rhs: &Interval) -> Verdict {
        if self.hi <= rhs.lo {
            Verdict::Verified
        } else if self.lo > rhs.hi {
            Verdict::Failed
        } else {
            Verdict::Indeterminate
        }
    }

    /// Verdict for the claim "x > 0".
    pub fn is_positive(&self) -> Verdict {
        if self.lo.signum() > 0 {
            Verdict::Verified
        } else if self.hi.signum() <= 0 {
            Verdict::Failed
        } else {
            Verdict::Indeterminate
        }
    }

    /// Verdict for the claim "x < 0".
    pub fn is_negative(&self) -> Verdict {
        if self.hi.signum() < 0 {
            Verdict::Verified
        } else if self.lo.signum() >= 0 {
            Verdict::Failed
        } else {
            Verdict::Indeterminate
        }
    }

    /// Approximate endpoints for diagnostics.
    pub fn to_f64s(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, b) = self.to_f64s();
        write!(f, "[{:.17e}, {:.17e}]", a, b)
    }
}

/// Run `check` at doubling precisions until it stops returning
/// Indeterminate or the cap is reached. Returns the final verdict and the
/// precision at which it was reached.
pub fn refine<F>(start: Prec, cap: Prec, mut check: F) -> (Verdict, Prec)
where
    F: FnMut(Prec) -> Verdict,
{
    let mut p = start;
    loop {
        let v = check(p);
        if v != Verdict::Indeterminate || p >= cap {
            return (v, p);
        }
        p = p.double().min(cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Prec = Prec::DEFAULT;

    #[test]
    fn exact_addition_stays_thin() {
        let a = Interval::from_i64(1);
        let b = Interval::from_i64(2);
        let c = a.add(&b, P);
        assert!(c.is_thin());
        assert!(c.contains_dyadic(&Dyadic::from_i64(3)));
    }

    #[test]
    fn touching_endpoints_are_indeterminate() {
        let a = Interval::new(Dyadic::from_i64(1), Dyadic::from_i64(2));
        let b = Interval::new(Dyadic::from_i64(2), Dyadic::from_i64(3));
        assert_eq!(a.lt(&b), Verdict::Indeterminate);
        assert_eq!(a.le(&b), Verdict::Verified);
        let c = Interval::new(Dyadic::from_i64(4), Dyadic::from_i64(5));
        assert_eq!(a.lt(&c), Verdict::Verified);
        assert_eq!(c.lt(&a), Verdict::Failed);
    }

    #[test]
    fn even_power_of_mixed_sign_is_nonnegative() {
        let x = Interval::new(Dyadic::from_i64(-1), Dyadic::from_i64(2));
        let y = x.pow_int(2, P).unwrap();
        assert_eq!(y.lo(), &Dyadic::zero());
        assert!(y.contains_dyadic(&Dyadic::from_i64(4)));
        // plain mul is allowed to be looser but must still contain the square
        let z = x.mul(&x, P);
        assert!(z.contains(&y));
    }

    #[test]
    fn division_brackets_rationals() {
        let t = Interval::from_ratio(1, 3, P).unwrap();
        assert!(!t.is_thin());
        let three = Interval::from_i64(3);
        let back = t.mul(&three, P);
        assert!(back.contains_dyadic(&Dyadic::from_i64(1)));
        assert!(Interval::from_i64(1)
            .div(&Interval::new(Dyadic::from_i64(-1), Dyadic::from_i64(1)), P)
            .is_err());
    }

    #[test]
    fn decimal_parsing() {
        let x = Interval::from_decimal_str("3.25", P).unwrap();
        assert!(x.is_thin()); // 3.25 = 13/4 is dyadic
        let y = Interval::from_decimal_str("0.1", P).unwrap();
        assert!(!y.is_thin());
        let ten = Interval::from_i64(10);
        assert!(y.mul(&ten, P).contains_dyadic(&Dyadic::from_i64(1)));
        let z = Interval::from_decimal_str("-1.5e2", P).unwrap();
        assert!(z.contains_dyadic(&Dyadic::from_i64(-150)));
        assert!(Interval::from_decimal_str("1.2.3", P).is_err());
    }

    #[test]
    fn sqrt_two_width() {
        let s = Interval::from_i64(2).sqrt(P).unwrap();
        let lit = Interval::from_decimal_str(
            "1.4142135623730950488016887242096980785696718753769480731766797",
            Prec::new(256).unwrap(),
        )
        .unwrap();
        assert!(s.contains(&lit));
        // width <= 2^-50 (the contract's coarse requirement; actual ~2^-126)
        let w = s.width(P);
        assert!(w <= Dyadic::new(num_bigint::BigInt::from(1), -50));
    }

    #[test]
    fn refine_escalates() {
        let mut calls = 0;
        let (v, p) = refine(Prec::DEFAULT, Prec::REFINE_CAP, |p| {
            calls += 1;
            if p.get() >= 512 {
                Verdict::Verified
            } else {
                Verdict::Indeterminate
            }
        });
        assert_eq!(v, Verdict::Verified);
        assert_eq!(p.get(), 512);
        assert_eq!(calls, 3);
    }
}
