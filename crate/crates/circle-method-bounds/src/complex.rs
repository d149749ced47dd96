//! Complex enclosures as axis-aligned rectangles of real intervals.
//!
//! A value z is enclosed by (re, im) when Re z in re and Im z in im.
//! Rectangles compose under +, -, * exactly like real intervals; division
//! multiplies by the conjugate and divides by |z|^2, and log/exp go through
//! the real kernels.  The principal log is only defined here for rectangles
//! certifiably in the right half plane, which is the only region the arc
//! machinery ever touches.

use rigor_interval::{atan, cos, exp, log, sin, Interval, IvError, Prec};

use crate::CmbError;

#[derive(Clone, Debug)]
pub struct CxInterval {
    re: Interval,
    im: Interval,
}

impl CxInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        CxInterval { re, im }
    }

    pub fn from_real(re: Interval) -> Self {
        CxInterval {
            re,
            im: Interval::zero(),
        }
    }

    pub fn zero() -> Self {
        CxInterval {
            re: Interval::zero(),
            im: Interval::zero(),
        }
    }

    pub fn re(&self) -> &Interval {
        &self.re
    }

    pub fn im(&self) -> &Interval {
        &self.im
    }

    pub fn add(&self, rhs: &CxInterval, p: Prec) -> CxInterval {
        CxInterval {
            re: self.re.add(&rhs.re, p),
            im: self.im.add(&rhs.im, p),
        }
    }

    pub fn sub(&self, rhs: &CxInterval, p: Prec) -> CxInterval {
        CxInterval {
            re: self.re.sub(&rhs.re, p),
            im: self.im.sub(&rhs.im, p),
        }
    }

    pub fn neg(&self) -> CxInterval {
        CxInterval {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, rhs: &CxInterval, p: Prec) -> CxInterval {
        let ac = self.re.mul(&rhs.re, p);
        let bd = self.im.mul(&rhs.im, p);
        let ad = self.re.mul(&rhs.im, p);
        let bc = self.im.mul(&rhs.re, p);
        CxInterval {
            re: ac.sub(&bd, p),
            im: ad.add(&bc, p),
        }
    }

    pub fn mul_real(&self, k: &Interval, p: Prec) -> CxInterval {
        CxInterval {
            re: self.re.mul(k, p),
            im: self.im.mul(k, p),
        }
    }

    pub fn mul_i64(&self, k: i64, p: Prec) -> CxInterval {
        CxInterval {
            re: self.re.mul_i64(k, p),
            im: self.im.mul_i64(k, p),
        }
    }

    /// |z|^2 as a real interval; squares keep the lower bound at zero when
    /// the component straddles it.
    pub fn norm_sq(&self, p: Prec) -> Interval {
        let r2 = self.re.pow_int(2, p).expect("square is total");
        let i2 = self.im.pow_int(2, p).expect("square is total");
        r2.add(&i2, p)
    }

    pub fn abs(&self, p: Prec) -> Interval {
        self.norm_sq(p).sqrt(p).expect("norm_sq is non-negative")
    }

    pub fn recip(&self, p: Prec) -> Result<CxInterval, IvError> {
        let n = self.norm_sq(p);
        Ok(CxInterval {
            re: self.re.div(&n, p)?,
            im: self.im.neg().div(&n, p)?,
        })
    }

    pub fn div(&self, rhs: &CxInterval, p: Prec) -> Result<CxInterval, IvError> {
        Ok(self.mul(&rhs.recip(p)?, p))
    }

    pub fn div_i64(&self, k: i64, p: Prec) -> Result<CxInterval, IvError> {
        Ok(CxInterval {
            re: self.re.div_i64(k, p)?,
            im: self.im.div_i64(k, p)?,
        })
    }

    /// z^n for small non-negative n by repeated multiplication.
    pub fn pow_u32(&self, n: u32, p: Prec) -> CxInterval {
        let mut acc = CxInterval::from_real(Interval::one());
        for _ in 0..n {
            acc = acc.mul(self, p);
        }
        acc
    }

    pub fn exp(&self, p: Prec) -> Result<CxInterval, IvError> {
        let r = exp(&self.re, p)?;
        let c = cos(&self.im, p)?;
        let s = sin(&self.im, p)?;
        Ok(CxInterval {
            re: r.mul(&c, p),
            im: r.mul(&s, p),
        })
    }

    /// Principal log, restricted to rectangles certifiably in Re z > 0,
    /// where arg z = atan(Im z / Re z) needs no branch bookkeeping:
    /// log z = (1/2) log |z|^2 + i atan(Im z / Re z).
    pub fn log(&self, p: Prec) -> Result<CxInterval, CmbError> {
        if !self.re.is_positive().is_verified() {
            return Err(CmbError::LeftHalfPlaneLog);
        }
        let half_log_n2 = log(&self.norm_sq(p), p)?.scale2(-1);
        let arg = atan(&self.im.div(&self.re, p)?, p)?;
        Ok(CxInterval {
            re: half_log_n2,
            im: arg,
        })
    }

    /// Widen both components symmetrically by t on each side: the Minkowski
    /// sum with the square [-t, t]^2, which contains the disc of radius t.
    /// Used to absorb a tail whose complex value has magnitude at most t.
    pub fn pad(&self, t: &Interval, p: Prec) -> CxInterval {
        let shift = t.abs().neg().hull(&t.abs());
        CxInterval {
            re: self.re.add(&shift, p),
            im: self.im.add(&shift, p),
        }
    }

    /// Does this rectangle contain the other one componentwise?
    pub fn contains(&self, other: &CxInterval) -> bool {
        self.re.contains(&other.re) && self.im.contains(&other.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rigor_interval::pi;

    const P: Prec = Prec::DEFAULT;

    fn thin(s: &str) -> Interval {
        Interval::from_decimal_str(s, P).unwrap()
    }

    #[test]
    fn multiplication_matches_hand_value() {
        // (1+2i)(3-i) = 5+5i
        let a = CxInterval::new(Interval::from_i64(1), Interval::from_i64(2));
        let b = CxInterval::new(Interval::from_i64(3), Interval::from_i64(-1));
        let c = a.mul(&b, P);
        assert!(c.re().contains(&Interval::from_i64(5)));
        assert!(c.im().contains(&Interval::from_i64(5)));
        // exact small integers stay thin through the four-product rule
        assert!(c.re().is_thin() && c.im().is_thin());
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = CxInterval::new(thin("0.3"), thin("-0.7"));
        let b = CxInterval::new(thin("1.9"), thin("0.4"));
        let q = a.mul(&b, P).div(&b, P).unwrap();
        assert!(q.re().contains(&thin("0.3")));
        assert!(q.im().contains(&thin("-0.7")));
    }

    #[test]
    fn exp_log_roundtrip() {
        let z = CxInterval::new(thin("0.25"), thin("0.6"));
        let w = z.exp(P).unwrap().log(P).unwrap();
        assert!(w.re().contains(&thin("0.25")));
        assert!(w.im().contains(&thin("0.6")));
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let z = CxInterval::new(Interval::zero(), pi(P));
        let w = z.exp(P).unwrap();
        assert!(w.re().contains(&Interval::from_i64(-1)));
        assert!(w.im().contains_zero());
    }

    #[test]
    fn log_requires_right_half_plane() {
        let z = CxInterval::new(Interval::from_i64(-2), Interval::from_i64(1));
        assert!(z.log(P).is_err());
        let straddle = CxInterval::new(
            Interval::new(
                rigor_interval::Dyadic::new((-1i8).into(), 0),
                rigor_interval::Dyadic::new(1u8.into(), 0),
            ),
            Interval::from_i64(1),
        );
        assert!(straddle.log(P).is_err());
    }

    #[test]
    fn abs_of_three_four_is_five() {
        let z = CxInterval::new(Interval::from_i64(3), Interval::from_i64(4));
        assert!(z.abs(P).contains(&Interval::from_i64(5)));
    }
}
