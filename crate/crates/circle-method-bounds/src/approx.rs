//! The main-term / error-majorant pair (F, E) for kernel sums.
//!
//! For 0 < |z| < 2 pi, Re z > 0 and a in {1, 1/2} the sum
//! S = sum_{m>=0} B_{r,t}((m+a)z) is approximated by
//!
//!   F_a^{r,t}(z) = zeta(2,a)/z^2 + beta_{r,t}/z
//!                  - (1/z)(1/2 - A)(log z + gamma + psi(a))
//!                  - sum_{n>=0} c*_n B_{n+1}(a)/(n+1) z^n,
//!
//! with |S - F| <= E_a^{r,t}(z) where
//!
//!   E_a^{r,t}(z) = (J_{r,t}/12)|z| + (3/5) sum_{n>=1} n |b_n| |az|^n.
//!
//! Truncation tails are always added to the enclosures:
//!
//!  *  F-series: |c*_n| <= A^{n+1}/(2(n+1)!) and the Bernoulli-polynomial
//!     envelope |B_k(a)| <= 2 zeta(k) k!/(2 pi)^k on [0,1] give
//!     |term_n| <= (zeta(2) A / (2 pi (n+1))) (A|z|/2pi)^n, a geometric
//!     majorant summed in closed form.
//!  *  E-series: |b_n| <= |c_n| + |c*_n| with |c_n| <= 2 zeta(3)/(2pi)^{n+2}
//!     for n >= 1; the weighted geometric tail sum_{n>K} n u^n
//!     = u^{K+1}((K+1) - K u)/(1-u)^2 is exact, and the factorial part uses
//!     n/(n+1)! <= 1/n!.
//!
//! The J constants are certified in [`crate::quadrature`]; here J_{3,4} is
//! the exact 5/64 and J_{1,4} is bracketed by [0, 649/40000].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rigor_interval::{exp, pi, BoundReport, Dyadic, Interval, Prec};
use special_functions::{
    bernoulli_polynomial, digamma_at, hurwitz_zeta2, rat, rat_to_interval, zeta_int,
};

use crate::complex::CxInterval;
use crate::laurent::{beta_rt, brt_laurent};
use crate::CmbError;

/// Default truncation order of the F- and E-series.
pub const DEFAULT_ORDER: usize = 40;

fn require_supported_a(a: &BigRational) -> Result<(), CmbError> {
    if *a == rat(1, 1) || *a == rat(1, 2) {
        Ok(())
    } else {
        Err(CmbError::UnsupportedArguments)
    }
}

/// Symmetric interval [-t, t] from an upper bound t >= 0.
fn ball(t: &Dyadic) -> Interval {
    Interval::new(t.abs().neg(), t.abs())
}

/// Enclosure of F_a^{r,t}(z) with the order-K truncation tail absorbed.
pub fn eval_f(
    a: &BigRational,
    r: i64,
    t: i64,
    z: &CxInterval,
    k_order: usize,
    p: Prec,
) -> Result<CxInterval, CmbError> {
    require_supported_a(a)?;
    let w = p.plus(48);
    let abs_z = z.abs(w);
    let two_pi = pi(w).scale2(1);
    if !abs_z.lt(&two_pi).is_verified() {
        return Err(CmbError::OutOfDisk);
    }

    let lc = brt_laurent(r, t, k_order.max(1))?;
    let a_cap = lc.a(); // A = r/t
    let zeta2a = hurwitz_zeta2(a, w)?;
    let psi_a = digamma_at(a, w)?;
    let gamma = rigor_interval::euler_gamma(w);
    let beta = beta_rt(r, t, w)?;
    let half_minus_a = rat_to_interval(&(rat(1, 2) - &a_cap), w);

    let inv_z = z.recip(w)?;
    let inv_z2 = inv_z.mul(&inv_z, w);
    let log_z = z.log(w)?;

    // zeta(2,a)/z^2 + beta/z - (1/2 - A)(log z + gamma + psi(a))/z
    let mut f = inv_z2.mul_real(&zeta2a, w);
    f = f.add(&inv_z.mul_real(&beta, w), w);
    let log_term = log_z
        .add(&CxInterval::from_real(gamma.add(&psi_a, w)), w)
        .mul_real(&half_minus_a, w)
        .mul(&inv_z, w);
    f = f.sub(&log_term, w);

    // - sum_{n=0}^{K} c*_n B_{n+1}(a)/(n+1) z^n, exact rational coefficients
    let coeff = |n: usize| -> BigRational {
        lc.c_star(n) * bernoulli_polynomial(n + 1, a) / BigRational::from_integer(BigInt::from(n + 1))
    };
    let mut series = CxInterval::from_real(rat_to_interval(&coeff(k_order), w));
    for n in (0..k_order).rev() {
        series = series
            .mul(z, w)
            .add(&CxInterval::from_real(rat_to_interval(&coeff(n), w)), w);
    }
    f = f.sub(&series, w);

    // geometric tail: (zeta(2) A / (2 pi (K+2))) v^{K+1}/(1-v), v = A|z|/2pi
    let a_iv = rat_to_interval(&a_cap, w);
    let v = a_iv.mul(&abs_z, w).div(&two_pi, w)?;
    if !v.lt(&Interval::one()).is_verified() {
        return Err(CmbError::OutOfDisk);
    }
    let lead = zeta_int(2, w)
        .mul(&a_iv, w)
        .div(&two_pi.mul_i64((k_order + 2) as i64, w), w)?;
    let tail = lead
        .mul(&v.pow_int((k_order + 1) as i32, w)?, w)
        .div(&Interval::one().sub(&v, w), w)?;
    Ok(f.pad(&tail, p))
}

/// Upper enclosure of E_a^{r,t}(z); the true majorant value lies inside the
/// returned interval and its upper endpoint is a certified bound for it.
pub fn eval_e(
    a: &BigRational,
    r: i64,
    t: i64,
    z: &CxInterval,
    p: Prec,
) -> Result<Interval, CmbError> {
    let w = p.plus(48);
    let k_order = DEFAULT_ORDER;
    let lc = brt_laurent(r, t, k_order)?;
    let a_cap = lc.a();
    let abs_z = z.abs(w);
    let rho = rat_to_interval(a, w).mul(&abs_z, w); // |az|, a > 0
    let two_pi = pi(w).scale2(1);
    if !rho.lt(&two_pi).is_verified() {
        return Err(CmbError::OutOfDisk);
    }

    // J/12 |z| with J = 5/64 exact or J in [0, 649/40000]
    let j = match (r, t) {
        (1, 4) => Interval::new(
            Dyadic::zero(),
            rat_to_interval(&rat(649, 40000), w).hi().clone(),
        ),
        (3, 4) => rat_to_interval(&rat(5, 64), w),
        _ => return Err(CmbError::UnsupportedArguments),
    };
    let mut e = j.mul(&abs_z, w).div_i64(12, w)?;

    // (3/5) sum_{n=1}^{K} n |b_n| rho^n by Horner, exact coefficients
    let mut series = rat_to_interval(
        &(lc.b(k_order).abs() * BigRational::from_integer(BigInt::from(k_order))),
        w,
    );
    for n in (1..k_order).rev() {
        let cn = lc.b(n).abs() * BigRational::from_integer(BigInt::from(n));
        series = series.mul(&rho, w).add(&rat_to_interval(&cn, w), w);
    }
    series = series.mul(&rho, w); // one power of rho for the n = 1 term
    e = e.add(&series.mul(&rat_to_interval(&rat(3, 5), w), w), w);

    // tails, both times the common 3/5 factor:
    //   c-part:  2 zeta(3)/(2pi)^2 * sum_{n>K} n u^n,  u = rho/2pi
    //   c*-part: (A/2) sum_{n>K} (A rho)^n / n!
    let u = rho.div(&two_pi, w)?;
    let big_k = k_order as i64;
    let s1 = u
        .pow_int((k_order + 1) as i32, w)?
        .mul(
            &Interval::from_i64(big_k + 1).sub(&u.mul_i64(big_k, w), w),
            w,
        )
        .div(&Interval::one().sub(&u, w).pow_int(2, w)?, w)?;
    let c_tail = zeta_int(3, w)
        .scale2(1)
        .div(&two_pi.pow_int(2, w)?, w)?
        .mul(&s1, w);

    let a_iv = rat_to_interval(&a_cap, w);
    let arho = a_iv.mul(&rho, w);
    if !arho
        .lt(&Interval::from_i64(big_k + 2))
        .is_verified()
    {
        return Err(CmbError::OutOfDisk);
    }
    let mut fact = BigRational::one();
    for i in 2..=(k_order + 1) {
        fact *= BigRational::from_integer(BigInt::from(i));
    }
    let cs_tail = a_iv
        .scale2(-1)
        .mul(&arho.pow_int((k_order + 1) as i32, w)?, w)
        .div(&rat_to_interval(&fact, w), w)?
        .div(
            &Interval::one().sub(&arho.div_i64(big_k + 2, w)?, w),
            w,
        )?;

    let tail_hi = c_tail
        .add(&cs_tail, w)
        .mul(&rat_to_interval(&rat(3, 5), w), w)
        .abs_upper();
    Ok(e.add(&Interval::new(Dyadic::zero(), tail_hi), w).round_to(p))
}

/// Enclosure of the kernel value B_{r,t}(w) = e^{-Aw}/(w(1 - e^{-w})).
pub fn kernel_value(
    a_cap: &BigRational,
    w_arg: &CxInterval,
    p: Prec,
) -> Result<CxInterval, CmbError> {
    let a_iv = rat_to_interval(a_cap, p);
    let e_aw = w_arg.mul_real(&a_iv, p).neg().exp(p)?;
    let e_w = w_arg.neg().exp(p)?;
    let denom = w_arg.mul(&CxInterval::from_real(Interval::one()).sub(&e_w, p), p);
    Ok(e_aw.div(&denom, p)?)
}

/// Certified instance of |sum_{m>=0} B_{r,t}((m+a)z) - F_a^{r,t}(z)|
/// <= E_a^{r,t}(z). The kernel sum is truncated at an index m = M with
/// A M x ~ 48 and the tail
///
///   sum_{m>M} |B((m+a)z)|
///     <= e^{-A(M+1+a)x} / ((M+1+a)|z| (1 - e^{-(M+1+a)x})(1 - e^{-Ax}))
///
/// (using |1 - e^{-w}| >= 1 - e^{-Re w} and |(m+a)z| >= (M+1+a)|z|) is
/// folded into the left-hand enclosure.
pub fn brt_instance_check(
    r: i64,
    t: i64,
    a: &BigRational,
    z: &CxInterval,
    p: Prec,
) -> Result<BoundReport, CmbError> {
    require_supported_a(a)?;
    let w = p.plus(48);
    let x = z.re().clone();
    if !x.is_positive().is_verified() {
        return Err(CmbError::UnsupportedArguments);
    }
    let f = eval_f(a, r, t, z, DEFAULT_ORDER, p)?;
    let e = eval_e(a, r, t, z, p)?;
    let a_cap = rat(r, t);

    let x_lo = x.lo().to_f64();
    let a_f = a_cap.to_f64().unwrap();
    let m_terms = 64.max((48.0 / (a_f * x_lo)).ceil() as i64);

    // incremental powers: e^{-A(m+a)z} and e^{-(m+a)z}
    let a_iv = rat_to_interval(&a_cap, w);
    let step_a = z.mul_real(&a_iv, w).neg().exp(w)?; // e^{-Az}
    let step_1 = z.neg().exp(w)?; // e^{-z}
    let za = z.mul_real(&rat_to_interval(a, w), w);
    let mut pow_a = za.mul_real(&a_iv, w).neg().exp(w)?; // e^{-A a z}
    let mut pow_1 = za.neg().exp(w)?; // e^{-a z}
    let one = CxInterval::from_real(Interval::one());
    let mut sum = CxInterval::zero();
    let mut w_m = za.clone(); // (m+a) z
    for _ in 0..=m_terms {
        let denom = w_m.mul(&one.sub(&pow_1, w), w);
        sum = sum.add(&pow_a.div(&denom, w)?, w);
        pow_a = pow_a.mul(&step_a, w);
        pow_1 = pow_1.mul(&step_1, w);
        w_m = w_m.add(z, w);
    }

    // tail bound at index M+1
    let m1a = rat_to_interval(&(a + BigRational::from_integer(BigInt::from(m_terms + 1))), w);
    let ax = a_iv.mul(&x, w);
    let m1ax = m1a.mul(&x, w);
    let tail = exp(&m1ax.mul(&a_iv, w).neg(), w)?
        .div(&m1a.mul(&z.abs(w), w), w)?
        .div(&Interval::one().sub(&exp(&m1ax.neg(), w)?, w), w)?
        .div(&Interval::one().sub(&exp(&ax.neg(), w)?, w), w)?;

    let lhs = sum
        .sub(&f, w)
        .abs(w)
        .add(&ball(&tail.abs_upper()), w)
        .round_to(p);
    let (zx, zy) = (z.re().to_f64s().0, z.im().to_f64s().0);
    let claim = format!("brt-instance.r{r}t{t}.a={a}.z={zx:.3}{zy:+.3}i");
    Ok(BoundReport::at_most(claim, lhs, e)
        .with_meta("m_terms", m_terms.to_string())
        .with_prec(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Prec = Prec::DEFAULT;

    fn real_z(s: &str) -> CxInterval {
        CxInterval::from_real(Interval::from_decimal_str(s, P).unwrap())
    }

    fn pinned(s: &str, digits: u32) -> Interval {
        Interval::from_decimal_str(s, P).unwrap().widen_ulp10(digits, 2, P)
    }

    #[test]
    fn f_matches_independent_values() {
        // frozen from a 40-digit independent evaluation of the definition
        let cases: [((i64, i64), i64, i64, &str, &str); 5] = [
            ((1, 1), 1, 4, "0.4", "11.78117754232088546906477547449765206146"),
            ((1, 1), 3, 4, "0.8", "1.615786993099922104547715709219647405366"),
            ((1, 2), 3, 4, "0.8", "6.310775590874466935931561999420344930859"),
            ((1, 1), 1, 4, "0.1", "173.9458525617475525173537091244200872380"),
            ((1, 2), 1, 4, "0.1", "506.3932911564734567706451782864712962229"),
        ];
        for ((an, ad), r, t, z_str, pin) in cases {
            let a = rat(an, ad);
            let f = eval_f(&a, r, t, &real_z(z_str), DEFAULT_ORDER, P).unwrap();
            let target = pinned(pin, 30);
            assert!(
                target.contains(f.re()),
                "F mismatch for ({r},{t}), a={a}, z={z_str}: got {}",
                f.re()
            );
            assert!(f.im().contains_zero());
        }
    }

    #[test]
    fn f_dominant_pole() {
        // z^2 F_1^{1,4}(z) -> zeta(2,1) as z -> 0
        let z = real_z("0.0001");
        let f = eval_f(&rat(1, 1), 1, 4, &z, DEFAULT_ORDER, P).unwrap();
        let z2f = f.mul(&z, P).mul(&z, P);
        let zeta2 = hurwitz_zeta2(&rat(1, 1), P).unwrap();
        let diff = z2f.re().sub(&zeta2, P).abs();
        assert!(diff
            .lt(&Interval::from_ratio(1, 1000, P).unwrap())
            .is_verified());
    }

    #[test]
    fn f_rejects_big_or_bad_arguments() {
        assert!(matches!(
            eval_f(&rat(1, 1), 1, 4, &real_z("6.4"), DEFAULT_ORDER, P),
            Err(CmbError::OutOfDisk)
        ));
        assert!(matches!(
            eval_f(&rat(1, 3), 1, 4, &real_z("0.1"), DEFAULT_ORDER, P),
            Err(CmbError::UnsupportedArguments)
        ));
    }

    #[test]
    fn deeper_truncation_is_nested() {
        let z = real_z("0.1");
        let coarse = eval_f(&rat(1, 1), 1, 4, &z, 40, P).unwrap();
        let fine = eval_f(&rat(1, 1), 1, 4, &z, 60, P).unwrap();
        assert!(coarse.contains(&fine));
    }

    #[test]
    fn e_values_and_scaling() {
        // true values (tight J) lie inside; upper ends stay close above
        let e14 = eval_e(&rat(1, 1), 1, 4, &real_z("0.1"), P).unwrap();
        assert!(e14.contains(&pinned("0.001080413028878434710470705416850585615", 30)));
        // exact J = 5/64 makes these enclosures far thinner than the pins
        let e34 = eval_e(&rat(1, 1), 3, 4, &real_z("0.1"), P).unwrap();
        assert!(pinned("0.005554254920166737213461585286768529436", 30).contains(&e34));
        let e34h = eval_e(&rat(1, 2), 3, 4, &real_z("0.1"), P).unwrap();
        assert!(pinned("0.003048001464301800170599961618205301669", 30).contains(&e34h));
        // E vanishes linearly: a 10 x smaller argument shrinks E well past 5 x
        let small = eval_e(&rat(1, 1), 1, 4, &real_z("0.01"), P).unwrap();
        assert!(small
            .lt(&e14.div_i64(5, P).unwrap())
            .is_verified());
    }

    #[test]
    fn kernel_sum_instance_is_verified() {
        let rep = brt_instance_check(1, 4, &rat(1, 1), &real_z("0.1"), P).unwrap();
        assert!(rep.is_verified(), "{rep}");
        // frozen margin: E exceeds the defect by a factor ~8.3
        let lhs_pin = pinned("0.0001302096898787571681011384733641529061", 30);
        assert!(lhs_pin.contains(&rep.lhs) || rep.lhs.contains(&lhs_pin));
    }
}
