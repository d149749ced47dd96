//! Certified check of the exponential-sum identity
//!
//!   sum_{m>=0} e^{-(m+a)x}/(m+a)
//!     + sum_{n>=0} B_{n+1}(a) (-x)^{n+1} / ((n+1)(n+1)!)
//!   = -log x - gamma - psi(a),        0 < x < 2 pi.
//!
//! Both sides are enclosed rigorously: the exponential sum gets a geometric
//! tail e^{-(M+1+a)x}/((M+1+a)(1-e^{-x})), the Bernoulli series gets the
//! envelope tail 2 zeta(2)/(N+2) (x/2pi)^{N+2}/(1 - x/2pi) from
//! |B_n(a)| <= 2 zeta(n) n!/(2 pi)^n on [0, 1].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rigor_interval::{euler_gamma, exp, log, BoundReport, Dyadic, Interval, Prec, Verdict};

use crate::bernoulli::bernoulli_polynomial;
use crate::digamma::digamma_at;
use crate::{rat_to_interval, SfError};

pub fn h_a_identity_check(
    a: &BigRational,
    x: &BigRational,
    p: Prec,
) -> Result<BoundReport, SfError> {
    let psi = digamma_at(a, p.plus(48))?; // also validates a
    if !x.is_positive() {
        return Err(SfError::NonPositiveArgument);
    }
    let w = p.plus(48);
    let xi = rat_to_interval(x, w);
    let two_pi = rigor_interval::pi(w).scale2(1);
    if !matches!(xi.lt(&two_pi), Verdict::Verified) {
        return Err(SfError::ArgumentOutOfRange(format!(
            "identity needs 0 < x < 2 pi, got {x}"
        )));
    }

    // ---- exponential sum with geometric tail ----
    let x_lo = xi.lo().to_f64();
    let m_terms = 32.max(((w.get() as f64 + 16.0) * std::f64::consts::LN_2 / x_lo) as i64);
    let q = exp(&xi.neg(), w)?;
    let a_num = a.numer();
    let a_den = a.denom();
    let mut epow = exp(&rat_to_interval(a, w).mul(&xi, w).neg(), w)?; // e^{-a x}
    let mut sum = Interval::zero();
    for m in 0..=m_terms {
        // epow / (m + a), with m + a = (m a_den + a_num)/a_den exact
        let md = BigInt::from(m) * a_den + a_num;
        let coef = Interval::from_big_ratio(a_den, &md, w)?;
        sum = sum.add(&epow.mul(&coef, w), w);
        epow = epow.mul(&q, w);
    }
    // epow is now e^{-(M+1+a)x}; tail <= epow / ((M+1+a)(1 - e^{-x}))
    let md = BigInt::from(m_terms + 1) * a_den + a_num;
    let one_minus_q = Interval::one().sub(&q, w);
    let tail = epow
        .mul(&Interval::from_big_ratio(a_den, &md, w)?, w)
        .div(&one_minus_q, w)?;
    sum = sum.add(&Interval::new(Dyadic::zero(), tail.abs_upper()), w);

    // ---- Bernoulli series with envelope tail ----
    let r_hi = xi.div(&two_pi, w)?.abs_upper().to_f64(); // < 1 by the domain check
    let n_terms = 16.max(((w.get() as f64 + 16.0) * std::f64::consts::LN_2 / -r_hi.ln()) as i64);
    let mut xpow = BigRational::one();
    let mut fact = BigInt::one();
    for n in 0..=n_terms {
        // term_n = B_{n+1}(a) (-x)^{n+1} / ((n+1)(n+1)!)
        xpow *= -x;
        fact *= BigInt::from(n + 1);
        let coef = bernoulli_polynomial(n as usize + 1, a) * &xpow
            / (BigRational::from(BigInt::from(n + 1)) * BigRational::from(fact.clone()));
        sum = sum.add(&rat_to_interval(&coef, w), w);
    }
    // |term_n| <= 2 zeta(n+1)/(n+1) (x/2pi)^{n+1} <= 2 zeta(2)/(n+1) r^{n+1}
    let r = xi.div(&two_pi, w)?;
    let r_up = Interval::new(Dyadic::zero(), r.abs_upper());
    let geo = r_up
        .pow_int(n_terms as i32 + 2, w)?
        .div(&Interval::one().sub(&r_up, w), w)?;
    let z2 = crate::zeta::zeta_int(2, w);
    let tail2 = z2
        .scale2(1)
        .div_i64(n_terms + 2, w)?
        .mul(&geo, w)
        .abs_upper();
    sum = sum.add(&Interval::new(tail2.neg(), tail2), w);

    // ---- right side ----
    let rhs = log(&xi, w)?
        .add(&euler_gamma(w), w)
        .add(&psi, w)
        .neg();

    // identity certified when the right side's enclosure sits inside the
    // series enclosure; disjoint enclosures refute it
    let verdict = if sum.contains(&rhs) {
        Verdict::Verified
    } else if sum.hi() < rhs.lo() || rhs.hi() < sum.lo() {
        Verdict::Failed
    } else {
        Verdict::Indeterminate
    };
    Ok(
        BoundReport::new(format!("h-identity(a={a}, x={x})"), sum, rhs, verdict)
            .with_prec(p)
            .with_meta("exp_terms", m_terms.to_string())
            .with_meta("bernoulli_terms", n_terms.to_string()),
    )
}
