//! Minor-arc bounds: the real part of Log G on vertical lines, the
//! trigonometric minorant s_m(x) > alpha_m^2 x^2 near the sampled cusps
//! y_m = m pi / 12-ish, the resulting final constant
//!
//!   pi^2/12 + sum_{m=1}^{5} cos(m pi/12) e^{-m pi/480}
//!             (2m/alpha_m - 1) / (2 m^2)  <  1/5,
//!
//! and the odd-product transformation bound used for the y ~ pi cusp.
//!
//! s_m(x) = 1 - 2 cos(60 m x) e^{-2mx} + e^{-4mx} = |1 - e^{(-2m+60mi)x}|^2
//! has the exact Taylor coefficients N_k/k! with
//! N_k = (-4m)^k - 2 Re((-2m + 60mi)^k), so with c = m sqrt(3604) >= |w|:
//!
//!   Q(x) = s_m(x)/x^2 - alpha^2
//!        = (N_2/2 - alpha^2) + sum_{k=3}^{8} N_k/k! x^{k-2} + R(x),
//!   |R(x)| <= 3 c^9 x^7 / (9! (1 - cx/10))        for cx < 10,
//!
//! since |N_k| <= (4m)^k + 2|w|^k <= 3 c^k.  Positivity of Q on
//! (0, pi/480] is certified by adaptive bisection of the degree-6
//! polynomial enclosure.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rigor_interval::{
    add_dir, cos, exp, pi, sin, BoundReport, Dir, Dyadic, Interval, Prec, Verdict,
};
use special_functions::{rat, rat_to_interval};

use crate::CmbError;

/// alpha_m^2 for m = 1..5; alpha_4 = 200 exactly, the others are
/// irrational square roots, so the squares are the exchanged quantity.
pub const ALPHA_SQ: [i64; 5] = [3508, 13200, 27000, 40000, 55000];

fn ball(t: &Dyadic) -> Interval {
    Interval::new(t.abs().neg(), t.abs())
}

/// Re Log G(e^{-z}) on z = x + iy from the termwise real parts:
/// sum_m cos(my) (e^{-mx} + (-1)^{m+1} e^{-3mx})
///       / (m (1 + 2 (-1)^{m+1} cos(2my) e^{-2mx} + e^{-4mx})),
/// with tail e^{-(M+1)x} / ((M+1)(1 - e^{-x})(1 - e^{-2x})).
/// Cosines advance by angle addition, so y is unrestricted in size.
pub fn re_log_g(
    x: &Interval,
    y: &Interval,
    m_terms: usize,
    p: Prec,
) -> Result<Interval, CmbError> {
    if !x.is_positive().is_verified() {
        return Err(CmbError::UnsupportedArguments);
    }
    let e1 = exp(&x.neg(), p)?;
    let cy = cos(y, p)?;
    let sy = sin(y, p)?;
    let mut em = Interval::one(); // e^{-mx}
    let mut cm = Interval::one(); // cos(my)
    let mut sm = Interval::zero(); // sin(my)
    let one = Interval::one();
    let mut sum = Interval::zero();
    for m in 1..=m_terms {
        em = em.mul(&e1, p);
        // angle addition inflates the (cos, sin) box; restart it from
        // fresh evaluations periodically to keep widths bounded
        if m % 64 == 1 && m > 1 {
            let my = y.mul_i64(m as i64, p);
            cm = cos(&my, p)?;
            sm = sin(&my, p)?;
        } else {
            let (c_next, s_next) = (
                cm.mul(&cy, p).sub(&sm.mul(&sy, p), p),
                sm.mul(&cy, p).add(&cm.mul(&sy, p), p),
            );
            cm = c_next;
            sm = s_next;
        }
        let em2 = em.pow_int(2, p)?;
        let em3 = em2.mul(&em, p);
        let cos2my = cm.pow_int(2, p)?.scale2(1).sub(&one, p);
        let sgn = if m % 2 == 1 { 1 } else { -1 };
        let numer = cm.mul(&em.add(&em3.mul_i64(sgn, p), p), p);
        let denom = one
            .add(&cos2my.mul(&em2, p).mul_i64(2 * sgn, p), p)
            .add(&em2.pow_int(2, p)?, p);
        sum = sum.add(&numer.div(&denom, p)?.div_i64(m as i64, p)?, p);
    }
    let m1 = (m_terms + 1) as i64;
    let tail = exp(&x.mul_i64(-m1, p), p)?
        .div_i64(m1, p)?
        .div(&one.sub(&e1, p), p)?
        .div(&one.sub(&exp(&x.mul_i64(-2, p), p)?, p), p)?;
    Ok(sum.add(&ball(&tail.abs_upper()), p).round_to(p))
}

/// Exact Taylor data of s_m: N_k = (-4m)^k - 2 Re((-2m + 60mi)^k).
fn s_m_taylor_n(m: i64, k_max: usize) -> Vec<BigInt> {
    let mm = BigInt::from(m);
    let mut p_k = BigInt::one(); // (-4m)^k
    let mut u = BigInt::one(); // Re w^k
    let mut v = BigInt::zero(); // Im w^k
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(BigInt::from(-1)); // k = 0: 1 - 2
    for _ in 1..=k_max {
        p_k *= -4 * &mm;
        let u_next = -2 * &mm * &u - 60 * &mm * &v;
        let v_next = 60 * &mm * &u - 2 * &mm * &v;
        u = u_next;
        v = v_next;
        out.push(&p_k - 2 * &u);
    }
    out
}

/// Enclosure of Q(x) = s_m(x)/x^2 - alpha^2 over a cell x of [0, pi/480].
pub fn alpha_m_margin_at(
    m: u32,
    alpha_sq: &BigRational,
    x: &Interval,
    p: Prec,
) -> Result<Interval, CmbError> {
    if !(1..=5).contains(&m) || !alpha_sq.is_positive() {
        return Err(CmbError::UnsupportedArguments);
    }
    let n = s_m_taylor_n(m as i64, 8);
    debug_assert!(n[1].is_zero());
    let mut fact = BigRational::one();
    let mut d: Vec<BigRational> = Vec::new(); // d_k = N_k / k!
    for (k, nk) in n.iter().enumerate() {
        if k > 0 {
            fact *= BigRational::from_integer(BigInt::from(k));
        }
        d.push(BigRational::from_integer(nk.clone()) / &fact);
    }
    // (d_2 - alpha^2) + sum_{k=3..8} d_k x^{k-2} by Horner
    let mut q = rat_to_interval(&d[8], p);
    for k in (3..8).rev() {
        q = q.mul(x, p).add(&rat_to_interval(&d[k], p), p);
    }
    q = q.mul(x, p).add(&rat_to_interval(&(&d[2] - alpha_sq), p), p);
    // remainder: 3 c^9 x^7 / (9! (1 - cx/10)), c = m sqrt(3604)
    let c = rat_to_interval(&rat(3604 * (m as i64) * (m as i64), 1), p).sqrt(p)?;
    let cx10 = c.mul(&x.abs(), p).div_i64(10, p)?;
    if !cx10.lt(&Interval::one()).is_verified() {
        return Err(CmbError::UnsupportedArguments);
    }
    let mut fact9 = BigRational::one();
    for i in 2..=9u32 {
        fact9 *= BigRational::from_integer(BigInt::from(i));
    }
    let rem = c
        .pow_int(9, p)?
        .mul_i64(3, p)
        .mul(&x.abs().pow_int(7, p)?, p)
        .div(&rat_to_interval(&fact9, p), p)?
        .div(&Interval::one().sub(&cx10, p), p)?;
    Ok(q.add(&ball(&rem.abs_upper()), p))
}

/// Certify s_m(x) > alpha^2 x^2 on the whole interval (0, pi/480) by
/// adaptive bisection of Q.  A Failed verdict carries a certified witness
/// x where Q < 0; Indeterminate means bisection bottomed out undecided.
pub fn alpha_m_verify(
    m: u32,
    alpha_sq: &BigRational,
    p: Prec,
) -> Result<BoundReport, CmbError> {
    let w = p.plus(32);
    let x_max = pi(w).div_i64(480, w)?.hi().clone();
    let claim = format!("alpha-m.m={m}.alpha_sq={alpha_sq}");
    let min_width = Dyadic::new(BigInt::from(1), -40);
    let mut stack = vec![(Dyadic::zero(), x_max.clone())];
    let mut cells = 0u64;
    let mut hull: Option<Interval> = None;
    while let Some((a, b)) = stack.pop() {
        let cell = Interval::new(a.clone(), b.clone());
        let q = alpha_m_margin_at(m, alpha_sq, &cell, w)?;
        hull = Some(match hull {
            None => q.clone(),
            Some(h) => h.hull(&q),
        });
        if q.is_positive().is_verified() {
            cells += 1;
            continue;
        }
        let width = add_dir(&b, &a.neg(), w.get(), Dir::Up);
        if width.value_cmp(&min_width) == std::cmp::Ordering::Less {
            let mid = add_dir(&a, &b, w.get(), Dir::Down).scale2(-1);
            let q_mid = alpha_m_margin_at(m, alpha_sq, &Interval::new(mid.clone(), mid.clone()), w)?;
            let verdict = if q_mid.is_negative().is_verified() {
                Verdict::Failed
            } else {
                Verdict::Indeterminate
            };
            return Ok(BoundReport::new(claim, q_mid, Interval::zero(), verdict)
                .with_meta("witness_x", format!("{}", mid.to_f64()))
                .with_prec(p));
        }
        let mid = add_dir(&a, &b, w.get(), Dir::Down).scale2(-1);
        if mid.value_cmp(&a) != std::cmp::Ordering::Greater
            || mid.value_cmp(&b) != std::cmp::Ordering::Less
        {
            return Err(CmbError::UndecidableOrdering);
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    let right = alpha_m_margin_at(m, alpha_sq, &Interval::new(x_max.clone(), x_max), w)?;
    Ok(BoundReport::new(
        claim,
        hull.unwrap_or_else(Interval::zero).round_to(p),
        Interval::zero(),
        Verdict::Verified,
    )
    .with_meta("cells", cells.to_string())
    .with_meta("q_at_right_endpoint", format!("{right}"))
    .with_prec(p))
}

/// The assembled minor-arc constant
/// pi^2/12 + sum_{m=1}^5 cos(m pi/12) e^{-m pi/480} (2m/alpha_m - 1)/(2m^2),
/// certified < 1/5.
pub fn minor_arc_final_constant(p: Prec) -> Result<BoundReport, CmbError> {
    let w = p.plus(48);
    let pi_w = pi(w);
    let mut total = pi_w.pow_int(2, w)?.div_i64(12, w)?;
    let mut magnitudes = Interval::zero();
    let mut meta: Vec<String> = Vec::new();
    for m in 1..=5i64 {
        let alpha = rat_to_interval(&rat(ALPHA_SQ[(m - 1) as usize], 1), w).sqrt(w)?;
        let angle = pi_w.mul_i64(m, w).div_i64(12, w)?;
        let decay = exp(&pi_w.mul_i64(-m, w).div_i64(480, w)?, w)?;
        let term = cos(&angle, w)?
            .mul(&decay, w)
            .mul(
                &Interval::from_i64(2 * m)
                    .div(&alpha, w)?
                    .sub(&Interval::one(), w),
                w,
            )
            .div_i64(2 * m * m, w)?;
        total = total.add(&term, w);
        magnitudes = magnitudes.add(&term.abs(), w);
        meta.push(format!("{term}"));
    }
    let rhs = rat_to_interval(&rat(1, 5), p);
    Ok(
        BoundReport::less_than("minor-arc.final-constant", total.round_to(p), rhs)
            .with_meta("summands", meta.join("; "))
            .with_meta("sum_of_magnitudes", format!("{}", magnitudes.round_to(p)))
            .with_prec(p),
    )
}

/// LogP(q) = sum_{j>=1} q^j / (j (1 - q^j)) truncated at M with the tail
/// q^{M+1}/((M+1)(1-q)^2) absorbed; needs 0 <= q < 1 certified.
fn log_p(q: &Interval, m_terms: usize, p: Prec) -> Result<Interval, CmbError> {
    if !q.lt(&Interval::one()).is_verified() || q.is_negative().is_verified() {
        return Err(CmbError::UnsupportedArguments);
    }
    let one = Interval::one();
    let mut qj = Interval::one();
    let mut sum = Interval::zero();
    for j in 1..=m_terms {
        qj = qj.mul(q, p);
        sum = sum.add(
            &qj.div(&one.sub(&qj, p), p)?.div_i64(j as i64, p)?,
            p,
        );
    }
    let tail = qj
        .mul(q, p)
        .div_i64((m_terms + 1) as i64, p)?
        .div(&one.sub(q, p).pow_int(2, p)?, p)?;
    Ok(sum.add(&Interval::new(Dyadic::zero(), tail.abs_upper()), p))
}

/// Direct route for L(x) = Log prod_{k odd} (1 - e^{-kx})^{-1}
/// = sum_{n>=1} e^{-nx} / (n (1 - e^{-2nx})).
pub fn log_odd_product_direct(
    x: &Interval,
    m_terms: usize,
    p: Prec,
) -> Result<Interval, CmbError> {
    if !x.is_positive().is_verified() {
        return Err(CmbError::UnsupportedArguments);
    }
    let one = Interval::one();
    let e1 = exp(&x.neg(), p)?;
    let mut en = Interval::one();
    let mut sum = Interval::zero();
    for n in 1..=m_terms {
        en = en.mul(&e1, p);
        sum = sum.add(
            &en.div(&one.sub(&en.pow_int(2, p)?, p), p)?
                .div_i64(n as i64, p)?,
            p,
        );
    }
    let m1 = (m_terms + 1) as i64;
    let tail = exp(&x.mul_i64(-m1, p), p)?
        .div_i64(m1, p)?
        .div(&one.sub(&e1, p), p)?
        .div(&one.sub(&exp(&x.mul_i64(-2, p), p)?, p), p)?;
    Ok(sum.add(&Interval::new(Dyadic::zero(), tail.abs_upper()), p))
}

/// Transformed route for the same L(x):
/// L(x) = pi^2/(12x) - (1/2) log 2 + x/24 + LogP(e^{-4pi^2/x})
///        - LogP(e^{-2pi^2/x}).
pub fn log_odd_product_transformed(x: &Interval, p: Prec) -> Result<Interval, CmbError> {
    let w = p.plus(48);
    if !x.is_positive().is_verified() || !x.lt(&Interval::from_i64(2)).is_verified() {
        return Err(CmbError::UnsupportedArguments);
    }
    let pi2 = pi(w).pow_int(2, w)?;
    let lead = pi2.div(&x.mul_i64(12, w), w)?;
    let c = transform_correction(x, w)?;
    Ok(lead.add(&c, w).round_to(p))
}

/// C(x) = -(1/2) log 2 + x/24 + LogP(e^{-4pi^2/x}) - LogP(e^{-2pi^2/x}),
/// the difference L(x) - pi^2/(12x).
fn transform_correction(x: &Interval, p: Prec) -> Result<Interval, CmbError> {
    let pi2 = pi(p).pow_int(2, p)?;
    let q4 = exp(&pi2.mul_i64(-4, p).div(x, p)?, p)?;
    let q2 = exp(&pi2.mul_i64(-2, p).div(x, p)?, p)?;
    Ok(rigor_interval::ln2(p)
        .scale2(-1)
        .neg()
        .add(&x.div_i64(24, p)?, p)
        .add(&log_p(&q4, 16, p)?, p)
        .sub(&log_p(&q2, 16, p)?, p))
}

/// Certifies L(x) < pi^2/(12x) for 0 < x < pi/480 by showing the
/// correction C(x) is negative; C -> -(1/2) log 2 + x/24 as x -> 0.
pub fn eta_transform_bound(x: &Interval, p: Prec) -> Result<BoundReport, CmbError> {
    let w = p.plus(48);
    if !x.is_positive().is_verified()
        || !x.lt(&pi(w).div_i64(480, w)?).is_verified()
    {
        return Err(CmbError::UnsupportedArguments);
    }
    let c = transform_correction(x, w)?.round_to(p);
    let verdict = c.is_negative();
    let x_mid = x.to_f64s().0;
    Ok(BoundReport::new(
        format!("eta-transform.x={x_mid:.6}"),
        c,
        Interval::zero(),
        verdict,
    )
    .with_prec(p))
}
