//! Total curvature J_{r,t} = int_0^infty |g''(x)| dx of the regularised
//! kernel
//!
//!   g(x) = B_{r,t}(x) - 1/x^2 - c_{-1} (e^{-Ax} + Ax)/x - c_0
//!        = sum_{n>=1} b_n x^n,
//!
//! certified by two independent routes.
//!
//! Splitting B(x) = e^{-Ax}/x + psi(x) with psi = e^{-(1+A)x}/(x(1-e^{-x}))
//! and c_{-1} = 1/2 - A gives
//!
//!   g''(x) = -6/x^4 + (1/2 + A)(e^{-Ax}/x)'' + psi''(x),           (*)
//!
//! so g'' ~ -6/x^4 at infinity.  The sign pattern of g'' decides J:
//!
//!  *  (3,4): g'' < 0 on all of (0, infinity), hence
//!     J = g'(0+) - g'(infinity) = b_1 = 5/64 exactly.
//!  *  (1,4): g'' > 0 on (0, alpha) and < 0 on (alpha, infinity) for a
//!     single crossing alpha in [15.45, 15.46], hence
//!     J = 2 g'(alpha) - b_1 = g'(L) + g'(U) + 1/64 + M with any bracket
//!     [L, U] around alpha and M = (g'(alpha)-g'(L)) + (g'(alpha)-g'(U))
//!     in [0, (U-L) sup_{[L,U]} |g''|].
//!
//! Signs are certified on (0, 3] by the b_n power series with explicit
//! tails, on [3, 600] by degree-4 Taylor jets of the direct formula over
//! adaptively bisected cells, and on [600, infinity) by the envelope
//! |g''(x) + 6/x^4| <= V e^{-x/4} from (*), with V evaluated at x = 600:
//!
//!  *  e^{x/4} (1/2+A)(e^{-Ax}/x)'' = (1/2+A) e^{(1/4-A)x}
//!     (A^2/x + 2A/x^2 + 2/x^3) is a product of positive decreasing
//!     factors for A >= 1/4, so its supremum on [600, inf) is at 600;
//!  *  with v = 1/(x(1-e^{-x})): v <= 1.01/x, |v'| <= 2/x^2, |v''| <= 3/x^3
//!     on [600, inf) (each differentiation of 1/x or 1/(1-e^{-x}) keeps
//!     the 1-e^{-x} >= 1-e^{-600} floor), so e^{x/4} |psi''| <=
//!     e^{-x} ((1+A)^2 v + 2(1+A)|v'| + |v''|) <= e^{-600} (crudely).
//!
//! Since x^4 e^{-x/4} decreases for x > 16, the check V 600^4 e^{-150} < 6
//! certifies g'' < -6/x^4 + V e^{-x/4} < 0 on [600, inf).  The same
//! envelope gives |g'(x)| <= 2/x^3 + 4V e^{-x/4}, so g'(inf) = 0, and
//! int_600^inf |g''| = 2/600^3 + [-1, 1] 4V e^{-150}.
//!
//! The independent second route for (3,4) never touches b_1:
//!   J' = -sum_{n>=2} n b_n 3^{n-1}  (series integral of g'' over (0,3])
//!        + g'(3) - g'(600)          (jet telescope on [3,600])
//!        + 2/600^3 + [-1,1] eps     (envelope tail),
//! and agreement of J' with 5/64 within 1e-6 is the acceptance check.

use num_bigint::BigInt;
use num_rational::BigRational;
use rigor_interval::{
    add_dir, exp, BoundReport, Dir, Dyadic, Interval, IvError, Prec, Verdict,
};
use special_functions::{rat, rat_to_interval, zeta_int};

use crate::laurent::{brt_laurent, LaurentCoeffs};
use crate::CmbError;

/// Truncation order of the b_n series used on (0, 3].
const SERIES_ORDER: usize = 40;

/// Degree-4 Taylor jet: entries are Taylor coefficients f^{(k)}(x)/k! at a
/// point (or over an interval of points), each an enclosure.
#[derive(Clone, Debug)]
pub struct Jet {
    t: [Interval; 5],
}

impl Jet {
    pub fn constant(c: Interval) -> Jet {
        Jet {
            t: [
                c,
                Interval::zero(),
                Interval::zero(),
                Interval::zero(),
                Interval::zero(),
            ],
        }
    }

    /// The identity function evaluated over x.
    pub fn var(x: &Interval) -> Jet {
        Jet {
            t: [
                x.clone(),
                Interval::one(),
                Interval::zero(),
                Interval::zero(),
                Interval::zero(),
            ],
        }
    }

    pub fn add(&self, rhs: &Jet, p: Prec) -> Jet {
        let mut t = self.t.clone();
        for k in 0..5 {
            t[k] = t[k].add(&rhs.t[k], p);
        }
        Jet { t }
    }

    pub fn sub(&self, rhs: &Jet, p: Prec) -> Jet {
        let mut t = self.t.clone();
        for k in 0..5 {
            t[k] = t[k].sub(&rhs.t[k], p);
        }
        Jet { t }
    }

    pub fn scale(&self, c: &Interval, p: Prec) -> Jet {
        let mut t = self.t.clone();
        for k in 0..5 {
            t[k] = t[k].mul(c, p);
        }
        Jet { t }
    }

    pub fn mul(&self, rhs: &Jet, p: Prec) -> Jet {
        let mut t = [
            Interval::zero(),
            Interval::zero(),
            Interval::zero(),
            Interval::zero(),
            Interval::zero(),
        ];
        for i in 0..5 {
            for j in 0..(5 - i) {
                t[i + j] = t[i + j].add(&self.t[i].mul(&rhs.t[j], p), p);
            }
        }
        Jet { t }
    }

    /// 1/f; errors when the value coefficient straddles zero.
    pub fn recip(&self, p: Prec) -> Result<Jet, IvError> {
        let u0 = self.t[0].recip(p)?;
        let mut t = [
            u0.clone(),
            Interval::zero(),
            Interval::zero(),
            Interval::zero(),
            Interval::zero(),
        ];
        for k in 1..5 {
            let mut s = Interval::zero();
            for j in 1..=k {
                s = s.add(&self.t[j].mul(&t[k - j], p), p);
            }
            t[k] = s.mul(&u0, p).neg();
        }
        Ok(Jet { t })
    }

    /// exp(f) via k e_k = sum_{j=1..k} j f_j e_{k-j}.
    pub fn exp(&self, p: Prec) -> Result<Jet, IvError> {
        let e0 = exp(&self.t[0], p)?;
        let mut t = [
            e0,
            Interval::zero(),
            Interval::zero(),
            Interval::zero(),
            Interval::zero(),
        ];
        for k in 1..5 {
            let mut s = Interval::zero();
            for j in 1..=k {
                s = s.add(&self.t[j].mul_i64(j as i64, p).mul(&t[k - j], p), p);
            }
            t[k] = s.div_i64(k as i64, p).expect("k >= 1");
        }
        Ok(Jet { t })
    }

    pub fn value(&self) -> &Interval {
        &self.t[0]
    }

    pub fn d1(&self) -> Interval {
        self.t[1].clone()
    }

    pub fn d2(&self, p: Prec) -> Interval {
        self.t[2].mul_i64(2, p)
    }
}

/// Jet of g over x (a point or a cell), straight from the direct formula.
/// Requires x certifiably positive.
pub fn g_jet(lc: &LaurentCoeffs, x: &Interval, p: Prec) -> Result<Jet, CmbError> {
    if !x.is_positive().is_verified() {
        return Err(CmbError::UnsupportedArguments);
    }
    let a_iv = rat_to_interval(&lc.a(), p);
    let cm1 = rat_to_interval(lc.c(-1), p);
    // fold c_{-1} A x / x into the constant term: composing (Ax)(1/x) as
    // jets would leave 1/x^3-sized cancellation noise that swamps the
    // 1/x^4-sized tail of g''
    let shift = rat_to_interval(&(lc.c(-1) * &lc.a() + lc.c(0)), p);
    let xj = Jet::var(x);
    let e_ax = xj.scale(&a_iv.neg(), p).exp(p)?;
    let e_x = xj.scale(&Interval::from_i64(-1), p).exp(p)?;
    let one = Jet::constant(Interval::one());
    let inv_x = xj.recip(p)?;
    let e_ax_inv_x = e_ax.mul(&inv_x, p);
    let b = e_ax_inv_x.mul(&one.sub(&e_x, p).recip(p)?, p);
    Ok(b
        .sub(&inv_x.mul(&inv_x, p), p)
        .sub(&e_ax_inv_x.scale(&cm1, p), p)
        .sub(&Jet::constant(shift), p))
}

/// Coefficient envelope tails for the b_n series: |c_n| <= 2 zeta(3)/(2pi)^{n+2}
/// (n >= 1) and |c*_n| <= A^{n+1}/(2 (n+1)!).  Both helpers require
/// u = x/(2 pi) small enough for their closed geometric forms; callers stay
/// on (0, 3] where u <= 0.478.
pub struct SeriesTails {
    two_zeta3: Interval,
    two_pi: Interval,
    a_iv: Interval,
    fact_km1: Interval, // (K-1)!
    fact_k: Interval,   // K!
}

impl SeriesTails {
    pub fn new(lc: &LaurentCoeffs, p: Prec) -> SeriesTails {
        let mut f = BigRational::from_integer(BigInt::from(1));
        for i in 2..SERIES_ORDER {
            f *= BigRational::from_integer(BigInt::from(i));
        }
        let fact_km1 = rat_to_interval(&f, p);
        f *= BigRational::from_integer(BigInt::from(SERIES_ORDER));
        SeriesTails {
            two_zeta3: zeta_int(3, p).scale2(1),
            two_pi: rigor_interval::pi(p).scale2(1),
            a_iv: rat_to_interval(&lc.a(), p),
            fact_km1,
            fact_k: rat_to_interval(&f, p),
        }
    }

    /// Upper bound for sum_{n>K} n(n-1) |b_n| x^{n-2} over the cell x.
    fn tail_d2(&self, x: &Interval, p: Prec) -> Result<Dyadic, CmbError> {
        let k = SERIES_ORDER as i64;
        let u = x.abs().div(&self.two_pi, p)?;
        // ratio (n+1)n / (n(n-1)) <= (K+2)/K for n > K
        let ru = u.mul_i64(k + 2, p).div_i64(k, p)?;
        if !ru.lt(&Interval::one()).is_verified() {
            return Err(CmbError::OutOfDisk);
        }
        let c_part = self
            .two_zeta3
            .div(&self.two_pi.pow_int(4, p)?, p)?
            .mul_i64((k + 1) * k, p)
            .mul(&u.pow_int((SERIES_ORDER - 1) as i32, p)?, p)
            .div(&Interval::one().sub(&ru, p), p)?;
        // n(n-1)/(n+1)! <= 1/(n-2)!
        let ax = self.a_iv.mul(&x.abs(), p);
        let axk = ax.div_i64(k, p)?;
        if !axk.lt(&Interval::one()).is_verified() {
            return Err(CmbError::OutOfDisk);
        }
        let cs_part = self
            .a_iv
            .pow_int(3, p)?
            .scale2(-1)
            .mul(&ax.pow_int((SERIES_ORDER - 1) as i32, p)?, p)
            .div(&self.fact_km1, p)?
            .div(&Interval::one().sub(&axk, p), p)?;
        Ok(c_part.add(&cs_part, p).abs_upper())
    }

    /// Upper bound for sum_{n>K} n |b_n| x^{n-1} over the cell x.
    fn tail_d1(&self, x: &Interval, p: Prec) -> Result<Dyadic, CmbError> {
        let k = SERIES_ORDER as i64;
        let u = x.abs().div(&self.two_pi, p)?;
        if !u.lt(&Interval::one()).is_verified() {
            return Err(CmbError::OutOfDisk);
        }
        // exact sum_{n>K} n u^{n-1} = u^K ((K+1) - K u) / (1-u)^2
        let s = u
            .pow_int(SERIES_ORDER as i32, p)?
            .mul(&Interval::from_i64(k + 1).sub(&u.mul_i64(k, p), p), p)
            .div(&Interval::one().sub(&u, p).pow_int(2, p)?, p)?;
        let c_part = self
            .two_zeta3
            .div(&self.two_pi.pow_int(3, p)?, p)?
            .mul(&s, p);
        // n/(n+1)! <= 1/(n-1)!
        let ax = self.a_iv.mul(&x.abs(), p);
        let axk = ax.div_i64(k + 1, p)?;
        if !axk.lt(&Interval::one()).is_verified() {
            return Err(CmbError::OutOfDisk);
        }
        let cs_part = self
            .a_iv
            .pow_int(2, p)?
            .scale2(-1)
            .mul(&ax.pow_int(SERIES_ORDER as i32, p)?, p)
            .div(&self.fact_k, p)?
            .div(&Interval::one().sub(&axk, p), p)?;
        Ok(c_part.add(&cs_part, p).abs_upper())
    }
}

fn ball(t: &Dyadic) -> Interval {
    Interval::new(t.abs().neg(), t.abs())
}

/// Series enclosure of g''(x) = sum_{n>=2} n(n-1) b_n x^{n-2} on cells of
/// (0, 3], including x straddling 0 from the closed form at 0.
pub fn g_d2_series(lc: &LaurentCoeffs, tails: &SeriesTails, x: &Interval, p: Prec) -> Result<Interval, CmbError> {
    let mut acc = Interval::zero();
    for n in (2..=SERIES_ORDER).rev() {
        let cn = lc.b(n) * BigRational::from_integer(BigInt::from(n * (n - 1)));
        acc = acc.mul(x, p).add(&rat_to_interval(&cn, p), p);
    }
    Ok(acc.add(&ball(&tails.tail_d2(x, p)?), p))
}

/// Series enclosure of g'(x) = sum_{n>=1} n b_n x^{n-1} on (0, 3].
pub fn g_d1_series(lc: &LaurentCoeffs, tails: &SeriesTails, x: &Interval, p: Prec) -> Result<Interval, CmbError> {
    let mut acc = Interval::zero();
    for n in (1..=SERIES_ORDER).rev() {
        let cn = lc.b(n) * BigRational::from_integer(BigInt::from(n));
        acc = acc.mul(x, p).add(&rat_to_interval(&cn, p), p);
    }
    Ok(acc.add(&ball(&tails.tail_d1(x, p)?), p))
}

/// Series enclosure of int_0^x g''(t) dt = sum_{n>=2} n b_n x^{n-1}; shares
/// the g' tail since the summands only differ in the n = 1 term.
fn g_d2_series_integral(
    lc: &LaurentCoeffs,
    tails: &SeriesTails,
    x: &Interval,
    p: Prec,
) -> Result<Interval, CmbError> {
    let mut acc = Interval::zero();
    for n in (2..=SERIES_ORDER).rev() {
        let cn = lc.b(n) * BigRational::from_integer(BigInt::from(n));
        acc = acc.mul(x, p).add(&rat_to_interval(&cn, p), p);
    }
    acc = acc.mul(x, p); // one power for the n = 2 term's x^{n-1}
    Ok(acc.add(&ball(&tails.tail_d1(x, p)?), p))
}

/// Adaptively certify a fixed sign for `eval` over [lo, hi].  Cells are
/// bisected until every enclosure has the requested sign; returns the cell
/// count, or `UndecidableOrdering` once cells shrink below 2^-40.
fn certify_sign<F>(
    eval: &F,
    lo: &Dyadic,
    hi: &Dyadic,
    positive: bool,
    p: Prec,
) -> Result<u64, CmbError>
where
    F: Fn(&Interval, Prec) -> Result<Interval, CmbError>,
{
    let min_width = Dyadic::new(BigInt::from(1), -40);
    let mut stack = vec![(lo.clone(), hi.clone())];
    let mut cells = 0u64;
    while let Some((a, b)) = stack.pop() {
        let cell = Interval::new(a.clone(), b.clone());
        let v = eval(&cell, p)?;
        let ok = if positive { v.is_positive() } else { v.is_negative() };
        if ok.is_verified() {
            cells += 1;
            continue;
        }
        let w = add_dir(&b, &a.neg(), p.get(), Dir::Up);
        if w.value_cmp(&min_width) == std::cmp::Ordering::Less {
            return Err(CmbError::UndecidableOrdering);
        }
        let mid = add_dir(&a, &b, p.get(), Dir::Down).scale2(-1);
        if mid.value_cmp(&a) != std::cmp::Ordering::Greater
            || mid.value_cmp(&b) != std::cmp::Ordering::Less
        {
            return Err(CmbError::UndecidableOrdering);
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    Ok(cells)
}

/// Envelope constant V with |g''(x) + 6/x^4| <= V e^{-x/4} for x >= 600.
fn envelope_v(lc: &LaurentCoeffs, p: Prec) -> Result<Interval, CmbError> {
    let x = Interval::from_i64(600);
    let a_iv = rat_to_interval(&lc.a(), p);
    let half_plus_a = rat_to_interval(&(rat(1, 2) + lc.a()), p);
    // (1/2+A) e^{(1/4-A) 600} (A^2/600 + 2A/600^2 + 2/600^3)
    let decay = exp(
        &rat_to_interval(&rat(1, 4), p).sub(&a_iv, p).mul(&x, p),
        p,
    )?;
    let poly = a_iv
        .pow_int(2, p)?
        .div(&x, p)?
        .add(&a_iv.scale2(1).div(&x.pow_int(2, p)?, p)?, p)
        .add(&x.pow_int(3, p)?.recip(p)?.scale2(1), p);
    let first = half_plus_a.mul(&decay, p).mul(&poly, p);
    // crude e^{-600} cover for the psi'' part
    let second = exp(&Interval::from_i64(-600), p)?;
    Ok(first.add(&second, p))
}

/// Certify g'' < 0 on [600, infinity): V 600^4 e^{-150} < 6, using that
/// x^4 e^{-x/4} decreases for x > 16.
fn certify_far_negative(v: &Interval, p: Prec) -> Result<(), CmbError> {
    let x4 = Interval::from_i64(600).pow_int(4, p)?;
    let e = exp(&Interval::from_i64(-150), p)?;
    let lhs = v.mul(&x4, p).mul(&e, p);
    if lhs.lt(&Interval::from_i64(6)).is_verified() {
        Ok(())
    } else {
        Err(CmbError::UndecidableOrdering)
    }
}

/// Both far-tail integrals at the 600 cut:
/// int_600^inf |g''| = 2/600^3 + [-1,1] * 4 V e^{-150}.
fn far_tail_integral(v: &Interval, p: Prec) -> Result<Interval, CmbError> {
    let main = Interval::from_i64(600).pow_int(3, p)?.recip(p)?.scale2(1);
    let eps = v.mul_i64(4, p).mul(&exp(&Interval::from_i64(-150), p)?, p);
    Ok(main.add(&ball(&eps.abs_upper()), p))
}

/// Report on J_{r,t} = int_0^infty |g''|.
///
///  *  (3,4): claims J = 5/64 exactly (lhs is the independent numeric route,
///     rhs the exact value); Verified when the routes agree within 1e-6.
///  *  (1,4): claims J < 649/40000 with the crossing alpha bracketed in
///     [15.45, 15.46]; metadata carries the bracket and g'(alpha).
pub fn j_g_quadrature(r: i64, t: i64, p: Prec) -> Result<BoundReport, CmbError> {
    if !((r == 1 || r == 3) && t == 4) {
        return Err(CmbError::UnsupportedArguments);
    }
    let w = p.plus(64);
    let lc = brt_laurent(r, t, SERIES_ORDER)?;
    let tails = SeriesTails::new(&lc, w);
    let series_d2 = |x: &Interval, q: Prec| g_d2_series(&lc, &tails, x, q);
    let jet_d2 = |x: &Interval, q: Prec| Ok(g_jet(&lc, x, q)?.d2(q));

    let v_env = envelope_v(&lc, w)?;
    certify_far_negative(&v_env, w)?;
    let three = Dyadic::new(BigInt::from(3), 0);
    let six_hundred = Dyadic::new(BigInt::from(600), 0);

    // dual-route agreement on g'(3): Bernoulli series vs direct-formula jet
    let at3 = Interval::new(three.clone(), three.clone());
    let g1_series_3 = g_d1_series(&lc, &tails, &at3, w)?;
    let jet3 = g_jet(&lc, &at3, w)?;
    let route_gap = g1_series_3.sub(&jet3.d1(), w).abs();

    if r == 3 {
        // route 1: g'' < 0 everywhere => J = b_1 = 5/64
        let cells_series = certify_sign(&series_d2, &Dyadic::zero(), &three, false, w)?;
        let cells_jet = certify_sign(&jet_d2, &three, &six_hundred, false, w)?;
        // route 2, independent of b_1
        let at600 = Interval::new(six_hundred.clone(), six_hundred.clone());
        let jet600 = g_jet(&lc, &at600, w)?;
        let series_int = g_d2_series_integral(&lc, &tails, &at3, w)?;
        let j2 = series_int
            .neg()
            .add(&jet3.d1().sub(&jet600.d1(), w), w)
            .add(&far_tail_integral(&v_env, w)?, w)
            .round_to(p);
        let exact = rat_to_interval(&rat(5, 64), p);
        let tol = rat_to_interval(&rat(1, 1_000_000), w);
        let verdict = if j2.contains(&exact)
            && Interval::new(Dyadic::zero(), j2.width(w)).lt(&tol).is_verified()
        {
            Verdict::Verified
        } else {
            Verdict::Indeterminate
        };
        return Ok(BoundReport::new("j-quadrature.r3t4", j2, exact, verdict)
            .with_meta("route1", "5/64 exact; g'' < 0 on (0, infinity)")
            .with_meta("route2", "series integral + jet telescope + far tail")
            .with_meta("g_prime3_route_gap", format!("{route_gap}"))
            .with_meta("cells", format!("{}", cells_series + cells_jet))
            .with_prec(p));
    }

    // (1,4): bracket [l, u] inside [15.45, 15.46] around the sign crossing
    let l = Interval::from_decimal_str("15.45", w)?.hi().clone();
    let u = Interval::from_decimal_str("15.46", w)?.lo().clone();
    let cells_series = certify_sign(&series_d2, &Dyadic::zero(), &three, true, w)?;
    let cells_pos = certify_sign(&jet_d2, &three, &l, true, w)?;
    let cells_neg = certify_sign(&jet_d2, &u, &six_hundred, false, w)?;

    let bracket = Interval::new(l.clone(), u.clone());
    let jet_l = g_jet(&lc, &Interval::new(l.clone(), l.clone()), w)?;
    let jet_u = g_jet(&lc, &Interval::new(u.clone(), u.clone()), w)?;
    // sign change across the bracket pins a crossing alpha inside it
    if !jet_l.d2(w).is_positive().is_verified() || !jet_u.d2(w).is_negative().is_verified() {
        return Err(CmbError::UndecidableOrdering);
    }
    let g1_alpha = g_jet(&lc, &bracket, w)?.d1();
    let sup_d2 = g_jet(&lc, &bracket, w)?.d2(w).abs_upper();
    let width = Interval::new(l.clone(), l).sub(&Interval::new(u.clone(), u), w).abs();
    let m_term = Interval::new(
        Dyadic::zero(),
        width.mul(&Interval::new(sup_d2.clone(), sup_d2), w).abs_upper(),
    );
    let j = jet_l
        .d1()
        .add(&jet_u.d1(), w)
        .add(&rat_to_interval(&rat(1, 64), w), w)
        .add(&m_term, w)
        .round_to(p);
    let rhs = rat_to_interval(&rat(649, 40000), p);
    Ok(BoundReport::less_than("j-quadrature.r1t4", j, rhs)
        .with_meta("alpha_bracket", "[15.45, 15.46]")
        .with_meta("g_prime_alpha", format!("{g1_alpha}"))
        .with_meta("g_prime3_route_gap", format!("{route_gap}"))
        .with_meta(
            "cells",
            format!("{}", cells_series + cells_pos + cells_neg),
        )
        .with_prec(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Prec = Prec::DEFAULT;

    fn pin(s: &str) -> Interval {
        Interval::from_decimal_str(s, P)
            .unwrap()
            .widen_ulp10(17, 2, P)
    }

    fn tol(s: &str) -> Interval {
        Interval::from_decimal_str(s, P).unwrap()
    }

    #[test]
    fn jet_matches_hand_derivatives() {
        // f(x) = e^{-x}/x at x = 2: f = e^{-2}/2, f' = -e^{-x}(1/x + 1/x^2)
        // = -3/4 e^{-2}, f'' = e^{-x}(1/x + 2/x^2 + 2/x^3) = 5/4 e^{-2}
        let x = Interval::from_i64(2);
        let xj = Jet::var(&x);
        let f = xj
            .scale(&Interval::from_i64(-1), P)
            .exp(P)
            .unwrap()
            .mul(&xj.recip(P).unwrap(), P);
        let e2 = exp(&Interval::from_i64(-2), P).unwrap();
        let want_v = e2.scale2(-1);
        let want_d1 = e2.mul(&Interval::from_ratio(-3, 4, P).unwrap(), P);
        let want_d2 = e2.mul(&Interval::from_ratio(5, 4, P).unwrap(), P);
        assert!(f.value().contains(&want_v) || want_v.contains(f.value()));
        let d1 = f.d1();
        let d2 = f.d2(P);
        assert!(d1.sub(&want_d1, P).abs().lt(&tol("0.00000000000000001")).is_verified());
        assert!(d2.sub(&want_d2, P).abs().lt(&tol("0.00000000000000001")).is_verified());
    }

    #[test]
    fn g_jet_values_match_series() {
        // dual route agreement at x = 1/2 for both kernels
        for (r, t) in [(1i64, 4i64), (3, 4)] {
            let lc = brt_laurent(r, t, SERIES_ORDER).unwrap();
            let tails = SeriesTails::new(&lc, P);
            let x = Interval::new(
                Dyadic::new(BigInt::from(1), -1),
                Dyadic::new(BigInt::from(1), -1),
            );
            let jet = g_jet(&lc, &x, P).unwrap();
            let s1 = g_d1_series(&lc, &tails, &x, P).unwrap();
            let s2 = g_d2_series(&lc, &tails, &x, P).unwrap();
            let gap1 = jet.d1().sub(&s1, P).abs();
            let gap2 = jet.d2(P).sub(&s2, P).abs();
            let tol = tol("0.0000000000000000000001");
            assert!(gap1.lt(&tol).is_verified(), "({r},{t}) d1 gap {gap1}");
            assert!(gap2.lt(&tol).is_verified(), "({r},{t}) d2 gap {gap2}");
        }
    }

    #[test]
    fn g_derivative_pins() {
        // frozen from an independent 20-digit evaluation
        let lc = brt_laurent(1, 4, SERIES_ORDER).unwrap();
        let x3 = Interval::from_i64(3);
        let jet = g_jet(&lc, &x3, P).unwrap();
        assert!(pin("-0.03685281474917775036").contains(jet.value()));
        assert!(pin("-0.00830746547605859629").contains(&jet.d1()));
        assert!(pin("0.00267651314496700389").contains(&jet.d2(P)));
        let lc34 = brt_laurent(3, 4, SERIES_ORDER).unwrap();
        let jet34 = g_jet(&lc34, &x3, P).unwrap();
        assert!(pin("0.02256653838142735590").contains(&jet34.d1()));
        assert!(pin("-0.00895111912654224985").contains(&jet34.d2(P)));
    }

    #[test]
    fn curvature_sign_flips_inside_bracket() {
        let lc = brt_laurent(1, 4, SERIES_ORDER).unwrap();
        let at = |s: &str| {
            let iv = Interval::from_decimal_str(s, P).unwrap();
            g_jet(&lc, &iv, P).unwrap().d2(P)
        };
        assert!(at("15.45").is_positive().is_verified());
        assert!(at("15.46").is_negative().is_verified());
        // and near-zero inside: |g''(15.4523)| < 1e-9
        assert!(at("15.4523").abs().lt(&tol("0.000000001")).is_verified());
    }

    #[test]
    fn quadrature_reports() {
        let r14 = j_g_quadrature(1, 4, P).unwrap();
        assert!(r14.is_verified(), "{r14}");
        assert!(r14.lhs.contains(&pin("0.01606746910739258048")));
        let r34 = j_g_quadrature(3, 4, P).unwrap();
        assert!(r34.is_verified(), "{r34}");
        assert!(r34.lhs.contains(&rat_to_interval(&rat(5, 64), P)));
        assert!(matches!(
            j_g_quadrature(2, 5, P),
            Err(CmbError::UnsupportedArguments)
        ));
    }
}
