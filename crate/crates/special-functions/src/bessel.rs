//! The modified Bessel function I_{-3/4} on positive arguments.
//!
//! Ascending series: I_{-3/4}(x) = sum_{k>=0} (x/2)^{2k-3/4} / (k! Gamma(k+1/4)).
//! All terms are positive, so a partial sum is a certified lower bound; the
//! term ratio (x/2)^2/((k+1)(k+1/4)) is <= 1/16 once k >= max(32, 2 x.hi),
//! giving a geometric tail for the upper bound. Gamma(k+1/4) is built by
//! forward recurrence from the Gamma(1/4) enclosure, never recomputed.

use rigor_interval::{gamma_quarter, Dyadic, Interval, Prec};

use crate::SfError;

fn default_order(x: &Interval) -> u32 {
    let hi2 = x.hi().scale2(1).ceil_i64().unwrap_or(i64::MAX);
    32.max(u32::try_from(hi2.max(0)).unwrap_or(u32::MAX))
}

/// Enclosure of I_{-3/4}(x) for x.lo > 0, at the default truncation order.
pub fn bessel_i_m34(x: &Interval, p: Prec) -> Result<Interval, SfError> {
    bessel_i_m34_with_order(x, default_order(x), p)
}

/// Same enclosure with an explicit truncation order; k_order must be at
/// least the default so the geometric tail ratio stays below 1/16. Larger
/// orders give nested (tighter) enclosures.
pub fn bessel_i_m34_with_order(
    x: &Interval,
    k_order: u32,
    p: Prec,
) -> Result<Interval, SfError> {
    if x.lo().signum() <= 0 {
        return Err(SfError::NonPositiveArgument);
    }
    assert!(
        k_order >= default_order(x),
        "truncation order too small for the tail bound"
    );
    let w = p.plus(48);
    let u = x.scale2(-1);
    let u2 = u.mul(&u, w);
    // prefactor (x/2)^{-3/4} = (x/2)^{1/4} / (x/2), square roots only
    let pre = u.sqrt(w)?.sqrt(w)?.div(&u, w)?;
    let mut term = gamma_quarter(w).recip(w)?; // k = 0: 1/Gamma(1/4)
    let mut sum = term.clone();
    for k in 0..k_order as i64 {
        // ratio t_{k+1}/t_k = (x/2)^2 / ((k+1)(k+1/4))
        term = term
            .mul(&u2, w)
            .mul_i64(4, w)
            .div_i64((k + 1) * (4 * k + 1), w)?;
        sum = sum.add(&term, w);
    }
    // next term, then geometric tail with ratio <= 1/16: tail <= next * 16/15
    let k = k_order as i64;
    let next = term
        .mul(&u2, w)
        .mul_i64(4, w)
        .div_i64((k + 1) * (4 * k + 1), w)?;
    let tail_hi = next.abs_upper().scale2(1); // factor 2 >= 16/15
    sum = sum.add(&Interval::new(Dyadic::zero(), tail_hi), w);
    Ok(pre.mul(&sum, w).round_to(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Prec = Prec::DEFAULT;

    #[test]
    fn domain_checked() {
        let bad = Interval::new(Dyadic::from_i64(-1), Dyadic::from_i64(1));
        assert!(matches!(
            bessel_i_m34(&bad, P),
            Err(SfError::NonPositiveArgument)
        ));
    }

    #[test]
    fn local_minimum_shape() {
        // the function decreases from the x^{-3/4} pole, bottoms out near 1,
        // then grows like e^x: I(1/2) > I(1) and I(10) >> I(1)
        let at =
            |v: &str| bessel_i_m34(&Interval::from_decimal_str(v, P).unwrap(), P).unwrap();
        let half = at("0.5");
        let one = at("1.0");
        let ten = at("10.0");
        assert!(one.hi() < half.lo());
        assert!(half.hi() < ten.lo());
    }
}
