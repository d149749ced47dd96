//! Digamma at the two arguments the bounds need.

use num_rational::BigRational;
use rigor_interval::{euler_gamma, ln2, Interval, Prec};

use crate::{rat, SfError};

/// psi(1) = -gamma and psi(1/2) = -2 log 2 - gamma; anything else errors.
pub fn digamma_at(a: &BigRational, p: Prec) -> Result<Interval, SfError> {
    let w = p.plus(16);
    if *a == BigRational::from_integer(1.into()) {
        Ok(euler_gamma(w).neg().round_to(p))
    } else if *a == rat(1, 2) {
        Ok(euler_gamma(w).add(&ln2(w).scale2(1), w).neg().round_to(p))
    } else {
        Err(SfError::UnsupportedArgument(format!(
            "digamma_at supports only 1 and 1/2, got {a}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rigor_interval::Dyadic;

    const P: Prec = Prec::DEFAULT;

    #[test]
    fn values_match_references() {
        let d1 = digamma_at(&rat(1, 1), P).unwrap();
        let g = Interval::from_decimal_str("-0.5772156649015328606065120900824024310421593359399", P)
            .unwrap()
            .widen_ulp10(49, 1, P);
        assert!(d1.lo() <= g.hi() && g.lo() <= d1.hi());

        let dh = digamma_at(&rat(1, 2), P).unwrap();
        let r = Interval::from_decimal_str("-1.963510026021423479440976332998755567193", P)
            .unwrap()
            .widen_ulp10(39, 1, P);
        assert!(dh.lo() <= r.hi() && r.lo() <= dh.hi());
        // width <= 2^-120 at 128 bits
        assert!(dh.width(P) <= Dyadic::new(BigInt::from(1), -120));
        assert!(d1.width(P) <= Dyadic::new(BigInt::from(1), -120));
    }

    #[test]
    fn unsupported_arguments_error() {
        assert!(matches!(
            digamma_at(&rat(1, 3), P),
            Err(SfError::UnsupportedArgument(_))
        ));
        assert!(digamma_at(&rat(2, 1), P).is_err());
    }
}
