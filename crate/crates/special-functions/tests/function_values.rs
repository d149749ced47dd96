//! Frozen reference values and nesting invariants for the evaluators.
//!
//! Reference decimals were produced by an independent high-precision
//! implementation (series summed directly at 60+ digits) and are widened by
//! one unit in the last place before containment checks.

use num_bigint::BigInt;
use rigor_interval::{Dyadic, Interval, Prec};
use special_functions::{
    bessel_i_m34, bessel_i_m34_with_order, h_a_identity_check, hurwitz_zeta2, rat,
};

const P: Prec = Prec::DEFAULT;

fn pinned(lit: &str) -> Interval {
    let digits = lit.split('.').nth(1).map(|f| f.len()).unwrap_or(0) as u32;
    Interval::from_decimal_str(lit, P)
        .unwrap()
        .widen_ulp10(digits, 1, P)
}

#[test]
fn hurwitz_quarter_pin() {
    let z = hurwitz_zeta2(&rat(1, 4), P).unwrap();
    let pin = pinned("17.19732915450711073927131911933522402151");
    assert!(pin.contains(&z), "zeta(2, 1/4) drifted: {z}");
}

#[test]
fn bessel_reference_values() {
    let cases = [
        ("0.5", "0.98007676964418531722"),
        ("1.0", "0.9758675373997081552176076256226"),
        ("10.0", "2733.32855838565867371"),
    ];
    for (x, want) in cases {
        let v = bessel_i_m34(&Interval::from_decimal_str(x, P).unwrap(), P).unwrap();
        let pin = pinned(want);
        assert!(pin.contains(&v), "I_(-3/4)({x}) drifted: {v}");
    }
}

#[test]
fn bessel_enclosures_nest_with_order() {
    // at mid-range arguments the truncation gap dominates rounding noise,
    // so a deeper partial sum must give a nested enclosure
    for x in ["6.0", "10.0", "20.0"] {
        let xi = Interval::from_decimal_str(x, P).unwrap();
        let base = bessel_i_m34(&xi, P).unwrap();
        let k0 = 32.max(xi.hi().scale2(1).ceil_i64().unwrap() as u32);
        let deeper = bessel_i_m34_with_order(&xi, k0 + 10, P).unwrap();
        assert!(base.contains(&deeper), "order {k0}+10 escaped at x={x}");
        assert!(deeper.lo() >= base.lo(), "partial sums must increase");
    }
}

#[test]
fn bessel_width_is_tiny_at_large_argument() {
    // near x = 44 (the scale the threshold scan uses) the relative width at
    // 128 bits must be far below 1e-20
    let x = Interval::from_decimal_str("43.7008976064656", P).unwrap();
    let v = bessel_i_m34(&x, P).unwrap();
    let rel = v
        .width(P)
        .mag_exp()
        .unwrap()
        .checked_sub(v.abs_upper().mag_exp().unwrap())
        .unwrap();
    assert!(rel < -66, "relative width 2^{rel} too coarse"); // 2^-66 < 1e-20
}

#[test]
fn h_identity_ten_point_suite() {
    let mut pass = 0;
    for a in [rat(1, 1), rat(1, 2)] {
        for x in [rat(1, 10), rat(1, 2), rat(1, 1), rat(2, 1), rat(3, 1)] {
            let rep = h_a_identity_check(&a, &x, P).unwrap();
            assert!(rep.is_verified(), "failed at a={a} x={x}: {rep}");
            pass += 1;
        }
    }
    assert_eq!(pass, 10);
}

#[test]
fn h_identity_enclosure_is_sharp() {
    // the two-sided enclosure difference must be tiny, not vacuously wide
    let rep = h_a_identity_check(&rat(1, 2), &rat(1, 1), P).unwrap();
    let slop = rep.lhs.width(P);
    assert!(slop <= Dyadic::new(BigInt::from(1), -120), "lhs too wide");
}
