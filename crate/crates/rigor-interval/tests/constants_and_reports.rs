//! Cross-checks of the cached constants against independent decimal
//! literals, and the serialized shape of reports and intervals.

use rigor_interval::{
    euler_gamma, exp, gamma_quarter, ln2, pi, BoundReport, Interval, Prec, Verdict,
};

fn enclosure_of(lit: &str, p: Prec) -> Interval {
    // treat the literal as round-to-nearest in its last printed digit
    let digits = lit.split('.').nth(1).map(|f| f.len()).unwrap_or(0) as u32;
    Interval::from_decimal_str(lit, p)
        .unwrap()
        .widen_ulp10(digits, 1, p)
}

#[test]
fn constants_match_independent_literals() {
    let p = Prec::new(256).unwrap();
    // independent sources, more digits than the in-crate guard literals use
    let cases = [
        (pi(p), "3.14159265358979323846264338327950288419716939937510582097494459"),
        (ln2(p), "0.69314718055994530941723212145817656807550013436025525412068001"),
        (euler_gamma(p), "0.57721566490153286060651209008240243104215933593992359880576723"),
        (gamma_quarter(p), "3.62560990822190831193068515586767200299516768288006546743337799"),
    ];
    for (value, lit) in cases {
        let target = enclosure_of(lit, p);
        assert!(
            target.contains(&value) || value.contains(&target),
            "constant enclosure and literal enclosure must overlap tightly: {value} vs {lit}"
        );
        // the enclosures must intersect
        assert!(value.lo() <= target.hi() && target.lo() <= value.hi());
        // and the constant's own width is far below 10^-54
        let cap = rigor_interval::Dyadic::new(num_bigint::BigInt::from(1), -180);
        assert!(value.width(p) <= cap, "constant too wide: {value}");
    }
}

#[test]
fn pi_squared_over_six_matches_zeta_two_partial_sums() {
    // sandwich zeta(2) between partial sum and partial sum + integral tail:
    // sum_{k<=N} 1/k^2 < zeta(2) < sum + 1/N
    let p = Prec::new(192).unwrap();
    let n = 4000i64;
    let mut s = Interval::zero();
    for k in 1..=n {
        s = s.add(&Interval::from_i64(1).div_i64(k * k, p).unwrap(), p);
    }
    let lo = s.clone();
    let hi = s.add(&Interval::from_ratio(1, n, p).unwrap(), p);
    let z2 = pi(p).pow_int(2, p).unwrap().div_i64(6, p).unwrap();
    assert_eq!(lo.lt(&z2), Verdict::Verified);
    assert_eq!(z2.lt(&hi), Verdict::Verified);
}

#[test]
fn exp_of_ln2_is_two() {
    let p = Prec::new(160).unwrap();
    let two = exp(&ln2(p), p).unwrap();
    assert!(two.contains_dyadic(&rigor_interval::Dyadic::from_i64(2)));
    assert!(two.width(p) <= rigor_interval::Dyadic::new(num_bigint::BigInt::from(1), -140));
}

#[test]
fn bound_report_serializes_with_decimal_mantissas() {
    let p = Prec::DEFAULT;
    let lhs = Interval::from_ratio(1, 3, p).unwrap();
    let rhs = Interval::from_i64(1);
    let r = BoundReport::less_than("sample-claim", lhs, rhs).with_prec(p);
    assert!(r.is_verified());
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["claim_id"], "sample-claim");
    assert_eq!(json["verdict"], "Verified");
    let m = json["lhs"]["lo"]["mantissa"].as_str().unwrap();
    assert!(m.chars().all(|c| c.is_ascii_digit() || c == '-'));
    assert!(json["lhs"]["lo"]["exponent"].is_i64());
    assert_eq!(json["metadata"]["precision_bits"], "128");
    let shown = format!("{r}");
    assert!(shown.contains("sample-claim") && shown.contains("Verified"));
}
