//! Algebraic laws of truncated multiplication on pseudorandom inputs.

use num_bigint::BigInt;
use series_engine::{series_mul, QSeries};

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        // xorshift64*
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    fn coeff(&mut self) -> BigInt {
        let v = (self.next() % 2001) as i64 - 1000;
        BigInt::from(v)
    }
}

fn random_series(rng: &mut Rng, order: usize) -> QSeries {
    let coeffs = (0..=order).map(|_| rng.coeff()).collect();
    QSeries::from_coeffs(coeffs)
}

#[test]
fn multiplication_is_commutative() {
    let mut rng = Rng(0x9e3779b97f4a7c15);
    for _ in 0..20 {
        let a = random_series(&mut rng, 64);
        let b = random_series(&mut rng, 64);
        let ab = series_mul(&a, &b).unwrap();
        let ba = series_mul(&b, &a).unwrap();
        assert_eq!(ab.coeffs(), ba.coeffs());
    }
}

#[test]
fn multiplication_is_associative() {
    let mut rng = Rng(0xdeadbeefcafef00d);
    for _ in 0..20 {
        let a = random_series(&mut rng, 64);
        let b = random_series(&mut rng, 64);
        let c = random_series(&mut rng, 64);
        let left = series_mul(&series_mul(&a, &b).unwrap(), &c).unwrap();
        let right = series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap();
        assert_eq!(left.coeffs(), right.coeffs());
    }
}

#[test]
fn one_is_the_identity() {
    let mut rng = Rng(42);
    let a = random_series(&mut rng, 64);
    let one = QSeries::one(64);
    assert_eq!(series_mul(&a, &one).unwrap().coeffs(), a.coeffs());
}

#[test]
fn order_mismatch_is_rejected() {
    let a = QSeries::one(10);
    let b = QSeries::one(11);
    assert!(series_mul(&a, &b).is_err());
}
