//! Shape checks on the error majorant E_a^{r,t}: the (1,4) kernel's E is
//! dominated by the simple linear form (649/480000 + 99/5000)|z| on the
//! whole working disk |z| < pi/6, while the analogous printed linear
//! forms for the (3,4) kernel are certifiably too small at |z| = 0.1 and
//! must not be used.  The quadrature reports backing the J constants are
//! re-checked alongside.

use circle_method_bounds::{eval_e, j_g_quadrature, CxInterval};
use num_rational::BigRational;
use rigor_interval::{Interval, Prec};
use special_functions::{rat, rat_to_interval};

const P: Prec = Prec::DEFAULT;

fn iv(s: &str) -> Interval {
    Interval::from_decimal_str(s, P).unwrap()
}

fn one_rat() -> BigRational {
    BigRational::from_integer(1.into())
}

/// Deterministic low-state generator so the sample set is reproducible.
struct Lcg(u64);

impl Lcg {
    fn unit(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}

#[test]
fn linear_form_dominates_first_kernel_on_disk() {
    let slope = rat_to_interval(&(rat(649, 480000) + rat(99, 5000)), P);
    let a = one_rat();
    let mut rng = Lcg(0x243F6A8885A308D3);
    for _ in 0..50 {
        let x = 0.02 + 0.40 * rng.unit();
        let y_max = (0.52f64 * 0.52 - x * x).sqrt();
        let y = (2.0 * rng.unit() - 1.0) * y_max;
        let z = CxInterval::new(
            iv(&format!("{x:.6}")),
            iv(&format!("{y:.6}")),
        );
        let e = eval_e(&a, 1, 4, &z, P).unwrap();
        let bound = slope.mul(&z.abs(P), P);
        assert!(
            e.le(&bound).is_verified(),
            "domination failed at z = {x:.6} + {y:.6}i: E = {e}, bound = {bound}"
        );
    }
}

#[test]
fn analogous_linear_forms_fail_for_second_kernel() {
    let z = CxInterval::from_real(iv("0.1"));
    // a = 1: E = 0.005554... exceeds (5/768 + 93/2500) * 0.1 = 0.004371...
    let e = eval_e(&one_rat(), 3, 4, &z, P).unwrap();
    let form = rat_to_interval(&(rat(5, 768) + rat(93, 2500)), P).mul(&z.abs(P), P);
    let printed = iv("0.004371041667");
    assert!(form.sub(&printed, P).abs().lt(&iv("1e-11")).is_verified());
    assert!(e.gt(&form).is_verified(), "E = {e}, form = {form}");
    assert!(iv("0.00555425492016673721").widen_ulp10(18, 2, P).contains(&e));

    // a = 1/2: E = 0.003048... exceeds (5/768 + 93/5000) * 0.1 = 0.002511...
    let e = eval_e(&rat(1, 2), 3, 4, &z, P).unwrap();
    let form = rat_to_interval(&(rat(5, 768) + rat(93, 5000)), P).mul(&z.abs(P), P);
    let printed = iv("0.002511041667");
    assert!(form.sub(&printed, P).abs().lt(&iv("1e-11")).is_verified());
    assert!(e.gt(&form).is_verified(), "E = {e}, form = {form}");
    assert!(iv("0.003048001464301800171").widen_ulp10(18, 2, P).contains(&e));
}

#[test]
fn quadrature_reports_back_the_j_constants() {
    let j14 = j_g_quadrature(1, 4, P).unwrap();
    assert!(j14.is_verified(), "{j14}");
    assert!(j14.rhs.contains(&rat_to_interval(&rat(649, 40000), P)));
    assert!(j14.metadata.contains_key("alpha_bracket"));
    assert!(j14.metadata.contains_key("g_prime3_route_gap"));

    let j34 = j_g_quadrature(3, 4, P).unwrap();
    assert!(j34.is_verified(), "{j34}");
    assert!(j34.lhs.contains(&rat_to_interval(&rat(5, 64), P)));
    assert!(j34.metadata.contains_key("g_prime3_route_gap"));
}
