//! Transport identities: moving a generator across the shifted twist
//! family `F_a` and the shifted conjugator family `u_a`.
//!
//! These are the workhorse identities behind the closed forms. Left legs
//! transport with a parameter shift only; right legs and the conjugators
//! pick up lower-order correction terms from `(ad e)` acting on the
//! generator. They are specific to cases 1 and 2, where `e` commutes with
//! its corrections.

use super::{case_elements, twist_inv_series, twist_series, u_series, v_series};
use crate::generator::{Family, Generator};
use crate::lie::TwistCase;
use crate::rational::{rat, ratio, Rational};
use crate::series::Series;
use crate::uea::{falling_factorial, rising_factorial, TensorElement, UeaElement};

/// A named defect series; zero iff the identity holds at the truncation
/// order.
#[derive(Clone, Debug)]
pub struct TransportCheck {
    pub name: &'static str,
    pub defect: Series,
}

fn case_scope(case: &TwistCase) {
    assert!(
        case.case() == 1 || case.case() == 2,
        "transport identities cover cases 1 and 2"
    );
}

/// Correction term `coeff * F_{a+r} (h^(r)_a (x) G) t^r`.
fn f_correction(
    case: &TwistCase,
    a: &Rational,
    r: usize,
    g: Generator,
    coeff: Rational,
    order: usize,
) -> Series {
    let (h, _) = case_elements(case);
    let core = TensorElement::outer(&[&rising_factorial(&h, r, a), &UeaElement::generator(g)]);
    twist_inv_series(case, &(a + rat(r as i64)), order)
        .mul(&Series::constant(core, order))
        .shift_t(r)
        .scale(&coeff)
}

/// Defects of the two `F_a` transport identities for a single generator:
/// `(X (x) 1) F_a = F_{a-shift(X)} (X (x) 1)` and
/// `(1 (x) X) F_a = F_a (1 (x) X) + corrections`.
pub fn f_transport_defects(
    case: &TwistCase,
    a: &Rational,
    g: &Generator,
    order: usize,
) -> Vec<TransportCheck> {
    case_scope(case);
    let n0 = case.n0();
    let x = UeaElement::generator(g.clone());
    let one = UeaElement::one();
    let xl = Series::constant(TensorElement::outer(&[&x, &one]), order);
    let xr = Series::constant(TensorElement::outer(&[&one, &x]), order);
    let fa = twist_inv_series(case, a, order);

    let shifted = twist_inv_series(case, &(a - case.index_shift(g)), order);
    let left = xl.mul(&fa).sub(&shifted.mul(&xl));

    let mut rhs = fa.mul(&xr);
    match (case.case(), g.family()) {
        (1, Family::L) => {
            let m = Generator::from_parts(Family::M, g.index() + rat(n0));
            rhs = rhs.add(&f_correction(case, a, 1, m, rat(n0), order));
        }
        (2, Family::L) => {
            let n = g.index();
            let y = Generator::from_parts(Family::Y, n + ratio(n0, 2));
            let m = Generator::from_parts(Family::M, n + rat(n0));
            let c1 = (rat(n0) - n) * ratio(1, 2);
            let c2 = n * (n - rat(n0)) * ratio(1, 4);
            rhs = rhs
                .add(&f_correction(case, a, 1, y, c1, order))
                .add(&f_correction(case, a, 2, m, c2, order));
        }
        (2, Family::Y) => {
            let p = g.index();
            let m = Generator::from_parts(Family::M, p + ratio(n0, 2));
            let c = ratio(n0, 2) - p;
            rhs = rhs.add(&f_correction(case, a, 1, m, c, order));
        }
        _ => {}
    }
    let right = xr.mul(&fa).sub(&rhs);

    vec![
        TransportCheck {
            name: "f-transport-left",
            defect: left,
        },
        TransportCheck {
            name: "f-transport-right",
            defect: right,
        },
    ]
}

/// Defect of the `u_a` transport identity for a single generator:
/// `X u_a = u_{a+shift(X)} (X + corrections)`.
pub fn u_transport_defects(
    case: &TwistCase,
    a: &Rational,
    g: &Generator,
    order: usize,
) -> Vec<TransportCheck> {
    case_scope(case);
    let n0 = case.n0();
    let (h, _) = case_elements(case);
    let x = UeaElement::generator(g.clone());

    // corrections are written-order products G * h^[r]_{r-a}, times t^r
    let correction = |r: usize, g: Generator, coeff: Rational| -> Series {
        let body = UeaElement::generator(g)
            .mul(&falling_factorial(&h, r, &(rat(r as i64) - a)))
            .scale(&coeff);
        Series::embed(&body, order).shift_t(r)
    };

    let mut inner = Series::embed(&x, order);
    match (case.case(), g.family()) {
        (1, Family::L) => {
            let m = Generator::from_parts(Family::M, g.index() + rat(n0));
            inner = inner.add(&correction(1, m, rat(-n0)));
        }
        (2, Family::L) => {
            let n = g.index();
            let y = Generator::from_parts(Family::Y, n + ratio(n0, 2));
            let m = Generator::from_parts(Family::M, n + rat(n0));
            inner = inner
                .add(&correction(1, y, (n - rat(n0)) * ratio(1, 2)))
                .add(&correction(2, m, n * (n - rat(n0)) * ratio(1, 4)));
        }
        (2, Family::Y) => {
            let p = g.index();
            let m = Generator::from_parts(Family::M, p + ratio(n0, 2));
            inner = inner.add(&correction(1, m, p - ratio(n0, 2)));
        }
        _ => {}
    }

    let lhs = Series::embed(&x, order).mul(&u_series(case, a, order));
    let rhs = u_series(case, &(a + case.index_shift(g)), order).mul(&inner);
    vec![TransportCheck {
        name: "u-transport",
        defect: lhs.sub(&rhs),
    }]
}

/// Defects of the shifted-family inverse pairs:
/// `script F_a * F_b = 1 (x) (1 - et)^{a-b}` and
/// `v_a * u_b = (1 - et)^{-(a+b)}`.
pub fn inverse_pair_defects(
    case: &TwistCase,
    a: &Rational,
    b: &Rational,
    order: usize,
) -> (Series, Series) {
    let (_, e) = case_elements(case);
    let f_pair = twist_series(case, a, order)
        .mul(&twist_inv_series(case, b, order))
        .sub(&Series::binomial_series(&e, &(a - b), order).prepend_unit_leg());
    let uv_pair = v_series(case, a, order)
        .mul(&u_series(case, b, order))
        .sub(&Series::binomial_series(&e, &(-(a + b)), order));
    (f_pair, uv_pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_generators() -> Vec<Generator> {
        vec![
            Generator::l(2),
            Generator::l(0),
            Generator::l(-1),
            Generator::m(3),
            Generator::m(-2),
            Generator::y_half(1),
            Generator::y_half(-3),
        ]
    }

    #[test]
    fn f_transports_hold_in_case_one() {
        let case = TwistCase::new(1, 2).unwrap();
        for a in [rat(0), rat(1), ratio(-1, 2)] {
            for g in grid_generators() {
                for check in f_transport_defects(&case, &a, &g, 3) {
                    assert!(
                        check.defect.is_zero(),
                        "{} failed for {g} at a = {a}: {}",
                        check.name,
                        check.defect
                    );
                }
            }
        }
    }

    #[test]
    fn f_transports_hold_in_case_two() {
        for n0 in [1, 3, -1] {
            let case = TwistCase::new(2, n0).unwrap();
            for a in [rat(0), ratio(1, 3)] {
                for g in grid_generators() {
                    for check in f_transport_defects(&case, &a, &g, 3) {
                        assert!(
                            check.defect.is_zero(),
                            "{} failed for {g}, n0 = {n0}: {}",
                            check.name,
                            check.defect
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn u_transports_hold_in_both_cases() {
        for (case, n0) in [(1, 1), (1, 3), (2, 1), (2, 3)] {
            let case = TwistCase::new(case, n0).unwrap();
            for a in [rat(0), rat(-1), ratio(1, 2)] {
                for g in grid_generators() {
                    for check in u_transport_defects(&case, &a, &g, 3) {
                        assert!(
                            check.defect.is_zero(),
                            "{} failed for {g}, {case}, a = {a}: {}",
                            check.name,
                            check.defect
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_shift_leaves_a_nonzero_defect() {
        // guards against the identity holding vacuously
        let case = TwistCase::new(1, 1).unwrap();
        let g = Generator::l(2);
        let a = rat(0);
        let x = UeaElement::generator(g.clone());
        let one = UeaElement::one();
        let xl = Series::constant(TensorElement::outer(&[&x, &one]), 3);
        let fa = twist_inv_series(&case, &a, 3);
        // correct shift is 2, use 1
        let wrong = twist_inv_series(&case, &rat(-1), 3).mul(&xl);
        assert!(!xl.mul(&fa).sub(&wrong).is_zero());
    }

    #[test]
    fn inverse_pairs_across_parameters() {
        for (c, n0) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
            let case = TwistCase::new(c, n0).unwrap();
            for a in [rat(0), rat(2), ratio(-1, 3)] {
                for b in [rat(0), rat(1), ratio(1, 2)] {
                    let (f_pair, uv_pair) = inverse_pair_defects(&case, &a, &b, 4);
                    assert!(f_pair.is_zero(), "F pair failed: a = {a}, b = {b}");
                    assert!(uv_pair.is_zero(), "uv pair failed: a = {a}, b = {b}");
                }
            }
        }
    }
}
