//! Commutation identities in `U(L)` between generators and factorial
//! polynomials of an `ad`-diagonal element `h`. These drive every transport
//! computation in the twist module.

use super::element::UeaElement;
use super::factorial::{falling_factorial, rising_factorial};
use super::hopf::coproduct0;
use super::tensor::TensorElement;
use crate::generator::Generator;
use crate::rational::{rat, Rational};

/// Defects of `X h^(i)_a = h^(i)_{a-shift} X` and its falling twin, where
/// `shift` is the `ad h`-eigenvalue of `X` (`[h, X] = shift X`).
pub fn shift_commutation_defects(
    x: &UeaElement,
    h: &UeaElement,
    shift: &Rational,
    i: usize,
    a: &Rational,
) -> (UeaElement, UeaElement) {
    let shifted = a - shift;
    let rising = x
        .mul(&rising_factorial(h, i, a))
        .sub(&rising_factorial(h, i, &shifted).mul(x));
    let falling = x
        .mul(&falling_factorial(h, i, a))
        .sub(&falling_factorial(h, i, &shifted).mul(x));
    (rising, falling)
}

/// Defects of `e^n h^(i)_a = h^(i)_{a-n} e^n` and its falling twin, valid
/// whenever `[h, e] = e`.
pub fn power_commutation_defects(
    e: &UeaElement,
    h: &UeaElement,
    n: usize,
    i: usize,
    a: &Rational,
) -> (UeaElement, UeaElement) {
    let en = e.pow(n);
    let shifted = a - rat(n as i64);
    let rising = en
        .mul(&rising_factorial(h, i, a))
        .sub(&rising_factorial(h, i, &shifted).mul(&en));
    let falling = en
        .mul(&falling_factorial(h, i, a))
        .sub(&falling_factorial(h, i, &shifted).mul(&en));
    (rising, falling)
}

/// Defect of the binomial coproduct of a falling factorial:
/// `Delta0(h^[r]) - sum_i C(r,i) h^[i]_{-a} (x) h^[r-i]_a`.
///
/// The `a`-dependence on the right cancels; any sample value must give zero.
pub fn falling_coproduct_defect(h: &UeaElement, r: usize, a: &Rational) -> TensorElement {
    let lhs = coproduct0(&falling_factorial(h, r, &rat(0)));
    let mut rhs = TensorElement::zero(2);
    for i in 0..=r {
        let c = Rational::from_integer(crate::rational::int_binomial(r, i));
        rhs = rhs.add(
            &TensorElement::outer(&[
                &falling_factorial(h, i, &-a),
                &falling_factorial(h, r - i, a),
            ])
            .scale(&c),
        );
    }
    lhs.sub(&rhs)
}

/// Defect of the Y-power straightening rule
/// `Y(p) Y(q)^s = Y(q)^s Y(p) - s (p - q) Y(q)^{s-1} M(p+q)`.
pub fn y_power_straightening_defect(p: &Rational, q: &Rational, s: usize) -> UeaElement {
    let yp = UeaElement::generator(
        Generator::new(crate::generator::Family::Y, p.clone()).expect("half-odd p"),
    );
    let yq = Generator::new(crate::generator::Family::Y, q.clone()).expect("half-odd q");
    let yq_el = UeaElement::generator(yq.clone());
    let lhs = yp.mul(&yq_el.pow(s));
    let mut rhs = yq_el.pow(s).mul(&yp);
    if s > 0 {
        let mpq = UeaElement::generator(
            Generator::new(crate::generator::Family::M, p + q).expect("integer p+q"),
        );
        let c = rat(s as i64) * (p - q);
        rhs = rhs.sub(&yq_el.pow(s - 1).mul(&mpq).scale(&c));
    }
    lhs.sub(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::TwistCase;
    use crate::rational::ratio;

    fn case_elements(case: u8, n0: i64) -> (UeaElement, UeaElement) {
        let tc = TwistCase::new(case, n0).unwrap();
        let (h, e) = tc.generators();
        (UeaElement::from_lie(&h), UeaElement::from_lie(&e))
    }

    #[test]
    fn generator_commutation_with_factorials_case1() {
        let tc = TwistCase::new(1, 2).unwrap();
        let (h, _) = case_elements(1, 2);
        let grid = crate::generator::generator_grid(2);
        for g in &grid {
            let x = UeaElement::generator(g.clone());
            let shift = tc.index_shift(g);
            for i in 0..=3 {
                for a in [rat(0), rat(1), ratio(1, 3)] {
                    let (r, f) = shift_commutation_defects(&x, &h, &shift, i, &a);
                    assert!(r.is_zero(), "rising defect for {g}, i={i}, a={a}: {r}");
                    assert!(f.is_zero(), "falling defect for {g}, i={i}, a={a}: {f}");
                }
            }
        }
    }

    #[test]
    fn generator_commutation_with_factorials_case2() {
        let tc = TwistCase::new(2, 3).unwrap();
        let (h, _) = case_elements(2, 3);
        for g in [Generator::l(-2), Generator::m(1), Generator::y_half(5)] {
            let x = UeaElement::generator(g.clone());
            let shift = tc.index_shift(&g);
            let (r, f) = shift_commutation_defects(&x, &h, &shift, 3, &ratio(1, 2));
            assert!(r.is_zero(), "{r}");
            assert!(f.is_zero(), "{f}");
        }
    }

    #[test]
    fn e_power_commutation_both_cases() {
        for (case, n0) in [(1, 1), (1, 3), (2, 1), (2, -3), (3, 2)] {
            let (h, e) = case_elements(case, n0);
            for n in 0..=3 {
                for i in 0..=3 {
                    let a = ratio(1, 3);
                    let (r, f) = power_commutation_defects(&e, &h, n, i, &a);
                    assert!(r.is_zero(), "case {case} n0 {n0} n={n} i={i}: {r}");
                    assert!(f.is_zero(), "case {case} n0 {n0} n={n} i={i}: {f}");
                }
            }
        }
    }

    #[test]
    fn falling_coproduct_expansion() {
        let (h, _) = case_elements(1, 1);
        for r in 0..=4 {
            for a in [rat(0), rat(2), ratio(-1, 2)] {
                let d = falling_coproduct_defect(&h, r, &a);
                assert!(d.is_zero(), "r={r} a={a}: {d}");
            }
        }
        let (h2, _) = case_elements(2, 3);
        assert!(falling_coproduct_defect(&h2, 3, &ratio(1, 3)).is_zero());
    }

    #[test]
    fn y_straightening_rule() {
        for (p, q) in [(1, 3), (3, 1), (-1, 5), (5, -3), (1, 1)] {
            for s in 0..=4 {
                let d = y_power_straightening_defect(&ratio(p, 2), &ratio(q, 2), s);
                assert!(d.is_zero(), "p={p}/2 q={q}/2 s={s}: {d}");
            }
        }
    }
}
