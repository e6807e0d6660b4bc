//! Closed forms of the twisted coproduct and antipode on generators.
//!
//! Cases 1 and 2 admit explicit formulas built from binomial series in
//! `e t`; case 3 has no such closed form and reports an error, its twisted
//! structure being reachable only through conjugation.

use super::TwistData;
use crate::error::AlgebraError;
use crate::generator::{Family, Generator};
use crate::rational::{rat, ratio, Rational};
use crate::series::Series;
use crate::uea::{falling_factorial, rising_factorial, TensorElement, UeaElement};

/// `coeff * h_power (x) (1 - et)^alpha G t^r`.
fn h_tensor_term(
    d: &TwistData,
    h_power: &UeaElement,
    alpha: Rational,
    g: Generator,
    coeff: Rational,
    r: usize,
) -> Series {
    let order = d.order();
    let right = Series::binomial_series(d.e(), &alpha, order)
        .mul(&Series::embed(&UeaElement::generator(g), order));
    Series::embed(h_power, order)
        .tensor(&right)
        .shift_t(r)
        .scale(&coeff)
}

/// Closed form of the twisted coproduct of a generator.
pub fn closed_form_delta(d: &TwistData, g: &Generator) -> Result<Series, AlgebraError> {
    let case = d.case();
    if case.case() == 3 {
        return Err(AlgebraError::NoClosedForm);
    }
    let order = d.order();
    let n0 = case.n0();
    let x = UeaElement::generator(g.clone());
    let shift = case.index_shift(g);

    // common part: 1 (x) X + X (x) (1 - et)^shift
    let mut out = Series::constant(TensorElement::outer(&[&UeaElement::one(), &x]), order)
        .add(&Series::embed(&x, order).tensor(&Series::binomial_series(d.e(), &shift, order)));

    match (case.case(), g.family()) {
        (1, Family::L) => {
            // + n0 h (x) (1-et)^{-1} M_{n+n0} t
            let m = Generator::from_parts(Family::M, g.index() + rat(n0));
            out = out.add(&h_tensor_term(d, d.h(), rat(-1), m, rat(n0), 1));
        }
        (2, Family::L) => {
            // + (n0-n)/2 h (x) (1-et)^{-1} Y_{n+n0/2} t
            // + n(n-n0)/4 h^(2) (x) (1-et)^{-2} M_{n+n0} t^2
            let n = g.index();
            let y = Generator::from_parts(Family::Y, n + ratio(n0, 2));
            let m = Generator::from_parts(Family::M, n + rat(n0));
            let h2 = rising_factorial(d.h(), 2, &rat(0));
            out = out
                .add(&h_tensor_term(
                    d,
                    d.h(),
                    rat(-1),
                    y,
                    (rat(n0) - n) * ratio(1, 2),
                    1,
                ))
                .add(&h_tensor_term(
                    d,
                    &h2,
                    rat(-2),
                    m,
                    n * (n - rat(n0)) * ratio(1, 4),
                    2,
                ));
        }
        (2, Family::Y) => {
            // - (p - n0/2) h (x) (1-et)^{-1} M_{p+n0/2} t
            let p = g.index();
            let m = Generator::from_parts(Family::M, p + ratio(n0, 2));
            out = out.add(&h_tensor_term(d, d.h(), rat(-1), m, ratio(n0, 2) - p, 1));
        }
        _ => {}
    }
    Ok(out)
}

/// Closed form of the twisted antipode of a generator.
pub fn closed_form_antipode(d: &TwistData, g: &Generator) -> Result<Series, AlgebraError> {
    let case = d.case();
    if case.case() == 3 {
        return Err(AlgebraError::NoClosedForm);
    }
    let order = d.order();
    let n0 = case.n0();
    let x = UeaElement::generator(g.clone());
    let shift = case.index_shift(g);

    // written-order correction G * h^[r]_r, times t^r
    let correction = |r: usize, g: Generator, coeff: Rational| -> Series {
        let body = UeaElement::generator(g)
            .mul(&falling_factorial(d.h(), r, &rat(r as i64)))
            .scale(&coeff);
        Series::embed(&body, order).shift_t(r)
    };

    let mut inner = Series::embed(&x, order);
    match (case.case(), g.family()) {
        (1, Family::L) => {
            // L_n - n0 M_{n+n0} h^[1]_1 t
            let m = Generator::from_parts(Family::M, g.index() + rat(n0));
            inner = inner.add(&correction(1, m, rat(-n0)));
        }
        (2, Family::L) => {
            // L_n + (n-n0)/2 Y_{n+n0/2} h^[1]_1 t + n(n-n0)/4 M_{n+n0} h^[2]_2 t^2
            let n = g.index();
            let y = Generator::from_parts(Family::Y, n + ratio(n0, 2));
            let m = Generator::from_parts(Family::M, n + rat(n0));
            inner = inner
                .add(&correction(1, y, (n - rat(n0)) * ratio(1, 2)))
                .add(&correction(2, m, n * (n - rat(n0)) * ratio(1, 4)));
        }
        (2, Family::Y) => {
            // Y_p + (p - n0/2) M_{p+n0/2} h^[1]_1 t
            let p = g.index();
            let m = Generator::from_parts(Family::M, p + ratio(n0, 2));
            inner = inner.add(&correction(1, m, p - ratio(n0, 2)));
        }
        _ => {}
    }

    Ok(Series::binomial_series(d.e(), &-shift, order)
        .mul(&inner)
        .neg())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::TwistCase;
    use crate::twist::{antipode_twisted, delta_twisted};

    fn data(case: u8, n0: i64, order: usize) -> TwistData {
        TwistData::new(TwistCase::new(case, n0).unwrap(), order)
    }

    fn sample_generators() -> Vec<Generator> {
        vec![
            Generator::l(1),
            Generator::l(0),
            Generator::l(-2),
            Generator::m(2),
            Generator::m(0),
            Generator::y_half(1),
            Generator::y_half(-1),
        ]
    }

    #[test]
    fn closed_delta_matches_conjugation_case_one() {
        for n0 in [1, 2, -1] {
            let d = data(1, n0, 3);
            for g in sample_generators() {
                let closed = closed_form_delta(&d, &g).unwrap();
                let conjugated = delta_twisted(&d, &UeaElement::generator(g.clone()));
                assert_eq!(closed, conjugated, "delta mismatch for {g}, n0 = {n0}");
            }
        }
    }

    #[test]
    fn closed_delta_matches_conjugation_case_two() {
        for n0 in [1, 3] {
            let d = data(2, n0, 3);
            for g in sample_generators() {
                let closed = closed_form_delta(&d, &g).unwrap();
                let conjugated = delta_twisted(&d, &UeaElement::generator(g.clone()));
                assert_eq!(closed, conjugated, "delta mismatch for {g}, n0 = {n0}");
            }
        }
    }

    #[test]
    fn closed_antipode_matches_conjugation() {
        for (case, n0) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
            let d = data(case, n0, 3);
            for g in sample_generators() {
                let closed = closed_form_antipode(&d, &g).unwrap();
                let conjugated = antipode_twisted(&d, &UeaElement::generator(g.clone()));
                assert_eq!(
                    closed, conjugated,
                    "antipode mismatch for {g}, case {case}, n0 = {n0}"
                );
            }
        }
    }

    #[test]
    fn case_three_has_no_closed_form() {
        let d = data(3, 1, 2);
        assert!(matches!(
            closed_form_delta(&d, &Generator::l(1)),
            Err(AlgebraError::NoClosedForm)
        ));
        assert!(matches!(
            closed_form_antipode(&d, &Generator::m(1)),
            Err(AlgebraError::NoClosedForm)
        ));
    }

    #[test]
    fn antipode_of_l_in_case_one_explicit() {
        // S(L_1), n0 = 1: -(1-et)^{-1}(L_1 - M_2(h+1)t), h = L_0, e = M_1
        let d = data(1, 1, 2);
        let s = closed_form_antipode(&d, &Generator::l(1)).unwrap();
        let l1 = UeaElement::generator(Generator::l(1));
        let m2 = UeaElement::generator(Generator::m(2));
        let h1 = d.h().add(&UeaElement::one());
        let inner = Series::embed(&l1, 2).sub(&Series::embed(&m2.mul(&h1), 2).shift_t(1));
        let expected = Series::binomial_series(d.e(), &rat(-1), 2)
            .mul(&inner)
            .neg();
        assert_eq!(s, expected);
    }
}
