//! Drinfel'd twists of the undeformed Hopf structure on `U(L)[[t]]`.
//!
//! For each case `(h, e)` with `[h, e] = e` the twisting element and its
//! inverse are the factorial exponentials
//!
//! ```text
//! twist     (script F_a) = sum_r (-1)^r/r! h^[r]_a (x) e^r t^r
//! twist_inv (F_a)        = sum_r       1/r! h^(r)_a (x) e^r t^r
//! ```
//!
//! together with the antipode conjugators `u_a = m(S0 (x) id)(F_a)` and
//! `v_a = m(id (x) S0)(script F_a)`. The twisted structure maps are
//! `Delta(x) = twist * Delta0(x) * twist_inv` and `S(x) = v * S0(x) * u`.

mod closed;
mod hopf_check;
mod transport;

pub use closed::{closed_form_antipode, closed_form_delta};
pub use hopf_check::{classical_limit_defects, twisted_hopf_defects, TwistedHopfDefects};
pub use transport::{
    f_transport_defects, inverse_pair_defects, u_transport_defects, TransportCheck,
};

use crate::lie::TwistCase;
use crate::rational::{factorial_inv, rat, Rational};
use crate::series::Series;
use crate::uea::{
    antipode0, coproduct0, falling_factorial, rising_factorial, TensorElement, UeaElement,
};

/// A twist case instantiated at a truncation order, with all four series
/// built once.
#[derive(Clone, Debug)]
pub struct TwistData {
    case: TwistCase,
    order: usize,
    h: UeaElement,
    e: UeaElement,
    twist: Series,
    twist_inv: Series,
    u: Series,
    v: Series,
}

impl TwistData {
    pub fn new(case: TwistCase, order: usize) -> Self {
        let (h, e) = case_elements(&case);
        TwistData {
            twist: twist_series(&case, &rat(0), order),
            twist_inv: twist_inv_series(&case, &rat(0), order),
            u: u_series(&case, &rat(0), order),
            v: v_series(&case, &rat(0), order),
            case,
            order,
            h,
            e,
        }
    }

    pub fn case(&self) -> &TwistCase {
        &self.case
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn h(&self) -> &UeaElement {
        &self.h
    }

    pub fn e(&self) -> &UeaElement {
        &self.e
    }

    /// The twisting element `script F = script F_0`.
    pub fn twist(&self) -> &Series {
        &self.twist
    }

    /// Its inverse `F = F_0`.
    pub fn twist_inv(&self) -> &Series {
        &self.twist_inv
    }

    pub fn u(&self) -> &Series {
        &self.u
    }

    pub fn v(&self) -> &Series {
        &self.v
    }
}

/// The pair `(h, e)` of a case, embedded in `U(L)`.
pub fn case_elements(case: &TwistCase) -> (UeaElement, UeaElement) {
    let (h, e) = case.generators();
    (UeaElement::from_lie(&h), UeaElement::from_lie(&e))
}

/// `F_a = sum_r 1/r! h^(r)_a (x) e^r t^r`.
pub fn twist_inv_series(case: &TwistCase, a: &Rational, order: usize) -> Series {
    let (h, e) = case_elements(case);
    let coeffs = (0..=order)
        .map(|r| {
            TensorElement::outer(&[&rising_factorial(&h, r, a), &e.pow(r)]).scale(&factorial_inv(r))
        })
        .collect();
    Series::from_coeffs(coeffs)
}

/// `script F_a = sum_r (-1)^r/r! h^[r]_a (x) e^r t^r`.
pub fn twist_series(case: &TwistCase, a: &Rational, order: usize) -> Series {
    let (h, e) = case_elements(case);
    let coeffs = (0..=order)
        .map(|r| {
            let sign = if r % 2 == 0 { rat(1) } else { rat(-1) };
            TensorElement::outer(&[&falling_factorial(&h, r, a), &e.pow(r)])
                .scale(&(sign * factorial_inv(r)))
        })
        .collect();
    Series::from_coeffs(coeffs)
}

/// `u_a = m(S0 (x) id)(F_a) = sum_r (-1)^r/r! h^[r]_{-a} e^r t^r`.
pub fn u_series(case: &TwistCase, a: &Rational, order: usize) -> Series {
    let (h, e) = case_elements(case);
    let coeffs = (0..=order)
        .map(|r| {
            let sign = if r % 2 == 0 { rat(1) } else { rat(-1) };
            TensorElement::from_uea(
                &falling_factorial(&h, r, &-a)
                    .mul(&e.pow(r))
                    .scale(&(sign * factorial_inv(r))),
            )
        })
        .collect();
    Series::from_coeffs(coeffs)
}

/// `v_a = m(id (x) S0)(script F_a) = sum_r 1/r! h^[r]_a e^r t^r`.
pub fn v_series(case: &TwistCase, a: &Rational, order: usize) -> Series {
    let (h, e) = case_elements(case);
    let coeffs = (0..=order)
        .map(|r| {
            TensorElement::from_uea(
                &falling_factorial(&h, r, a)
                    .mul(&e.pow(r))
                    .scale(&factorial_inv(r)),
            )
        })
        .collect();
    Series::from_coeffs(coeffs)
}

/// Folds a degree-2 series through `m(S0 (x) id)`; definitional cross-check
/// for [`u_series`].
pub fn antipode_fold_left(s: &Series) -> Series {
    s.map_coeffs(1, |c| {
        TensorElement::from_uea(&c.antipode_leg(0).multiply_legs())
    })
}

/// Folds a degree-2 series through `m(id (x) S0)`; definitional cross-check
/// for [`v_series`].
pub fn antipode_fold_right(s: &Series) -> Series {
    s.map_coeffs(1, |c| {
        TensorElement::from_uea(&c.antipode_leg(1).multiply_legs())
    })
}

/// Defects of the twist axioms for the twisting element:
/// the cocycle identity
/// `(F (x) 1)(Delta0 (x) id)(F) = (1 (x) F)(id (x) Delta0)(F)`
/// and the two counit normalizations `(eps (x) id)(F) = 1 = (id (x) eps)(F)`.
pub fn twist_axiom_defects(d: &TwistData) -> (Series, Series, Series) {
    let f = &d.twist;
    let lhs = f.append_unit_leg().mul(&f.coproduct_leg(0));
    let rhs = f.prepend_unit_leg().mul(&f.coproduct_leg(1));
    let one = Series::one(1, d.order);
    (
        lhs.sub(&rhs),
        f.counit_leg(0).sub(&one),
        f.counit_leg(1).sub(&one),
    )
}

/// Twisted coproduct `Delta(x) = twist * Delta0(x) * twist_inv`.
pub fn delta_twisted(d: &TwistData, x: &UeaElement) -> Series {
    let mid = Series::constant(coproduct0(x), d.order);
    d.twist.mul(&mid).mul(&d.twist_inv)
}

/// Twisted antipode `S(x) = v * S0(x) * u`.
pub fn antipode_twisted(d: &TwistData, x: &UeaElement) -> Series {
    let mid = Series::embed(&antipode0(x), d.order);
    d.v.mul(&mid).mul(&d.u)
}
