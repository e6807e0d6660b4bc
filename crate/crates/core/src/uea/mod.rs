//! The universal enveloping algebra `U(L)` in its PBW basis, the undeformed
//! Hopf structure, and the factorial-polynomial calculus used by the twists.

mod element;
mod factorial;
mod hopf;
mod identities;
mod monomial;
mod tensor;

pub use element::{normalize_word, UeaElement};
pub use factorial::{
    ad_power, ad_power_expansion_defect, factorial_identity_defects, falling_factorial,
    rising_factorial,
};
pub use hopf::{antipode0, antipode0_monomial, coproduct0, coproduct0_monomial, counit};
pub use identities::{
    falling_coproduct_defect, power_commutation_defects, shift_commutation_defects,
    y_power_straightening_defect,
};
pub use monomial::PbwMonomial;
pub use tensor::TensorElement;

use crate::rational::Rational;
use num_traits::{One, Signed};
use std::fmt;

/// Shared term renderer: sign handling, unit-coefficient elision, `*` as the
/// only product separator. `body` is the rendered monomial ("1" for the unit).
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &Rational,
    body: &str,
) -> fmt::Result {
    let mag = coeff.abs();
    if first {
        if coeff.is_negative() {
            f.write_str("-")?;
        }
    } else if coeff.is_negative() {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if body == "1" {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{mag}*{body}")
    }
}
