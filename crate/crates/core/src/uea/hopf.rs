//! The undeformed Hopf structure on `U(L)`: every Lie generator is
//! primitive, `Delta0(x) = x (x) 1 + 1 (x) x`, `S0(x) = -x`, `eps(x) = 0`,
//! extended as algebra maps (`S0` antimultiplicatively).

use super::element::{normalize_word, UeaElement};
use super::monomial::PbwMonomial;
use super::tensor::TensorElement;
use crate::rational::{rat, Rational};

/// `Delta0` of a basis word. For a normal-ordered word every subword is
/// normal-ordered, so the shuffle `sum over subsets S of w_S (x) w_{S^c}`
/// needs no straightening.
pub fn coproduct0_monomial(m: &PbwMonomial) -> TensorElement {
    let gens = m.generators();
    let k = gens.len();
    assert!(
        k < usize::BITS as usize,
        "word too long for subset expansion"
    );
    let mut out = TensorElement::zero(2);
    for mask in 0u64..(1u64 << k) {
        let mut left = Vec::with_capacity(mask.count_ones() as usize);
        let mut right = Vec::with_capacity(k - mask.count_ones() as usize);
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(g.clone());
            } else {
                right.push(g.clone());
            }
        }
        out.add_term(
            vec![
                PbwMonomial::from_sorted(left),
                PbwMonomial::from_sorted(right),
            ],
            rat(1),
        );
    }
    out
}

/// Coproduct of an element, term by term.
pub fn coproduct0(x: &UeaElement) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (m, c) in x.terms() {
        out = out.add(&coproduct0_monomial(m).scale(c));
    }
    out
}

/// `S0` of a basis word: `(-1)^len` times the reversed word, straightened.
pub fn antipode0_monomial(m: &PbwMonomial) -> UeaElement {
    let mut reversed: Vec<_> = m.generators().to_vec();
    reversed.reverse();
    let sign = if m.len().is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    };
    normalize_word(reversed).scale(&sign)
}

pub fn antipode0(x: &UeaElement) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, c) in x.terms() {
        out = out.add(&antipode0_monomial(m).scale(c));
    }
    out
}

/// Counit: the coefficient of the empty word.
pub fn counit(x: &UeaElement) -> Rational {
    x.coefficient(&PbwMonomial::one())
}
