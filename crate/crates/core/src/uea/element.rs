//! Elements of `U(L)` as rational combinations of PBW words, with the
//! straightening-based product.

use super::monomial::PbwMonomial;
use super::write_term;
use crate::generator::Generator;
use crate::lie::{bracket_generators, LieElement};
use crate::rational::{rat, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Finite rational combination of PBW monomials. Zero coefficients are
/// always pruned, so `==` is mathematical equality of elements.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        UeaElement::default()
    }

    pub fn one() -> Self {
        UeaElement::scalar(rat(1))
    }

    pub fn scalar(c: Rational) -> Self {
        let mut out = UeaElement::zero();
        out.add_term(PbwMonomial::one(), c);
        out
    }

    pub fn generator(g: Generator) -> Self {
        let mut out = UeaElement::zero();
        out.add_term(PbwMonomial::generator(g), rat(1));
        out
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        let mut out = UeaElement::zero();
        out.add_term(m, rat(1));
        out
    }

    /// Canonical embedding of the Lie algebra: each generator becomes a
    /// length-1 word.
    pub fn from_lie(x: &LieElement) -> Self {
        let mut out = UeaElement::zero();
        for (g, c) in x.terms() {
            out.add_term(PbwMonomial::generator(g.clone()), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UeaElement::zero();
        }
        UeaElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add_scalar(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.add_term(PbwMonomial::one(), c.clone());
        out
    }

    /// Associative product: concatenate words, then straighten.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = UeaElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                match m1.try_concat(m2) {
                    Some(m) => out.add_term(m, c),
                    None => {
                        let mut word = m1.generators().to_vec();
                        word.extend(m2.generators().iter().cloned());
                        normalize_into(word, c, &mut out);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = UeaElement::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Commutator `[self, other] = self*other - other*self` in `U(L)`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

/// Product of two basis words as an element.
pub(crate) fn mul_monomials(a: &PbwMonomial, b: &PbwMonomial) -> UeaElement {
    match a.try_concat(b) {
        Some(m) => UeaElement::monomial(m),
        None => {
            let mut word = a.generators().to_vec();
            word.extend(b.generators().iter().cloned());
            normalize_word(word)
        }
    }
}

/// Straightens an arbitrary word into the PBW basis.
///
/// Rewrites the leftmost out-of-order adjacent pair `y x` (with `y > x`) as
/// `x y + [y, x]` until every pending word is normal-ordered. Terminates
/// because a swap removes an inversion and a bracket shortens the word.
pub fn normalize_word(word: Vec<Generator>) -> UeaElement {
    let mut out = UeaElement::zero();
    normalize_into(word, rat(1), &mut out);
    out
}

fn normalize_into(word: Vec<Generator>, coeff: Rational, out: &mut UeaElement) {
    let mut pending: Vec<(Rational, Vec<Generator>)> = vec![(coeff, word)];
    while let Some((c, w)) = pending.pop() {
        match first_descent(&w) {
            None => out.add_term(PbwMonomial::from_sorted(w), c),
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let br = bracket_generators(&w[i], &w[i + 1]);
                for (g, cg) in br.terms() {
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    shorter.push(g.clone());
                    shorter.extend_from_slice(&w[i + 2..]);
                    pending.push((&c * cg, shorter));
                }
                pending.push((c, swapped));
            }
        }
    }
}

fn first_descent(word: &[Generator]) -> Option<usize> {
    word.windows(2).position(|w| w[0] > w[1])
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, &m.to_string())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn l(n: i64) -> UeaElement {
        UeaElement::generator(Generator::l(n))
    }
    fn m(n: i64) -> UeaElement {
        UeaElement::generator(Generator::m(n))
    }
    fn y(n: i64) -> UeaElement {
        UeaElement::generator(Generator::y_half(n))
    }
    fn word(gens: &[Generator]) -> UeaElement {
        normalize_word(gens.to_vec())
    }

    #[test]
    fn straightening_examples() {
        // L(1)*L(0) = L(0)*L(1) + [L(1), L(0)] = L(0)*L(1) - L(1)
        let lhs = word(&[Generator::l(1), Generator::l(0)]);
        let expected = l(0).mul(&l(1)).sub(&l(1));
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "L(0)*L(1) - L(1)");

        // commuting families swap without correction terms
        let swap = word(&[Generator::y_half(1), Generator::m(0)]);
        assert_eq!(swap, m(0).mul(&y(1)));
        assert_eq!(swap.num_terms(), 1);

        // L(1)*Y(3/2) = Y(3/2)*L(1) + Y(5/2)
        let ly = word(&[Generator::l(1), Generator::y_half(3)]);
        assert_eq!(ly, y(3).mul(&l(1)).add(&y(5)));
    }

    #[test]
    fn normalize_is_idempotent_on_normal_forms() {
        let x = word(&[
            Generator::l(2),
            Generator::y_half(-1),
            Generator::m(3),
            Generator::l(0),
        ]);
        let renormalized: UeaElement = x.terms().fold(UeaElement::zero(), |acc, (m, c)| {
            acc.add(&normalize_word(m.generators().to_vec()).scale(c))
        });
        assert_eq!(renormalized, x);
    }

    #[test]
    fn unit_and_scalars() {
        let x = l(2).add(&m(0).scale(&ratio(3, 2)));
        assert_eq!(UeaElement::one().mul(&x), x);
        assert_eq!(x.mul(&UeaElement::one()), x);
        assert_eq!(x.mul(&UeaElement::zero()), UeaElement::zero());
        assert_eq!(UeaElement::scalar(rat(2)).mul(&x), x.scale(&rat(2)));
    }

    #[test]
    fn product_examples() {
        // L(1)*L(-1) = L(-1)*L(1) - 2 L(0)
        let p = l(1).mul(&l(-1));
        assert_eq!(p, l(-1).mul(&l(1)).sub(&l(0).scale(&rat(2))));

        // Y(1/2)*Y(3/2) = Y(3/2)*Y(1/2) + M(2)
        let q = y(1).mul(&y(3));
        assert_eq!(q, y(3).mul(&y(1)).add(&m(2)));
    }

    #[test]
    fn product_matches_bracket_on_generators() {
        let pairs = [
            (Generator::l(2), Generator::l(-1)),
            (Generator::l(1), Generator::y_half(1)),
            (Generator::y_half(1), Generator::y_half(-3)),
            (Generator::l(-2), Generator::m(2)),
            (Generator::m(1), Generator::y_half(5)),
        ];
        for (a, b) in pairs {
            let x = UeaElement::generator(a.clone());
            let y = UeaElement::generator(b.clone());
            let lie = LieElement::generator(a).bracket(&LieElement::generator(b));
            assert_eq!(x.commutator(&y), UeaElement::from_lie(&lie));
        }
    }

    #[test]
    fn associativity_spot_checks() {
        let samples = [
            l(1),
            l(-2),
            y(1),
            y(-3),
            m(2),
            l(0).mul(&l(1)),
            y(3).mul(&l(-1)),
            m(0).add(&l(2).scale(&ratio(-1, 3))),
        ];
        for a in &samples {
            for b in &samples {
                for c in &samples {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let x = l(0)
            .mul(&l(1))
            .sub(&l(1))
            .add(&UeaElement::scalar(ratio(-3, 2)));
        assert_eq!(x.to_string(), "-3/2 + L(0)*L(1) - L(1)");
        assert_eq!(UeaElement::zero().to_string(), "0");
        assert_eq!(y(1).pow(2).to_string(), "Y(1/2)*Y(1/2)");
    }
}
