//! Tensor powers of `U(L)` (degrees 1 to 3) with componentwise products.

use super::element::UeaElement;
use super::monomial::PbwMonomial;
use super::write_term;
use crate::rational::{rat, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Element of `U(L)` tensored with itself `degree` times, on basis tuples
/// of PBW monomials. Degree 1 is `U(L)` itself (used to keep formal series
/// uniform); degrees 2 and 3 host coproducts and the twist axioms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<Vec<PbwMonomial>, Rational>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        assert!((1..=3).contains(&degree), "tensor degree must be 1, 2 or 3");
        TensorElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut out = TensorElement::zero(degree);
        out.add_term(vec![PbwMonomial::one(); degree], rat(1));
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<PbwMonomial>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<PbwMonomial>, c: Rational) {
        use std::collections::btree_map::Entry;
        assert_eq!(key.len(), self.degree, "tensor degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    /// Outer product of elements, one per leg.
    pub fn outer(factors: &[&UeaElement]) -> Self {
        let mut out = TensorElement::zero(factors.len());
        let mut stack: Vec<(Vec<PbwMonomial>, Rational)> = vec![(Vec::new(), rat(1))];
        for f in factors {
            let mut next = Vec::with_capacity(stack.len() * f.num_terms().max(1));
            for (prefix, c) in &stack {
                for (m, cm) in f.terms() {
                    let mut key = prefix.clone();
                    key.push(m.clone());
                    next.push((key, c * cm));
                }
            }
            stack = next;
        }
        for (key, c) in stack {
            out.add_term(key, c);
        }
        out
    }

    /// Degree-1 embedding of an element.
    pub fn from_uea(x: &UeaElement) -> Self {
        TensorElement::outer(&[x])
    }

    /// Inverse of [`TensorElement::from_uea`].
    pub fn to_uea(&self) -> UeaElement {
        assert_eq!(self.degree, 1, "only degree-1 tensors unwrap to elements");
        let mut out = UeaElement::zero();
        for (key, c) in &self.terms {
            out.add_term(key[0].clone(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "tensor degree mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TensorElement::zero(self.degree);
        }
        TensorElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Componentwise product: legs multiply independently in `U(L)`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "tensor degree mismatch");
        let mut out = TensorElement::zero(self.degree);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                // per-leg straightened products, then distributed
                let legs: Vec<UeaElement> = k1
                    .iter()
                    .zip(k2.iter())
                    .map(|(a, b)| super::element::mul_monomials(a, b))
                    .collect();
                let mut partial: Vec<(Vec<PbwMonomial>, Rational)> = vec![(Vec::new(), c1 * c2)];
                for leg in &legs {
                    let mut next = Vec::with_capacity(partial.len() * leg.num_terms().max(1));
                    for (prefix, c) in &partial {
                        for (m, cm) in leg.terms() {
                            let mut key = prefix.clone();
                            key.push(m.clone());
                            next.push((key, c * cm));
                        }
                    }
                    partial = next;
                }
                for (key, c) in partial {
                    out.add_term(key, c);
                }
            }
        }
        out
    }

    /// Appends a unit leg on the right: `x -> x (x) 1`.
    pub fn append_unit_leg(&self) -> Self {
        let mut out = TensorElement::zero(self.degree + 1);
        for (k, c) in &self.terms {
            let mut key = k.clone();
            key.push(PbwMonomial::one());
            out.add_term(key, c.clone());
        }
        out
    }

    /// Prepends a unit leg on the left: `x -> 1 (x) x`.
    pub fn prepend_unit_leg(&self) -> Self {
        let mut out = TensorElement::zero(self.degree + 1);
        for (k, c) in &self.terms {
            let mut key = Vec::with_capacity(self.degree + 1);
            key.push(PbwMonomial::one());
            key.extend(k.iter().cloned());
            out.add_term(key, c.clone());
        }
        out
    }

    /// Swap the two legs of a degree-2 tensor.
    pub fn swap(&self) -> Self {
        assert_eq!(self.degree, 2, "swap is defined on degree-2 tensors");
        let mut out = TensorElement::zero(2);
        for (k, c) in &self.terms {
            out.add_term(vec![k[1].clone(), k[0].clone()], c.clone());
        }
        out
    }

    /// Replaces leg `leg` by the two legs of `Delta_0` applied to it.
    pub fn coproduct_leg(&self, leg: usize) -> Self {
        assert!(leg < self.degree);
        let mut out = TensorElement::zero(self.degree + 1);
        for (k, c) in &self.terms {
            let split = super::hopf::coproduct0_monomial(&k[leg]);
            for (pair, cp) in split.terms() {
                let mut key = Vec::with_capacity(self.degree + 1);
                key.extend(k[..leg].iter().cloned());
                key.extend(pair.iter().cloned());
                key.extend(k[leg + 1..].iter().cloned());
                out.add_term(key, c * cp);
            }
        }
        out
    }

    /// Applies the counit to leg `leg`, dropping it.
    pub fn counit_leg(&self, leg: usize) -> Self {
        assert!(leg < self.degree && self.degree > 1);
        let mut out = TensorElement::zero(self.degree - 1);
        for (k, c) in &self.terms {
            if !k[leg].is_one() {
                continue;
            }
            let mut key = Vec::with_capacity(self.degree - 1);
            key.extend(k[..leg].iter().cloned());
            key.extend(k[leg + 1..].iter().cloned());
            out.add_term(key, c.clone());
        }
        out
    }

    /// Applies the undeformed antipode to leg `leg` in place.
    pub fn antipode_leg(&self, leg: usize) -> Self {
        assert!(leg < self.degree);
        let mut out = TensorElement::zero(self.degree);
        for (k, c) in &self.terms {
            let s = super::hopf::antipode0_monomial(&k[leg]);
            for (m, cm) in s.terms() {
                let mut key = k.clone();
                key[leg] = m.clone();
                out.add_term(key, c * cm);
            }
        }
        out
    }

    /// Multiplies all legs together, left to right: `m(x (x) y) = x*y`.
    pub fn multiply_legs(&self) -> UeaElement {
        let mut out = UeaElement::zero();
        for (k, c) in &self.terms {
            let mut prod = UeaElement::one();
            for m in k {
                prod = prod.mul(&UeaElement::monomial(m.clone()));
            }
            out = out.add(&prod.scale(c));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            let body = if self.degree == 1 {
                key[0].to_string()
            } else {
                key.iter()
                    .map(|m| format!("({m})"))
                    .collect::<Vec<_>>()
                    .join("\u{2297}")
            };
            write_term(f, i == 0, c, &body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator;
    use crate::rational::ratio;

    fn l(n: i64) -> UeaElement {
        UeaElement::generator(Generator::l(n))
    }
    fn m(n: i64) -> UeaElement {
        UeaElement::generator(Generator::m(n))
    }

    #[test]
    fn outer_and_componentwise_product() {
        let x = TensorElement::outer(&[&l(1), &UeaElement::one()]);
        let y = TensorElement::outer(&[&UeaElement::one(), &m(2)]);
        let p = x.mul(&y);
        assert_eq!(p, TensorElement::outer(&[&l(1), &m(2)]));
        // legs multiply independently: (1 (x) M(2)) * (L(1) (x) 1) keeps
        // the same legs but multiplies within each slot
        let q = y.mul(&x);
        assert_eq!(q, TensorElement::outer(&[&l(1), &m(2)]));
        // noncommutativity shows up inside a leg
        let a = TensorElement::outer(&[&l(1), &UeaElement::one()]);
        let b = TensorElement::outer(&[&l(0), &UeaElement::one()]);
        assert_ne!(a.mul(&b), b.mul(&a));
        assert_eq!(
            a.mul(&b),
            TensorElement::outer(&[&l(1).mul(&l(0)), &UeaElement::one()])
        );
    }

    #[test]
    fn unit_legs_and_swap() {
        let x = TensorElement::outer(&[&l(1), &m(0)]);
        assert_eq!(x.append_unit_leg().degree(), 3);
        assert_eq!(x.prepend_unit_leg().degree(), 3);
        assert_eq!(x.swap(), TensorElement::outer(&[&m(0), &l(1)]));
        assert_eq!(TensorElement::one(2).mul(&x), x);
    }

    #[test]
    fn counit_leg_keeps_unit_slots_only() {
        let x = TensorElement::outer(&[&UeaElement::one().add(&l(1)), &m(2)]);
        let e0 = x.counit_leg(0);
        assert_eq!(e0, TensorElement::from_uea(&m(2)));
    }

    #[test]
    fn leg_product_scaling() {
        let x = TensorElement::outer(&[&l(1).scale(&ratio(1, 2)), &m(0)]);
        assert_eq!(x.multiply_legs(), l(1).mul(&m(0)).scale(&ratio(1, 2)));
    }
}
