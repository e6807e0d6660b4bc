//! Truncated formal power series in the deformation parameter `t` with
//! coefficients in a tensor power of `U(L)`.
//!
//! A series keeps the coefficients of `t^0 .. t^N` inclusive; every
//! operation truncates back to the smaller order of its operands, so
//! equality up to `t^N` is structural equality.

use crate::rational::{binomial, rat, Rational};
use crate::uea::{TensorElement, UeaElement};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    degree: usize,
    coeffs: Vec<TensorElement>,
}

impl Series {
    pub fn zero(degree: usize, order: usize) -> Self {
        Series {
            degree,
            coeffs: vec![TensorElement::zero(degree); order + 1],
        }
    }

    pub fn one(degree: usize, order: usize) -> Self {
        let mut s = Series::zero(degree, order);
        s.coeffs[0] = TensorElement::one(degree);
        s
    }

    /// Constant series with the given `t^0` coefficient.
    pub fn constant(c: TensorElement, order: usize) -> Self {
        let mut s = Series::zero(c.degree(), order);
        s.coeffs[0] = c;
        s
    }

    /// Degree-1 constant series from an element.
    pub fn embed(x: &UeaElement, order: usize) -> Self {
        Series::constant(TensorElement::from_uea(x), order)
    }

    pub fn from_coeffs(coeffs: Vec<TensorElement>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the t^0 coefficient"
        );
        let degree = coeffs[0].degree();
        assert!(
            coeffs.iter().all(|c| c.degree() == degree),
            "mixed tensor degrees"
        );
        Series { degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Truncation order `N`: coefficients of `t^0 .. t^N` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &TensorElement {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[TensorElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TensorElement::is_zero)
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(TensorElement::zero(self.degree));
        }
        Series {
            degree: self.degree,
            coeffs,
        }
    }

    /// Drops every coefficient of positive `t`-degree.
    pub fn classical_part(&self) -> Self {
        let mut s = Series::zero(self.degree, self.order());
        s.coeffs[0] = self.coeffs[0].clone();
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "tensor degree mismatch");
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].add(&other.coeffs[k]))
            .collect();
        Series {
            degree: self.degree,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "tensor degree mismatch");
        let order = self.order().min(other.order());
        let mut coeffs = vec![TensorElement::zero(self.degree); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Series {
            degree: self.degree,
            coeffs,
        }
    }

    /// Multiplication by `t^k`: shifts coefficients up, truncating the top.
    pub fn shift_t(&self, k: usize) -> Self {
        let mut coeffs = vec![TensorElement::zero(self.degree); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= self.order() {
                coeffs[i + k] = c.clone();
            }
        }
        Series {
            degree: self.degree,
            coeffs,
        }
    }

    /// Two-sided inverse of a series with constant term `1`, by the usual
    /// recursion `b_k = -sum_{j>=1} a_j b_{k-j}`. Panics otherwise.
    pub fn invert(&self) -> Self {
        assert_eq!(
            self.coeffs[0],
            TensorElement::one(self.degree),
            "series inversion requires constant term 1"
        );
        let mut inv = vec![TensorElement::one(self.degree)];
        for k in 1..=self.order() {
            let mut acc = TensorElement::zero(self.degree);
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&inv[k - j]));
            }
            inv.push(acc.scale(&rat(-1)));
        }
        Series {
            degree: self.degree,
            coeffs: inv,
        }
    }

    /// `(1 - e t)^alpha = sum_k C(alpha, k) (-e)^k t^k` as a degree-1
    /// series; exact for every rational exponent.
    pub fn binomial_series(e: &UeaElement, alpha: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            let c = binomial(alpha, k) * sign;
            coeffs.push(TensorElement::from_uea(&e.pow(k).scale(&c)));
        }
        Series { degree: 1, coeffs }
    }

    /// Tensor product of series: degrees add, orders truncate to the min.
    pub fn tensor(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        assert!(degree <= 3, "tensor degree must stay at most 3");
        let order = self.order().min(other.order());
        let mut coeffs = vec![TensorElement::zero(degree); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                let (a, b) = (&self.coeffs[i], &other.coeffs[j]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let mut prod = TensorElement::zero(degree);
                for (k1, c1) in a.terms() {
                    for (k2, c2) in b.terms() {
                        let mut key = k1.clone();
                        key.extend(k2.iter().cloned());
                        prod.add_term(key, c1 * c2);
                    }
                }
                coeffs[i + j] = coeffs[i + j].add(&prod);
            }
        }
        Series { degree, coeffs }
    }

    /// Coefficientwise map into another tensor degree.
    pub fn map_coeffs(&self, degree: usize, f: impl Fn(&TensorElement) -> TensorElement) -> Self {
        let coeffs: Vec<TensorElement> = self.coeffs.iter().map(f).collect();
        assert!(coeffs.iter().all(|c| c.degree() == degree));
        Series { degree, coeffs }
    }

    /// `self (x) 1`: appends a unit leg to every coefficient.
    pub fn append_unit_leg(&self) -> Self {
        self.map_coeffs(self.degree + 1, TensorElement::append_unit_leg)
    }

    /// `1 (x) self`: prepends a unit leg to every coefficient.
    pub fn prepend_unit_leg(&self) -> Self {
        self.map_coeffs(self.degree + 1, TensorElement::prepend_unit_leg)
    }

    /// Applies `Delta0` to leg `leg` of every coefficient.
    pub fn coproduct_leg(&self, leg: usize) -> Self {
        self.map_coeffs(self.degree + 1, |c| c.coproduct_leg(leg))
    }

    /// Applies the counit to leg `leg` of every coefficient.
    pub fn counit_leg(&self, leg: usize) -> Self {
        self.map_coeffs(self.degree - 1, |c| c.counit_leg(leg))
    }

    /// Degree-1 series as a vector of plain elements.
    pub fn to_uea_coeffs(&self) -> Vec<UeaElement> {
        assert_eq!(self.degree, 1);
        self.coeffs.iter().map(TensorElement::to_uea).collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            for (key, coeff) in c.terms() {
                let monomial = if self.degree == 1 {
                    key[0].to_string()
                } else {
                    key.iter()
                        .map(|m| format!("({m})"))
                        .collect::<Vec<_>>()
                        .join("\u{2297}")
                };
                // unit monomials melt into the t-power: "3*t^2", not "3*1*t^2"
                let body = match (monomial.as_str(), k) {
                    (_, 0) => monomial,
                    ("1", 1) => "t".to_string(),
                    ("1", _) => format!("t^{k}"),
                    (_, 1) => format!("{monomial}*t"),
                    _ => format!("{monomial}*t^{k}"),
                };
                crate::uea::write_term(f, first, coeff, &body)?;
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator;
    use crate::rational::ratio;

    fn e() -> UeaElement {
        UeaElement::generator(Generator::m(1))
    }

    #[test]
    fn unit_laws_and_truncation() {
        let s = Series::binomial_series(&e(), &ratio(1, 2), 4);
        assert_eq!(Series::one(1, 4).mul(&s), s);
        assert_eq!(s.mul(&Series::one(1, 4)), s);
        assert_eq!(s.mul(&Series::zero(1, 4)), Series::zero(1, 4));
        // mixed orders truncate to the smaller operand
        assert_eq!(s.mul(&Series::one(1, 2)), s.truncated(2));
    }

    #[test]
    fn geometric_series_telescopes() {
        // (1 - e t) * sum_k e^k t^k = 1
        let one_minus = Series::binomial_series(&e(), &rat(1), 5);
        let geometric = Series::binomial_series(&e(), &rat(-1), 5);
        assert_eq!(one_minus.mul(&geometric), Series::one(1, 5));
        assert_eq!(geometric.mul(&one_minus), Series::one(1, 5));
    }

    #[test]
    fn binomial_series_coefficients() {
        // (1 - e t)^(1/2) = 1 - (1/2) e t - (1/8) e^2 t^2 - ...
        let s = Series::binomial_series(&e(), &ratio(1, 2), 2);
        assert_eq!(s.coeff(0), &TensorElement::one(1));
        assert_eq!(
            s.coeff(1),
            &TensorElement::from_uea(&e().scale(&ratio(-1, 2)))
        );
        assert_eq!(
            s.coeff(2),
            &TensorElement::from_uea(&e().pow(2).scale(&ratio(-1, 8)))
        );
        // alpha = 0 and alpha = 1 are exact polynomials
        assert_eq!(Series::binomial_series(&e(), &rat(0), 3), Series::one(1, 3));
        let linear = Series::binomial_series(&e(), &rat(1), 3);
        assert_eq!(linear.coeff(1), &TensorElement::from_uea(&e().neg()));
        assert!(linear.coeff(2).is_zero() && linear.coeff(3).is_zero());
    }

    #[test]
    fn binomial_exponents_add() {
        let a = ratio(1, 2);
        let b = rat(-2);
        let lhs = Series::binomial_series(&e(), &a, 4).mul(&Series::binomial_series(&e(), &b, 4));
        let rhs = Series::binomial_series(&e(), &(&a + &b), 4);
        assert_eq!(lhs, rhs);
        // square root squares back
        let half = Series::binomial_series(&e(), &ratio(1, 2), 5);
        assert_eq!(half.mul(&half), Series::binomial_series(&e(), &rat(1), 5));
    }

    #[test]
    fn inversion() {
        let s = Series::binomial_series(&e(), &rat(1), 5);
        assert_eq!(s.invert(), Series::binomial_series(&e(), &rat(-1), 5));
        assert_eq!(Series::one(1, 3).invert(), Series::one(1, 3));
        let sq = Series::binomial_series(&e(), &ratio(-3, 2), 4);
        assert_eq!(sq.mul(&sq.invert()), Series::one(1, 4));
        assert_eq!(sq.invert().mul(&sq), Series::one(1, 4));
    }

    #[test]
    #[should_panic(expected = "constant term 1")]
    fn inversion_rejects_nonunit_constant_term() {
        Series::embed(&e(), 3).invert();
    }

    #[test]
    fn truncation_consistency_of_products() {
        // computing at order N and truncating matches computing at N-1
        let a = Series::binomial_series(&e(), &ratio(5, 3), 5);
        let b = Series::binomial_series(&e(), &ratio(-1, 2), 5);
        let full = a.mul(&b);
        assert_eq!(full.truncated(4), a.truncated(4).mul(&b.truncated(4)));
    }

    #[test]
    fn shifts_and_classical_part() {
        let s = Series::binomial_series(&e(), &rat(-1), 3);
        let shifted = s.shift_t(2);
        assert!(shifted.coeff(0).is_zero() && shifted.coeff(1).is_zero());
        assert_eq!(shifted.coeff(2), s.coeff(0));
        assert_eq!(shifted.coeff(3), s.coeff(1));
        assert_eq!(s.classical_part(), Series::one(1, 3));
    }

    #[test]
    fn tensor_of_series() {
        let l1 = UeaElement::generator(Generator::l(1));
        let s = Series::embed(&l1, 2).tensor(&Series::binomial_series(&e(), &rat(1), 2));
        assert_eq!(s.degree(), 2);
        assert_eq!(
            s.coeff(0),
            &TensorElement::outer(&[&l1, &UeaElement::one()])
        );
        assert_eq!(s.coeff(1), &TensorElement::outer(&[&l1, &e().neg()]));
    }

    #[test]
    fn rendering() {
        let s = Series::binomial_series(&e(), &rat(2), 3);
        assert_eq!(s.to_string(), "1 - 2*M(1)*t + M(1)*M(1)*t^2");
        assert_eq!(Series::zero(1, 2).to_string(), "0");
    }
}
