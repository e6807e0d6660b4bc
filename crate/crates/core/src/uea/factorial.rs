//! Factorial polynomials `x^(n)_a` (rising) and `x^[n]_a` (falling) of an
//! element, and the summation identities that make the twist elements
//! multiplicatively well behaved.

use super::element::UeaElement;
use crate::rational::{binomial, factorial_inv, rat, Rational};

/// Rising factorial `x^(n)_a = (x+a)(x+a+1)...(x+a+n-1)`; empty product
/// for `n = 0`.
pub fn rising_factorial(x: &UeaElement, n: usize, a: &Rational) -> UeaElement {
    let mut out = UeaElement::one();
    for j in 0..n {
        out = out.mul(&x.add_scalar(&(a + rat(j as i64))));
    }
    out
}

/// Falling factorial `x^[n]_a = (x+a)(x+a-1)...(x+a-n+1)`.
pub fn falling_factorial(x: &UeaElement, n: usize, a: &Rational) -> UeaElement {
    let mut out = UeaElement::one();
    for j in 0..n {
        out = out.mul(&x.add_scalar(&(a - rat(j as i64))));
    }
    out
}

/// Defects (LHS - RHS) of the three factorial summation identities at
/// split/order `r`:
///
/// 1. splitting: `x^(s+t)_a - x^(s)_a x^(t)_{a+s}`, summed over `s+t = r`
///    (each summand is itself an identity; the falling-side and the
///    falling/rising conversion are covered by the same sum via item 3),
/// 2. `sum_{s+t=r} (-1)^t/(s!t!) x^[s]_a x^(t)_b - C(a-b, r)`,
/// 3. `sum_{s+t=r} (-1)^t/(s!t!) x^[s]_a x^[t]_{b-s} - C(a-b+r-1, r)`.
///
/// All three vanish identically in `x`; the binomial right-hand sides are
/// scalars.
pub fn factorial_identity_defects(
    x: &UeaElement,
    a: &Rational,
    b: &Rational,
    r: usize,
) -> [UeaElement; 3] {
    let mut split = UeaElement::zero();
    for s in 0..=r {
        let t = r - s;
        let lhs = rising_factorial(x, r, a);
        let rhs = rising_factorial(x, s, a).mul(&rising_factorial(x, t, &(a + rat(s as i64))));
        split = split.add(&lhs.sub(&rhs));
    }

    let mut mixed = UeaElement::zero();
    let mut falling = UeaElement::zero();
    for s in 0..=r {
        let t = r - s;
        let sign = if t.is_multiple_of(2) { rat(1) } else { rat(-1) };
        let c = sign * factorial_inv(s) * factorial_inv(t);
        mixed = mixed.add(
            &falling_factorial(x, s, a)
                .mul(&rising_factorial(x, t, b))
                .scale(&c),
        );
        falling = falling.add(
            &falling_factorial(x, s, a)
                .mul(&falling_factorial(x, t, &(b - rat(s as i64))))
                .scale(&c),
        );
    }
    let mixed_defect = mixed.sub(&UeaElement::scalar(binomial(&(a - b), r)));
    let falling_defect = falling.sub(&UeaElement::scalar(binomial(
        &(a - b + rat(r as i64) - rat(1)),
        r,
    )));

    [split, mixed_defect, falling_defect]
}

/// `(ad y)^k(x)` with `ad y = [y, .]` the commutator in `U(L)`.
pub fn ad_power(y: &UeaElement, x: &UeaElement, k: usize) -> UeaElement {
    let mut out = x.clone();
    for _ in 0..k {
        out = y.commutator(&out);
    }
    out
}

/// Defect of the reordering expansion
/// `x y^m - sum_{k=0}^m (-1)^k C(m,k) y^{m-k} (ad y)^k(x)`.
pub fn ad_power_expansion_defect(x: &UeaElement, y: &UeaElement, m: usize) -> UeaElement {
    let lhs = x.mul(&y.pow(m));
    let mut rhs = UeaElement::zero();
    for k in 0..=m {
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let c = sign * binomial(&rat(m as i64), k);
        rhs = rhs.add(&y.pow(m - k).mul(&ad_power(y, x, k)).scale(&c));
    }
    lhs.sub(&rhs)
}
