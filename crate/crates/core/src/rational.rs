//! Exact rational scalars plus the small combinatorial helpers (factorials,
//! generalized binomial coefficients) used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scalar field: arbitrary-precision rationals, always reduced, positive
/// denominator. `num_rational` maintains both invariants on construction.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics on `d == 0`; fixture helper.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Inverse factorial `1/n!` as a rational.
pub fn factorial_inv(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// Generalized binomial coefficient `C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!`
/// for rational `alpha`. Exact; `C(alpha, 0) = 1`.
pub fn binomial(alpha: &Rational, k: usize) -> Rational {
    let mut num = Rational::one();
    for j in 0..k {
        num *= alpha - rat(j as i64);
    }
    num / Rational::from_integer(factorial(k))
}

/// `C(n, k)` for nonnegative integers.
pub fn int_binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}
