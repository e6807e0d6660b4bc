//! Basis generators of the Schrödinger-Virasoro Lie algebra.
//!
//! The algebra is spanned by `L(n)` and `M(n)` for integer `n` and `Y(p)`
//! for half-odd-integer `p`. The derived `Ord` is the normal-ordering used
//! by the PBW basis: family `M < Y < L`, then ascending index.

use crate::error::AlgebraError;
use crate::rational::{rat, ratio, Rational};
use std::fmt;

/// Generator family, ordered `M < Y < L` for PBW normal ordering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    M,
    Y,
    L,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::M => "M",
            Family::Y => "Y",
            Family::L => "L",
        })
    }
}

/// A single basis generator. Index parity is enforced at construction:
/// integer for `L`/`M`, half-odd integer for `Y`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    family: Family,
    index: Rational,
}

impl Generator {
    pub fn new(family: Family, index: Rational) -> Result<Self, AlgebraError> {
        let valid = match family {
            Family::L | Family::M => index.is_integer(),
            Family::Y => (&index + &index).is_integer() && !index.is_integer(),
        };
        if !valid {
            let reason = match family {
                Family::L | Family::M => "index must be an integer",
                Family::Y => "index must be a half-odd integer",
            };
            return Err(AlgebraError::InvalidIndex {
                family,
                index,
                reason,
            });
        }
        Ok(Generator { family, index })
    }

    pub fn l(n: i64) -> Self {
        Generator {
            family: Family::L,
            index: rat(n),
        }
    }

    pub fn m(n: i64) -> Self {
        Generator {
            family: Family::M,
            index: rat(n),
        }
    }

    /// `Y(n/2)` for odd `n`. Panics on even `n`; fixture helper, use
    /// [`Generator::new`] for validated construction.
    pub fn y_half(n: i64) -> Self {
        assert!(n % 2 != 0, "Y index must be a half-odd integer, got {n}/2");
        Generator {
            family: Family::Y,
            index: ratio(n, 2),
        }
    }

    /// Construction from index arithmetic that is known to preserve parity
    /// (bracket index sums, index shifts by integers).
    pub(crate) fn from_parts(family: Family, index: Rational) -> Self {
        debug_assert!(match family {
            Family::L | Family::M => index.is_integer(),
            Family::Y => !index.is_integer() && (&index + &index).is_integer(),
        });
        Generator { family, index }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> &Rational {
        &self.index
    }

    /// Half-odd indices are rendered as fractions: `Y(-3/2)`.
    pub fn is_half_index(&self) -> bool {
        !self.index.is_integer()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.index)
    }
}

/// All generators with integer index in `[-range, range]` and half-odd index
/// `p` with `|2p| <= 2*range - 1`, in canonical (PBW) order.
pub fn generator_grid(range: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for n in -range..=range {
        out.push(Generator::m(n));
    }
    let mut k = -(2 * range - 1);
    while k < 2 * range {
        out.push(Generator::y_half(k));
        k += 2;
    }
    for n in -range..=range {
        out.push(Generator::l(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn parity_is_enforced() {
        assert!(Generator::new(Family::L, rat(3)).is_ok());
        assert!(Generator::new(Family::L, ratio(1, 2)).is_err());
        assert!(Generator::new(Family::M, ratio(4, 2)).is_ok());
        assert!(Generator::new(Family::Y, ratio(3, 2)).is_ok());
        assert!(Generator::new(Family::Y, rat(1)).is_err());
        assert!(Generator::new(Family::Y, ratio(1, 3)).is_err());
    }

    #[test]
    fn ordering_is_family_then_index() {
        let m2 = Generator::m(2);
        let y = Generator::y_half(-5);
        let l_neg = Generator::l(-3);
        let l0 = Generator::l(0);
        assert!(m2 < y);
        assert!(y < l_neg);
        assert!(l_neg < l0);
        assert!(Generator::m(-1) < Generator::m(0));
        assert!(Generator::y_half(1) < Generator::y_half(3));
    }

    #[test]
    fn rendering() {
        assert_eq!(Generator::l(-2).to_string(), "L(-2)");
        assert_eq!(Generator::m(0).to_string(), "M(0)");
        assert_eq!(Generator::y_half(3).to_string(), "Y(3/2)");
        assert_eq!(Generator::y_half(-1).to_string(), "Y(-1/2)");
    }

    #[test]
    fn grid_has_expected_size_and_order() {
        let g = generator_grid(3);
        assert_eq!(g.len(), 7 + 6 + 7);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g[0], Generator::m(-3));
        assert_eq!(*g.last().unwrap(), Generator::l(3));
    }
}
