//! Error type shared by the fallible constructors and operations.

use crate::generator::Family;
use crate::rational::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Index incompatible with the generator family (L, M need integers,
    /// Y needs half-odd integers).
    #[error("invalid index {index} for family {family}: {reason}")]
    InvalidIndex {
        family: Family,
        index: Rational,
        reason: &'static str,
    },

    #[error("n0 must be nonzero")]
    ZeroN0,

    #[error("case 2 requires odd n0, got {0}")]
    EvenN0ForCase2(i64),

    #[error("unknown twist case {0}, expected 1, 2 or 3")]
    UnknownCase(u8),

    /// The classical r-matrix construction needs [h,e] = e exactly.
    #[error("r-matrix construction requires bracket(h, e) = e")]
    RMatrixBracket,

    /// Case 3 carries a twist but no closed-form coproduct or antipode.
    #[error("no closed form is available for case 3; use the conjugation operations instead")]
    NoClosedForm,
}
