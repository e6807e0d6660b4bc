//! PBW basis words.

use crate::generator::Generator;
use std::fmt;

/// A normal-ordered word of generators: non-decreasing in the generator
/// order (`M < Y < L`, then ascending index). The empty word is the unit.
///
/// The derived `Ord` (lexicographic, shorter-prefix-first) is the canonical
/// term order used for coefficient maps and rendering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PbwMonomial {
    word: Vec<Generator>,
}

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial::default()
    }

    /// Wraps a word that is already normal-ordered; panics otherwise.
    pub fn from_sorted(word: Vec<Generator>) -> Self {
        assert!(
            word.windows(2).all(|w| w[0] <= w[1]),
            "word is not normal-ordered"
        );
        PbwMonomial { word }
    }

    pub fn generator(g: Generator) -> Self {
        PbwMonomial { word: vec![g] }
    }

    pub fn power(g: Generator, k: usize) -> Self {
        PbwMonomial { word: vec![g; k] }
    }

    pub fn is_one(&self) -> bool {
        self.word.is_empty()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.word
    }

    /// Concatenation when the result stays normal-ordered.
    pub(crate) fn try_concat(&self, other: &Self) -> Option<Self> {
        match (self.word.last(), other.word.first()) {
            (Some(a), Some(b)) if a > b => None,
            _ => {
                let mut word = self.word.clone();
                word.extend(other.word.iter().cloned());
                Some(PbwMonomial { word })
            }
        }
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
