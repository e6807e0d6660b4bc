//! Surface syntax for algebra elements.
//!
//! ```text
//! element  := ['+'|'-'] term (('+'|'-') term)*
//! term     := rational ['*'] atoms | rational | atoms
//! atoms    := atom ('*' atom)*
//! atom     := 'L' '(' int ')' | 'M' '(' int ')' | 'Y' '(' int ['/' '2'] ')' | '1'
//! rational := int ['/' posint]
//! ```
//!
//! Whitespace is insignificant between tokens. `Y` indices must be half-odd
//! (`Y(3/2)`, never `Y(1)` or `Y(4/2)`); violations are reported at the
//! position of the offending index. The output of [`fmt::Display`] on any
//! element parses back to the same element, which is what `normalize` leans
//! on for its round-trip guarantee.

use std::fmt;

use svq_core::uea::normalize_word;
use svq_core::{rat, ratio, Generator, Rational, UeaElement};

/// A syntax or index-parity error, located by byte offset into the input.
/// (The grammar is pure ASCII, so byte offsets are column numbers.)
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.pos)
    }
}

impl std::error::Error for ParseError {}

/// Parses an element and straightens it into the PBW basis.
pub fn parse_element(src: &str) -> Result<UeaElement, ParseError> {
    let mut p = Parser::new(src);
    let e = p.element()?;
    p.expect_end()?;
    Ok(e)
}

/// Parses exactly one generator (`L(n)`, `M(k)`, `Y(p)`), as used by
/// `expand --gen`.
pub fn parse_generator(src: &str) -> Result<Generator, ParseError> {
    let mut p = Parser::new(src);
    p.skip_ws();
    let at = p.pos;
    let g = p
        .atom()?
        .ok_or_else(|| err(at, "expected a generator, not the unit `1`"))?;
    p.expect_end()?;
    Ok(g)
}

fn err(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        pos,
        message: message.into(),
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    /// Consumes `b` if it is next (whitespace already skipped by the caller).
    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.eat(b) {
            Ok(())
        } else {
            Err(err(self.pos, format!("expected `{}`", b as char)))
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.found() {
            None => Ok(()),
            Some(c) => Err(err(self.pos, format!("unexpected `{c}`"))),
        }
    }

    /// The character at the cursor, for error messages. Tokens are all
    /// ASCII, so the cursor always sits on a char boundary.
    fn found(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let at = self.pos;
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(err(self.pos, "expected an integer"));
        }
        let digits = &self.src[start..self.pos];
        let n: i64 = digits
            .parse()
            .map_err(|_| err(at, "integer out of range"))?;
        Ok(if negative { -n } else { n })
    }

    /// `int ['/' posint]`, the coefficient production.
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.int()?;
        self.skip_ws();
        if !self.eat(b'/') {
            return Ok(rat(numer));
        }
        let at = self.pos;
        let denom = self.int()?;
        if denom <= 0 {
            return Err(err(at, "denominator must be a positive integer"));
        }
        Ok(ratio(numer, denom))
    }

    /// One generator or the unit `1` (returned as `None`).
    fn atom(&mut self) -> Result<Option<Generator>, ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(None)
            }
            Some(b'L') => {
                self.pos += 1;
                Ok(Some(Generator::l(self.index_arg()?)))
            }
            Some(b'M') => {
                self.pos += 1;
                Ok(Some(Generator::m(self.index_arg()?)))
            }
            Some(b'Y') => {
                self.pos += 1;
                self.expect(b'(')?;
                self.skip_ws();
                let arg_at = self.pos;
                let numer = self.int()?;
                self.skip_ws();
                // `Y(a/2)` carries the half-index a/2; a bare `Y(n)` is an
                // integer index and always violates the parity invariant.
                let half_numer = if self.eat(b'/') {
                    let at = self.pos;
                    if self.int()? != 2 {
                        return Err(err(at, "the denominator of a Y index must be 2"));
                    }
                    numer
                } else {
                    numer
                        .checked_mul(2)
                        .ok_or(err(arg_at, "integer out of range"))?
                };
                if half_numer % 2 == 0 {
                    return Err(err(
                        arg_at,
                        "the index of Y must be a half-odd integer such as 1/2 or -3/2",
                    ));
                }
                self.expect(b')')?;
                Ok(Some(Generator::y_half(half_numer)))
            }
            _ => Err(err(
                at,
                "expected a generator `L`, `M`, `Y`, or the unit `1`",
            )),
        }
    }

    fn index_arg(&mut self) -> Result<i64, ParseError> {
        self.expect(b'(')?;
        let n = self.int()?;
        self.expect(b')')?;
        Ok(n)
    }

    fn is_atom_start(&self) -> bool {
        matches!(self.peek(), Some(b'1' | b'L' | b'M' | b'Y'))
    }

    /// `atom ('*' atom)*`, straightened into the PBW basis as one word.
    fn atoms(&mut self) -> Result<UeaElement, ParseError> {
        let mut word = Vec::new();
        loop {
            if let Some(g) = self.atom()? {
                word.push(g);
            }
            self.skip_ws();
            if !self.eat(b'*') {
                return Ok(normalize_word(word));
            }
        }
    }

    fn term(&mut self) -> Result<UeaElement, ParseError> {
        self.skip_ws();
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return self.atoms();
        }
        let coeff = self.rational()?;
        self.skip_ws();
        if self.eat(b'*') {
            return Ok(self.atoms()?.scale(&coeff));
        }
        if self.is_atom_start() {
            // juxtaposition, e.g. "2L(1)"
            return Ok(self.atoms()?.scale(&coeff));
        }
        Ok(UeaElement::scalar(coeff))
    }

    fn element(&mut self) -> Result<UeaElement, ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(err(self.pos, "expected an expression"));
        }
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }
}
