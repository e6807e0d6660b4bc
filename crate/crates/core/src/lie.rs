//! The Schrödinger-Virasoro Lie algebra: bracket, coboundary structure and
//! the classical r-matrices behind the three twist cases.
//!
//! Non-vanishing brackets on basis generators:
//!
//! ```text
//! [L(m), L(n)] = (n - m) L(n+m)
//! [L(m), M(n)] = n M(n+m)
//! [L(n), Y(p)] = (p - n/2) Y(p+n)
//! [Y(p), Y(q)] = (q - p) M(p+q)
//! ```
//!
//! extended bilinearly and antisymmetrically; `[M,M] = [Y,M] = 0`.

use crate::error::AlgebraError;
use crate::generator::{Family, Generator};
use crate::rational::{rat, ratio, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Finite rational combination of basis generators. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LieElement {
    terms: BTreeMap<Generator, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn generator(g: Generator) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, rat(1));
        LieElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, g: Generator, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
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
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
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
            return LieElement::zero();
        }
        LieElement {
            terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect(),
        }
    }

    /// Lie bracket, extended bilinearly from the structure constants.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = LieElement::zero();
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                for (g, c) in bracket_generators(x, y).terms {
                    out.add_term(g, c * cx * cy);
                }
            }
        }
        out
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            crate::uea::write_term(f, i == 0, c, &g.to_string())?;
        }
        Ok(())
    }
}

/// Bracket of two basis generators.
pub fn bracket_generators(x: &Generator, y: &Generator) -> LieElement {
    use Family::*;
    let (m, n) = (x.index(), y.index());
    let (coeff, family) = match (x.family(), y.family()) {
        (L, L) => {
            let mut c = n - m;
            if hooks::ll_bracket_corrupted() {
                c += rat(1);
            }
            (c, L)
        }
        (L, M) => (n.clone(), M),
        (M, L) => (-m.clone(), M),
        (L, Y) => (n - m * ratio(1, 2), Y),
        (Y, L) => (n * ratio(1, 2) - m, Y),
        (Y, Y) => (n - m, M),
        (M, M) | (M, Y) | (Y, M) => (rat(0), M),
    };
    if coeff.is_zero() {
        return LieElement::zero();
    }
    LieElement::generator(Generator::from_parts(family, m + n)).scale(&coeff)
}

/// Degree 2 or 3 tensor over the Lie algebra, stored on basis tuples with
/// the same zero-pruning convention as [`LieElement`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorLieElement {
    degree: usize,
    terms: BTreeMap<Vec<Generator>, Rational>,
}

impl TensorLieElement {
    pub fn zero(degree: usize) -> Self {
        assert!(degree == 2 || degree == 3, "tensor degree must be 2 or 3");
        TensorLieElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Generator>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<Generator>, c: Rational) {
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
            return TensorLieElement::zero(self.degree);
        }
        TensorLieElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Swap the two legs of a degree-2 tensor.
    pub fn swap(&self) -> Self {
        assert_eq!(self.degree, 2, "swap is defined on degree-2 tensors");
        let mut out = TensorLieElement::zero(2);
        for (k, c) in &self.terms {
            out.add_term(vec![k[1].clone(), k[0].clone()], c.clone());
        }
        out
    }

    /// Outer product of pure factors, e.g. `x (x) y` for degree 2.
    pub fn outer(factors: &[&LieElement]) -> Self {
        let degree = factors.len();
        let mut out = TensorLieElement::zero(degree);
        let mut stack: Vec<(Vec<Generator>, Rational)> = vec![(Vec::new(), rat(1))];
        for f in factors {
            let mut next = Vec::new();
            for (prefix, c) in &stack {
                for (g, cg) in f.terms() {
                    let mut key = prefix.clone();
                    key.push(g.clone());
                    next.push((key, c * cg));
                }
            }
            stack = next;
        }
        for (key, c) in stack {
            out.add_term(key, c);
        }
        out
    }

    /// Diagonal adjoint action `z . (u (x) v) = [z,u] (x) v + u (x) [z,v]`,
    /// one bracket per leg, extended over all legs and terms.
    pub fn adjoint(&self, z: &LieElement) -> Self {
        let mut out = TensorLieElement::zero(self.degree);
        for (key, c) in &self.terms {
            for leg in 0..self.degree {
                let factor = LieElement::generator(key[leg].clone());
                let br = z.bracket(&factor);
                for (g, cg) in br.terms() {
                    let mut k = key.clone();
                    k[leg] = g.clone();
                    out.add_term(k, c * cg);
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            let legs: Vec<String> = key.iter().map(|g| format!("({g})")).collect();
            crate::uea::write_term(f, i == 0, c, &legs.join("\u{2297}"))?;
        }
        Ok(())
    }
}

/// One of the three twist cases: the pair `(h, e)` with `[h, e] = e`.
///
/// * case 1: `h = L(0)/n0`, `e = M(n0)`, any nonzero `n0`
/// * case 2: `h = 2 L(0)/n0`, `e = Y(n0/2)`, odd `n0`
/// * case 3: `h = L(0)/n0`, `e = L(n0)`, any nonzero `n0`
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwistCase {
    case: u8,
    n0: i64,
}

impl TwistCase {
    pub fn new(case: u8, n0: i64) -> Result<Self, AlgebraError> {
        if n0 == 0 {
            return Err(AlgebraError::ZeroN0);
        }
        match case {
            1 | 3 => Ok(TwistCase { case, n0 }),
            2 => {
                if n0 % 2 == 0 {
                    Err(AlgebraError::EvenN0ForCase2(n0))
                } else {
                    Ok(TwistCase { case, n0 })
                }
            }
            other => Err(AlgebraError::UnknownCase(other)),
        }
    }

    pub fn case(&self) -> u8 {
        self.case
    }

    pub fn n0(&self) -> i64 {
        self.n0
    }

    /// The distinguished pair `(h, e)`.
    pub fn generators(&self) -> (LieElement, LieElement) {
        let l0 = LieElement::generator(Generator::l(0));
        match self.case {
            1 => (
                l0.scale(&ratio(1, self.n0)),
                LieElement::generator(Generator::m(self.n0)),
            ),
            2 => (
                l0.scale(&ratio(2, self.n0)),
                LieElement::generator(Generator::from_parts(Family::Y, ratio(self.n0, 2))),
            ),
            3 => (
                l0.scale(&ratio(1, self.n0)),
                LieElement::generator(Generator::l(self.n0)),
            ),
            _ => unreachable!("validated at construction"),
        }
    }

    /// Eigenvalue of `ad h` on a generator: `[h, X] = shift(X) X`.
    /// This is the subscript shift in all commutation and transport lemmas.
    pub fn index_shift(&self, g: &Generator) -> Rational {
        let scale = match self.case {
            2 => ratio(2, self.n0),
            _ => ratio(1, self.n0),
        };
        g.index() * scale
    }
}

impl fmt::Display for TwistCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} (n0 = {})", self.case, self.n0)
    }
}

/// Classical r-matrix `h (x) e - e (x) h`. Requires `[h, e] = e` exactly.
pub fn r_matrix(h: &LieElement, e: &LieElement) -> Result<TensorLieElement, AlgebraError> {
    if &h.bracket(e) != e {
        return Err(AlgebraError::RMatrixBracket);
    }
    Ok(TensorLieElement::outer(&[h, e]).sub(&TensorLieElement::outer(&[e, h])))
}

/// Defect of the classical Yang-Baxter equation,
/// `[r12, r13] + [r12, r23] + [r13, r23]` in the triple tensor power.
pub fn cybe_defect(r: &TensorLieElement) -> TensorLieElement {
    assert_eq!(r.degree(), 2, "CYBE is evaluated on degree-2 tensors");
    let mut out = TensorLieElement::zero(3);
    for (k1, c1) in r.terms() {
        for (k2, c2) in r.terms() {
            let (a, b) = (&k1[0], &k1[1]);
            let (a2, b2) = (&k2[0], &k2[1]);
            let c = c1 * c2;
            // [r12, r13]: bracket in leg 1, spectators b, b'
            for (g, cg) in bracket_generators(a, a2).terms() {
                out.add_term(vec![g.clone(), b.clone(), b2.clone()], &c * cg);
            }
            // [r12, r23]: bracket in leg 2
            for (g, cg) in bracket_generators(b, a2).terms() {
                out.add_term(vec![a.clone(), g.clone(), b2.clone()], &c * cg);
            }
            // [r13, r23]: bracket in leg 3
            for (g, cg) in bracket_generators(b, b2).terms() {
                out.add_term(vec![a.clone(), a2.clone(), g.clone()], &c * cg);
            }
        }
    }
    out
}

/// Coboundary cocommutator `x . r` for `r = h (x) e - e (x) h`:
/// `[x,h] (x) e - e (x) [x,h] + h (x) [x,e] - [x,e] (x) h`.
pub fn delta_r(x: &LieElement, h: &LieElement, e: &LieElement) -> TensorLieElement {
    let xh = x.bracket(h);
    let xe = x.bracket(e);
    TensorLieElement::outer(&[&xh, e])
        .sub(&TensorLieElement::outer(&[e, &xh]))
        .add(&TensorLieElement::outer(&[h, &xe]))
        .sub(&TensorLieElement::outer(&[&xe, h]))
}

/// 1-cocycle defect `delta([x,y]) - x . delta(y) + y . delta(x)` for the
/// coboundary cocommutator; zero makes `(L, delta_r)` a Lie bialgebra.
pub fn cocycle_defect(
    x: &LieElement,
    y: &LieElement,
    h: &LieElement,
    e: &LieElement,
) -> TensorLieElement {
    let d_bracket = delta_r(&x.bracket(y), h, e);
    let x_dy = delta_r(y, h, e).adjoint(x);
    let y_dx = delta_r(x, h, e).adjoint(y);
    d_bracket.sub(&x_dy).add(&y_dx)
}

/// Scoped fault injection used by the verification suites' negative
/// controls. Not part of the public computational API.
pub mod hooks {
    use std::cell::Cell;

    thread_local! {
        static CORRUPT_LL: Cell<bool> = const { Cell::new(false) };
    }

    pub(super) fn ll_bracket_corrupted() -> bool {
        CORRUPT_LL.with(|c| c.get())
    }

    /// Runs `f` with the `[L,L]` structure constant perturbed from `(n - m)`
    /// to `(n - m + 1)` on the current thread, restoring it afterwards.
    pub fn with_corrupted_ll_bracket<R>(f: impl FnOnce() -> R) -> R {
        CORRUPT_LL.with(|c| {
            assert!(!c.get(), "corrupted-bracket scopes do not nest");
            c.set(true);
        });
        let out = f();
        CORRUPT_LL.with(|c| c.set(false));
        out
    }
}
