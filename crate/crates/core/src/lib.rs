//! Exact symbolic computation in the Schrödinger-Virasoro Lie algebra `L`,
//! its universal enveloping algebra `U(L)`, and the Drinfel'd twist
//! deformations of the Hopf structure on `U(L)[[t]]`.
//!
//! Everything is coefficient-exact over the rationals; formal power series
//! in the deformation parameter `t` are truncated at a configurable order.
//! The `verify` module machine-checks the algebraic identities the rest of
//! the crate is built on (Lie bialgebra axioms, PBW/Hopf axioms, factorial
//! and commutation lemmas, twist axioms, and the closed forms of the twisted
//! coproducts and antipodes) and produces deterministic reports.

pub mod error;
pub mod generator;
pub mod lie;
pub mod rational;
pub mod series;
pub mod twist;
pub mod uea;
pub mod verify;

pub use error::AlgebraError;
pub use generator::{Family, Generator};
pub use lie::{LieElement, TensorLieElement, TwistCase};
pub use rational::{binomial, rat, ratio, Rational};
pub use series::Series;
pub use twist::TwistData;
pub use uea::{PbwMonomial, TensorElement, UeaElement};
pub use verify::{run_suite, CheckRecord, CheckStatus, Report, Suite, SuiteConfig, Summary};
