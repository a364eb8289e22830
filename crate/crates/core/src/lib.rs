//! Numerical toolkit for finite (pre)modular categories.
//!
//! The crate is organised around a single immutable [`CategoryData`] value
//! (labels, fusion rules, dimensions, twists and the unnormalized s-matrix).
//! On top of it sit
//!
//! * [`verlinde`]: the Verlinde algebra with its fusion and convolution
//!   products, the s / s-bar operators, both Frobenius structures and the
//!   genus-g dimension formulas;
//! * [`skein`]: scalar shadows of the standard skein lemmas (encircling,
//!   the regular coloring, the killing ring, Hom dimensions);
//! * [`cobordism`]: a small expression language for solid-torus cobordism
//!   words, evaluated to matrices over the simple-object basis;
//! * [`genus`]: fusion-tree realization of the genus-g Verlinde algebra for
//!   multiplicity-free categories with F/R data.

pub mod category;
pub mod cobordism;
pub mod error;
pub mod genus;
pub mod report;
pub mod skein;
pub mod source;
pub mod verlinde;

pub use category::{CategoryData, RawCategory};
pub use error::{Error, Result};
pub use report::{CheckResult, Report};
pub use verlinde::VerlindeElement;

pub use num_complex::Complex64 as C64;

/// Index of a simple object; `0` is always the unit.
pub type Label = usize;

/// Default absolute tolerance for scalar comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Tolerance for "is this sum an integer" assertions, where cancellation in
/// sums of irrational terms costs a few digits.
pub const INTEGER_TOL: f64 = 1e-6;

pub(crate) fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
