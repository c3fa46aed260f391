//! Shannon entropy diagrams and Bell inequalities for dichotomic (±1) variables.
//!
//! The crate is `no_std` (it needs `alloc`) and covers two views of the same
//! three-observable Bell setup:
//!
//! - the classical one, where the outcomes `a`, `b`, `c` come from an explicit
//!   joint distribution `p(a, b, c)` ([`probability`]), and
//! - the quantum one, where only pairwise statistics of a spin singlet are
//!   available ([`quantum`]).
//!
//! Both feed the entropy calculus in [`entropy`] (marginal and mutual
//! entropies, the seven-cell Venn diagram of three variables, the
//! δ-independent "degree sums") and the inequality checkers in
//! [`inequalities`] (correlation-coefficient Bell inequalities, their entropic
//! counterparts, the entropic CHSH form, and the negative-conditional-entropy
//! diagnosis). [`scan`] sweeps and maximizes the violations over measurement
//! angles.
//!
//! ```
//! use entropic_bell::{inequalities, quantum::{self, MeasurementSetup}};
//!
//! let theta = core::f64::consts::PI / 3.958;
//! let setup = MeasurementSetup::new(theta, theta / 2.0).unwrap();
//! let summary = quantum::bell_entropy_summary(&setup);
//! let [_, _, third] = inequalities::entropic_bell(&summary);
//! assert!(third.violated);
//! ```

#![no_std]

extern crate alloc;

pub mod entropy;
mod error;
pub mod inequalities;
pub mod probability;
pub mod quantum;
pub mod scan;

pub use error::Error;

/// Guard band for "≥ 0" and "≤ bound" assertions on floating-point entropies.
pub const TOLERANCE: f64 = 1e-9;

pub type Result<T, E = Error> = core::result::Result<T, E>;
