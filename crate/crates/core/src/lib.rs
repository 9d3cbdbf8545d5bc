//! Verification laboratory for Ramanujan-Chudnovsky type series for 1/pi.
//!
//! The crate is organized bottom-up:
//!
//! * [`dyadic`], [`approx`] — exact dyadic floats and rigorous complex
//!   enclosure arithmetic (midpoint + error radius);
//! * [`pi`] — enclosures of pi by binary splitting, cross-checked against an
//!   independent arctangent oracle;
//! * [`algebraic`] — exact quadratic-field elements, quadratic irrationals
//!   (binary quadratic forms), reduced-form enumeration;
//! * [`recognize`] — LLL-based recognition of degree <= 2 algebraic numbers;
//! * [`poly`], [`picard_fuchs`] — exact rational-function arithmetic and the
//!   Picard-Fuchs derivations with hypergeometric pullback checks;
//! * [`hypergeom`] — rigorous 2F1/3F2 evaluation and classical
//!   transformation identities;
//! * [`modular`] — Eisenstein series, eta, theta, the six case uniformizers,
//!   s2, and modular-relation checks, all with explicit tail bounds;
//! * [`series`] — the catalog of 1/pi series, precursor-formula
//!   verification, WZ recurrence certificates, pi digit extraction, and
//!   period-expression checks;
//! * [`certify`] — integrality-multiplier certification of singular values
//!   of s2.

pub mod algebraic;
pub mod approx;
pub mod certify;
pub mod checks;
pub mod dyadic;
pub mod hypergeom;
pub mod modular;
pub mod picard_fuchs;
pub mod pi;
pub mod poly;
pub mod recognize;
pub mod series;

pub use approx::{ApproxComplex, AC};
pub use dyadic::{Dyadic, Mag};

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("branch cut: {0}")]
    BranchCut(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;