//! Exact symbolic computation for polynomial differential forms and
//! Pfaffian systems.
//!
//! Everything runs over the rationals with arbitrary precision — there are
//! no floating-point numbers anywhere — so every verdict this crate
//! produces ("this form is identically zero", "these two systems cut out
//! the same variety") is a certificate, not an approximation.
//!
//! The crate is layered bottom-up:
//!
//! * [`ring`] — sparse multivariate polynomials over `Q` with graded
//!   reverse lexicographic and lexicographic monomial orders;
//! * [`groebner`] — Buchberger's algorithm, reduced bases, ideal and
//!   radical membership, variety equality, and combinatorial dimension;
//! * [`exterior`] — differential forms, wedge, exterior derivative,
//!   interior product, and pullback;
//! * [`pfaff`] — rank-two Pfaffian systems: derived flags, the Engel
//!   conditions, the class of a one-form, and singular loci;
//! * [`projective`] — homogeneous systems: Euler identities, degree and
//!   twist bookkeeping, contraction identities, and the bundled example
//!   corpus.
//!
//! Polynomials and forms print in a stable textual grammar that the
//! built-in parser accepts back, so every value round-trips through text.

pub mod exterior;
pub mod groebner;
mod parse;
pub mod pfaff;
pub mod projective;
pub mod ring;

pub use exterior::{DiffForm, PolyMap, VecField};
pub use groebner::{DimensionVerdict, Ideal};
pub use pfaff::{BetaRole, DerivedLength, EngelReport, PfaffSystem};
pub use projective::{corpus, FormDegree, ProjectiveSystem};
pub use ring::{Homogeneity, Monomial, MonomialOrder, OrderKind, Polynomial, Rational};

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two operands live in polynomial rings with different variable counts.
    #[error("ambient dimension mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    /// A variable index does not exist in the ambient ring.
    #[error("variable index {index} out of range for {ambient} variables")]
    IndexOutOfRange { index: usize, ambient: usize },

    /// Two forms of different degrees were combined additively.
    #[error("form degree mismatch: expected {expected}, found {found}")]
    FormDegreeMismatch { expected: usize, found: usize },

    /// The text grammar was violated; positions are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    /// The class of the zero form is undefined.
    #[error("the zero form has no well-defined class")]
    ZeroFormClass,

    /// An operation received the wrong number of generators.
    #[error("expected {expected} generators, found {found}")]
    WrongGeneratorCount { expected: usize, found: usize },

    /// Coefficients are required to be homogeneous of one common degree.
    #[error("coefficients are not homogeneous of a single degree")]
    Inhomogeneous,

    /// The form is not annihilated by the radial vector field.
    #[error("form is not annihilated by the radial field")]
    EulerViolation,

    /// The operation is only defined for systems passing the Engel checks.
    #[error("the system does not satisfy the Engel conditions")]
    NotEngel,

    /// Anything else the caller got wrong, with a human-readable reason.
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
