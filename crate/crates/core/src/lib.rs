//! Exact projective-plane geometry over arbitrary fields.
//!
//! Everything here is exact arithmetic: rationals with arbitrary-precision
//! integers, or prime fields GF(p). On top of that sit the classical
//! `F^3` vector operations (inner product, cross product, determinant),
//! the projective plane with points and lines as homogeneous coordinate
//! classes, and two determinant identities relating six points and the
//! fifteen lines through them, from which the Theorems of Pappus and
//! Desargues fall out as special cases.
//!
//! The identities are verified three independent ways:
//!
//! * numerically, on arbitrary configurations over any supported field
//!   ([`identities`]),
//! * symbolically, by expanding both sides as sparse integer polynomials
//!   in 18 variables and cancelling ([`symbolic`]),
//! * exhaustively, over the finite planes PG(2,2) and PG(2,3), plus
//!   seeded sampling for larger primes ([`plane`]).

pub mod fields;
pub mod identities;
pub mod plane;
pub mod projective;
pub mod symbolic;
pub mod vec3;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion of the zero element; signals a degenerate normalization request.
    #[error("cannot invert zero")]
    InversionOfZero,
    /// A prime-field modulus failed the primality test.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Prime fields are capped at p < 2^31 so products fit a widening multiply.
    #[error("modulus {0} is too large for a prime field (must be < 2^31)")]
    ModulusTooLarge(u64),
    /// Two operands belong to different fields.
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    /// The zero vector carries no projective point or line.
    #[error("the zero vector has no projective interpretation")]
    ZeroVector,
    /// Join of a point with itself: the cross product vanishes.
    #[error("cannot join coincident points")]
    CoincidentPoints,
    /// Meet of a line with itself.
    #[error("cannot meet coincident lines")]
    CoincidentLines,
    /// Malformed textual input.
    #[error("parse error: {0}")]
    ParseError(String),
    /// Name does not match any catalogued identity.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    /// Plane enumeration request above the configured cap.
    #[error("q = {q} exceeds the enumeration cap {cap}")]
    CapExceeded { q: u64, cap: u32 },
    /// Exhaustive sweeps blow up combinatorially; only tiny planes allow them.
    #[error("exhaustive sweeps are only supported for q <= 3 (got q = {0})")]
    ExhaustiveTooLarge(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
