//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generator set (or parameter pair) that must be coprime is not.
    #[error("not coprime: {what} has gcd {gcd}")]
    NotCoprime { what: String, gcd: u64 },

    /// s and t must have opposite parity.
    #[error("parity violation: s={s} and t={t} are both {}", if s % 2 == 0 { "even" } else { "odd" })]
    ParityViolation { s: u64, t: u64 },

    /// Input outside the validity domain (x ≤ 0, y ≤ 0, s/t out of range, ...).
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// The generated triple shares a common factor (should not happen for
    /// validated parameters).
    #[error("common factor: gcd(x, y, z) = {0} > 1")]
    CommonFactor(u64),

    /// Malformed generator input (fewer than two generators, a zero, ...).
    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    /// Checked integer arithmetic overflowed. Reported, never wrapped.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// The adaptive denumerant bound hit the configured cap before every
    /// residue found its Apéry element (or the gap scan terminated).
    #[error("denumerant table cap exceeded: needed more than {cap} entries")]
    DpCapExceeded { cap: u64 },

    /// One of the Lemma-type divisions was not exact; the Apéry data is
    /// corrupt or the formula catalog is mistranscribed.
    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    /// No closed form covers this input (irregular region, boundary slope,
    /// unsupported r or p).
    #[error("no closed form: {0}")]
    NoClosedForm(String),

    /// An Apéry element could not be written as Z·z + Y·y during corner
    /// extraction.
    #[error("decomposition failure: Apéry element {element} has no (Z, Y) decomposition")]
    DecompositionFailure { element: u64 },

    /// A catalog self-check failed (designated corner is not maximal, area
    /// mismatch, genus parity failure). Surfaced loudly by design.
    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),
}
