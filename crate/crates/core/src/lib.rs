//! Exact computation of Hurwitz divisor classes on the moduli space of
//! stable curves of even genus, together with the permutation-group and
//! braid-group machinery needed to certify the combinatorial facts the
//! class computation rests on.
//!
//! A general curve of genus `g = 2k` carries finitely many pencils of
//! degree `k + 1`; asking that two of the resulting ramification points
//! lie in one fibre (or collide into a triple point) cuts out divisors
//! `D_2` and `D_3` in the moduli space. This crate computes their classes
//! in the basis `λ, δ_0, …, δ_k` of the rational Picard group, in two
//! independent ways, over exact rationals:
//!
//! - [`picard::d2_class_theorem`] evaluates the closed coefficient
//!   formulas directly;
//! - [`picard::d2_class_pipeline`] re-assembles the same class from the
//!   Hodge-class pushforward over the compactified Hurwitz space,
//!   combining boundary-divisor degrees, ramification-profile
//!   coefficients and the known class of `D_3`.
//!
//! The two must agree coefficient by coefficient; `hdl verify` checks
//! this along with every other identity the derivation uses.
//!
//! ```
//! use hdl_core::picard::{d2_class_pipeline, d2_class_theorem};
//!
//! let theorem = d2_class_theorem(3)?;
//! assert_eq!(theorem.to_json_string(),
//!     r#"{"genus":6,"lambda":"612","delta":["-76","-300","-444","-459"]}"#);
//! assert_eq!(d2_class_pipeline(3)?, theorem);
//! # Ok::<(), hdl_core::Error>(())
//! ```
//!
//! Module map:
//!
//! - [`exactcomb`] — arbitrary-precision integers/rationals and every
//!   closed-form combinatorial quantity (Catalan numbers, moments,
//!   restricted degrees, pencil counts).
//! - [`picard`] — divisor-class vectors, the `D_3` and `D_2` classes,
//!   ramification-profile coefficients and the pushforward ledger.
//! - [`symcover`] — permutations, transposition tuples, exhaustive
//!   enumeration of monodromy data and cover counting.
//! - [`braid`] — braid and pure-braid actions on transposition tuples,
//!   orbit enumeration and transitivity certificates.
//!
//! All arithmetic is exact; there is no floating-point mode.

pub mod braid;
pub mod exactcomb;
pub mod guard;
pub mod picard;
pub mod symcover;

pub use guard::ResourceGuard;

/// Crate-wide error type.
///
/// The CLI maps these onto its exit codes: argument, parse and
/// construction errors exit 2, resource-guard errors exit 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A textual input (cycle notation, partition list, rational) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
    /// Branch data does not describe a cover of nonnegative integral genus.
    #[error("invalid branch data: {0}")]
    InvalidBranchData(String),
    /// A canonical tuple construction received inconsistent parameters.
    #[error("construction error: {0}")]
    Construction(String),
    /// An enumeration exceeded the configured resource ceiling.
    #[error("enumeration too large: {0}")]
    ResourceExceeded(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
