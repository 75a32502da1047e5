//! Implication sublattices of a finite Boolean algebra and the Möbius function
//! of the lattice they form under inclusion.
//!
//! An implication sublattice of `B_n` is a nonempty set of elements closed
//! under `x → y = ¬x ∨ y` and `∧`. Every such set is a Boolean subalgebra of
//! an interval `[a, 1]`, so it is stored canonically as a *partial
//! partition*: the base `a` together with a partition of the atoms outside
//! `a` into blocks ([`ImpLattice`]).
//!
//! The crate is organized as
//!
//! * [`element`] and [`lattice`]: Boolean algebra primitives, validation,
//!   enumeration and the two closure operators.
//! * [`poset`]: explicit intervals, the Möbius recursion, closed suborders,
//!   the product decomposition of `[A, B]` and permutation isomorphisms.
//! * [`formulas`]: exact closed forms (factorials, Stirling and Bell numbers,
//!   the product formula for `μ(A, B)`, signed Stirling chain sums, `p(k, B)`).
//! * [`verify`]: the claim-by-claim verification suites.
//!
//! Numeric code is generic over an exact integer ring ([`Scalar`]); the
//! aliases below fix the arbitrary-precision instantiation used by the
//! verification suites and the CLI.

pub mod element;
pub mod error;
pub mod formulas;
pub mod lattice;
mod partition;
pub mod poset;
pub mod scalar;
pub mod verdict;
pub mod verify;

pub use element::{Element, MAX_ATOMS};
pub use error::{Error, Result};
pub use formulas::{ChainSumReport, ChainVariant};
pub use lattice::{enumerate_all, Closure, ImpLattice};
pub use poset::{IntervalPoset, MobiusTable, ProductDecomposition};
pub use scalar::Scalar;
pub use verdict::Verdict;
pub use verify::{Suite, SuiteReport};

/// Arbitrary-precision signed integer used for every reported value.
pub type ExactInt = num::BigInt;

/// Exact rational over [`ExactInt`].
pub type ExactRational = num::BigRational;

/// Möbius table with arbitrary-precision entries.
pub type ExactMobiusTable<'a> = MobiusTable<'a, ExactInt>;

/// Möbius table with machine-word entries; exact while `|μ| < 2^63`.
pub type MobiusTable64<'a> = MobiusTable<'a, i64>;

/// Chain-sum report with arbitrary-precision value.
pub type ExactChainSumReport = ChainSumReport<ExactInt>;
