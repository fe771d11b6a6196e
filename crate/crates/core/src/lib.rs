//! Partitions with constrained successive ranks.
//!
//! The crate covers three layers:
//!
//! * combinatorial objects: [`Partition`], [`BoxedPartition`], [`StepWord`] and
//!   the maps between them (Foata's transformation [`foata::phi`], the
//!   Greene–Kleitman lift [`gk::gamma`], the rank-raising map [`rank_raising::f`]);
//! * exact evaluators for the closed forms in [`qseries`];
//! * brute-force enumeration in [`oracle`], used as ground truth.
//!
//! Everything is exact. Polynomials carry arbitrary precision integer
//! coefficients and truncated series carry rationals.

pub mod error;
pub mod foata;
pub mod gk;
pub mod oracle;
pub mod par;
pub mod partition;
pub mod qseries;
pub mod rank_raising;
pub mod word;

pub use error::{Error, Result};
pub use partition::{BoxedPartition, HookDecomposition, Partition, RankConstraint};
pub use qseries::{QPoly, QTPoly, TruncatedSeries};
pub use word::{PathProfile, Step, StepMatching, StepWord};
