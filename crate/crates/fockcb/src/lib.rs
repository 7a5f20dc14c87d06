//! Exact computation of canonical-basis coefficients (q-decomposition
//! numbers) for the level-1 Fock space of U_q(sl_e-hat).
//!
//! Everything is built from two ingredients:
//!
//! * abacus combinatorics on integer partitions — beta-sets, e-cores and
//!   e-weights, runner removal, the refined dominance order, and the
//!   statistics U_k and n_{r,k};
//! * an exact straightening engine for wedge words, which yields the bar
//!   involution on standard basis vectors and, through a triangular
//!   recursion, the canonical basis of each block.
//!
//! On top of those sit the Mullineux map (computed by the good-node
//!   signature rule, cross-checked against a rim-stripping characterization
//!   and against the canonical basis itself) and verification suites that
//!   sweep the runner-removal and Mullineux-compatibility identities over
//!   every block in a declared range.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers,
//! polynomial comparisons are bit-exact, and nothing is floating point.

pub mod abacus;
pub mod blocks;
pub mod canonical;
pub mod laurent;
pub mod mullineux;
pub mod partition;
pub mod verify;
pub mod wedge;

pub use abacus::{BetaSet, IntMultiset, RunnerParams};
pub use blocks::BlockId;
pub use canonical::{BlockTable, CanonicalVector};
pub use laurent::LaurentPoly;
pub use mullineux::RimStrip;
pub use partition::{Node, NodeKind, Partition};
pub use verify::SuiteReport;
pub use wedge::{OrderedWedge, WedgeVector, WedgeWord};

/// Violated preconditions, reported with enough context to see which
/// hypothesis failed.  Internal invariant violations (exactness of
/// divisions, antisymmetry of bar differences, oracle uniqueness) are
/// engine bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parts must be weakly decreasing positive integers: {0}")]
    MalformedPartition(String),
    #[error("bead count r={r} is less than the number of parts ({parts})")]
    BeadCountTooSmall { r: usize, parts: usize },
    #[error("beta-set entries must be distinct non-negative integers")]
    MalformedBetaSet,
    #[error("{la} is not {k}-empty for e={e} (runner {d} has a gap)")]
    NotKEmpty { la: String, e: u32, k: u32, d: u32 },
    #[error("position {z} lies on the deleted runner {d} (mod {e})")]
    OnDeletedRunner { z: u64, d: u32, e: u32 },
    #[error("{la} is not {e}-regular")]
    NotRegular { la: String, e: u32 },
    #[error("{la} is not {e}-restricted")]
    NotRestricted { la: String, e: u32 },
    #[error("the empty partition is not a valid input here")]
    EmptyPartition,
    #[error("node ({row},{col}) is not addable to {la}")]
    NotAddable { row: u32, col: u32, la: String },
    #[error("{core} is not an {e}-core (it has {e}-weight {w})")]
    NotACore { core: String, e: u32, w: u64 },
    #[error("core has {a} addable residue-{k} nodes but weight is {w}; need a >= w")]
    ScopesHypothesisFails { a: usize, k: u32, w: u64 },
    #[error("{la} has a removable residue-{k} node; cannot add all addable ones")]
    RemovableNodesPresent { la: String, k: u32 },
    #[error("bead count r={r} is below the stable range (need at least {needed})")]
    UnstableBeadCount { r: usize, needed: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Reduce into [0, e), also for negative arguments.
pub(crate) fn residue_mod(x: i64, e: u32) -> u32 {
    (x.rem_euclid(e as i64)) as u32
}

#[cfg(test)]
mod tests {
    use super::residue_mod;

    #[test]
    fn residues_normalize_negatives() {
        assert_eq!(residue_mod(-2, 3), 1);
        assert_eq!(residue_mod(-3, 3), 0);
        assert_eq!(residue_mod(7, 4), 3);
    }
}
