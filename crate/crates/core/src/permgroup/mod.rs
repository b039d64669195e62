//! Permutations, permutation groups given by generators, orbits, blocks and
//! invariant partitions, and wreath products of permutation groups.
//!
//! Points are the integers `0..degree`. In a wreath product of a group on `X`
//! with a group on `Y`, the pair `(x, y)` is the point `x * |Y| + y`.

mod blocks;
mod group;
mod partition;
mod perm;

pub use group::{wreath_perm, PermGroup, MAX_WREATH_DEGREE};
pub use partition::PointPartition;
pub use perm::Perm;

/// True iff every class of `c` lies inside some class of `b`.
pub fn is_refinement(c: &PointPartition, b: &PointPartition) -> bool {
    c.refines(b)
}
