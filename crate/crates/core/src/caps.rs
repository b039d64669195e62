//! Size limits for the exhaustive operations.

use serde::{Deserialize, Serialize};

/// Limits guarding the exhaustive searches. Operations that would exceed a
/// cap fail with [`crate::Error::CapExceeded`] instead of degrading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of elements in an enumerated permutation group.
    pub closure: usize,
    /// Maximum digraph order for isomorphism and automorphism search.
    pub search_order: usize,
    /// Maximum group order for automorphism-group enumeration.
    pub automorphism_order: usize,
    /// Maximum order of a group built from a catalog spec or a file.
    pub group_order: usize,
}

impl Caps {
    pub const DEFAULT_CLOSURE: usize = 200_000;
    pub const DEFAULT_SEARCH_ORDER: usize = 40;
    pub const DEFAULT_AUTOMORPHISM_ORDER: usize = 24;
    pub const DEFAULT_GROUP_ORDER: usize = 720;
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: Self::DEFAULT_CLOSURE,
            search_order: Self::DEFAULT_SEARCH_ORDER,
            automorphism_order: Self::DEFAULT_AUTOMORPHISM_ORDER,
            group_order: Self::DEFAULT_GROUP_ORDER,
        }
    }
}
