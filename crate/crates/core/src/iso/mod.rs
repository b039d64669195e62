//! Desk-scale digraph isomorphism and automorphism groups: backtracking over
//! individualized vertices, pruned by iterated degree refinement.
//!
//! Search is deterministic: the target cell is the smallest non-singleton
//! color class, and candidate images are tried in ascending order. No
//! canonical forms are computed.

mod refine;
mod search;

pub use refine::{refine, VertexColoring};
pub use search::{
    are_isomorphic, automorphism_group_capped, automorphism_group_of, find_isomorphism, find_isomorphism_capped,
};
