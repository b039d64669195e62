//! Computational toolkit for Cayley digraphs of small finite groups.
//!
//! The crate mechanizes the constructions behind the statement that a
//! quotient of a CI-group (with respect to graphs or digraphs) is again a
//! CI-group: Cayley digraphs, wreath products of permutation groups and of
//! digraphs, block systems, connection-set lifting, and induced quotient
//! automorphisms. Every construction is exhaustive and meant for desk-scale
//! instances (groups of order at most a few dozen).
//!
//! Module map:
//! - [`permgroup`]: permutations, groups given by generators, orbits, blocks,
//!   invariant partitions and wreath products.
//! - [`finitegroup`]: groups as multiplication tables, subgroups, cosets,
//!   quotients and automorphisms.
//! - [`digraph`]: loop-permitting digraphs, Cayley digraphs, wreath products
//!   of digraphs and twin decompositions.
//! - [`iso`]: backtracking isomorphism and automorphism search.
//! - [`ci`]: CI testing, lifting, and the quotient certificate pipeline.

pub mod caps;
pub mod ci;
pub mod digraph;
mod error;
pub mod finitegroup;
pub mod iso;
pub mod permgroup;

pub use caps::Caps;
pub use ci::{
    automorphic_image_search, ci_pair, is_ci_group, lift_connection_set, quotient_ci_certificate,
    verify_lift_structure, verify_unique_block_partition, verify_wreath_aut_dichotomy, CIGroupVerdict, CIPairResult,
    CertificateOptions, CertificateStatus, LiftCase, LiftResult, LoopPolicy, Mode, QuotientCICertificate, Verdict,
    WreathAutReport,
};
pub use digraph::{cayley, wreath_digraph, Digraph, InnerKind, WreathDecomposition};
pub use error::{Error, Result};
pub use finitegroup::{CosetDecomposition, ElementSet, FiniteGroup, GroupAutomorphism, QuotientMap};
pub use iso::{are_isomorphic, automorphism_group_of, find_isomorphism, VertexColoring};
pub use permgroup::{Perm, PermGroup, PointPartition};

/// Crate version embedded in structured output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
