//! CI testing, connection-set lifting, and machine-checked certificates for
//! the quotient theorem on concrete instances.

mod certificate;
mod dichotomy;
mod lift;
mod pair;

use serde::{Deserialize, Serialize};

pub use certificate::{
    quotient_ci_certificate, CertificateOptions, CertificateStatus, Check, LoopPolicy, QuotientCICertificate,
};
pub use dichotomy::{outer_split, verify_wreath_aut_dichotomy, Dichotomy, WreathAutReport};
pub use lift::{
    lift_connection_set, lift_with_quotient, verify_lift_structure, verify_unique_block_partition, LiftCase,
    LiftChecks, LiftResult,
};
pub use pair::{
    automorphic_image_search, ci_pair, is_ci_group, search_image_among, CIGroupVerdict, CIPairResult, CIWitness,
    Verdict,
};

/// Whether connection sets range over all subsets (digraphs) or only over
/// inverse-closed subsets (graphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Digraph,
    Graph,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "digraph" => Ok(Mode::Digraph),
            "graph" => Ok(Mode::Graph),
            other => Err(format!("unknown mode '{other}' (expected digraph or graph)")),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Digraph => "digraph",
            Mode::Graph => "graph",
        })
    }
}
