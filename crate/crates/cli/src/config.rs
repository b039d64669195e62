use std::collections::BTreeMap;

use cig_core::{Caps, LoopPolicy, Mode};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "cig",
    version,
    about = "CI-group checks and quotient certificates for small finite groups"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human, env = "CIG_FORMAT")]
    pub format: Format,

    /// Worker threads for parallel searches (0 = one per core)
    #[arg(long, global = true, default_value_t = 0, env = "CIG_THREADS")]
    pub threads: usize,

    #[command(flatten)]
    pub caps: CapArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct CapArgs {
    /// Largest permutation group that may be enumerated
    #[arg(long, global = true, default_value_t = Caps::DEFAULT_CLOSURE, env = "CIG_CLOSURE_CAP")]
    pub closure_cap: usize,

    /// Largest digraph order for isomorphism and automorphism search
    #[arg(long, global = true, default_value_t = Caps::DEFAULT_SEARCH_ORDER, env = "CIG_SEARCH_CAP")]
    pub search_cap: usize,

    /// Largest group order whose automorphism group is enumerated
    #[arg(long, global = true, default_value_t = Caps::DEFAULT_AUTOMORPHISM_ORDER, env = "CIG_AUT_CAP")]
    pub aut_cap: usize,

    /// Largest group order accepted from a spec
    #[arg(long, global = true, default_value_t = Caps::DEFAULT_GROUP_ORDER, env = "CIG_GROUP_CAP")]
    pub group_cap: usize,
}

impl CapArgs {
    pub fn resolve(&self) -> Caps {
        Caps {
            closure: self.closure_cap,
            search_order: self.search_cap,
            automorphism_order: self.aut_cap,
            group_order: self.group_cap,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Emit {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Digraph,
    Graph,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Digraph => Mode::Digraph,
            ModeArg::Graph => Mode::Graph,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LoopPolicyArg {
    Reduce,
    Verbatim,
}

impl From<LoopPolicyArg> for LoopPolicy {
    fn from(p: LoopPolicyArg) -> LoopPolicy {
        match p {
            LoopPolicyArg::Reduce => LoopPolicy::Reduce,
            LoopPolicyArg::Verbatim => LoopPolicy::Verbatim,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the catalog groups
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Build a Cayley digraph
    Cayley {
        #[arg(long)]
        group: String,
        /// Connection set as comma-separated element indices
        #[arg(long)]
        set: String,
        /// Print the digraph alone in this format
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Test two Cayley digraphs of one group for isomorphism
    Iso {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set1: String,
        #[arg(long)]
        set2: String,
    },
    /// CI tests
    Ci {
        #[command(subcommand)]
        action: CiAction,
    },
    /// Certificates for the quotient theorem
    Quotient {
        #[command(subcommand)]
        action: QuotientAction,
    },
    /// Automorphism groups of wreath products
    Wreath {
        #[command(subcommand)]
        action: WreathAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CiAction {
    /// Decide whether two connection sets are related by a group automorphism
    Pair {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set1: String,
        #[arg(long)]
        set2: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Digraph)]
        mode: ModeArg,
    },
    /// Exhaustively test whether a group is a CI-group
    Group {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Digraph)]
        mode: ModeArg,
        /// Stop after this many connection-set pairs
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum QuotientAction {
    /// Run the quotient theorem's proof on one instance
    Verify {
        #[arg(long)]
        group: String,
        /// Generators of the normal subgroup, as element indices
        #[arg(long)]
        normal: String,
        /// Quotient connection set, one representative element per coset
        #[arg(long)]
        set1: String,
        #[arg(long)]
        set2: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Digraph)]
        mode: ModeArg,
        /// How a quotient set containing the identity coset is lifted
        #[arg(long, value_enum, default_value_t = LoopPolicyArg::Reduce)]
        loop_policy: LoopPolicyArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum WreathAction {
    /// Compare Aut(Γ₁ ≀ Γ₂) with Aut(Γ₁) ≀ Aut(Γ₂) for two Cayley digraphs
    Aut {
        #[arg(long)]
        g1_group: String,
        #[arg(long)]
        g1_set: String,
        #[arg(long)]
        g2_group: String,
        #[arg(long)]
        g2_set: String,
    },
}

/// Everything that determines a run, echoed in structured output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    /// Command arguments after parsing (element lists as index arrays).
    pub arguments: BTreeMap<String, serde_json::Value>,
    pub caps: Caps,
    pub threads: usize,
    pub format: Format,
}
