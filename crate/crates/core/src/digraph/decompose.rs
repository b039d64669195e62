//! Detecting `d = Γ′ ≀ K_r` and `d = Γ′ ≀ K̄_r` through twin classes.
//!
//! Two distinct vertices are clique twins when they are joined by arcs in
//! both directions, agree on loops, and have the same in- and
//! out-neighbours outside the pair. Independent twins have the same
//! neighbours outside the pair and are either non-adjacent and loopless or
//! fully joined with loops at both (a looped quotient vertex expands to a
//! complete looped block whatever the inner digraph is). Both relations
//! are equivalences. A realizing partition must refine the twin classes,
//! and any split of the classes into equal parts realizes one, so `r ≥ 2`
//! is feasible iff it divides every class size.

use serde::Serialize;

use super::{wreath_digraph, Digraph};
use crate::permgroup::PointPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InnerKind {
    Complete,
    Empty,
}

impl InnerKind {
    pub fn inner(self, r: usize) -> Digraph {
        match self {
            InnerKind::Complete => Digraph::complete(r),
            InnerKind::Empty => Digraph::empty(r),
        }
    }
}

/// `d` written as `quotient ≀ K_r` (or `≀ K̄_r`) with respect to
/// `block_partition`: class `c`, position `j` is the wreath vertex
/// `c·r + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathDecomposition {
    pub quotient: Digraph,
    pub inner_size: usize,
    pub block_partition: PointPartition,
    pub inner_kind: InnerKind,
}

impl WreathDecomposition {
    /// Rebuilds the digraph from the factors and the partition.
    pub fn reassemble(&self) -> Digraph {
        let w = wreath_digraph(&self.quotient, &self.inner_kind.inner(self.inner_size))
            .expect("reassembled order equals the original order");
        let position: Vec<usize> = self.block_partition.classes().iter().flatten().copied().collect();
        let mut d = Digraph::empty(w.order());
        for (u, v) in w.arcs() {
            d.add_arc(position[u], position[v]);
        }
        d
    }
}

fn is_twin(d: &Digraph, u: usize, v: usize, kind: InnerKind) -> bool {
    let pair = !((1u64 << u) | (1u64 << v));
    let same_nbhd = d.out_mask(u) & pair == d.out_mask(v) & pair && d.in_mask(u) & pair == d.in_mask(v) & pair;
    let joined = match kind {
        InnerKind::Complete => d.has_arc(u, v) && d.has_arc(v, u) && d.has_loop(u) == d.has_loop(v),
        // A looped vertex of the quotient yields a complete looped block
        // whatever the inner digraph is.
        InnerKind::Empty => {
            let full = d.has_arc(u, v) && d.has_arc(v, u) && d.has_loop(u) && d.has_loop(v);
            let none = !d.has_arc(u, v) && !d.has_arc(v, u) && !d.has_loop(u) && !d.has_loop(v);
            full || none
        }
    };
    u != v && joined && same_nbhd
}

/// Twin classes of the given kind, each sorted, ordered by minimum vertex.
pub fn twin_classes(d: &Digraph, kind: InnerKind) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..d.order() {
        match classes.iter_mut().find(|c| is_twin(d, c[0], v, kind)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn decompose(d: &Digraph, kind: InnerKind) -> Option<WreathDecomposition> {
    let classes = twin_classes(d, kind);
    let r = classes.iter().fold(0, |g, c| gcd(g, c.len()));
    if r < 2 {
        return None;
    }
    let parts: Vec<Vec<usize>> = classes
        .iter()
        .flat_map(|c| c.chunks(r).map(|p| p.to_vec()).collect::<Vec<_>>())
        .collect();
    let block_partition = PointPartition::new(d.order(), parts).expect("twin classes partition the vertices");
    let reps: Vec<usize> = block_partition.classes().iter().map(|c| c[0]).collect();
    let mut quotient = Digraph::empty(reps.len());
    for (i, &u) in reps.iter().enumerate() {
        for (j, &v) in reps.iter().enumerate() {
            if d.has_arc(u, v) {
                quotient.add_arc(i, j);
            }
        }
    }
    let dec = WreathDecomposition {
        quotient,
        inner_size: r,
        block_partition,
        inner_kind: kind,
    };
    debug_assert_eq!(&dec.reassemble(), d);
    Some(dec)
}

/// `d = Γ′ ≀ K_r` with the largest feasible `r ≥ 2`, if any.
pub fn decompose_over_complete(d: &Digraph) -> Option<WreathDecomposition> {
    decompose(d, InnerKind::Complete)
}

/// `d = Γ′ ≀ K̄_r` with the largest feasible `r ≥ 2`, if any.
pub fn decompose_over_empty(d: &Digraph) -> Option<WreathDecomposition> {
    decompose(d, InnerKind::Empty)
}
