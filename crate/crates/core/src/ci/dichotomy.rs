//! Automorphism groups of wreath products of vertex-transitive digraphs.
//!
//! `Aut(Γ₁) ≀ Aut(Γ₂)` always acts on `Γ₁ ≀ Γ₂`. When it is not the whole
//! automorphism group, `Γ₁ = Γ₁′ ≀ K_r` and `Γ₂ = K_s ≀ Γ₂′` (or the same
//! with empty digraphs), and then
//! `Aut(Γ₁ ≀ Γ₂) = Aut(Γ₁′) ≀ (S_rs ≀ Aut(Γ₂′))`.

use serde::Serialize;

use crate::digraph::{twin_classes, wreath_digraph, Digraph, InnerKind};
use crate::iso::{automorphism_group_capped, find_isomorphism_capped};
use crate::{Caps, Error, Result};

/// Writes `d` as `K_s ≀ Γ′` (kind `Complete`) or `K̄_s ≀ Γ′` (kind `Empty`)
/// with the largest `s ≥ 2`, returning `(s, Γ′)`.
///
/// For `Complete` the outer blocks are the connected components of the
/// relation "not joined by arcs in both directions"; for `Empty` they are
/// the weak components. A split exists when there are at least two blocks,
/// all of the same size and pairwise isomorphic.
pub fn outer_split(d: &Digraph, kind: InnerKind, caps: &Caps) -> Result<Option<(usize, Digraph)>> {
    let n = d.order();
    let linked = |u: usize, v: usize| match kind {
        InnerKind::Complete => !(d.has_arc(u, v) && d.has_arc(v, u)),
        InnerKind::Empty => d.has_arc(u, v) || d.has_arc(v, u),
    };
    let mut component = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        component[start] = id;
        let mut block = vec![start];
        let mut i = 0;
        while i < block.len() {
            let u = block[i];
            for v in 0..n {
                if v != u && component[v] == usize::MAX && linked(u, v) {
                    component[v] = id;
                    block.push(v);
                }
            }
            i += 1;
        }
        block.sort_unstable();
        blocks.push(block);
    }
    if blocks.len() < 2 || blocks.iter().any(|b| b.len() != blocks[0].len()) {
        return Ok(None);
    }
    let first = d.induced_subgraph(&blocks[0]);
    for b in &blocks[1..] {
        if find_isomorphism_capped(&first, &d.induced_subgraph(b), caps)?.is_none() {
            return Ok(None);
        }
    }
    Ok(Some((blocks.len(), first)))
}

/// Largest `r ≥ 2` with `d = Γ′ ≀ K_r` (or `≀ K̄_r`), and `Γ′`.
///
/// Unlike the decomposition used for lifting, this requires every twin
/// class to have the same size, so that `Γ′` is again vertex-transitive when
/// `d` is.
fn inner_split(d: &Digraph, kind: InnerKind) -> Option<(usize, Digraph)> {
    let classes = twin_classes(d, kind);
    let r = classes[0].len();
    if r < 2 || classes.iter().any(|c| c.len() != r) {
        return None;
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    Some((r, d.induced_subgraph(&reps)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dichotomy {
    pub r: usize,
    pub s: usize,
    pub inner_kind: InnerKind,
    pub reduced_first_order: usize,
    pub reduced_second_order: usize,
    pub aut_reduced_first: u128,
    pub aut_reduced_second: u128,
    /// `|Aut(Γ₁′) ≀ (S_rs ≀ Aut(Γ₂′))|`.
    pub predicted_order: u128,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WreathAutReport {
    pub first_order: usize,
    pub second_order: usize,
    pub aut_first: u128,
    pub aut_second: u128,
    pub aut_product: u128,
    /// `|Aut(Γ₁) ≀ Aut(Γ₂)|`.
    pub aut_wreath_of_factors: u128,
    pub equal: bool,
    pub dichotomy: Option<Dichotomy>,
}

impl WreathAutReport {
    /// Equality holds, or the dichotomy explains the difference exactly.
    pub fn is_consistent(&self) -> bool {
        self.equal || self.dichotomy.as_ref().is_some_and(|d| d.matches)
    }
}

fn checked_pow(base: u128, exp: usize) -> Result<u128> {
    (0..exp)
        .try_fold(1u128, |acc, _| acc.checked_mul(base))
        .ok_or(Error::CapExceeded {
            what: "wreath order",
            size: u128::MAX,
            cap: u128::MAX,
        })
}

fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .ok_or(Error::CapExceeded {
            what: "factorial",
            size: u128::MAX,
            cap: u128::MAX,
        })
}

fn wreath_order(outer: u128, outer_degree: usize, inner: u128) -> Result<u128> {
    checked_pow(inner, outer_degree)?
        .checked_mul(outer)
        .ok_or(Error::CapExceeded {
            what: "wreath order",
            size: u128::MAX,
            cap: u128::MAX,
        })
}

/// Compares `Aut(Γ₁ ≀ Γ₂)` with `Aut(Γ₁) ≀ Aut(Γ₂)` and, when they differ,
/// computes the predicted order from the twin structure of the factors.
pub fn verify_wreath_aut_dichotomy(first: &Digraph, second: &Digraph, caps: &Caps) -> Result<WreathAutReport> {
    let aut1 = automorphism_group_capped(first, caps)?;
    let aut2 = automorphism_group_capped(second, caps)?;
    if !aut1.is_transitive() || !aut2.is_transitive() {
        return Err(Error::NotVertexTransitive);
    }
    let product = wreath_digraph(first, second)?;
    let aut_product = automorphism_group_capped(&product, caps)?.order();
    let aut_wreath_of_factors = wreath_order(aut1.order(), first.order(), aut2.order())?;
    let equal = aut_product == aut_wreath_of_factors;

    let mut dichotomy = None;
    if !equal {
        for kind in [InnerKind::Complete, InnerKind::Empty] {
            let (Some((r, reduced1)), Some((s, reduced2))) =
                (inner_split(first, kind), outer_split(second, kind, caps)?)
            else {
                continue;
            };
            let a1 = automorphism_group_capped(&reduced1, caps)?.order();
            let a2 = automorphism_group_capped(&reduced2, caps)?.order();
            let middle = wreath_order(factorial(r * s)?, r * s, a2)?;
            let predicted_order = wreath_order(a1, reduced1.order(), middle)?;
            dichotomy = Some(Dichotomy {
                r,
                s,
                inner_kind: kind,
                reduced_first_order: reduced1.order(),
                reduced_second_order: reduced2.order(),
                aut_reduced_first: a1,
                aut_reduced_second: a2,
                predicted_order,
                matches: predicted_order == aut_product,
            });
            break;
        }
    }
    Ok(WreathAutReport {
        first_order: first.order(),
        second_order: second.order(),
        aut_first: aut1.order(),
        aut_second: aut2.order(),
        aut_product,
        aut_wreath_of_factors,
        equal,
        dichotomy,
    })
}
