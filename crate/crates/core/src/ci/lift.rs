use serde::Serialize;

use crate::digraph::{cayley, decompose_over_complete, wreath_digraph, Digraph, InnerKind};
use crate::finitegroup::{ElementSet, FiniteGroup, QuotientMap};
use crate::iso::automorphism_group_capped;
use crate::permgroup::{wreath_perm, Perm, PermGroup, PointPartition};
use crate::{Caps, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftCase {
    /// The quotient digraph is not `Γ ≀ K_r` for any `r ≥ 2`;
    /// `T = (∪ cosets in S) ∪ (H − {1})` and `Cay(G, T) = Cay(G/H, S) ≀ K_ℓ`.
    NonDecomposable,
    /// The quotient digraph is `Γ ≀ K_r` for some `r ≥ 2`;
    /// `T = ∪ cosets in S` and `Cay(G, T) = Cay(G/H, S) ≀ K̄_ℓ`.
    Decomposable,
}

impl LiftCase {
    pub fn inner_kind(self) -> InnerKind {
        match self {
            LiftCase::NonDecomposable => InnerKind::Complete,
            LiftCase::Decomposable => InnerKind::Empty,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftResult {
    pub case: LiftCase,
    /// Quotient connection set, as coset indices.
    pub s_quotient: ElementSet,
    pub t: ElementSet,
    pub ell: usize,
    pub coset_partition: PointPartition,
    #[serde(skip)]
    pub quotient_graph: Digraph,
}

/// Lifts a quotient connection set (coset indices of `q`) to `G`.
pub fn lift_with_quotient(g: &FiniteGroup, q: &QuotientMap, s_quotient: &ElementSet) -> Result<LiftResult> {
    q.target.check_set(s_quotient)?;
    let quotient_graph = cayley(&q.target, s_quotient)?;
    let case = if decompose_over_complete(&quotient_graph).is_some() {
        LiftCase::Decomposable
    } else {
        LiftCase::NonDecomposable
    };
    let mut t = q.cosets.union_of(s_quotient);
    if case == LiftCase::NonDecomposable {
        t.extend(q.kernel.iter().copied().filter(|&x| x != g.identity()));
    }
    Ok(LiftResult {
        case,
        s_quotient: s_quotient.clone(),
        t,
        ell: q.kernel.len(),
        coset_partition: q.cosets.partition(),
        quotient_graph,
    })
}

/// [`lift_with_quotient`] for a normal subgroup `h`.
pub fn lift_connection_set(g: &FiniteGroup, h: &ElementSet, s_quotient: &ElementSet) -> Result<LiftResult> {
    let q = g.quotient(h)?;
    lift_with_quotient(g, &q, s_quotient)
}

/// Outcome of comparing `Cay(G, T)` with its wreath-product description.
#[derive(Debug, Clone, Serialize)]
pub struct LiftChecks {
    /// `Cay(G, T)` equals `Cay(G/H, S) ≀ K_ℓ` (or `≀ K̄_ℓ`) arc for arc under
    /// the coset-sorted vertex order.
    pub wreath_identity: bool,
    pub aut_order: u128,
    pub wreath_order: u128,
    pub aut_order_equal: bool,
    /// Every generator of `Aut(Cay(G, T))` lies in `Aut(Cay(G/H, S)) ≀ S_ℓ`.
    pub aut_generators_in_wreath: bool,
    /// Every generator of `Aut(Cay(G/H, S)) ≀ S_ℓ` is an automorphism of
    /// `Cay(G, T)`.
    pub wreath_generators_in_aut: bool,
    #[serde(skip)]
    pub aut: PermGroup,
}

impl LiftChecks {
    pub fn aut_equal(&self) -> bool {
        self.aut_order_equal && self.aut_generators_in_wreath && self.wreath_generators_in_aut
    }
}

/// Vertex order listing `G` coset by coset, each coset ascending:
/// wreath vertex `c·ℓ + j` is element `cosets[c][j]`.
fn coset_order(q: &QuotientMap) -> Vec<usize> {
    q.cosets.cosets.iter().flatten().copied().collect()
}

pub(crate) fn check_lift(g: &FiniteGroup, q: &QuotientMap, lift: &LiftResult, caps: &Caps) -> Result<LiftChecks> {
    let cay = cayley(g, &lift.t)?;
    let ell = lift.ell;
    let wreath = wreath_digraph(&lift.quotient_graph, &lift.case.inner_kind().inner(ell))?;
    let sigma = coset_order(q);
    let n = g.order();
    let wreath_identity = (0..n).all(|p| (0..n).all(|r| wreath.has_arc(p, r) == cay.has_arc(sigma[p], sigma[r])));

    let aut = automorphism_group_capped(&cay, caps)?;
    let aut_quotient = automorphism_group_capped(&lift.quotient_graph, caps)?;
    let sym = PermGroup::symmetric(ell)?;
    let wreath_group = wreath_perm(&aut_quotient, &sym)?;
    let wreath_order = wreath_group.order();

    let partition = &lift.coset_partition;
    let aut_generators_in_wreath = aut.generators().iter().all(|f| {
        partition
            .induced_action(f)
            .is_some_and(|bar| lift.quotient_graph.is_automorphism(&bar))
    });
    let mut sigma_inv = vec![0; n];
    for (p, &x) in sigma.iter().enumerate() {
        sigma_inv[x] = p;
    }
    let wreath_generators_in_aut = wreath_group.generators().iter().all(|w| {
        let on_g =
            Perm::new((0..n).map(|x| sigma[w.apply(sigma_inv[x])]).collect()).expect("conjugate is a permutation");
        cay.is_automorphism(&on_g)
    });

    Ok(LiftChecks {
        wreath_identity,
        aut_order: aut.order(),
        wreath_order,
        aut_order_equal: aut.order() == wreath_order,
        aut_generators_in_wreath,
        wreath_generators_in_aut,
        aut,
    })
}

/// Lifts `s_quotient` and checks the wreath structure of `Cay(G, T)` both
/// at the level of arcs and of automorphism groups.
pub fn verify_lift_structure(
    g: &FiniteGroup,
    h: &ElementSet,
    s_quotient: &ElementSet,
    caps: &Caps,
) -> Result<LiftChecks> {
    let q = g.quotient(h)?;
    let lift = lift_with_quotient(g, &q, s_quotient)?;
    check_lift(g, &q, &lift, caps)
}

/// True iff `a` has exactly one block system with blocks of size `ell` and
/// it equals `expected`.
pub fn verify_unique_block_partition(a: &PermGroup, ell: usize, expected: &PointPartition) -> Result<bool> {
    if !a.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let systems = a.block_systems_of_size(ell)?;
    Ok(systems.len() == 1 && &systems[0] == expected)
}
