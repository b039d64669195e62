use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{ElementSet, FiniteGroup, QuotientMap};
use crate::permgroup::Perm;
use crate::{Caps, Error, Result};

/// A group automorphism as a bijection on element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupAutomorphism {
    images: Vec<usize>,
}

impl GroupAutomorphism {
    /// Validates that `images` is a bijective homomorphism of `g`.
    pub fn new(g: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != g.order() {
            return Err(Error::NotAnAutomorphism(format!(
                "{} images for a group of order {}",
                images.len(),
                g.order()
            )));
        }
        if !is_bijection(&images) {
            return Err(Error::NotAnAutomorphism("not a bijection".into()));
        }
        if let Some((a, b)) = first_homomorphism_failure(g, g, &images) {
            return Err(Error::NotAnAutomorphism(format!("fails on ({a}, {b})")));
        }
        Ok(GroupAutomorphism { images })
    }

    pub fn identity(order: usize) -> Self {
        GroupAutomorphism {
            images: (0..order).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        GroupAutomorphism { images: inv }
    }

    pub fn image_of_set(&self, set: &ElementSet) -> ElementSet {
        set.iter().map(|&x| self.images[x]).collect()
    }

    /// The automorphism as a permutation of the element indices.
    pub fn as_perm(&self) -> Perm {
        Perm::from_vec_unchecked(self.images.clone())
    }
}

fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
}

fn first_homomorphism_failure(a: &FiniteGroup, b: &FiniteGroup, phi: &[usize]) -> Option<(usize, usize)> {
    for x in 0..a.order() {
        for y in 0..a.order() {
            if phi[a.mul(x, y)] != b.mul(phi[x], phi[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

/// A generating set chosen greedily in ascending index order, plus a
/// spanning tree expressing each element as `parent · generator`.
struct Words {
    generators: Vec<usize>,
    /// `(parent, generator slot)` for every non-identity element, in BFS order.
    tree: Vec<(usize, usize, usize)>,
}

fn words(g: &FiniteGroup) -> Words {
    let mut generators = Vec::new();
    let mut span = g.subgroup_generated(&ElementSet::new());
    for x in 0..g.order() {
        if !span.contains(&x) {
            generators.push(x);
            span = g.subgroup_generated(&generators.iter().copied().collect());
        }
    }
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (slot, &s) in generators.iter().enumerate() {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                tree.push((y, x, slot));
                queue.push_back(y);
            }
        }
    }
    Words { generators, tree }
}

/// Enumerates isomorphisms `a → b` by backtracking over generator images
/// (which must preserve element order), extending along the spanning tree
/// and verifying bijectivity and multiplicativity. Results come in
/// lexicographic order of the generator images; at most `limit` are returned.
fn isomorphisms(a: &FiniteGroup, b: &FiniteGroup, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if a.order() != b.order() || limit == 0 {
        return out;
    }
    let w = words(a);
    let candidates: Vec<Vec<usize>> = w
        .generators
        .iter()
        .map(|&s| {
            let ord = a.element_order(s);
            (0..b.order()).filter(|&t| b.element_order(t) == ord).collect()
        })
        .collect();
    let mut choice = vec![0usize; w.generators.len()];
    let mut phi = vec![0usize; a.order()];
    fn rec(
        depth: usize,
        a: &FiniteGroup,
        b: &FiniteGroup,
        w: &Words,
        candidates: &[Vec<usize>],
        choice: &mut Vec<usize>,
        phi: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if depth == w.generators.len() {
            phi[0] = 0;
            for &(y, parent, slot) in &w.tree {
                phi[y] = b.mul(phi[parent], choice[slot]);
            }
            if is_bijection(phi) && first_homomorphism_failure(a, b, phi).is_none() {
                out.push(phi.clone());
            }
            return;
        }
        for &t in &candidates[depth] {
            if choice[..depth].contains(&t) {
                continue;
            }
            choice[depth] = t;
            rec(depth + 1, a, b, w, candidates, choice, phi, out, limit);
        }
    }
    rec(0, a, b, &w, &candidates, &mut choice, &mut phi, &mut out, limit);
    out
}

/// Some isomorphism `a → b`, if the tables are isomorphic.
pub fn isomorphism_between(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    isomorphisms(a, b, 1).pop()
}

/// All automorphisms of `g`, in the deterministic order of the
/// generator-image backtracking (the identity comes first).
pub fn automorphism_group(g: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupAutomorphism>> {
    if g.order() > caps.automorphism_order {
        return Err(Error::CapExceeded {
            what: "group order for automorphism search",
            size: g.order() as u128,
            cap: caps.automorphism_order as u128,
        });
    }
    Ok(isomorphisms(g, g, usize::MAX)
        .into_iter()
        .map(|images| GroupAutomorphism { images })
        .collect())
}

/// The automorphism `gH ↦ α(g)H` of `G/H`. Requires `α(H) = H`; the image
/// of every coset is checked to be a single coset.
pub fn induced_quotient_automorphism(alpha: &GroupAutomorphism, q: &QuotientMap) -> Result<GroupAutomorphism> {
    if alpha.images.len() != q.projection.len() {
        return Err(Error::NotAnAutomorphism("automorphism of a different group".into()));
    }
    if alpha.image_of_set(&q.kernel) != q.kernel {
        return Err(Error::KernelNotPreserved);
    }
    let dec = &q.cosets;
    let mut images = Vec::with_capacity(dec.index());
    for coset in &dec.cosets {
        let target = q.projection[alpha.apply(coset[0])];
        if coset.iter().any(|&x| q.projection[alpha.apply(x)] != target) {
            return Err(Error::NotAnAutomorphism("induced map is not well defined".into()));
        }
        images.push(target);
    }
    GroupAutomorphism::new(&q.target, images)
}
