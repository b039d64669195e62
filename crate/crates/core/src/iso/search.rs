use std::collections::VecDeque;

use super::refine::{refine_joint, VertexColoring};
use crate::digraph::Digraph;
use crate::permgroup::{Perm, PermGroup};
use crate::{Caps, Error, Result};

/// Color with the smallest class of size at least 2 (lowest color on ties).
fn target_cell(c: &VertexColoring) -> Option<usize> {
    c.class_sizes()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s >= 2)
        .min_by_key(|(i, &s)| (s, *i))
        .map(|(i, _)| i)
}

/// Depth-first search for an isomorphism `a → b` respecting two jointly
/// refined colorings. Images are tried in ascending vertex order.
pub(crate) fn extend(a: &Digraph, ca: &VertexColoring, b: &Digraph, cb: &VertexColoring) -> Option<Vec<usize>> {
    let Some(color) = target_cell(ca) else {
        let mut by_color = vec![0; cb.order()];
        for w in 0..cb.order() {
            by_color[cb.color(w)] = w;
        }
        let map: Vec<usize> = (0..ca.order()).map(|v| by_color[ca.color(v)]).collect();
        return a.is_isomorphism_to(b, &map).then_some(map);
    };
    let v = ca.cell(color)[0];
    let ca_v = ca.individualize(v);
    for w in cb.cell(color) {
        if let Some(r) = refine_joint(&[a, b], &[ca_v.clone(), cb.individualize(w)]) {
            if let Some(map) = extend(a, &r[0], b, &r[1]) {
                return Some(map);
            }
        }
    }
    None
}

fn check_cap(order: usize, caps: &Caps) -> Result<()> {
    if order > caps.search_order {
        return Err(Error::CapExceeded {
            what: "digraph order for isomorphism search",
            size: order as u128,
            cap: caps.search_order as u128,
        });
    }
    Ok(())
}

/// An arc-preserving bijection `a → b`, or `None` after exhausting the
/// color-compatible search space.
pub fn find_isomorphism_capped(a: &Digraph, b: &Digraph, caps: &Caps) -> Result<Option<Vec<usize>>> {
    check_cap(a.order().max(b.order()), caps)?;
    if a.order() != b.order() || a.arc_count() != b.arc_count() || a.loop_count() != b.loop_count() {
        return Ok(None);
    }
    let n = a.order();
    let Some(r) = refine_joint(&[a, b], &[VertexColoring::uniform(n), VertexColoring::uniform(n)]) else {
        return Ok(None);
    };
    let found = extend(a, &r[0], b, &r[1]);
    debug_assert!(found.as_ref().is_none_or(|m| a.is_isomorphism_to(b, m)));
    Ok(found)
}

pub fn find_isomorphism(a: &Digraph, b: &Digraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_capped(a, b, &Caps::default())
}

pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

fn orbit(point: usize, degree: usize, gens: &[Perm]) -> Vec<bool> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// The full automorphism group, by individualization along a base.
///
/// Walks the identity path of individualize-and-refine to a discrete
/// coloring, then, deepest level first, searches for an automorphism
/// sending each base point to every candidate in its cell that is not
/// already in the orbit of the generators found so far. The generators
/// form a strong generating set and the order is the product of the basic
/// orbit lengths.
pub fn automorphism_group_capped(d: &Digraph, caps: &Caps) -> Result<PermGroup> {
    check_cap(d.order(), caps)?;
    let n = d.order();
    if n == 0 {
        return Err(Error::NotAPermutation("automorphism group of the empty digraph".into()));
    }
    let mut levels = Vec::new();
    let mut c = refine_joint(&[d], &[VertexColoring::uniform(n)])
        .expect("self-consistent")
        .remove(0);
    while let Some(color) = target_cell(&c) {
        let v = c.cell(color)[0];
        let next = refine_joint(&[d], &[c.individualize(v)])
            .expect("self-consistent")
            .remove(0);
        levels.push((c, color, v));
        c = next;
    }

    let mut gens: Vec<Perm> = Vec::new();
    let mut order: u128 = 1;
    for (c, color, v) in levels.into_iter().rev() {
        let mut reached = orbit(v, n, &gens);
        let cv = c.individualize(v);
        for w in c.cell(color) {
            if reached[w] {
                continue;
            }
            if let Some(r) = refine_joint(&[d, d], &[cv.clone(), c.individualize(w)]) {
                if let Some(map) = extend(d, &r[0], d, &r[1]) {
                    gens.push(Perm::from_vec_unchecked(map));
                    reached = orbit(v, n, &gens);
                }
            }
        }
        let len = reached.iter().filter(|&&x| x).count() as u128;
        order = order.checked_mul(len).ok_or(Error::CapExceeded {
            what: "automorphism group order",
            size: u128::MAX,
            cap: u128::MAX,
        })?;
    }
    Ok(PermGroup::with_order(n, gens, order, caps.closure))
}

pub fn automorphism_group_of(d: &Digraph) -> Result<PermGroup> {
    automorphism_group_capped(d, &Caps::default())
}
