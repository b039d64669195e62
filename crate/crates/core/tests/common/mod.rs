//! Brute-force oracles shared by the integration tests. Each one enumerates
//! its search space outright and shares no code with the library search.

#![allow(dead_code)]

use cig_core::digraph::InnerKind;
use cig_core::Digraph;
use rand::rngs::StdRng;
use rand::Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

pub fn arc_matrix(d: &Digraph) -> Vec<Vec<bool>> {
    (0..d.order())
        .map(|u| (0..d.order()).map(|v| d.has_arc(u, v)).collect())
        .collect()
}

pub fn maps_arcs(a: &[Vec<bool>], b: &[Vec<bool>], p: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]]))
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Digraph, b: &Digraph, perms: &[Vec<usize>]) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let (ma, mb) = (arc_matrix(a), arc_matrix(b));
    perms.iter().any(|p| maps_arcs(&ma, &mb, p))
}

/// Number of automorphisms by trying every bijection.
pub fn brute_aut_count(d: &Digraph, perms: &[Vec<usize>]) -> u128 {
    let m = arc_matrix(d);
    perms.iter().filter(|p| maps_arcs(&m, &m, p)).count() as u128
}

/// Digraph on `n` vertices from the bits of `code`, row-major, loops
/// included.
pub fn digraph_from_code(n: usize, code: u64) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if code >> (u * n + v) & 1 == 1 {
                d.add_arc(u, v);
            }
        }
    }
    d
}

pub fn code_of(m: &[Vec<bool>], p: &[usize]) -> u64 {
    let n = m.len();
    let mut code = 0u64;
    for u in 0..n {
        for v in 0..n {
            if m[u][v] {
                code |= 1 << (p[u] * n + p[v]);
            }
        }
    }
    code
}

/// Smallest code over all relabellings: equal iff isomorphic.
pub fn canonical_code(d: &Digraph, perms: &[Vec<usize>]) -> u64 {
    let m = arc_matrix(d);
    perms.iter().map(|p| code_of(&m, p)).min().unwrap()
}

pub fn random_digraph(rng: &mut StdRng, n: usize, density: f64, loops: bool) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if (u != v || loops) && rng.gen_bool(density) {
                d.add_arc(u, v);
            }
        }
    }
    d
}

pub fn relabel(d: &Digraph, p: &[usize]) -> Digraph {
    let mut e = Digraph::empty(d.order());
    for (u, v) in d.arcs() {
        e.add_arc(p[u], p[v]);
    }
    e
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Calls `visit` with every set partition of `0..n`, given as block labels
/// in restricted-growth form.
pub fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    fn go(labels: &mut Vec<usize>, n: usize, next: usize, visit: &mut impl FnMut(&[usize])) {
        if labels.len() == n {
            visit(labels);
            return;
        }
        for l in 0..=next {
            labels.push(l);
            go(labels, n, next.max(l + 1), visit);
            labels.pop();
        }
    }
    if n == 0 {
        visit(&[]);
    } else {
        go(&mut Vec::with_capacity(n), n, 0, &mut visit);
    }
}

/// Every partition of `0..n` into blocks of size `r`.
pub fn uniform_partitions(n: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(rest: Vec<usize>, r: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        let first = rest[0];
        let others = &rest[1..];
        for mask in 0u32..1 << others.len() {
            if mask.count_ones() as usize != r - 1 {
                continue;
            }
            let mut block = vec![first];
            let mut remaining = Vec::new();
            for (i, &x) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    block.push(x);
                } else {
                    remaining.push(x);
                }
            }
            acc.push(block);
            go(remaining, r, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n % r == 0 {
        go((0..n).collect(), r, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `d` is `Γ′ ≀ K_r` (or `≀ K̄_r`) with respect to `blocks`, read
/// straight from the definition of the wreath product: arcs between two
/// blocks are all present or all absent, and inside a block the arcs either
/// copy the inner digraph or, when the quotient vertex carries a loop, form
/// a complete looped digraph.
pub fn realizes(d: &Digraph, blocks: &[Vec<usize>], kind: InnerKind) -> bool {
    for (i, a) in blocks.iter().enumerate() {
        for (j, b) in blocks.iter().enumerate() {
            let arc = d.has_arc(a[0], b[0]);
            if i != j {
                if !a.iter().all(|&u| b.iter().all(|&v| d.has_arc(u, v) == arc)) {
                    return false;
                }
                continue;
            }
            let ok = a.iter().all(|&u| {
                a.iter().all(|&v| {
                    let expected = if arc {
                        true
                    } else {
                        u != v && kind == InnerKind::Complete
                    };
                    d.has_arc(u, v) == expected
                })
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Uniform partitions of `0..n` with block size at least 2, largest blocks
/// first.
pub fn uniform_partition_table(n: usize) -> Vec<(usize, Vec<Vec<Vec<usize>>>)> {
    (2..=n)
        .rev()
        .filter(|r| n % r == 0)
        .map(|r| (r, uniform_partitions(n, r)))
        .collect()
}

/// Largest `r ≥ 2` with a realizing uniform partition, by enumeration.
pub fn brute_max_split(d: &Digraph, kind: InnerKind, table: &[(usize, Vec<Vec<Vec<usize>>>)]) -> Option<usize> {
    table
        .iter()
        .find(|(_, parts)| parts.iter().any(|p| realizes(d, p, kind)))
        .map(|&(r, _)| r)
}
