//! Loop-permitting digraphs on vertices `0..n`, stored as out- and
//! in-neighbour bitmasks. Undirected graphs are digraphs whose arc relation
//! is symmetric.

mod decompose;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use decompose::{decompose_over_complete, decompose_over_empty, twin_classes, InnerKind, WreathDecomposition};

use crate::finitegroup::{ElementSet, FiniteGroup};
use crate::permgroup::Perm;
use crate::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

/// Serialized form: `{"order": n, "arcs": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphFile {
    pub order: usize,
    pub arcs: Vec<[usize; 2]>,
}

impl Digraph {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "digraph order {order} exceeds {MAX_ORDER}");
        Digraph {
            order,
            out: vec![0; order],
            inn: vec![0; order],
        }
    }

    /// Loopless complete digraph: every arc in both directions, no loops.
    pub fn complete(order: usize) -> Self {
        let mut d = Self::empty(order);
        for u in 0..order {
            for v in 0..order {
                if u != v {
                    d.add_arc(u, v);
                }
            }
        }
        d
    }

    pub fn from_arcs(order: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_order(order)?;
        let mut d = Self::empty(order);
        for (u, v) in arcs {
            if u >= order || v >= order {
                return Err(Error::ElementOutOfRange {
                    element: u.max(v),
                    order,
                });
            }
            d.add_arc(u, v);
        }
        Ok(d)
    }

    pub fn from_file(file: &DigraphFile) -> Result<Self> {
        Self::from_arcs(file.order, file.arcs.iter().map(|a| (a[0], a[1])))
    }

    pub fn to_file(&self) -> DigraphFile {
        DigraphFile {
            order: self.order,
            arcs: self.arcs().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Builds from adjacency bit rows (bit `v` of `rows[u]` is the arc u→v).
    pub fn from_rows(rows: &[u64]) -> Self {
        let order = rows.len();
        let mut d = Self::empty(order);
        for (u, &row) in rows.iter().enumerate() {
            for v in 0..order {
                if row >> v & 1 == 1 {
                    d.add_arc(u, v);
                }
            }
        }
        d
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    #[inline]
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    #[inline]
    pub fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            (0..self.order)
                .filter(move |&v| self.has_arc(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// True iff the arc relation is symmetric.
    pub fn is_undirected(&self) -> bool {
        self.out == self.inn
    }

    pub fn loop_count(&self) -> usize {
        (0..self.order).filter(|&v| self.has_loop(v)).count()
    }

    /// Flips every arc between distinct vertices; loops are kept as they are,
    /// so the complement of a loopless digraph is loopless.
    pub fn complement(&self) -> Digraph {
        let mut d = Digraph::empty(self.order);
        for u in 0..self.order {
            for v in 0..self.order {
                if (u == v && self.has_arc(u, v)) || (u != v && !self.has_arc(u, v)) {
                    d.add_arc(u, v);
                }
            }
        }
        d
    }

    /// Image under a vertex bijection: arc `u→v` becomes `p(u)→p(v)`.
    pub fn permuted(&self, p: &Perm) -> Digraph {
        let mut d = Digraph::empty(self.order);
        for (u, v) in self.arcs() {
            d.add_arc(p.apply(u), p.apply(v));
        }
        d
    }

    /// True iff `map` is a bijection sending arcs to arcs and non-arcs to
    /// non-arcs.
    pub fn is_isomorphism_to(&self, other: &Digraph, map: &[usize]) -> bool {
        if self.order != other.order || map.len() != self.order {
            return false;
        }
        let mut seen = 0u64;
        for &x in map {
            if x >= self.order || seen >> x & 1 == 1 {
                return false;
            }
            seen |= 1 << x;
        }
        (0..self.order).all(|u| {
            let image = (0..self.order)
                .filter(|&v| self.has_arc(u, v))
                .fold(0u64, |m, v| m | 1 << map[v]);
            image == other.out[map[u]]
        })
    }

    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.order && self.is_isomorphism_to(self, p.images())
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Digraph {
        let mut d = Digraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_arc(u, v) {
                    d.add_arc(i, j);
                }
            }
        }
        d
    }

    /// Graphviz text with one node per vertex and directed edges; `labels`
    /// replaces vertex numbers in node labels when given.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut s = String::from("digraph G {\n");
        for v in 0..self.order {
            match labels {
                Some(l) => writeln!(s, "  {v} [label=\"{}\"];", l[v].replace('"', "\\\"")).unwrap(),
                None => writeln!(s, "  {v};").unwrap(),
            }
        }
        for (u, v) in self.arcs() {
            writeln!(s, "  {u} -> {v};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let arcs: Vec<_> = self.arcs().collect();
        f.debug_struct("Digraph")
            .field("order", &self.order)
            .field("arcs", &arcs)
            .finish()
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "digraph order",
            size: order as u128,
            cap: MAX_ORDER as u128,
        });
    }
    Ok(())
}

/// `Cay(G, S)`: arc `x → x·s` for every `x` and every `s ∈ S`. The identity
/// may be in `S`, giving a loop at every vertex.
pub fn cayley(g: &FiniteGroup, s: &ElementSet) -> Result<Digraph> {
    g.check_set(s)?;
    check_order(g.order())?;
    let mut d = Digraph::empty(g.order());
    for x in 0..g.order() {
        for &t in s {
            d.add_arc(x, g.mul(x, t));
        }
    }
    Ok(d)
}

/// True iff `S = S⁻¹`, i.e. `Cay(G, S)` is an undirected graph.
pub fn is_graph_set(g: &FiniteGroup, s: &ElementSet) -> bool {
    g.is_inverse_closed(s)
}

/// Wreath (lexicographic) product: vertex `(u, v)` is `u·|b| + v`. Inside a
/// fiber the arcs copy `b`; for every arc `u→u'` of `a` (loops included) all
/// arcs `(u, v) → (u', v')` are present.
pub fn wreath_digraph(a: &Digraph, b: &Digraph) -> Result<Digraph> {
    let (na, nb) = (a.order(), b.order());
    check_order(na * nb)?;
    let mut d = Digraph::empty(na * nb);
    for u in 0..na {
        for (v, w) in b.arcs() {
            d.add_arc(u * nb + v, u * nb + w);
        }
    }
    for (u, u2) in a.arcs() {
        for v in 0..nb {
            for w in 0..nb {
                d.add_arc(u * nb + v, u2 * nb + w);
            }
        }
    }
    Ok(d)
}
