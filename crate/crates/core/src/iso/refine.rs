use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;

/// A vertex coloring with colors numbered `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexColoring {
    colors: Vec<usize>,
    count: usize,
}

impl VertexColoring {
    pub fn uniform(order: usize) -> Self {
        VertexColoring {
            colors: vec![0; order],
            count: usize::from(order > 0),
        }
    }

    /// Renumbers arbitrary color values to `0..k`, preserving their order.
    pub fn new(colors: Vec<usize>) -> Self {
        let mut distinct = colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = colors
            .iter()
            .map(|c| distinct.binary_search(c).expect("present"))
            .collect();
        VertexColoring {
            colors,
            count: distinct.len(),
        }
    }

    pub fn order(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn color_count(&self) -> usize {
        self.count
    }

    pub fn is_discrete(&self) -> bool {
        self.count == self.colors.len()
    }

    /// Size of each color class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    /// Vertices of color `c`, ascending.
    pub fn cell(&self, c: usize) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    /// Gives `v` a new color of its own, larger than every existing color.
    pub fn individualize(&self, v: usize) -> Self {
        let mut colors = self.colors.clone();
        colors[v] = self.count;
        VertexColoring {
            colors,
            count: self.count + 1,
        }
    }
}

/// Per-vertex signature: current color, loop flag, then out- and
/// in-neighbour counts per color.
fn signatures(d: &Digraph, c: &VertexColoring) -> Vec<Vec<u32>> {
    let k = c.color_count();
    (0..d.order())
        .map(|v| {
            let mut sig = vec![0u32; 2 + 2 * k];
            sig[0] = c.color(v) as u32;
            sig[1] = d.has_loop(v) as u32;
            let (out, inn) = (d.out_mask(v), d.in_mask(v));
            for w in 0..d.order() {
                if out >> w & 1 == 1 {
                    sig[2 + c.color(w)] += 1;
                }
                if inn >> w & 1 == 1 {
                    sig[2 + k + c.color(w)] += 1;
                }
            }
            sig
        })
        .collect()
}

/// Refines several colorings in lockstep, naming new colors by their
/// signature across all graphs so colors stay comparable. Returns `None`
/// as soon as the signature multisets of the graphs differ.
pub(crate) fn refine_joint(graphs: &[&Digraph], colorings: &[VertexColoring]) -> Option<Vec<VertexColoring>> {
    let mut current: Vec<VertexColoring> = colorings.to_vec();
    loop {
        let sigs: Vec<Vec<Vec<u32>>> = graphs.iter().zip(&current).map(|(d, c)| signatures(d, c)).collect();
        let mut sorted: Vec<Vec<Vec<u32>>> = sigs.clone();
        for s in &mut sorted {
            s.sort_unstable();
        }
        if sorted.windows(2).any(|w| w[0] != w[1]) {
            return None;
        }
        let mut distinct = sorted.swap_remove(0);
        distinct.dedup();
        let before = current[0].color_count();
        current = sigs
            .iter()
            .map(|s| VertexColoring {
                colors: s.iter().map(|x| distinct.binary_search(x).expect("present")).collect(),
                count: distinct.len(),
            })
            .collect();
        if distinct.len() == before {
            return Some(current);
        }
    }
}

/// Iterated refinement by (color, loop, out-degree per color, in-degree per
/// color) until the number of colors is stable. Never merges colors.
pub fn refine(d: &Digraph, initial: &VertexColoring) -> VertexColoring {
    assert_eq!(d.order(), initial.order(), "coloring does not match the digraph");
    refine_joint(&[d], std::slice::from_ref(initial))
        .expect("a single coloring always agrees with itself")
        .pop()
        .expect("one coloring")
}
