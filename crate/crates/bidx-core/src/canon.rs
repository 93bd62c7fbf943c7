//! Canonical labeling for small graphs.
//!
//! Equitable color refinement fixes an ordered partition; the search then
//! individualizes one vertex of the first non-singleton cell at a time,
//! re-refines, and takes the lexicographically smallest adjacency
//! bit-string over all discrete orderings reached. Vertices whose rows
//! agree everywhere (twins) are interchangeable, so only one per twin
//! class is branched on. Sound for any graph; sized for n <= 12.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted by the canonical-labeling search.
pub const CANON_MAX_N: usize = 12;

/// The graph6 encoding of the canonically relabeled graph.
///
/// Equal forms characterize isomorphism: two graphs share a `CanonicalForm`
/// iff they are isomorphic. Stable across runs and platforms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(pub String);

impl core::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(graph6::encode(&canonical_graph(g)?)))
}

/// Returns the canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::OrderAboveBound {
            n,
            bound: CANON_MAX_N,
        });
    }
    let mut search = Search {
        g,
        best_bits: u128::MAX,
        best_order: Vec::new(),
    };
    let cells = refine(g, alloc::vec![(0..n).collect::<Vec<_>>()]);
    search.descend(cells);
    Ok(g.relabel(&search.best_order))
}

struct Search<'a> {
    g: &'a Graph,
    best_bits: u128,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        if let Some(pos) = cells.iter().position(|c| c.len() > 1) {
            let mut tried: Vec<usize> = Vec::new();
            for &v in &cells[pos] {
                if tried.iter().any(|&u| twins(self.g, u, v)) {
                    continue;
                }
                tried.push(v);
                let mut split = Vec::with_capacity(cells.len() + 1);
                split.extend_from_slice(&cells[..pos]);
                split.push(alloc::vec![v]);
                split.push(cells[pos].iter().copied().filter(|&w| w != v).collect());
                split.extend_from_slice(&cells[pos + 1..]);
                self.descend(refine(self.g, split));
            }
        } else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let bits = adjacency_bits(self.g, &order);
            if bits < self.best_bits {
                self.best_bits = bits;
                self.best_order = order;
            }
        }
    }
}

/// Column-major upper-triangle bits of `g` under `order`, left-aligned in a
/// u128 so that numeric comparison is lexicographic comparison.
fn adjacency_bits(g: &Graph, order: &[usize]) -> u128 {
    let mut bits = 0u128;
    let mut k = 0u32;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits |= 1 << (127 - k);
            }
            k += 1;
        }
    }
    bits
}

/// True when swapping `u` and `v` is an automorphism.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let clear = !((1u64 << u) | (1u64 << v));
    g.neighbors(u) & clear == g.neighbors(v) & clear
}

/// Equitable refinement of an ordered partition. Each cell splits by the
/// vector of neighbor counts into every current cell; sub-cells are ordered
/// by that invariant, so the result does not depend on input labeling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = masks
                        .iter()
                        .map(|&m| (g.neighbors(v) & m).count_ones())
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let before = next.len();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if next.len() - before > 1 {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}
