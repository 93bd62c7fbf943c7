//! Isomorph-free exhaustive enumeration of small connected graphs and the
//! brute-force extremal search built on it.
//!
//! Connected (n, m)-graphs are generated by augmentation: add one edge to
//! a connected (n, m-1) parent, or attach a leaf to a connected
//! (n-1, m-1) parent. Every connected graph has a removable leaf or a
//! removable cycle edge, so the two rules are jointly complete. Duplicates
//! are rejected through the canonical form; streams are emitted in
//! ascending canonical-bytes order, so output is deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::conditions::Direction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{evaluate_bid, IndexKind, IndexSpec, IndexValue, TIE_REL_TOL};

/// Default order bound for full (n, m) sweeps.
pub const DEFAULT_BOUND: usize = 9;
/// Hard bound, inherited from the canonical-labeling search.
pub const MAX_BOUND: usize = crate::canon::CANON_MAX_N;

/// Cached isomorph-free enumerator.
pub struct Enumerator {
    bound: usize,
    cache: BTreeMap<(usize, usize), Vec<Graph>>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator::new(DEFAULT_BOUND)
    }
}

impl Enumerator {
    pub fn new(bound: usize) -> Enumerator {
        Enumerator {
            bound: bound.min(MAX_BOUND),
            cache: BTreeMap::new(),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// One canonically-labeled representative per isomorphism class of
    /// connected simple graphs with n vertices and m edges, in ascending
    /// canonical order. Infeasible (n, m) yields an empty slice.
    pub fn connected(&mut self, n: usize, m: usize) -> Result<&[Graph]> {
        if n < 1 || n > self.bound {
            return Err(Error::OrderAboveBound {
                n,
                bound: self.bound,
            });
        }
        self.fill(n, m);
        Ok(&self.cache[&(n, m)])
    }

    /// Read-only cache lookup for pre-warmed cells.
    pub fn cached(&self, n: usize, m: usize) -> Option<&[Graph]> {
        self.cache.get(&(n, m)).map(Vec::as_slice)
    }

    fn fill(&mut self, n: usize, m: usize) {
        if self.cache.contains_key(&(n, m)) {
            return;
        }
        let infeasible = m + 1 < n || m > n * (n - 1) / 2;
        if infeasible {
            self.cache.insert((n, m), Vec::new());
            return;
        }
        if n == 1 {
            self.cache
                .insert((n, m), alloc::vec![Graph::new(1, &[]).unwrap()]);
            return;
        }
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        let mut admit = |g: Graph| {
            let c = canonical_graph(&g).expect("order within bound");
            seen.entry(graph6::encode(&c)).or_insert(c);
        };
        // Edge augmentation of connected (n, m-1) parents.
        if m >= 1 && m - 1 >= n - 1 {
            self.fill(n, m - 1);
            for parent in &self.cache[&(n, m - 1)] {
                for u in 0..n {
                    for v in (u + 1)..n {
                        if !parent.has_edge(u, v) {
                            admit(parent.with_edge(u, v).expect("valid pair"));
                        }
                    }
                }
            }
        }
        // Leaf attachment to connected (n-1, m-1) parents.
        if m >= 1 {
            self.fill(n - 1, m - 1);
            for parent in &self.cache[&(n - 1, m - 1)] {
                for v in 0..n - 1 {
                    admit(parent.with_leaf(v).expect("order within bound"));
                }
            }
        }
        self.cache
            .insert((n, m), seen.into_values().collect());
    }
}

/// One representative per isomorphism class of graphs with exactly k edges
/// (isolated vertices disregarded), each placed on `width` vertices.
fn k_edge_classes(width: usize, k: usize) -> Result<Vec<Graph>> {
    if width > MAX_BOUND {
        return Err(Error::OrderAboveBound {
            n: width,
            bound: MAX_BOUND,
        });
    }
    let mut layer: BTreeMap<String, Graph> = BTreeMap::new();
    let empty = canonical_graph(&Graph::new(width.max(1), &[])?)?;
    layer.insert(graph6::encode(&empty), empty);
    for _ in 0..k {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for parent in layer.values() {
            for u in 0..width {
                for v in (u + 1)..width {
                    if !parent.has_edge(u, v) {
                        let child = canonical_graph(&parent.with_edge(u, v)?)?;
                        next.entry(graph6::encode(&child)).or_insert(child);
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer.into_values().collect())
}

/// Number of non-isolated vertices.
fn support(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) > 0).count()
}

/// One representative per isomorphism class of n-vertex graphs made of a
/// dominating vertex plus k remainder edges, ascending canonical order.
pub fn enumerate_dominating(n: usize, k: usize) -> Result<Vec<Graph>> {
    if n < 2 || n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    if k > (n - 1) * (n - 2) / 2 {
        return Ok(Vec::new());
    }
    let width = (n - 1).min(2 * k).max(1);
    let mut out: BTreeMap<String, Graph> = BTreeMap::new();
    for remainder in k_edge_classes(width, k)? {
        if support(&remainder) > n - 1 {
            continue;
        }
        // Compact the remainder onto vertices 1..: non-isolated first.
        let mut order: Vec<usize> = (0..remainder.n()).collect();
        order.sort_by_key(|&v| (remainder.degree(v) == 0, v));
        let mut label = alloc::vec![0usize; remainder.n()];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i + 1;
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        edges.extend(
            remainder
                .edges()
                .iter()
                .map(|&(u, v)| (label[u], label[v])),
        );
        let g = Graph::new(n, &edges)?;
        let key = if n <= MAX_BOUND {
            graph6::encode(&canonical_graph(&g)?)
        } else {
            // Above the canonical bound the remainder class is already
            // canonical, which identifies the dominated graph.
            graph6::encode(&g)
        };
        out.entry(key).or_insert(g);
    }
    Ok(out.into_values().collect())
}

/// Outcome of a brute-force extremal search over all connected
/// (n, m)-graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub m: usize,
    pub index: IndexKind,
    pub param: f64,
    pub direction: Direction,
    pub optimum: IndexValue,
    pub optimizers: Vec<CanonicalForm>,
    pub total_enumerated: usize,
}

/// Finds the optimum and the full optimizer set over the given classes.
/// Ties resolve exactly on the integer path and within relative 1e-9 on
/// the float path.
pub fn extremal_search_over(
    classes: &[Graph],
    n: usize,
    m: usize,
    spec: &IndexSpec,
    direction: Direction,
) -> Result<ExtremalResult> {
    if classes.is_empty() {
        return Err(Error::Infeasible { n, m });
    }
    let mut values = Vec::with_capacity(classes.len());
    for g in classes {
        values.push(evaluate_bid(spec, g)?);
    }
    let better = |a: &IndexValue, b: &IndexValue| match direction {
        Direction::Max => a.value > b.value,
        Direction::Min => a.value < b.value,
    };
    let mut best = values[0];
    for v in &values[1..] {
        if better(v, &best) {
            best = *v;
        }
    }
    let mut optimizers: BTreeSet<CanonicalForm> = BTreeSet::new();
    for (g, v) in classes.iter().zip(&values) {
        if v.ties(&best, TIE_REL_TOL) {
            optimizers.insert(canonical_form(g)?);
        }
    }
    Ok(ExtremalResult {
        n,
        m,
        index: spec.kind(),
        param: spec.param(),
        direction,
        optimum: best,
        optimizers: optimizers.into_iter().collect(),
        total_enumerated: classes.len(),
    })
}

/// Brute-force extremal search over all connected (n, m)-graphs.
pub fn extremal_search(
    en: &mut Enumerator,
    n: usize,
    m: usize,
    spec: &IndexSpec,
    direction: Direction,
) -> Result<ExtremalResult> {
    let classes: Vec<Graph> = en.connected(n, m)?.to_vec();
    extremal_search_over(&classes, n, m, spec, direction)
}
