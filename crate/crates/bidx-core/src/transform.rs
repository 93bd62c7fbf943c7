//! The edge-shift move and the iterated domination procedure.
//!
//! An edge shift across uv transfers every neighbor of v outside the
//! closed neighborhood of u over to u. It preserves n and m, raises
//! d_u by s and lowers d_v by s, and leaves all other degrees alone.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::IndexSpec;

/// One edge-shift: `shifted` are the vertices moved from v's neighborhood
/// to u's.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftMove {
    pub u: usize,
    pub v: usize,
    pub shifted: Vec<usize>,
    pub s: usize,
}

/// A replayable domination trace. `monotone` is false when some applied
/// move decreased the index value (possible when the hypotheses fail).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominationTrace {
    pub moves: Vec<TracedMove>,
    pub monotone: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TracedMove {
    #[serde(flatten)]
    pub shift: ShiftMove,
    pub delta: f64,
}

/// Applies the edge shift across the edge uv.
pub fn edge_shift(g: &Graph, u: usize, v: usize) -> Result<(Graph, ShiftMove)> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let private = g.neighbors(v) & !g.neighbors(u) & !(1u64 << u);
    if private == 0 {
        return Err(Error::NoPrivateNeighbor { u, v });
    }
    let mut shifted = Vec::new();
    let mut mask = private;
    while mask != 0 {
        shifted.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !shifted
                .iter()
                .any(|&w| (a, b) == (w.min(v), w.max(v)))
        })
        .collect();
    edges.extend(shifted.iter().map(|&w| (u.min(w), u.max(w))));
    let result = Graph::new(g.n(), &edges)?;
    debug_assert_eq!(result.m(), g.m());
    debug_assert!(result.is_connected());
    let s = shifted.len();
    Ok((result, ShiftMove { u, v, shifted, s }))
}

/// The index difference BID(G*) - BID(G) for a shift, computed from the
/// five-sum decomposition over the affected neighborhoods rather than by
/// re-evaluating either graph.
pub fn shift_delta(spec: &IndexSpec, g: &Graph, mv: &ShiftMove) -> Result<f64> {
    let (u, v, s) = (mv.u, mv.v, mv.s);
    let du = g.degree(u);
    let dv = g.degree(v);
    let psi = |a: usize, b: usize| spec.psi(a, b);
    let mut delta = 0.0;

    let shifted_mask = mv
        .shifted
        .iter()
        .fold(0u64, |m, &w| m | 1 << w);
    // Neighbors of u outside N(v), excluding v itself.
    let mut only_u = g.neighbors(u) & !g.neighbors(v) & !(1u64 << v);
    while only_u != 0 {
        let w = only_u.trailing_zeros() as usize;
        only_u &= only_u - 1;
        delta += psi(du + s, g.degree(w))? - psi(du, g.degree(w))?;
    }
    // Common neighbors see both endpoint degrees change.
    let mut common = g.neighbors(u) & g.neighbors(v);
    while common != 0 {
        let z = common.trailing_zeros() as usize;
        common &= common - 1;
        delta += psi(du + s, g.degree(z))? - psi(du, g.degree(z))?;
        delta += psi(dv - s, g.degree(z))? - psi(dv, g.degree(z))?;
    }
    // Shifted vertices trade their v-edge for a u-edge.
    let mut moved = shifted_mask;
    while moved != 0 {
        let w = moved.trailing_zeros() as usize;
        moved &= moved - 1;
        delta += psi(du + s, g.degree(w))? - psi(dv, g.degree(w))?;
    }
    // The uv edge itself.
    delta += psi(du + s, dv - s)? - psi(du, dv)?;
    Ok(delta)
}

/// Repeatedly shifts toward a current maximum-degree vertex until that
/// vertex dominates. Preserves n and m; each move strictly increases the
/// maximum degree, so at most (n - 1) - max_degree(g) moves are applied.
///
/// Target u is re-selected each round as the smallest-labeled vertex of
/// maximum degree; source v is the neighbor of u with the most private
/// neighbors, smallest label on ties.
pub fn dominate(g: &Graph, spec: &IndexSpec) -> Result<(Graph, DominationTrace)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut current = g.clone();
    let mut moves = Vec::new();
    let mut monotone = true;
    loop {
        let n = current.n();
        let dmax = current.max_degree();
        if dmax == n - 1 {
            break;
        }
        let u = (0..n)
            .find(|&v| current.degree(v) == dmax)
            .expect("nonempty graph");
        let mut best: Option<(usize, usize)> = None; // (s, v)
        let mut nbrs = current.neighbors(u);
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let s = (current.neighbors(v) & !current.neighbors(u) & !(1u64 << u)).count_ones()
                as usize;
            if s >= 1 && best.map(|(bs, _)| s > bs).unwrap_or(true) {
                best = Some((s, v));
            }
        }
        let (_, v) = best.expect("connected non-dominated graph has a shiftable pair");
        let (next, mv) = edge_shift(&current, u, v)?;
        let delta = shift_delta(spec, &current, &mv)?;
        if delta < -crate::conditions::SIGN_TOL {
            monotone = false;
        }
        moves.push(TracedMove { shift: mv, delta });
        current = next;
    }
    Ok((current, DominationTrace { moves, monotone }))
}

/// Test hook: replays a trace from `g`, returning the final graph.
pub fn replay(g: &Graph, trace: &DominationTrace) -> Result<Graph> {
    let mut current = g.clone();
    for tm in &trace.moves {
        let (next, mv) = edge_shift(&current, tm.shift.u, tm.shift.v)?;
        debug_assert_eq!(&mv, &tm.shift);
        current = next;
    }
    Ok(current)
}
