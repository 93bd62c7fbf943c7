//! Named extremal families: a dominating vertex plus a small remainder graph.
//!
//! Every family is "vertex 0 adjacent to all others, plus the tag's
//! remainder edges among vertices 1..n-1". Isolated remainder vertices
//! become pendent star vertices. The remainder edge count k = 0..4 fixes
//! the cyclomatic class (tree through tetracyclic).
//!
//! Tag-to-remainder identifications pinned by closed-form index values:
//! B1 = P3, B2 = 2K2, G1 = 3K2, G2 = P3+K2, G3 = P4, G4 = K{1,3}, G5 = K3,
//! H4 = K{1,4}, H5 = paw, H8 = C4. The remaining tetracyclic tags are
//! assigned to the remaining 4-edge remainder graphs in ascending order of
//! their canonical form (on 8 vertices); see `tests` for the recomputation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Family name from the extremal characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    /// The star.
    S,
    /// The star plus one edge (the unique dominated unicyclic graph).
    SPlus,
    B1,
    B2,
    G1,
    G2,
    G3,
    G4,
    G5,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    H11,
}

/// A family tag together with its intended vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub n: usize,
}

impl FamilyId {
    pub fn new(tag: FamilyTag, n: usize) -> FamilyId {
        FamilyId { tag, n }
    }
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 20] = [
        FamilyTag::S,
        FamilyTag::SPlus,
        FamilyTag::B1,
        FamilyTag::B2,
        FamilyTag::G1,
        FamilyTag::G2,
        FamilyTag::G3,
        FamilyTag::G4,
        FamilyTag::G5,
        FamilyTag::H1,
        FamilyTag::H2,
        FamilyTag::H3,
        FamilyTag::H4,
        FamilyTag::H5,
        FamilyTag::H6,
        FamilyTag::H7,
        FamilyTag::H8,
        FamilyTag::H9,
        FamilyTag::H10,
        FamilyTag::H11,
    ];

    /// The remainder graph: number of non-isolated vertices and its edges.
    pub fn remainder(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            FamilyTag::S => (0, &[]),
            FamilyTag::SPlus => (2, &[(0, 1)]),
            // P3
            FamilyTag::B1 => (3, &[(0, 1), (1, 2)]),
            // 2K2
            FamilyTag::B2 => (4, &[(0, 1), (2, 3)]),
            // 3K2
            FamilyTag::G1 => (6, &[(0, 1), (2, 3), (4, 5)]),
            // P3 + K2
            FamilyTag::G2 => (5, &[(0, 1), (1, 2), (3, 4)]),
            // P4
            FamilyTag::G3 => (4, &[(0, 1), (1, 2), (2, 3)]),
            // K{1,3}
            FamilyTag::G4 => (4, &[(0, 1), (0, 2), (0, 3)]),
            // K3
            FamilyTag::G5 => (3, &[(0, 1), (0, 2), (1, 2)]),
            // K{1,4}
            FamilyTag::H4 => (5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
            // paw: triangle plus a pendent edge
            FamilyTag::H5 => (4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
            // C4
            FamilyTag::H8 => (4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
            // Remaining 4-edge remainders, in ascending canonical order.
            // chair: K{1,3} with one edge subdivided
            FamilyTag::H1 => (5, &[(0, 1), (0, 2), (0, 3), (3, 4)]),
            // K{1,3} + K2
            FamilyTag::H2 => (6, &[(0, 1), (0, 2), (0, 3), (4, 5)]),
            // P5
            FamilyTag::H3 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            // 2P3
            FamilyTag::H6 => (6, &[(0, 1), (1, 2), (3, 4), (4, 5)]),
            // P4 + K2
            FamilyTag::H7 => (6, &[(0, 1), (1, 2), (2, 3), (4, 5)]),
            // P3 + 2K2
            FamilyTag::H9 => (7, &[(0, 1), (1, 2), (3, 4), (5, 6)]),
            // K3 + K2
            FamilyTag::H10 => (5, &[(0, 1), (0, 2), (1, 2), (3, 4)]),
            // 4K2
            FamilyTag::H11 => (8, &[(0, 1), (2, 3), (4, 5), (6, 7)]),
        }
    }

    /// Remainder edge count, i.e. the cyclomatic class: 0 for the tree,
    /// 1 unicyclic, ... 4 tetracyclic.
    pub fn excess(self) -> usize {
        self.remainder().1.len()
    }

    /// Smallest admissible vertex count for this tag.
    pub fn min_n(self) -> usize {
        match self {
            FamilyTag::S => 2,
            FamilyTag::SPlus => 3,
            _ => self.remainder().0 + 1,
        }
    }
}

/// Builds the named family graph on `id.n` vertices, with vertex 0 as the
/// dominating vertex and the remainder occupying vertices 1 onwards.
pub fn make_family(id: FamilyId) -> Result<Graph> {
    let (p, rem_edges) = id.tag.remainder();
    let min = id.tag.min_n();
    if id.n < min {
        return Err(Error::FamilyTooSmall {
            tag: id.tag,
            min_n: min,
        });
    }
    debug_assert!(p < id.n);
    let mut edges: alloc::vec::Vec<(usize, usize)> = (1..id.n).map(|v| (0, v)).collect();
    edges.extend(rem_edges.iter().map(|&(u, v)| (u + 1, v + 1)));
    Graph::new(id.n, &edges)
}
