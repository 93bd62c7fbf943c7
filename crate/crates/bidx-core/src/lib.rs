//! Core algorithms for bond incident degree (BID) indices on small
//! connected graphs: index evaluation, canonical labeling, isomorph-free
//! enumeration, the degree-shift transformation, and reproduction of the
//! extremal characterizations for the tree through tetracyclic classes.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion
//! `bidx` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canon;
pub mod conditions;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod theorems;
pub mod transform;

pub use canon::{canonical_form, canonical_graph, CanonicalForm, CANON_MAX_N};
pub use conditions::{check_conditions, ConditionReport, Direction, Strictness};
pub use enumerate::{
    enumerate_dominating, extremal_search, Enumerator, ExtremalResult, DEFAULT_BOUND,
};
pub use error::{Error, Result};
pub use family::{make_family, FamilyId, FamilyTag};
pub use graph::{Graph, MAX_VERTICES};
pub use indices::{closed_form, evaluate_bid, IndexKind, IndexSpec, IndexValue, TIE_REL_TOL};
pub use theorems::{verify_theorem, SeriesKind, TheoremId, TheoremReport};
pub use transform::{dominate, edge_shift, shift_delta, DominationTrace, ShiftMove};
