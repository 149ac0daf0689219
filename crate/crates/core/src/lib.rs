//! Shortest hyperpaths in weighted undirected hypergraphs, kept current
//! under fully dynamic changes.
//!
//! A hyperpath is a sequence of pairwise-intersecting hyperedges; its weight
//! is the sum of member weights. This crate solves the single-source
//! shortest-hyperpath problem two ways and maintains the answer through
//! weight increases, weight decreases, hyperedge insertions and deletions:
//!
//! * [`sssp::gallo_sssp`] / [`dynamic::he::HeDsp`] work directly on the
//!   hypergraph, rescanning incident hyperedges as vertices settle;
//! * [`sssp::dr_sp`] / [`dynamic::dr::DrDsp`] reduce to the *underlying
//!   graph* — one weighted edge per co-occurring vertex pair, weighted by
//!   the cheapest hyperedge containing the pair — and run graph-level
//!   routines there.
//!
//! Both produce identical distances; which one is faster depends on whether
//! changes tend to hit the current shortest paths. The [`oracle`] module
//! provides exhaustive enumeration and state certification so every claim
//! above is checkable, [`geometric`], [`changes`] and [`email`] generate
//! experiment inputs, and [`centrality`] ranks vertices by closeness over
//! shortest hyperpaths.

pub mod centrality;
pub mod changes;
pub mod dynamic;
pub mod email;
pub mod error;
pub mod format;
pub mod geometric;
pub mod hypergraph;
pub mod oracle;
pub mod simplicial;
pub mod sssp;
pub mod underlying;

mod queue;
mod weight;

pub use dynamic::{dr::DrDsp, he::HeDsp, Color, EventCounters, EventTrace, ShortestPathMaintainer};
pub use error::{Error, Result};
pub use hypergraph::{ChangeEvent, EdgeId, Hyperedge, Hypergraph, HypergraphBuilder, Hyperpath, VertexId};
pub use simplicial::{build_underlying_simplicial, Facet, SimplicialBuild};
pub use sssp::{dr_sp, extract_hyperpath, gallo_sssp, SPState, TieBreak};
pub use underlying::{CandidateQueue, PairDelta, PairKey, UnderlyingGraph};
pub use weight::{Weight, INF};

/// Shared test instance: nine vertices, four overlapping unit-weight
/// hyperedges. Unique shortest hyperpaths from vertex 0 reach the whole
/// graph in at most two hops.
#[cfg(test)]
pub(crate) mod fixtures {
    use crate::hypergraph::Hypergraph;

    pub fn sample9() -> Hypergraph {
        Hypergraph::new(
            9,
            vec![
                (vec![0, 1, 2, 5], 1.0),
                (vec![1, 2, 3, 4], 1.0),
                (vec![5, 6, 7, 8], 1.0),
                (vec![4, 7, 8], 1.0),
            ],
        )
        .unwrap()
    }
}
