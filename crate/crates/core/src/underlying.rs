//! The underlying graph of a hypergraph.
//!
//! Two vertices are adjacent iff some alive hyperedge contains both; the
//! edge weight is the minimum weight over those hyperedges. Each vertex pair
//! owns a candidate queue holding exactly the alive hyperedges that contain
//! the pair, so a single hyperedge change updates the affected pair weights
//! without rescanning the hypergraph.
//!
//! Pair queues are created on first co-occurrence and dropped when they
//! empty, keeping memory proportional to the total number of co-occurrences
//! rather than to the square of the vertex count.

use std::collections::BTreeMap;

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::weight::{Weight, INF};

/// Canonicalized unordered vertex pair with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairKey {
    pub a: VertexId,
    pub b: VertexId,
}

impl PairKey {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        debug_assert_ne!(u, v);
        if u < v {
            PairKey { a: u, b: v }
        } else {
            PairKey { a: v, b: u }
        }
    }
}

/// Candidate hyperedges for one vertex pair.
///
/// The contract is only that `peek` returns the true minimum (ties toward the
/// smaller id). The entry list is small in practice, so updates and peeks are
/// linear scans rather than heap operations.
#[derive(Clone, Debug, Default)]
pub struct CandidateQueue {
    entries: Vec<(EdgeId, Weight)>,
}

impl CandidateQueue {
    fn set(&mut self, edge: EdgeId, weight: Weight) {
        match self.entries.iter_mut().find(|(e, _)| *e == edge) {
            Some(slot) => slot.1 = weight,
            None => self.entries.push((edge, weight)),
        }
    }

    fn remove(&mut self, edge: EdgeId) {
        self.entries.retain(|&(e, _)| e != edge);
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn contains(&self, edge: EdgeId) -> bool {
        self.entries.iter().any(|&(e, _)| e == edge)
    }

    /// Minimum-weight candidate, ties broken toward the lower hyperedge id.
    pub fn peek(&self) -> Option<(EdgeId, Weight)> {
        self.entries
            .iter()
            .copied()
            .min_by(|&(ea, wa), &(eb, wb)| wa.total_cmp(&wb).then(ea.cmp(&eb)))
    }

    /// Candidates sorted by id, for tests and dumps.
    pub fn candidates(&self) -> Vec<(EdgeId, Weight)> {
        let mut v = self.entries.clone();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// One pair weight changed by a hyperedge update. Absent edges are reported
/// with weight [`INF`], so insertions show up as decreases from `INF` and
/// deletions of a pair's last candidate as increases to `INF`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairDelta {
    pub pair: PairKey,
    pub old: Weight,
    pub new: Weight,
}

#[derive(Clone, Debug)]
pub struct UnderlyingGraph {
    adjacency: Vec<BTreeMap<VertexId, Weight>>,
    queues: BTreeMap<PairKey, CandidateQueue>,
}

impl UnderlyingGraph {
    /// Build from scratch by scanning every pair inside every alive
    /// hyperedge.
    pub fn build(h: &Hypergraph) -> Self {
        let mut g = UnderlyingGraph {
            adjacency: vec![BTreeMap::new(); h.vertex_count()],
            queues: BTreeMap::new(),
        };
        for e in h.alive_edges() {
            for (i, &u) in e.vertices.iter().enumerate() {
                for &v in &e.vertices[i + 1..] {
                    g.queues
                        .entry(PairKey::new(u, v))
                        .or_default()
                        .set(e.id, e.weight);
                }
            }
        }
        for (&pair, q) in &g.queues {
            let (_, w) = q.peek().expect("freshly built queue is nonempty");
            g.adjacency[pair.a].insert(pair.b, w);
            g.adjacency[pair.b].insert(pair.a, w);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of pairs currently connected.
    pub fn edge_count(&self) -> usize {
        self.queues.len()
    }

    /// Current weight of the pair, [`INF`] if not adjacent.
    pub fn weight(&self, u: VertexId, v: VertexId) -> Weight {
        self.adjacency[u].get(&v).copied().unwrap_or(INF)
    }

    /// Neighbors of `v` with current edge weights, in vertex order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Weight)> + '_ {
        self.adjacency[v].iter().map(|(&u, &w)| (u, w))
    }

    pub fn queue(&self, pair: PairKey) -> Option<&CandidateQueue> {
        self.queues.get(&pair)
    }

    /// Re-key hyperedge `edge` at `w_new` in every pair queue it spans and
    /// refresh the affected adjacency entries. `w_new == INF` removes the
    /// hyperedge from the queues (deletion); a finite `w_new` inserts or
    /// updates it. The hypergraph must already reflect the change.
    ///
    /// Returns one delta per pair whose minimum actually moved.
    pub fn update(&mut self, h: &Hypergraph, edge: EdgeId, w_new: Weight) -> Vec<PairDelta> {
        let vertices = &h
            .edge(edge)
            .expect("update target must exist in the hypergraph")
            .vertices;
        let mut deltas = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                let pair = PairKey::new(u, v);
                let q = self.queues.entry(pair).or_default();
                let old = q.peek().map_or(INF, |(_, w)| w);
                if w_new.is_finite() {
                    q.set(edge, w_new);
                } else {
                    q.remove(edge);
                }
                let new = q.peek().map_or(INF, |(_, w)| w);
                if q.is_empty() {
                    self.queues.remove(&pair);
                }
                if new != old {
                    deltas.push(PairDelta { pair, old, new });
                    if new.is_finite() {
                        self.adjacency[pair.a].insert(pair.b, new);
                        self.adjacency[pair.b].insert(pair.a, new);
                    } else {
                        self.adjacency[pair.a].remove(&pair.b);
                        self.adjacency[pair.b].remove(&pair.a);
                    }
                }
            }
        }
        deltas
    }

    /// Structural equality ignoring candidate-entry order; used to compare
    /// the incrementally maintained graph against a fresh rebuild.
    pub fn same_as(&self, other: &UnderlyingGraph) -> bool {
        self.adjacency == other.adjacency
            && self.queues.len() == other.queues.len()
            && self
                .queues
                .iter()
                .zip(other.queues.iter())
                .all(|((pa, qa), (pb, qb))| pa == pb && qa.candidates() == qb.candidates())
    }

    /// Debug dump: one line per edge, `u v weight queue_degree`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (pair, q) in &self.queues {
            let (_, w) = q.peek().expect("stored queues are nonempty");
            out.push_str(&format!("{} {} {} {}\n", pair.a, pair.b, w, q.len()));
        }
        out
    }

    pub(crate) fn from_pair_weights(
        n: usize,
        pairs: impl IntoIterator<Item = (PairKey, EdgeId, Weight)>,
    ) -> Self {
        let mut g = UnderlyingGraph {
            adjacency: vec![BTreeMap::new(); n],
            queues: BTreeMap::new(),
        };
        for (pair, edge, w) in pairs {
            g.queues.entry(pair).or_default().set(edge, w);
            g.adjacency[pair.a].insert(pair.b, w);
            g.adjacency[pair.b].insert(pair.a, w);
        }
        g
    }
}
