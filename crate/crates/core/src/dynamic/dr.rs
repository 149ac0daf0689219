//! Underlying-graph-route dynamic maintenance.
//!
//! Every event first re-keys the changed hyperedge in the pair candidate
//! queues (the underlying graph update); the resulting edge-weight deltas
//! are sign-homogeneous and confined to the changed hyperedge's vertex
//! pairs, so the classic graph-level decrease/increase routines then run
//! over the underlying adjacency alone. Via-hyperedges are refreshed from
//! the candidate-queue minima whenever a parent link changes.

use std::collections::BTreeSet;

use crate::dynamic::{
    effective_weight, is_decrease_like, seed_argmin, touched_pairs, Color, ColorMap, EventTrace,
    ShortestPathMaintainer,
};
use crate::error::Result;
use crate::hypergraph::{ChangeEvent, EdgeId, Hypergraph, VertexId};
use crate::queue::MinQueue;
use crate::sssp::{dijkstra_underlying, SPState, TieBreak};
use crate::underlying::{PairKey, UnderlyingGraph};
use crate::weight::{Weight, INF};

pub struct DrDsp {
    st: SPState,
    graph: UnderlyingGraph,
    tie: TieBreak,
    colors: ColorMap,
    queue: MinQueue<VertexId>,
    color_queue: MinQueue<VertexId>,
    trace: EventTrace,
}

impl DrDsp {
    pub fn new(h: &Hypergraph, source: VertexId) -> Result<Self> {
        Self::with_tie_break(h, source, TieBreak::FirstWriter)
    }

    pub fn with_tie_break(h: &Hypergraph, source: VertexId, mut tie: TieBreak) -> Result<Self> {
        if source >= h.vertex_count() {
            return Err(crate::error::Error::BadSource(source));
        }
        let graph = UnderlyingGraph::build(h);
        let st = dijkstra_underlying(&graph, source, &mut tie);
        Ok(DrDsp {
            st,
            graph,
            tie,
            colors: ColorMap::new(h.vertex_count()),
            queue: MinQueue::new(),
            color_queue: MinQueue::new(),
            trace: EventTrace::default(),
        })
    }

    pub fn state(&self) -> &SPState {
        &self.st
    }

    pub fn graph(&self) -> &UnderlyingGraph {
        &self.graph
    }

    pub fn trace(&self) -> &EventTrace {
        &self.trace
    }

    pub fn apply(&mut self, h: &mut Hypergraph, event: ChangeEvent) -> Result<BTreeSet<VertexId>> {
        h.apply_change(&event)?;
        let edge = event.edge();
        let w = effective_weight(&event);
        if is_decrease_like(&event) {
            Ok(self.decrease(h, edge, w))
        } else {
            Ok(self.increase(h, edge, w))
        }
    }

    /// Weight decrease (or insertion); `h` already carries the new weight.
    pub fn decrease(&mut self, h: &Hypergraph, edge: EdgeId, w_new: Weight) -> BTreeSet<VertexId> {
        self.trace.reset();
        let deltas = self.update_graph(h, edge, w_new);
        debug_assert!(deltas.iter().all(|d| d.new < d.old));
        if deltas.is_empty() {
            // The changed hyperedge is shadowed on every pair; no edge of the
            // underlying graph moved, so no distance can move either.
            return BTreeSet::new();
        }

        let vertices = &h.edge(edge).expect("validated edge id").vertices;
        let x = seed_argmin(&self.st, vertices);
        self.trace.seed_argmin = Some(x);
        let through_x = self.st.dist[x] + w_new;
        for &v in vertices {
            self.trace.counters.scans += 1;
            if through_x < self.st.dist[v] {
                self.st.dist[v] = through_x;
                self.st.set_parent(v, Some((x, edge)));
                self.queue.set(v, through_x);
                self.trace.enqueued.insert(v);
                self.trace.counters.enqueues += 1;
            }
        }
        self.settle();
        self.trace.affected = self.trace.enqueued.clone();
        self.trace.affected.clone()
    }

    /// Weight increase (or deletion); `h` already carries the new weight.
    pub fn increase(&mut self, h: &Hypergraph, edge: EdgeId, w_new: Weight) -> BTreeSet<VertexId> {
        self.trace.reset();
        self.colors.reset();
        let deltas = self.update_graph(h, edge, w_new);
        debug_assert!(deltas.iter().all(|d| d.new > d.old));

        // Step 1 runs even when no pair weight moved: a vertex may ride the
        // changed hyperedge while an equal-weight candidate keeps the pair
        // minimum, in which case it turns pink onto the surviving candidate.
        let vertices = &h.edge(edge).expect("validated edge id").vertices;
        for &v in vertices {
            self.trace.counters.scans += 1;
            if self.st.via_edge[v] == Some(edge) {
                self.color_queue.set(v, self.st.dist[v]);
                self.trace.counters.enqueues += 1;
            }
        }

        // Step 2: coloring over the underlying adjacency.
        let mut reds: Vec<VertexId> = Vec::new();
        while let Some((z, dz)) = self.color_queue.pop() {
            self.trace.counters.dequeues += 1;
            self.trace.color_dequeues.push((z, dz));
            let mut witness: Option<(VertexId, Weight)> = None;
            for (q, w) in self.graph.neighbors(z) {
                self.trace.counters.scans += 1;
                if self.colors.get(q) != Color::Red && self.st.dist[q] + w == dz {
                    match witness {
                        None => {
                            witness = Some((q, w));
                            if matches!(self.tie, TieBreak::FirstWriter) {
                                break;
                            }
                        }
                        Some(_) => {
                            if self.tie.switch() {
                                witness = Some((q, w));
                            }
                        }
                    }
                }
            }
            match witness {
                Some((q, _)) => {
                    let eid = self.peek_edge(q, z);
                    self.colors.set(z, Color::Pink);
                    self.trace.pink.push(z);
                    self.st.set_parent(z, Some((q, eid)));
                }
                None => {
                    self.colors.set(z, Color::Red);
                    self.trace.red.push(z);
                    reds.push(z);
                    for i in 0..self.st.children[z].len() {
                        let c = self.st.children[z][i];
                        if self.colors.get(c) == Color::White && !self.color_queue.contains(c) {
                            self.color_queue.set(c, self.st.dist[c]);
                            self.trace.counters.enqueues += 1;
                        }
                    }
                }
            }
        }

        // Step 3.a: re-seed red vertices from their best non-red neighbor in
        // the underlying graph; ties by distance then vertex id.
        for &z in &reds {
            let mut best: Option<(Weight, VertexId)> = None;
            for (u, w) in self.graph.neighbors(z) {
                self.trace.counters.scans += 1;
                if self.colors.get(u) == Color::Red {
                    continue;
                }
                let val = self.st.dist[u] + w;
                if !val.is_finite() {
                    continue;
                }
                let cand = (val, u);
                match best {
                    None => best = Some(cand),
                    Some(b) => {
                        if cand.0 < b.0 {
                            best = Some(cand);
                        } else if cand.0 == b.0 {
                            if matches!(self.tie, TieBreak::FirstWriter) {
                                if cand.1 < b.1 {
                                    best = Some(cand);
                                }
                            } else if self.tie.switch() {
                                best = Some(cand);
                            }
                        }
                    }
                }
            }
            match best {
                Some((val, u)) => {
                    let eid = self.peek_edge(u, z);
                    self.st.dist[z] = val;
                    self.st.set_parent(z, Some((u, eid)));
                    self.queue.set(z, val);
                    self.trace.enqueued.insert(z);
                    self.trace.counters.enqueues += 1;
                }
                None => {
                    self.st.dist[z] = INF;
                    self.st.set_parent(z, None);
                }
            }
        }

        // Step 3.b.
        self.settle();

        let mut affected: BTreeSet<VertexId> = self.trace.pink.iter().copied().collect();
        affected.extend(self.trace.red.iter().copied());
        self.trace.affected = affected.clone();
        affected
    }

    fn update_graph(
        &mut self,
        h: &Hypergraph,
        edge: EdgeId,
        w_new: Weight,
    ) -> Vec<crate::underlying::PairDelta> {
        let size = h.edge(edge).expect("validated edge id").vertices.len();
        self.trace.counters.queue_updates += touched_pairs(size);
        let deltas = self.graph.update(h, edge, w_new);
        self.trace.graph_deltas = deltas.clone();
        deltas
    }

    /// Hyperedge currently lending its weight to the pair `(u, v)`.
    fn peek_edge(&self, u: VertexId, v: VertexId) -> EdgeId {
        self.graph
            .queue(PairKey::new(u, v))
            .and_then(|q| q.peek())
            .expect("adjacent pair has a nonempty candidate queue")
            .0
    }

    /// Dijkstra-style settling over the underlying adjacency.
    fn settle(&mut self) {
        while let Some((z, dz)) = self.queue.pop() {
            self.trace.counters.dequeues += 1;
            self.trace.settle_dequeues.push((z, dz));
            for (v, w) in self.graph.neighbors(z) {
                self.trace.counters.scans += 1;
                let nd = dz + w;
                if self.st.dist[v] > nd {
                    let eid = self.peek_edge(z, v);
                    self.st.dist[v] = nd;
                    self.st.set_parent(v, Some((z, eid)));
                    self.queue.set(v, nd);
                    self.trace.enqueued.insert(v);
                    self.trace.counters.enqueues += 1;
                } else if self.st.dist[v] == nd
                    && v != self.st.source
                    && w > 0.0
                    && self.tie.switch()
                {
                    let eid = self.peek_edge(z, v);
                    self.st.set_parent(v, Some((z, eid)));
                }
            }
        }
    }
}

impl ShortestPathMaintainer for DrDsp {
    fn apply(&mut self, h: &mut Hypergraph, event: ChangeEvent) -> Result<BTreeSet<VertexId>> {
        DrDsp::apply(self, h, event)
    }

    fn state(&self) -> &SPState {
        &self.st
    }

    fn trace(&self) -> &EventTrace {
        &self.trace
    }
}
