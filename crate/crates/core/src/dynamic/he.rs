//! Hyperedge-route dynamic maintenance.
//!
//! Works directly on the hypergraph: settling a vertex rescans all its
//! incident hyperedges. Decreases seed the settling queue from the changed
//! hyperedge; increases first classify candidates by color through the
//! relationship tree, then re-settle the red ones.

use std::collections::BTreeSet;

use crate::dynamic::{
    effective_weight, is_decrease_like, seed_argmin, Color, ColorMap, EventTrace,
    ShortestPathMaintainer,
};
use crate::error::Result;
use crate::hypergraph::{ChangeEvent, EdgeId, Hypergraph, VertexId};
use crate::queue::MinQueue;
use crate::sssp::{gallo_sssp_with, SPState, TieBreak};
use crate::weight::{Weight, INF};

pub struct HeDsp {
    st: SPState,
    tie: TieBreak,
    colors: ColorMap,
    /// Settling queue (Dijkstra order).
    queue: MinQueue<VertexId>,
    /// Coloring queue for weight increases.
    color_queue: MinQueue<VertexId>,
    trace: EventTrace,
}

impl HeDsp {
    pub fn new(h: &Hypergraph, source: VertexId) -> Result<Self> {
        Self::with_tie_break(h, source, TieBreak::FirstWriter)
    }

    pub fn with_tie_break(h: &Hypergraph, source: VertexId, mut tie: TieBreak) -> Result<Self> {
        let st = gallo_sssp_with(h, source, &mut tie)?;
        Ok(HeDsp {
            st,
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

    pub fn trace(&self) -> &EventTrace {
        &self.trace
    }

    /// Validate and apply one event: the hypergraph is updated first, then
    /// the state. Insertions run as decreases from `INF`, deletions as
    /// increases to `INF`.
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

    /// Weight decrease (or insertion). `h` must already carry the new
    /// weight, strictly below the old one.
    pub fn decrease(&mut self, h: &Hypergraph, edge: EdgeId, w_new: Weight) -> BTreeSet<VertexId> {
        self.trace.reset();
        let vertices = &h.edge(edge).expect("validated edge id").vertices;
        let x = seed_argmin(&self.st, vertices);
        self.trace.seed_argmin = Some(x);
        let through_x = self.st.dist[x] + w_new; // INF stays INF
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
        self.settle(h);
        self.trace.affected = self.trace.enqueued.clone();
        self.trace.affected.clone()
    }

    /// Weight increase (or deletion). `h` must already carry the new weight,
    /// strictly above the old one (`INF` for deletion).
    pub fn increase(&mut self, h: &Hypergraph, edge: EdgeId, _w_new: Weight) -> BTreeSet<VertexId> {
        self.trace.reset();
        self.colors.reset();
        let vertices = &h.edge(edge).expect("validated edge id").vertices;

        // Step 1: only vertices whose own shortest hyperpath uses the edge
        // are candidates.
        for &v in vertices {
            self.trace.counters.scans += 1;
            if self.st.via_edge[v] == Some(edge) {
                self.color_queue.set(v, self.st.dist[v]);
                self.trace.counters.enqueues += 1;
            }
        }

        // Step 2: color candidates in nondecreasing distance order. A vertex
        // with an alternative link at its old distance through a currently
        // non-red vertex is pink and rewires to that witness; otherwise it is
        // red and its children become candidates.
        let mut reds: Vec<VertexId> = Vec::new();
        while let Some((z, dz)) = self.color_queue.pop() {
            self.trace.counters.dequeues += 1;
            self.trace.color_dequeues.push((z, dz));
            // Witness choice is canonical: the lowest qualifying vertex,
            // then the lowest hyperedge id. Any witness edge carries the
            // pair's minimum weight, so this matches the candidate-queue
            // peek of the dimension-reduced route.
            let mut witness: Option<(VertexId, EdgeId)> = None;
            for &eid in h.incident(z) {
                let e = h.edge(eid).expect("incidence holds valid ids");
                for &q in &e.vertices {
                    self.trace.counters.scans += 1;
                    if q != z
                        && self.colors.get(q) != Color::Red
                        && self.st.dist[q] + e.weight == dz
                    {
                        match witness {
                            None => witness = Some((q, eid)),
                            Some(w) => {
                                if matches!(self.tie, TieBreak::FirstWriter) {
                                    if (q, eid) < w {
                                        witness = Some((q, eid));
                                    }
                                } else if self.tie.switch() {
                                    witness = Some((q, eid));
                                }
                            }
                        }
                    }
                }
            }
            match witness {
                Some((q, eid)) => {
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

        // Step 3.a: re-seed each red vertex from its best non-red neighbor;
        // ties by distance, then vertex id, then hyperedge id. Reds without a
        // finite non-red link fall to INF and are only re-settled if a later
        // relaxation reaches them.
        for &z in &reds {
            let mut best: Option<(Weight, VertexId, EdgeId)> = None;
            for &eid in h.incident(z) {
                let e = h.edge(eid).expect("incidence holds valid ids");
                for &u in &e.vertices {
                    self.trace.counters.scans += 1;
                    if u == z || self.colors.get(u) == Color::Red {
                        continue;
                    }
                    let val = self.st.dist[u] + e.weight;
                    if !val.is_finite() {
                        continue;
                    }
                    let cand = (val, u, eid);
                    match best {
                        None => best = Some(cand),
                        Some(b) => {
                            if cand.0 < b.0 {
                                best = Some(cand);
                            } else if cand.0 == b.0 {
                                if matches!(self.tie, TieBreak::FirstWriter) {
                                    if (cand.1, cand.2) < (b.1, b.2) {
                                        best = Some(cand);
                                    }
                                } else if self.tie.switch() {
                                    best = Some(cand);
                                }
                            }
                        }
                    }
                }
            }
            match best {
                Some((val, u, eid)) => {
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

        // Step 3.b: settle the red frontier.
        self.settle(h);

        let mut affected: BTreeSet<VertexId> = self.trace.pink.iter().copied().collect();
        affected.extend(self.trace.red.iter().copied());
        self.trace.affected = affected.clone();
        affected
    }

    /// Dijkstra-style settling: each dequeued vertex rescans its incident
    /// hyperedges and relaxes their members.
    fn settle(&mut self, h: &Hypergraph) {
        while let Some((z, dz)) = self.queue.pop() {
            self.trace.counters.dequeues += 1;
            self.trace.settle_dequeues.push((z, dz));
            for &eid in h.incident(z) {
                let e = h.edge(eid).expect("incidence holds valid ids");
                let nd = dz + e.weight;
                for &u in &e.vertices {
                    self.trace.counters.scans += 1;
                    if self.st.dist[u] > nd {
                        self.st.dist[u] = nd;
                        self.st.set_parent(u, Some((z, eid)));
                        self.queue.set(u, nd);
                        self.trace.enqueued.insert(u);
                        self.trace.counters.enqueues += 1;
                    } else if self.st.dist[u] == nd && u != self.st.source {
                        if e.weight > 0.0 && self.tie.switch() {
                            self.st.set_parent(u, Some((z, eid)));
                        } else if self.st.parent[u] == Some(z)
                            && self.st.via_edge[u].is_some_and(|c| eid < c)
                        {
                            // Canonicalize equal-weight via-edges onto the
                            // lowest id, in step with the candidate-queue
                            // minima of the dimension-reduced route.
                            self.st.via_edge[u] = Some(eid);
                        }
                    }
                }
            }
        }
    }
}

impl ShortestPathMaintainer for HeDsp {
    fn apply(&mut self, h: &mut Hypergraph, event: ChangeEvent) -> Result<BTreeSet<VertexId>> {
        HeDsp::apply(self, h, event)
    }

    fn state(&self) -> &SPState {
        &self.st
    }

    fn trace(&self) -> &EventTrace {
        &self.trace
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::sample9;
    use crate::oracle;
    use crate::weight::INF;

    fn fresh(h: &Hypergraph) -> HeDsp {
        HeDsp::new(h, 0).unwrap()
    }

    fn assert_matches_recompute(h: &Hypergraph, ds: &HeDsp) {
        let fresh = oracle::recompute(h, ds.state().source).unwrap();
        assert_eq!(ds.state().dist, fresh.dist);
        assert!(oracle::certify(h, ds.state()).is_empty());
    }

    #[test]
    fn decrease_updates_only_the_far_side() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        let affected = ds
            .apply(&mut h, ChangeEvent::Decrease { edge: 2, weight: 0.4 })
            .unwrap();
        assert_eq!(ds.state().dist[6], 1.4);
        assert_eq!(ds.state().dist[7], 1.4);
        assert_eq!(ds.state().dist[8], 1.4);
        assert_eq!(ds.state().dist[4], 2.0); // via e3 it would be 1.4 + 1
        assert_eq!(affected, BTreeSet::from([6, 7, 8]));
        assert_matches_recompute(&h, &ds);
    }

    #[test]
    fn decrease_near_the_source_leaves_closer_vertices_alone() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        let affected = ds
            .apply(&mut h, ChangeEvent::Decrease { edge: 1, weight: 0.1 })
            .unwrap();
        assert_eq!(ds.state().dist[3], 1.1);
        assert_eq!(ds.state().dist[4], 1.1);
        assert_eq!(ds.state().dist[1], 1.0);
        assert_eq!(ds.state().dist[2], 1.0);
        assert_eq!(affected, BTreeSet::from([3, 4]));
        assert_matches_recompute(&h, &ds);
    }

    #[test]
    fn decrease_in_an_unreachable_component_is_a_no_op() {
        let mut h = Hypergraph::new(5, vec![(vec![0, 1], 1.0), (vec![2, 3, 4], 4.0)]).unwrap();
        let mut ds = fresh(&h);
        let affected = ds
            .apply(&mut h, ChangeEvent::Decrease { edge: 1, weight: 2.0 })
            .unwrap();
        assert!(affected.is_empty());
        assert_eq!(ds.state().dist[2], INF);
        assert_matches_recompute(&h, &ds);
    }

    #[test]
    fn increase_recolors_the_whole_reachable_set() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        let affected = ds
            .apply(&mut h, ChangeEvent::Increase { edge: 0, weight: 5.0 })
            .unwrap();
        assert_eq!(ds.state().dist, vec![0.0, 5.0, 5.0, 6.0, 6.0, 5.0, 6.0, 6.0, 6.0]);
        assert_eq!(affected, (1..9).collect::<BTreeSet<_>>());
        assert_eq!(ds.trace().red.len(), 8);
        assert!(ds.trace().pink.is_empty());
        assert_matches_recompute(&h, &ds);
    }

    #[test]
    fn increase_off_the_shortest_paths_is_a_no_op() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        // No vertex uses e3 in the initial tree.
        assert!(ds.state().via_edge.iter().all(|&e| e != Some(3)));
        let affected = ds
            .apply(&mut h, ChangeEvent::Increase { edge: 3, weight: 9.0 })
            .unwrap();
        assert!(affected.is_empty());
        assert!(ds.trace().color_dequeues.is_empty());
        assert_matches_recompute(&h, &ds);
    }

    #[test]
    fn increase_with_detour_splits_red_distances() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        let affected = ds
            .apply(&mut h, ChangeEvent::Increase { edge: 1, weight: 3.0 })
            .unwrap();
        // Vertex 3 can only fall back on e1 at the new weight; vertex 4
        // detours through e3.
        assert_eq!(ds.state().dist[3], 4.0);
        assert_eq!(ds.state().dist[4], 3.0);
        assert_eq!(affected, BTreeSet::from([3, 4]));
        assert_matches_recompute(&h, &ds);
    }

    #[test]
    fn delete_and_reinsert_round_trip() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        let baseline = ds.state().dist.clone();

        let affected = ds.apply(&mut h, ChangeEvent::Delete { edge: 2 }).unwrap();
        assert_eq!(ds.state().dist[6], INF); // vertex 6 only sat in e2
        assert_eq!(ds.state().dist[7], 3.0);
        assert_eq!(ds.state().dist[8], 3.0);
        assert_eq!(affected, BTreeSet::from([6, 7, 8]));
        assert_eq!(ds.state().parent[6], None);
        assert_matches_recompute(&h, &ds);

        let affected = ds
            .apply(&mut h, ChangeEvent::Insert { edge: 2, weight: 1.0 })
            .unwrap();
        assert_eq!(ds.state().dist, baseline);
        assert_eq!(affected, BTreeSet::from([6, 7, 8]));
        assert_matches_recompute(&h, &ds);
    }

    #[test]
    fn counter_report_row_format() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        ds.apply(&mut h, ChangeEvent::Decrease { edge: 2, weight: 0.4 }).unwrap();
        let row = ds.trace().report_row(17, "dec");
        let fields: Vec<&str> = row.split(' ').collect();
        assert_eq!(fields[0], "17");
        assert_eq!(fields[1], "dec");
        assert_eq!(fields[2], "3"); // three affected vertices
        assert_eq!(fields.len(), 5);
    }

    #[test]
    fn invalid_events_leave_everything_untouched() {
        let mut h = sample9();
        let mut ds = fresh(&h);
        let before = ds.state().dist.clone();
        assert!(ds
            .apply(&mut h, ChangeEvent::Decrease { edge: 0, weight: 1.0 })
            .is_err());
        assert_eq!(h.edge(0).unwrap().weight, 1.0);
        assert_eq!(ds.state().dist, before);
    }
}
