//! Fully dynamic maintenance of single-source shortest hyperpaths.
//!
//! Two maintainers with the same contract: [`he::HeDsp`] works directly on
//! the hypergraph, [`dr::DrDsp`] maintains the underlying graph and runs the
//! graph-level routines on it. After every applied event both hold a state
//! equal to a from-scratch recomputation.
//!
//! Weight increases classify candidate vertices by color: white vertices
//! keep distance and parent, pink vertices keep their distance but need a
//! new parent or via-hyperedge, red vertices strictly increase in distance.

use std::collections::BTreeSet;

use crate::hypergraph::{ChangeEvent, Hypergraph, VertexId};
use crate::sssp::SPState;
use crate::underlying::PairDelta;
use crate::weight::Weight;

pub mod dr;
pub mod he;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    White,
    Pink,
    Red,
}

/// Per-vertex colors with O(1) reset between events.
#[derive(Clone, Debug)]
pub(crate) struct ColorMap {
    epoch: u64,
    slots: Vec<(u64, Color)>,
}

impl ColorMap {
    pub fn new(n: usize) -> Self {
        ColorMap { epoch: 1, slots: vec![(0, Color::White); n] }
    }

    pub fn reset(&mut self) {
        self.epoch += 1;
    }

    pub fn get(&self, v: VertexId) -> Color {
        let (ep, c) = self.slots[v];
        if ep == self.epoch {
            c
        } else {
            Color::White
        }
    }

    pub fn set(&mut self, v: VertexId, c: Color) {
        self.slots[v] = (self.epoch, c);
    }
}

/// Work tallies for one applied event.
#[derive(Clone, Copy, Debug, Default)]
pub struct EventCounters {
    /// Hyperedge-member visits (hyperedge route) or adjacency visits
    /// (underlying-graph route) while seeding, coloring and settling.
    pub scans: u64,
    /// Candidate-queue updates performed while maintaining the underlying
    /// graph; zero for the hyperedge route.
    pub queue_updates: u64,
    pub enqueues: u64,
    pub dequeues: u64,
}

/// Everything observable about the last applied event. Consumed by the
/// instrumentation tests, the counter CSVs and the benchmark harness.
#[derive(Clone, Debug, Default)]
pub struct EventTrace {
    /// The minimum-distance vertex of the changed hyperedge (decreases).
    pub seed_argmin: Option<VertexId>,
    /// Vertices that entered the settling queue.
    pub enqueued: BTreeSet<VertexId>,
    /// Settling-queue dequeues in order, with their priorities.
    pub settle_dequeues: Vec<(VertexId, Weight)>,
    /// Coloring-queue dequeues in order, with their priorities (increases).
    pub color_dequeues: Vec<(VertexId, Weight)>,
    pub pink: Vec<VertexId>,
    pub red: Vec<VertexId>,
    /// Vertices whose distance or parent link changed.
    pub affected: BTreeSet<VertexId>,
    /// Underlying-graph deltas of the event (dimension-reduced route only).
    pub graph_deltas: Vec<PairDelta>,
    pub counters: EventCounters,
}

impl EventTrace {
    pub(crate) fn reset(&mut self) {
        self.seed_argmin = None;
        self.enqueued.clear();
        self.settle_dequeues.clear();
        self.color_dequeues.clear();
        self.pink.clear();
        self.red.clear();
        self.affected.clear();
        self.graph_deltas.clear();
        self.counters = EventCounters::default();
    }

    /// Counter-report row: `event_id kind |delta| scans enqueues`.
    pub fn report_row(&self, event_id: usize, kind: &str) -> String {
        format!(
            "{} {} {} {} {}",
            event_id,
            kind,
            self.affected.len(),
            self.counters.scans,
            self.counters.enqueues
        )
    }
}

/// Common surface of the two maintainers, so drivers and benchmarks can be
/// generic over the algorithm.
pub trait ShortestPathMaintainer {
    /// Validate `event`, apply it to `h`, update the shortest-path state and
    /// return the affected vertices. `h` is untouched when validation fails.
    fn apply(
        &mut self,
        h: &mut Hypergraph,
        event: ChangeEvent,
    ) -> crate::error::Result<BTreeSet<VertexId>>;

    fn state(&self) -> &SPState;

    fn trace(&self) -> &EventTrace;
}

/// Vertex of the changed hyperedge with minimum distance; ties go to the
/// lowest id. This vertex is never affected by a weight decrease.
pub(crate) fn seed_argmin(st: &SPState, vertices: &[VertexId]) -> VertexId {
    let mut best = vertices[0];
    for &v in &vertices[1..] {
        if st.dist[v] < st.dist[best] {
            best = v;
        }
    }
    best
}

pub(crate) fn effective_weight(event: &ChangeEvent) -> Weight {
    match *event {
        ChangeEvent::Increase { weight, .. }
        | ChangeEvent::Decrease { weight, .. }
        | ChangeEvent::Insert { weight, .. } => weight,
        ChangeEvent::Delete { .. } => crate::weight::INF,
    }
}

pub(crate) fn is_decrease_like(event: &ChangeEvent) -> bool {
    matches!(
        event,
        ChangeEvent::Decrease { .. } | ChangeEvent::Insert { .. }
    )
}

pub(crate) fn touched_pairs(edge_size: usize) -> u64 {
    (edge_size * edge_size.saturating_sub(1) / 2) as u64
}
