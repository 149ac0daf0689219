//! Static single-source shortest-hyperpath solvers.
//!
//! Two routes to the same distances: hyperedge-scanning Dijkstra over the
//! hypergraph itself, and ordinary Dijkstra over the underlying graph. Both
//! fill an [`SPState`], which records for each vertex its distance, its
//! parent in the relationship tree and the hyperedge linking it to that
//! parent.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, Hyperpath, VertexId};
use crate::queue::MinQueue;
use crate::underlying::{PairKey, UnderlyingGraph};
use crate::weight::{Weight, INF};

/// Single-source shortest-path state.
///
/// Shortest hyperpaths from one source do not generally form a tree, because
/// adjacent hyperedges may overlap in more than one vertex; the parent
/// assignment below picks one valid *relationship tree*. Invariants for a
/// correct state:
///
/// * `dist[source] == 0`, `parent[source] == via_edge[source] == None`;
/// * every reachable `v != source` has a parent `p` and a hyperedge `e`
///   containing both, with `dist[v] == dist[p] + w(e)`;
/// * unreachable vertices carry `INF` and no links;
/// * `children` is the exact inverse of `parent`.
#[derive(Clone, Debug)]
pub struct SPState {
    pub source: VertexId,
    pub dist: Vec<Weight>,
    pub parent: Vec<Option<VertexId>>,
    pub via_edge: Vec<Option<EdgeId>>,
    pub children: Vec<Vec<VertexId>>,
}

impl SPState {
    pub fn new(n: usize, source: VertexId) -> Self {
        let mut dist = vec![INF; n];
        dist[source] = 0.0;
        SPState {
            source,
            dist,
            parent: vec![None; n],
            via_edge: vec![None; n],
            children: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.dist[v].is_finite()
    }

    /// Rewire `v` to a new parent link, keeping the children lists in sync.
    pub fn set_parent(&mut self, v: VertexId, link: Option<(VertexId, EdgeId)>) {
        if let Some(old) = self.parent[v] {
            self.children[old].retain(|&c| c != v);
        }
        match link {
            Some((p, e)) => {
                self.parent[v] = Some(p);
                self.via_edge[v] = Some(e);
                self.children[p].push(v);
            }
            None => {
                self.parent[v] = None;
                self.via_edge[v] = None;
            }
        }
    }
}

/// Tie-breaking policy for choices that do not affect distances: which
/// relationship tree comes out when several are valid.
///
/// `FirstWriter` keeps the incumbent parent on equal-distance relaxations and
/// takes the first minimal candidate in argmin scans, which makes every run
/// reproducible. `Seeded` flips seeded coins at those same points; distances
/// must come out identical for every seed, and tests assert exactly that.
#[derive(Clone, Debug)]
pub enum TieBreak {
    FirstWriter,
    Seeded(ChaCha8Rng),
}

impl Default for TieBreak {
    fn default() -> Self {
        TieBreak::FirstWriter
    }
}

impl TieBreak {
    pub fn seeded(seed: u64) -> Self {
        TieBreak::Seeded(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Whether to switch away from the incumbent on a tie.
    pub(crate) fn switch(&mut self) -> bool {
        match self {
            TieBreak::FirstWriter => false,
            TieBreak::Seeded(rng) => rng.random_bool(0.5),
        }
    }
}

fn check_source(h: &Hypergraph, s: VertexId) -> Result<()> {
    if s < h.vertex_count() {
        Ok(())
    } else {
        Err(Error::BadSource(s))
    }
}

/// Hyperedge-scanning Dijkstra: settling a vertex `z` relaxes every member
/// of every alive hyperedge containing `z`.
pub fn gallo_sssp(h: &Hypergraph, s: VertexId) -> Result<SPState> {
    gallo_sssp_with(h, s, &mut TieBreak::FirstWriter)
}

pub fn gallo_sssp_with(h: &Hypergraph, s: VertexId, tie: &mut TieBreak) -> Result<SPState> {
    check_source(h, s)?;
    let mut st = SPState::new(h.vertex_count(), s);
    let mut queue: MinQueue<VertexId> = MinQueue::new();
    queue.set(s, 0.0);
    while let Some((z, dz)) = queue.pop() {
        for &eid in h.incident(z) {
            let e = h.edge(eid).expect("incidence holds valid ids");
            let nd = dz + e.weight;
            for &u in &e.vertices {
                if st.dist[u] > nd {
                    st.dist[u] = nd;
                    st.set_parent(u, Some((z, eid)));
                    queue.set(u, nd);
                } else if st.dist[u] == nd && u != s {
                    if e.weight > 0.0 && tie.switch() {
                        st.set_parent(u, Some((z, eid)));
                    } else if st.parent[u] == Some(z) && st.via_edge[u].is_some_and(|c| eid < c) {
                        // Same parent, equal weight: canonicalize onto the
                        // lowest hyperedge id, matching the candidate-queue
                        // minima of the dimension-reduced route.
                        st.via_edge[u] = Some(eid);
                    }
                }
            }
        }
    }
    Ok(st)
}

/// Dimension-reduced solver: Dijkstra over the underlying graph, with the
/// via-hyperedge of each hop read off the pair's candidate queue.
pub fn dr_sp(h: &Hypergraph, s: VertexId) -> Result<SPState> {
    dr_sp_with(h, s, &mut TieBreak::FirstWriter)
}

pub fn dr_sp_with(h: &Hypergraph, s: VertexId, tie: &mut TieBreak) -> Result<SPState> {
    check_source(h, s)?;
    let g = UnderlyingGraph::build(h);
    Ok(dijkstra_underlying(&g, s, tie))
}

pub(crate) fn dijkstra_underlying(
    g: &UnderlyingGraph,
    s: VertexId,
    tie: &mut TieBreak,
) -> SPState {
    let mut st = SPState::new(g.vertex_count(), s);
    let mut queue: MinQueue<VertexId> = MinQueue::new();
    queue.set(s, 0.0);
    while let Some((z, dz)) = queue.pop() {
        for (v, w) in g.neighbors(z) {
            let nd = dz + w;
            if st.dist[v] > nd {
                let (eid, _) = g
                    .queue(PairKey::new(z, v))
                    .and_then(|q| q.peek())
                    .expect("adjacency implies a nonempty queue");
                st.dist[v] = nd;
                st.set_parent(v, Some((z, eid)));
                queue.set(v, nd);
            } else if st.dist[v] == nd && v != s && w > 0.0 && tie.switch() {
                let (eid, _) = g
                    .queue(PairKey::new(z, v))
                    .and_then(|q| q.peek())
                    .expect("adjacency implies a nonempty queue");
                st.set_parent(v, Some((z, eid)));
            }
        }
    }
    st
}

/// Read the hyperpath from the source to `v` out of a solved state.
/// Consecutive duplicate hyperedges collapse: siblings reached through one
/// hyperedge contribute it once.
pub fn extract_hyperpath(st: &SPState, v: VertexId) -> Result<Hyperpath> {
    if v >= st.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v, n: st.vertex_count() });
    }
    if !st.is_reachable(v) {
        return Err(Error::Unreachable(v));
    }
    let mut rev = Vec::new();
    let mut cur = v;
    while let Some(p) = st.parent[cur] {
        let e = st.via_edge[cur].expect("parented vertex has a via edge");
        if rev.last() != Some(&e) {
            rev.push(e);
        }
        cur = p;
    }
    rev.reverse();
    Ok(Hyperpath::new(rev))
}
