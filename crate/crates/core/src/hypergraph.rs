//! Weighted undirected hypergraphs, hyperpaths and change events.
//!
//! A hypergraph is a vertex count `n` plus a table of hyperedges, each a
//! nonempty sorted set of vertices with a nonnegative weight. Deletion keeps
//! the hyperedge record (id and vertex set) so a later insertion can restore
//! it; a deleted hyperedge has `alive == false`, weight [`INF`] and does not
//! appear in the incidence index.

use crate::error::{Error, Result};
use crate::weight::{Weight, INF};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Dense hyperedge id, assigned in insertion order.
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq)]
pub struct Hyperedge {
    pub id: EdgeId,
    /// Sorted, duplicate-free member vertices. Never changes after creation.
    pub vertices: Vec<VertexId>,
    pub weight: Weight,
    pub alive: bool,
}

impl Hyperedge {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// An ordered sequence of hyperedge ids in which consecutive members
/// intersect. Simplicity (non-adjacent members pairwise disjoint) is a
/// checkable predicate, not an invariant of the type.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hyperpath {
    pub edges: Vec<EdgeId>,
}

impl Hyperpath {
    pub fn new(edges: Vec<EdgeId>) -> Self {
        Hyperpath { edges }
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl FromIterator<EdgeId> for Hyperpath {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        Hyperpath {
            edges: iter.into_iter().collect(),
        }
    }
}

/// One atomic change to the hypergraph.
///
/// Insertion and deletion are weight changes to and from infinity: deletion
/// parks the hyperedge at weight [`INF`], insertion revives a previously
/// deleted id with a fresh finite weight.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChangeEvent {
    /// New weight strictly above the current one.
    Increase { edge: EdgeId, weight: Weight },
    /// New weight strictly below the current one.
    Decrease { edge: EdgeId, weight: Weight },
    /// Revive a deleted hyperedge with the given weight.
    Insert { edge: EdgeId, weight: Weight },
    /// Retire an alive hyperedge.
    Delete { edge: EdgeId },
}

impl ChangeEvent {
    pub fn edge(&self) -> EdgeId {
        match *self {
            ChangeEvent::Increase { edge, .. }
            | ChangeEvent::Decrease { edge, .. }
            | ChangeEvent::Insert { edge, .. }
            | ChangeEvent::Delete { edge } => edge,
        }
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            ChangeEvent::Increase { .. } => "inc",
            ChangeEvent::Decrease { .. } => "dec",
            ChangeEvent::Insert { .. } => "ins",
            ChangeEvent::Delete { .. } => "del",
        }
    }
}

/// Weighted undirected hypergraph with a vertex-to-hyperedge incidence index.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
    /// Per vertex, the ids of *alive* incident hyperedges.
    incidence: Vec<Vec<EdgeId>>,
}

impl Hypergraph {
    /// Build a hypergraph from `(vertices, weight)` pairs; ids follow input
    /// order. Every vertex list must be nonempty and in range, every weight
    /// finite and nonnegative.
    pub fn new(n: usize, edges: Vec<(Vec<VertexId>, Weight)>) -> Result<Self> {
        let mut b = HypergraphBuilder::new(n);
        for (vertices, weight) in edges {
            b.edge(vertices, weight)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Hyperedge> {
        self.edges.get(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn edges(&self) -> impl Iterator<Item = &Hyperedge> {
        self.edges.iter()
    }

    pub fn alive_edges(&self) -> impl Iterator<Item = &Hyperedge> {
        self.edges.iter().filter(|e| e.alive)
    }

    /// Ids of the alive hyperedges containing `v`.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    /// Check a change event against the current state without applying it.
    pub fn validate_change(&self, c: &ChangeEvent) -> Result<()> {
        let e = self.edge(c.edge())?;
        match *c {
            ChangeEvent::Increase { weight, .. } => {
                if !e.alive {
                    return Err(Error::EdgeNotAlive(e.id));
                }
                check_weight(weight)?;
                if weight <= e.weight {
                    return Err(Error::WrongDirection {
                        edge: e.id,
                        current: e.weight,
                        requested: weight,
                    });
                }
            }
            ChangeEvent::Decrease { weight, .. } => {
                if !e.alive {
                    return Err(Error::EdgeNotAlive(e.id));
                }
                check_weight(weight)?;
                if weight >= e.weight {
                    return Err(Error::WrongDirection {
                        edge: e.id,
                        current: e.weight,
                        requested: weight,
                    });
                }
            }
            ChangeEvent::Insert { weight, .. } => {
                if e.alive {
                    return Err(Error::EdgeAlive(e.id));
                }
                check_weight(weight)?;
            }
            ChangeEvent::Delete { .. } => {
                if !e.alive {
                    return Err(Error::EdgeNotAlive(e.id));
                }
            }
        }
        Ok(())
    }

    /// Apply a change event to the raw hypergraph (weights, alive flags and
    /// the incidence index). The shortest-path maintainers call this as their
    /// first step; it does not touch any distance state.
    pub fn apply_change(&mut self, c: &ChangeEvent) -> Result<()> {
        self.validate_change(c)?;
        let id = c.edge();
        match *c {
            ChangeEvent::Increase { weight, .. } | ChangeEvent::Decrease { weight, .. } => {
                self.edges[id].weight = weight;
            }
            ChangeEvent::Insert { weight, .. } => {
                self.edges[id].weight = weight;
                self.edges[id].alive = true;
                for i in 0..self.edges[id].vertices.len() {
                    let v = self.edges[id].vertices[i];
                    self.incidence[v].push(id);
                }
            }
            ChangeEvent::Delete { .. } => {
                self.edges[id].weight = INF;
                self.edges[id].alive = false;
                for i in 0..self.edges[id].vertices.len() {
                    let v = self.edges[id].vertices[i];
                    self.incidence[v].retain(|&e| e != id);
                }
            }
        }
        Ok(())
    }

    /// Sum of member weights of a hyperpath, after checking that consecutive
    /// members intersect. Reports the first violating adjacency.
    pub fn hyperpath_weight(&self, path: &Hyperpath) -> Result<Weight> {
        self.check_path(path)?;
        let mut total = 0.0;
        for &id in &path.edges {
            total += self.edges[id].weight;
        }
        Ok(total)
    }

    /// True iff every pair of non-adjacent members of the path is disjoint.
    pub fn is_simple(&self, path: &Hyperpath) -> Result<bool> {
        self.check_path(path)?;
        for i in 0..path.edges.len() {
            for j in i + 2..path.edges.len() {
                if self.edges_intersect(path.edges[i], path.edges[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_path(&self, path: &Hyperpath) -> Result<()> {
        for &id in &path.edges {
            self.edge(id)?;
        }
        for w in path.edges.windows(2) {
            if !self.edges_intersect(w[0], w[1]) {
                return Err(Error::BrokenAdjacency(w[0], w[1]));
            }
        }
        Ok(())
    }

    pub fn edges_intersect(&self, a: EdgeId, b: EdgeId) -> bool {
        sorted_intersect(&self.edges[a].vertices, &self.edges[b].vertices)
    }

    /// Rebuild the incidence index from the edge table. Used by consistency
    /// tests to cross-check the incrementally maintained index.
    pub fn rebuilt_incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for e in &self.edges {
            if e.alive {
                for &v in &e.vertices {
                    inc[v].push(e.id);
                }
            }
        }
        inc
    }

    /// Current incidence index, normalized for comparisons.
    pub fn incidence_snapshot(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = self.incidence.clone();
        for l in &mut inc {
            l.sort_unstable();
        }
        inc
    }
}

fn check_weight(w: Weight) -> Result<()> {
    if w.is_finite() && w >= 0.0 {
        Ok(())
    } else {
        Err(Error::BadWeight(w))
    }
}

fn sorted_intersect(a: &[VertexId], b: &[VertexId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Incremental constructor; the only way to create hyperedges that start out
/// deleted (used by the email pipeline and the text-format parser).
pub struct HypergraphBuilder {
    n: usize,
    edges: Vec<Hyperedge>,
}

impl HypergraphBuilder {
    pub fn new(n: usize) -> Self {
        HypergraphBuilder { n, edges: Vec::new() }
    }

    fn normalize(&self, mut vertices: Vec<VertexId>) -> Result<Vec<VertexId>> {
        if vertices.is_empty() {
            return Err(Error::EmptyEdge);
        }
        for &v in &vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        vertices.sort_unstable();
        vertices.dedup();
        Ok(vertices)
    }

    /// Add an alive hyperedge; returns its id.
    pub fn edge(&mut self, vertices: Vec<VertexId>, weight: Weight) -> Result<EdgeId> {
        check_weight(weight)?;
        let vertices = self.normalize(vertices)?;
        let id = self.edges.len();
        self.edges.push(Hyperedge { id, vertices, weight, alive: true });
        Ok(id)
    }

    /// Add a hyperedge in the deleted state (weight [`INF`]); a later
    /// `Insert` event revives it.
    pub fn dormant(&mut self, vertices: Vec<VertexId>) -> Result<EdgeId> {
        let vertices = self.normalize(vertices)?;
        let id = self.edges.len();
        self.edges.push(Hyperedge { id, vertices, weight: INF, alive: false });
        Ok(id)
    }

    pub fn build(self) -> Hypergraph {
        let mut g = Hypergraph {
            n: self.n,
            edges: self.edges,
            incidence: vec![Vec::new(); self.n],
        };
        for e in &g.edges {
            if e.alive {
                for &v in &e.vertices {
                    g.incidence[v].push(e.id);
                }
            }
        }
        g
    }
}
