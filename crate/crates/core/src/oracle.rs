//! Independent ground truth for the solvers.
//!
//! `enumerate_shortest` searches every simple hyperpath and is deliberately
//! exponential; it exists so that nothing else in this crate has to be
//! trusted. `certify` checks a shortest-path state against the hypergraph
//! without reference to how it was computed: structural invariants plus the
//! no-relaxation condition, which together certify optimality exactly.

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::sssp::{dr_sp, SPState};
use crate::weight::{Weight, INF};

/// Minimum weight over all simple hyperpaths from `u` to `v`; `INF` when no
/// path exists, `0` when `u == v`. Intended for small instances.
pub fn enumerate_shortest(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<Weight> {
    let n = h.vertex_count();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if u == v {
        return Ok(0.0);
    }
    let mut best = INF;
    let mut path: Vec<EdgeId> = Vec::new();
    for &first in h.incident(u) {
        path.push(first);
        let w = h.edge(first).unwrap().weight;
        extend(h, v, &mut path, w, &mut best);
        path.pop();
    }
    Ok(best)
}

fn extend(h: &Hypergraph, target: VertexId, path: &mut Vec<EdgeId>, weight: Weight, best: &mut Weight) {
    if weight >= *best {
        return; // weights are nonnegative, no extension can win
    }
    let last = *path.last().expect("path is nonempty");
    if h.edge(last).unwrap().contains(target) {
        *best = weight;
        return;
    }
    for e in h.alive_edges() {
        if path.contains(&e.id) || !h.edges_intersect(last, e.id) {
            continue;
        }
        // Simplicity: the new edge must avoid every member it is not
        // adjacent to, i.e. everything before the current last edge.
        if path[..path.len() - 1]
            .iter()
            .any(|&p| h.edges_intersect(p, e.id))
        {
            continue;
        }
        path.push(e.id);
        extend(h, target, path, weight + e.weight, best);
        path.pop();
    }
}

/// From-scratch reference state; the named baseline for every differential
/// test in this crate.
pub fn recompute(h: &Hypergraph, s: VertexId) -> Result<SPState> {
    dr_sp(h, s)
}

/// A single certification failure with its witnesses.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// `dist[source]` is not zero, or the source has a parent link.
    BadSource,
    /// A distance is NaN or negative.
    BadDistance { vertex: VertexId },
    /// Reachable non-source vertex without a full parent link, or an
    /// unreachable vertex that still has one.
    BadLink { vertex: VertexId },
    /// The via-hyperedge is dead or does not contain both endpoints.
    BadViaEdge { vertex: VertexId, edge: EdgeId },
    /// `dist[v] != dist[parent] + w(via_edge)`.
    InconsistentDistance { vertex: VertexId, parent: VertexId, edge: EdgeId },
    /// The children lists are not the inverse of the parent array.
    BadChildren { vertex: VertexId },
    /// Parent chain from `vertex` does not reach the source.
    ParentCycle { vertex: VertexId },
    /// The hyperedge could still relax a member: `dist[to] > dist[from] + w`.
    Relaxable { edge: EdgeId, from: VertexId, to: VertexId },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::BadSource => write!(f, "source vertex is not a proper root"),
            Violation::BadDistance { vertex } => write!(f, "vertex {vertex} has an invalid distance"),
            Violation::BadLink { vertex } => write!(f, "vertex {vertex} has an inconsistent parent link"),
            Violation::BadViaEdge { vertex, edge } => {
                write!(f, "vertex {vertex} rides hyperedge {edge} which cannot carry it")
            }
            Violation::InconsistentDistance { vertex, parent, edge } => write!(
                f,
                "dist[{vertex}] != dist[{parent}] + w({edge})"
            ),
            Violation::BadChildren { vertex } => {
                write!(f, "children list of vertex {vertex} does not match the parent array")
            }
            Violation::ParentCycle { vertex } => {
                write!(f, "parent chain from vertex {vertex} never reaches the source")
            }
            Violation::Relaxable { edge, from, to } => write!(
                f,
                "hyperedge {edge} still relaxes vertex {to} from vertex {from}"
            ),
        }
    }
}

/// Check every structural invariant of `st` against `h` plus the
/// no-relaxation condition. An empty report certifies that the distances are
/// exactly the shortest-hyperpath distances and the relationship tree is
/// valid. Violations are data, not errors.
pub fn certify(h: &Hypergraph, st: &SPState) -> Vec<Violation> {
    let n = h.vertex_count();
    let mut out = Vec::new();

    if st.dist[st.source] != 0.0 || st.parent[st.source].is_some() || st.via_edge[st.source].is_some() {
        out.push(Violation::BadSource);
    }

    for v in 0..n {
        let d = st.dist[v];
        if d.is_nan() || d < 0.0 {
            out.push(Violation::BadDistance { vertex: v });
            continue;
        }
        if v == st.source {
            continue;
        }
        match (st.parent[v], st.via_edge[v]) {
            (Some(p), Some(eid)) => {
                if !st.is_reachable(v) {
                    out.push(Violation::BadLink { vertex: v });
                    continue;
                }
                let Ok(e) = h.edge(eid) else {
                    out.push(Violation::BadViaEdge { vertex: v, edge: eid });
                    continue;
                };
                if !e.alive || !e.contains(v) || !e.contains(p) {
                    out.push(Violation::BadViaEdge { vertex: v, edge: eid });
                    continue;
                }
                if st.dist[v] != st.dist[p] + e.weight {
                    out.push(Violation::InconsistentDistance { vertex: v, parent: p, edge: eid });
                }
            }
            (None, None) => {
                if st.is_reachable(v) {
                    out.push(Violation::BadLink { vertex: v });
                }
            }
            _ => out.push(Violation::BadLink { vertex: v }),
        }
    }

    // children must be the exact inverse of parent.
    for p in 0..n {
        let mut listed = st.children[p].clone();
        listed.sort_unstable();
        let had = listed.len();
        listed.dedup();
        let mut actual: Vec<VertexId> =
            (0..n).filter(|&c| st.parent[c] == Some(p)).collect();
        actual.sort_unstable();
        if listed != actual || had != actual.len() {
            out.push(Violation::BadChildren { vertex: p });
        }
    }

    // Parent chains must reach the source within n steps.
    for v in 0..n {
        if st.parent[v].is_none() {
            continue;
        }
        let mut cur = v;
        let mut steps = 0;
        loop {
            match st.parent[cur] {
                Some(p) => {
                    cur = p;
                    steps += 1;
                    if steps > n {
                        out.push(Violation::ParentCycle { vertex: v });
                        break;
                    }
                }
                None => {
                    if cur != st.source {
                        out.push(Violation::ParentCycle { vertex: v });
                    }
                    break;
                }
            }
        }
    }

    // No alive hyperedge may offer any member a shorter route.
    for e in h.alive_edges() {
        let Some(&from) = e
            .vertices
            .iter()
            .min_by(|&&a, &&b| st.dist[a].total_cmp(&st.dist[b]))
        else {
            continue;
        };
        let through = st.dist[from] + e.weight;
        for &to in &e.vertices {
            if st.dist[to] > through {
                out.push(Violation::Relaxable { edge: e.id, from, to });
            }
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::sample9;
    use crate::hypergraph::{ChangeEvent, Hypergraph};
    use crate::sssp::gallo_sssp;

    #[test]
    fn trivial_queries() {
        let h = sample9();
        assert_eq!(enumerate_shortest(&h, 3, 3).unwrap(), 0.0);
        assert_eq!(enumerate_shortest(&h, 0, 8).unwrap(), 2.0);
        let split = Hypergraph::new(4, vec![(vec![0, 1], 1.0)]).unwrap();
        assert_eq!(enumerate_shortest(&split, 0, 3).unwrap(), INF);
        assert!(enumerate_shortest(&split, 0, 9).is_err());
    }

    #[test]
    fn enumeration_respects_deletions() {
        let mut h = sample9();
        h.apply_change(&ChangeEvent::Delete { edge: 2 }).unwrap();
        assert_eq!(enumerate_shortest(&h, 0, 6).unwrap(), INF);
        assert_eq!(enumerate_shortest(&h, 0, 7).unwrap(), 3.0);
    }

    // Triangle-style dominance: no hyperedge can shortcut the enumerated
    // distances, on a graph with asymmetric weights.
    #[test]
    fn enumeration_is_self_consistent() {
        let mut h = sample9();
        h.apply_change(&ChangeEvent::Decrease { edge: 1, weight: 0.5 }).unwrap();
        h.apply_change(&ChangeEvent::Increase { edge: 2, weight: 4.0 }).unwrap();
        let dist: Vec<Weight> = (0..9)
            .map(|v| enumerate_shortest(&h, 0, v).unwrap())
            .collect();
        for e in h.alive_edges() {
            for &a in &e.vertices {
                for &b in &e.vertices {
                    assert!(
                        dist[b] <= dist[a] + e.weight,
                        "edge {} relaxes {} from {}",
                        e.id,
                        b,
                        a
                    );
                }
            }
        }
    }

    #[test]
    fn solver_states_certify_clean() {
        let h = sample9();
        assert!(certify(&h, &gallo_sssp(&h, 0).unwrap()).is_empty());
        assert!(certify(&h, &recompute(&h, 0).unwrap()).is_empty());
    }

    #[test]
    fn planted_distance_fault_is_caught() {
        let h = sample9();
        let mut st = recompute(&h, 0).unwrap();
        st.dist[4] = 0.5;
        let report = certify(&h, &st);
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::InconsistentDistance { vertex: 4, .. })));
    }

    #[test]
    fn planted_parent_cycle_is_caught() {
        let h = sample9();
        let mut st = recompute(&h, 0).unwrap();
        // 3's parent chain currently ends at the source; reroute 1 under 3.
        st.set_parent(1, Some((3, 1)));
        let report = certify(&h, &st);
        assert!(report.iter().any(|v| matches!(v, Violation::ParentCycle { .. })));
    }

    #[test]
    fn planted_relaxation_gap_is_caught() {
        let h = sample9();
        let mut st = recompute(&h, 0).unwrap();
        st.dist[7] = 9.0; // e2 through vertex 5 now relaxes it
        let report = certify(&h, &st);
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::Relaxable { to: 7, .. })));
    }

    #[test]
    fn stale_children_are_caught() {
        let h = sample9();
        let mut st = recompute(&h, 0).unwrap();
        st.children[0].push(8);
        assert!(certify(&h, &st)
            .iter()
            .any(|v| matches!(v, Violation::BadChildren { vertex: 0 })));
    }
}
