//! Closeness centrality over shortest hyperpaths.
//!
//! The centrality of a vertex is the total shortest-hyperpath weight to
//! every vertex it can reach; smaller totals mean a more central actor.
//! Disconnected instances are handled by ranking on the reachable count
//! first, so a vertex seeing more of the network always outranks one seeing
//! less, whatever their totals.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::sssp::{dr_sp, SPState};
use crate::weight::Weight;

/// Closeness of one vertex: summed distance to, and count of, the vertices
/// it reaches (itself excluded).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Closeness {
    pub vertex: VertexId,
    pub total: Weight,
    pub reachable: usize,
}

pub fn closeness(h: &Hypergraph, v: VertexId) -> Result<Closeness> {
    if v >= h.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.vertex_count() });
    }
    let st = dr_sp(h, v)?;
    let mut total = 0.0;
    let mut reachable = 0;
    for u in 0..h.vertex_count() {
        if u != v && st.is_reachable(u) {
            total += st.dist[u];
            reachable += 1;
        }
    }
    Ok(Closeness { vertex: v, total, reachable })
}

/// All vertices ranked by closeness: more reachable first, then smaller
/// total, then smaller id. The first entry is the most important actor.
pub fn most_important_actor(h: &Hypergraph) -> Result<Vec<Closeness>> {
    if h.vertex_count() == 0 {
        return Err(Error::BadParams("hypergraph has no vertices".into()));
    }
    let mut all: Vec<Closeness> = (0..h.vertex_count())
        .map(|v| closeness(h, v))
        .collect::<Result<_>>()?;
    all.sort_by(|a, b| {
        b.reachable
            .cmp(&a.reachable)
            .then(a.total.total_cmp(&b.total))
            .then(a.vertex.cmp(&b.vertex))
    });
    Ok(all)
}

/// Mean distance per label. Labels none of whose members are reachable
/// report `None` rather than zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LabelProfile {
    pub mean: Option<Weight>,
    pub count: usize,
}

pub fn distance_profile(
    st: &SPState,
    groups: &BTreeMap<VertexId, String>,
) -> Result<BTreeMap<String, LabelProfile>> {
    let mut acc: BTreeMap<String, (Weight, usize)> = BTreeMap::new();
    for (&v, label) in groups {
        if v >= st.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: v, n: st.vertex_count() });
        }
        let slot = acc.entry(label.clone()).or_insert((0.0, 0));
        if st.is_reachable(v) {
            slot.0 += st.dist[v];
            slot.1 += 1;
        }
    }
    Ok(acc
        .into_iter()
        .map(|(label, (sum, count))| {
            let mean = if count > 0 { Some(sum / count as f64) } else { None };
            (label, LabelProfile { mean, count })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::sample9;
    use crate::hypergraph::Hypergraph;
    use crate::sssp::gallo_sssp;

    #[test]
    fn corner_vertex_totals() {
        let h = sample9();
        // Distances from vertex 0: three at 1, five at 2.
        assert_eq!(closeness(&h, 0).unwrap(), Closeness { vertex: 0, total: 13.0, reachable: 8 });
        // Vertex 4 sits in both e1 and e3: five at 1, three at 2.
        assert_eq!(closeness(&h, 4).unwrap(), Closeness { vertex: 4, total: 11.0, reachable: 8 });
    }

    #[test]
    fn isolated_vertex_has_empty_closeness() {
        let h = Hypergraph::new(3, vec![(vec![1, 2], 1.0)]).unwrap();
        assert_eq!(closeness(&h, 0).unwrap(), Closeness { vertex: 0, total: 0.0, reachable: 0 });
    }

    #[test]
    fn ranking_prefers_the_middle() {
        let h = sample9();
        let ranked = most_important_actor(&h).unwrap();
        // Vertex 5 touches six vertices at distance 1, vertex 4 five.
        assert_eq!(ranked[0].vertex, 5);
        assert_eq!(ranked[0].total, 10.0);
        let pos4 = ranked.iter().position(|c| c.vertex == 4).unwrap();
        let pos0 = ranked.iter().position(|c| c.vertex == 0).unwrap();
        assert!(pos4 < pos0, "vertex 4 (total 11) outranks vertex 0 (total 13)");
    }

    #[test]
    fn hub_dominates_a_star() {
        // One hub in every hyperedge.
        let h = Hypergraph::new(
            7,
            vec![
                (vec![0, 1, 2], 1.0),
                (vec![0, 3, 4], 1.0),
                (vec![0, 5, 6], 1.0),
            ],
        )
        .unwrap();
        let ranked = most_important_actor(&h).unwrap();
        assert_eq!(ranked[0].vertex, 0);
    }

    #[test]
    fn symmetric_tie_breaks_by_id() {
        let h = Hypergraph::new(2, vec![(vec![0, 1], 1.0)]).unwrap();
        let ranked = most_important_actor(&h).unwrap();
        assert_eq!(ranked[0].vertex, 0);
        assert_eq!(ranked[0].total, ranked[1].total);
    }

    #[test]
    fn totals_match_exhaustive_enumeration() {
        let mut h = sample9();
        h.apply_change(&crate::hypergraph::ChangeEvent::Decrease { edge: 1, weight: 0.5 }).unwrap();
        h.apply_change(&crate::hypergraph::ChangeEvent::Increase { edge: 2, weight: 3.0 }).unwrap();
        for v in 0..9 {
            let c = closeness(&h, v).unwrap();
            let mut total = 0.0;
            let mut reachable = 0;
            for u in 0..9 {
                if u == v {
                    continue;
                }
                let d = crate::oracle::enumerate_shortest(&h, v, u).unwrap();
                if d.is_finite() {
                    total += d;
                    reachable += 1;
                }
            }
            assert_eq!(c.total, total, "vertex {v}");
            assert_eq!(c.reachable, reachable, "vertex {v}");
        }
    }

    #[test]
    fn scaling_weights_preserves_the_ranking() {
        let h = sample9();
        let scaled = Hypergraph::new(
            9,
            h.edges().map(|e| (e.vertices.clone(), e.weight * 7.5)).collect(),
        )
        .unwrap();
        let a = most_important_actor(&h).unwrap();
        let b = most_important_actor(&scaled).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.vertex, y.vertex);
            assert_eq!(x.reachable, y.reachable);
            assert!((y.total - x.total * 7.5).abs() < 1e-9);
        }
    }

    #[test]
    fn profile_groups_by_label() {
        let h = sample9();
        let st = gallo_sssp(&h, 0).unwrap();
        let groups: BTreeMap<VertexId, String> = [
            (1, "near".to_string()),
            (2, "near".to_string()),
            (3, "far".to_string()),
            (4, "far".to_string()),
        ]
        .into();
        let profile = distance_profile(&st, &groups).unwrap();
        assert_eq!(profile["near"], LabelProfile { mean: Some(1.0), count: 2 });
        assert_eq!(profile["far"], LabelProfile { mean: Some(2.0), count: 2 });
    }

    #[test]
    fn unreachable_label_reports_empty() {
        let h = Hypergraph::new(4, vec![(vec![0, 1], 1.0)]).unwrap();
        let st = gallo_sssp(&h, 0).unwrap();
        let groups: BTreeMap<VertexId, String> = [(2, "lost".to_string()), (3, "lost".to_string())].into();
        let profile = distance_profile(&st, &groups).unwrap();
        assert_eq!(profile["lost"], LabelProfile { mean: None, count: 0 });
    }

    #[test]
    fn unknown_vertex_in_groups_is_an_error() {
        let h = sample9();
        let st = gallo_sssp(&h, 0).unwrap();
        let groups: BTreeMap<VertexId, String> = [(40, "x".to_string())].into();
        assert!(distance_profile(&st, &groups).is_err());
    }
}
