//! Underlying-graph construction for simplicial complexes.
//!
//! When the hyperedge set is closed under taking subsets, the pair weights
//! of the underlying graph can be computed facet by facet with a top-down
//! recurrence instead of scanning every face against every pair: the weight
//! of a face is the minimum of its own weight and the weights of its
//! immediate superfaces. Only two consecutive dimension levels are ever
//! materialized.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, VertexId};
use crate::underlying::{PairKey, UnderlyingGraph};
use crate::weight::Weight;

/// An explicitly weighted face of the complex. Faces not listed inherit
/// their weight from their superfaces through the recurrence.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet {
    pub vertices: Vec<VertexId>,
    pub weight: Weight,
}

impl Facet {
    pub fn new(vertices: Vec<VertexId>, weight: Weight) -> Self {
        Facet { vertices, weight }
    }
}

/// Result of the top-down build: the underlying graph plus, per input facet,
/// the number of face-against-superface comparisons performed. A facet on
/// `d + 1` vertices costs exactly `sum_{i=1}^{d-1} C(d+1, i+1) * (d - i)`.
#[derive(Clone, Debug)]
pub struct SimplicialBuild {
    pub graph: UnderlyingGraph,
    pub face_visits: Vec<u64>,
}

/// Build the underlying graph of the simplicial complex spanned by `facets`.
/// Every 1-dimensional face ends up with the same weight that a full
/// expansion of all subset faces would produce. Each pair's candidate queue
/// holds the index of the facet that lent the minimum weight.
pub fn build_underlying_simplicial(facets: &[Facet], n: usize) -> Result<SimplicialBuild> {
    let mut best: BTreeMap<PairKey, (Weight, EdgeId)> = BTreeMap::new();
    let mut face_visits = Vec::with_capacity(facets.len());

    for (fid, facet) in facets.iter().enumerate() {
        if facet.vertices.is_empty() {
            return Err(Error::EmptyFacet);
        }
        if !facet.weight.is_finite() || facet.weight < 0.0 {
            return Err(Error::BadWeight(facet.weight));
        }
        let mut verts = facet.vertices.clone();
        verts.sort_unstable();
        verts.dedup();
        for &v in &verts {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let k = verts.len();
        if k > 60 {
            return Err(Error::BadParams(format!(
                "facet on {k} vertices is too large for subset enumeration"
            )));
        }
        let mut visits = 0u64;
        if k >= 2 {
            let full: u64 = (1 << k) - 1;
            // prev holds the weights of the (size+1)-faces of this facet.
            let mut prev: HashMap<u64, Weight> = HashMap::new();
            prev.insert(full, facet.weight);
            if k == 2 {
                merge_pair(&mut best, &verts, full, facet.weight, fid);
            }
            for size in (2..k).rev() {
                let mut cur: HashMap<u64, Weight> = HashMap::new();
                for mask in subsets_of_size(k, size) {
                    let mut w = Weight::INFINITY;
                    for bit in 0..k {
                        if mask & (1 << bit) == 0 {
                            let sup = mask | (1 << bit);
                            w = w.min(prev[&sup]);
                            visits += 1;
                        }
                    }
                    if size == 2 {
                        merge_pair(&mut best, &verts, mask, w, fid);
                    } else {
                        cur.insert(mask, w);
                    }
                }
                prev = cur;
            }
        }
        face_visits.push(visits);
    }

    let graph = UnderlyingGraph::from_pair_weights(
        n,
        best.into_iter().map(|(pair, (w, fid))| (pair, fid, w)),
    );
    Ok(SimplicialBuild { graph, face_visits })
}

fn merge_pair(
    best: &mut BTreeMap<PairKey, (Weight, EdgeId)>,
    verts: &[VertexId],
    mask: u64,
    w: Weight,
    fid: EdgeId,
) {
    let mut ids = [0usize; 2];
    let mut at = 0;
    for (bit, &v) in verts.iter().enumerate() {
        if mask & (1 << bit) != 0 {
            ids[at] = v;
            at += 1;
        }
    }
    debug_assert_eq!(at, 2);
    let pair = PairKey::new(ids[0], ids[1]);
    let cand = (w, fid);
    match best.get_mut(&pair) {
        Some(cur) => {
            if cand.0 < cur.0 || (cand.0 == cur.0 && cand.1 < cur.1) {
                *cur = cand;
            }
        }
        None => {
            best.insert(pair, cand);
        }
    }
}

/// All k-bit masks with exactly `size` bits set, ascending.
fn subsets_of_size(k: usize, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut mask: u64 = (1 << size) - 1;
    let limit: u64 = 1 << k;
    while mask < limit {
        out.push(mask);
        // Gosper's hack: next mask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}
