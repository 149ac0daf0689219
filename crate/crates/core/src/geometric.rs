//! Random geometric hypergraph generator.
//!
//! `n` nodes are dropped uniformly on an `side x side` square. Circles of
//! radius `radius` are centered on every grid point with the given spacing;
//! each circle holding at least two nodes contributes a hyperedge over those
//! nodes, weighted by the mean pairwise Euclidean distance. Circles whose
//! node set was already produced by an earlier center are skipped, so every
//! vertex set appears once.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, HypergraphBuilder, VertexId};
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct GeoParams {
    pub n: usize,
    /// Side length of the square.
    pub side: f64,
    /// Circle radius.
    pub radius: f64,
    /// Grid spacing between circle centers.
    pub spacing: f64,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct GeometricInstance {
    pub hypergraph: Hypergraph,
    pub coords: Vec<(f64, f64)>,
}

impl GeometricInstance {
    /// Vertex closest to the origin corner, by x + y; the conventional
    /// source for replay experiments.
    pub fn corner_vertex(&self) -> Option<VertexId> {
        (0..self.coords.len()).min_by(|&a, &b| {
            let (xa, ya) = self.coords[a];
            let (xb, yb) = self.coords[b];
            (xa + ya).total_cmp(&(xb + yb))
        })
    }
}

/// Mean Euclidean distance over all vertex pairs; the hyperedge weight rule.
pub fn mean_pairwise_distance(points: &[(f64, f64)]) -> Weight {
    let k = points.len();
    debug_assert!(k >= 2);
    let mut sum = 0.0;
    for i in 0..k {
        for j in i + 1..k {
            let dx = points[i].0 - points[j].0;
            let dy = points[i].1 - points[j].1;
            sum += (dx * dx + dy * dy).sqrt();
        }
    }
    sum / (k * (k - 1) / 2) as f64
}

pub fn random_geometric(p: &GeoParams) -> Result<GeometricInstance> {
    if p.n == 0 {
        return Err(Error::BadParams("node count must be positive".into()));
    }
    for (name, v) in [("side", p.side), ("radius", p.radius), ("spacing", p.spacing)] {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::BadParams(format!("{name} must be positive, got {v}")));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut coords = Vec::with_capacity(p.n);
    for _ in 0..p.n {
        let x: f64 = rng.random_range(0.0..p.side);
        let y: f64 = rng.random_range(0.0..p.side);
        coords.push((x, y));
    }

    // Bucket the nodes into cells of side `radius`; a circle around any
    // point in cell (bx, by) is covered by the 3x3 cell block around it.
    let cells = (p.side / p.radius).floor() as i64 + 1;
    let cell_of = |x: f64| -> i64 { ((x / p.radius).floor() as i64).clamp(0, cells - 1) };
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); (cells * cells) as usize];
    for (i, &(x, y)) in coords.iter().enumerate() {
        buckets[(cell_of(x) * cells + cell_of(y)) as usize].push(i);
    }

    let steps = (p.side / p.spacing).floor() as i64;
    let r2 = p.radius * p.radius;
    let mut seen: HashSet<Vec<VertexId>> = HashSet::new();
    let mut builder = HypergraphBuilder::new(p.n);
    let mut members: Vec<VertexId> = Vec::new();
    for ix in 0..=steps {
        let cx = ix as f64 * p.spacing;
        for iy in 0..=steps {
            let cy = iy as f64 * p.spacing;
            members.clear();
            let (bx, by) = (cell_of(cx), cell_of(cy));
            for nx in (bx - 1).max(0)..=(bx + 1).min(cells - 1) {
                for ny in (by - 1).max(0)..=(by + 1).min(cells - 1) {
                    for &i in &buckets[(nx * cells + ny) as usize] {
                        let (x, y) = coords[i];
                        let (dx, dy) = (x - cx, y - cy);
                        if dx * dx + dy * dy <= r2 {
                            members.push(i);
                        }
                    }
                }
            }
            if members.len() < 2 {
                continue;
            }
            members.sort_unstable();
            if seen.insert(members.clone()) {
                let pts: Vec<(f64, f64)> = members.iter().map(|&i| coords[i]).collect();
                let w = mean_pairwise_distance(&pts);
                builder.edge(members.clone(), w)?;
            }
        }
    }

    Ok(GeometricInstance { hypergraph: builder.build(), coords })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_has_no_hyperedges() {
        let inst = random_geometric(&GeoParams {
            n: 1,
            side: 10.0,
            radius: 3.0,
            spacing: 1.0,
            seed: 1,
        })
        .unwrap();
        assert_eq!(inst.hypergraph.edge_count(), 0);
    }

    #[test]
    fn collinear_triple_weight() {
        // Three nodes spaced d apart on a line: mean of (d, d, 2d) = 4d/3.
        let d = 2.5;
        let pts = [(0.0, 0.0), (d, 0.0), (2.0 * d, 0.0)];
        assert!((mean_pairwise_distance(&pts) - 4.0 * d / 3.0).abs() < 1e-12);
    }

    #[test]
    fn same_seed_same_instance() {
        let p = GeoParams { n: 60, side: 40.0, radius: 6.0, spacing: 2.0, seed: 99 };
        let a = random_geometric(&p).unwrap();
        let b = random_geometric(&p).unwrap();
        assert_eq!(a.coords, b.coords);
        assert_eq!(a.hypergraph.edge_count(), b.hypergraph.edge_count());
        for (ea, eb) in a.hypergraph.edges().zip(b.hypergraph.edges()) {
            assert_eq!(ea, eb);
        }
        // Golden values: a change here means the generator (or the RNG
        // dependency) changed behavior, which breaks replay files.
        assert_eq!(a.hypergraph.edge_count(), 213);
        let total: f64 = a.hypergraph.edges().map(|e| e.weight).sum();
        assert_eq!(total, 1168.1972813509085);
    }

    #[test]
    fn weights_are_bounded_by_the_diameter() {
        let p = GeoParams { n: 80, side: 30.0, radius: 4.0, spacing: 1.5, seed: 5 };
        let inst = random_geometric(&p).unwrap();
        assert!(inst.hypergraph.edge_count() > 0, "instance unexpectedly empty");
        for e in inst.hypergraph.edges() {
            assert!(e.weight > 0.0);
            assert!(e.weight <= 2.0 * p.radius);
            assert!(e.vertices.len() >= 2);
        }
    }

    #[test]
    fn vertex_sets_are_unique() {
        let p = GeoParams { n: 50, side: 20.0, radius: 5.0, spacing: 1.0, seed: 3 };
        let inst = random_geometric(&p).unwrap();
        let mut sets: Vec<_> = inst.hypergraph.edges().map(|e| e.vertices.clone()).collect();
        let total = sets.len();
        sets.sort();
        sets.dedup();
        assert_eq!(total, sets.len());
    }

    #[test]
    fn corner_vertex_minimizes_x_plus_y() {
        let p = GeoParams { n: 25, side: 10.0, radius: 2.0, spacing: 1.0, seed: 8 };
        let inst = random_geometric(&p).unwrap();
        let c = inst.corner_vertex().unwrap();
        let best = inst.coords[c].0 + inst.coords[c].1;
        for &(x, y) in &inst.coords {
            assert!(best <= x + y);
        }
    }
}
