//! Shared helpers for the integration suites.

use rand::RngExt;
use rand_chacha::ChaCha8Rng;

use hyperpath::{Hypergraph, Weight};

/// Random hypergraph with integer weights in 1..=20, so distance sums are
/// exact in binary floating point and equality assertions are meaningful.
pub fn random_instance(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Hypergraph {
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(1..=max_m);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let k = if rng.random_bool(0.08) {
            1 // singleton hyperedges are legal, just inert
        } else {
            rng.random_range(2..=5.min(n))
        };
        let vs: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
        let w = rng.random_range(1..=20i64) as Weight;
        edges.push((vs, w));
    }
    Hypergraph::new(n, edges).expect("generated edges are valid")
}
