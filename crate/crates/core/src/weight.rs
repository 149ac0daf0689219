//! Hyperedge weights.
//!
//! Weights are nonnegative `f64` values. Deleted hyperedges and unreachable
//! vertices carry [`INF`]; IEEE-754 arithmetic already gives the required
//! saturating behaviour (`INF + x == INF`) and ordering (`INF` compares
//! greater than every finite value), so no wrapper type is needed for
//! arithmetic. NaN never enters the system: every constructor validates.

/// A nonnegative hyperedge weight or distance.
pub type Weight = f64;

/// Distance of an unreachable vertex / weight of a deleted hyperedge.
pub const INF: Weight = f64::INFINITY;

/// Total order over weights for use as priority-queue keys.
///
/// Valid only because weights are never NaN.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct OrdWeight(pub Weight);

impl Eq for OrdWeight {}

impl PartialOrd for OrdWeight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdWeight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inf_saturates_and_dominates() {
        assert_eq!(INF + 3.5, INF);
        assert!(INF > 1e300);
        assert!(OrdWeight(INF) > OrdWeight(0.0));
        assert!(OrdWeight(1.0) < OrdWeight(2.0));
    }
}
