//! Addressable min-priority queue shared by the solvers.
//!
//! Keys are small copyable ids (vertices). `set` is the combined
//! enqueue-or-update operation, so the queue never holds stale entries and
//! `pop` always returns the true minimum. Ties break toward the smaller key,
//! which keeps every solver in this crate deterministic.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use crate::weight::{OrdWeight, Weight};

#[derive(Clone, Debug, Default)]
pub(crate) struct MinQueue<K> {
    ordered: BTreeSet<(OrdWeight, K)>,
    priority: HashMap<K, Weight>,
}

impl<K: Ord + Hash + Copy> MinQueue<K> {
    pub fn new() -> Self {
        MinQueue {
            ordered: BTreeSet::new(),
            priority: HashMap::new(),
        }
    }

    pub fn contains(&self, key: K) -> bool {
        self.priority.contains_key(&key)
    }

    /// Enqueue `key` or move it to the new priority.
    pub fn set(&mut self, key: K, priority: Weight) {
        if let Some(old) = self.priority.insert(key, priority) {
            self.ordered.remove(&(OrdWeight(old), key));
        }
        self.ordered.insert((OrdWeight(priority), key));
    }

    pub fn pop(&mut self) -> Option<(K, Weight)> {
        let &(OrdWeight(w), key) = self.ordered.iter().next()?;
        self.ordered.remove(&(OrdWeight(w), key));
        self.priority.remove(&key);
        Some((key, w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pops_in_priority_order_with_key_ties() {
        let mut q = MinQueue::new();
        q.set(7usize, 2.0);
        q.set(3, 1.0);
        q.set(5, 1.0);
        assert_eq!(q.pop(), Some((3, 1.0)));
        assert_eq!(q.pop(), Some((5, 1.0)));
        assert_eq!(q.pop(), Some((7, 2.0)));
        assert_eq!(q.pop(), None);
    }

    #[test]
    fn set_reprioritizes_in_place() {
        let mut q = MinQueue::new();
        q.set(1usize, 5.0);
        q.set(2, 4.0);
        q.set(1, 3.0);
        assert_eq!(q.pop(), Some((1, 3.0)));
        assert!(q.contains(2));
        assert_eq!(q.pop(), Some((2, 4.0)));
        assert_eq!(q.pop(), None);
    }
}
