//! Random and targeted change-sequence generation.
//!
//! Each draw is an insertion (probability `p_insert`), a deletion
//! (`p_delete`) or a weight change (the rest). Insertions revive a uniformly
//! chosen previously deleted hyperedge at the weight it carried when it was
//! deleted, and are redrawn while the deleted pool is empty; deletions and
//! weight changes target either a uniform alive hyperedge (random model) or
//! a uniform member of the current shortest-path via-edges (targeted
//! model). Weight-change values are uniform on `[w_min, w_max]`, redrawn
//! when they hit the current weight exactly, and classified as increase or
//! decrease against it.
//!
//! The generator tracks the alive and deleted pools itself, assuming every
//! event it hands out is applied; that keeps each draw cheap at any scale.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{ChangeEvent, EdgeId, Hypergraph};
use crate::sssp::SPState;
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChangeMode {
    Random,
    Targeted,
}

#[derive(Clone, Debug)]
pub struct ChangeModelParams {
    pub p_insert: f64,
    pub p_delete: f64,
    pub w_min: Weight,
    pub w_max: Weight,
    pub mode: ChangeMode,
    pub seed: u64,
    /// Draw integer-valued weights; differential tests use this so distance
    /// comparisons stay exact.
    pub integer_weights: bool,
}

impl ChangeModelParams {
    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p_insert)
            || !(0.0..=1.0).contains(&self.p_delete)
            || self.p_insert + self.p_delete > 1.0
        {
            return Err(Error::BadParams(
                "p_insert and p_delete must be probabilities with sum at most 1".into(),
            ));
        }
        if !self.w_min.is_finite() || self.w_min < 0.0 || self.w_min > self.w_max {
            return Err(Error::BadParams(format!(
                "invalid weight range [{}, {}]",
                self.w_min, self.w_max
            )));
        }
        Ok(())
    }
}

/// Index of the kind in [`ChangeGenerator::kind_draws`].
const DRAW_INSERT: usize = 0;
const DRAW_DELETE: usize = 1;
const DRAW_WEIGHT: usize = 2;

pub struct ChangeGenerator {
    params: ChangeModelParams,
    rng: ChaCha8Rng,
    alive: Vec<EdgeId>,
    dead: Vec<EdgeId>,
    /// Position of each edge in `alive` or `dead`.
    slot: Vec<usize>,
    is_alive: Vec<bool>,
    /// Weight each deleted edge carried when it was deleted, restored on
    /// insertion. Edges already dead at construction have no parked weight
    /// and get a fresh draw instead.
    parked_weight: Vec<Option<Weight>>,
    /// Raw kind-draw tallies (insert, delete, weight change), counting
    /// redraws; lets tests check the multinomial directly.
    pub kind_draws: [u64; 3],
}

impl ChangeGenerator {
    pub fn new(params: ChangeModelParams, h: &Hypergraph) -> Result<Self> {
        params.validate()?;
        let rng = ChaCha8Rng::seed_from_u64(params.seed);
        let mut alive = Vec::new();
        let mut dead = Vec::new();
        let mut slot = vec![0; h.edge_count()];
        let mut is_alive = vec![false; h.edge_count()];
        for e in h.edges() {
            if e.alive {
                slot[e.id] = alive.len();
                is_alive[e.id] = true;
                alive.push(e.id);
            } else {
                slot[e.id] = dead.len();
                dead.push(e.id);
            }
        }
        let parked_weight = vec![None; h.edge_count()];
        Ok(ChangeGenerator { params, rng, alive, dead, slot, is_alive, parked_weight, kind_draws: [0; 3] })
    }

    fn mark_dead(&mut self, edge: EdgeId) {
        let pos = self.slot[edge];
        self.alive.swap_remove(pos);
        if let Some(&moved) = self.alive.get(pos) {
            self.slot[moved] = pos;
        }
        self.slot[edge] = self.dead.len();
        self.is_alive[edge] = false;
        self.dead.push(edge);
    }

    fn mark_alive(&mut self, edge: EdgeId) {
        let pos = self.slot[edge];
        self.dead.swap_remove(pos);
        if let Some(&moved) = self.dead.get(pos) {
            self.slot[moved] = pos;
        }
        self.slot[edge] = self.alive.len();
        self.is_alive[edge] = true;
        self.alive.push(edge);
    }

    fn draw_weight(&mut self) -> Weight {
        if self.params.integer_weights {
            self.rng
                .random_range(self.params.w_min as i64..=self.params.w_max as i64) as Weight
        } else {
            self.rng.random_range(self.params.w_min..=self.params.w_max)
        }
    }

    fn pick_target(&mut self, shortest: Option<&SPState>) -> Result<EdgeId> {
        if self.params.mode == ChangeMode::Targeted {
            let st = shortest.ok_or_else(|| {
                Error::BadParams("targeted mode needs the current shortest-path state".into())
            })?;
            let on_paths: BTreeSet<EdgeId> = st
                .via_edge
                .iter()
                .filter_map(|&e| e)
                .filter(|&e| self.is_alive[e])
                .collect();
            if !on_paths.is_empty() {
                let ids: Vec<EdgeId> = on_paths.into_iter().collect();
                return Ok(ids[self.rng.random_range(0..ids.len())]);
            }
            // No shortest-path edges (isolated source): fall back to the
            // random model for this draw.
        }
        if self.alive.is_empty() {
            return Err(Error::NothingToTarget);
        }
        Ok(self.alive[self.rng.random_range(0..self.alive.len())])
    }

    /// Draw the next change against the current hypergraph. The caller must
    /// apply the returned event before drawing again.
    pub fn next_change(
        &mut self,
        h: &Hypergraph,
        shortest: Option<&SPState>,
    ) -> Result<ChangeEvent> {
        loop {
            let r: f64 = self.rng.random_range(0.0..1.0);
            let kind = if r < self.params.p_insert {
                DRAW_INSERT
            } else if r < self.params.p_insert + self.params.p_delete {
                DRAW_DELETE
            } else {
                DRAW_WEIGHT
            };
            self.kind_draws[kind] += 1;
            match kind {
                DRAW_INSERT => {
                    if self.dead.is_empty() {
                        if self.params.p_insert + self.params.p_delete >= 1.0
                            && self.params.p_delete == 0.0
                        {
                            // Nothing else can ever be drawn; degrade to a
                            // coin flip between the realizable kinds.
                            if self.rng.random_bool(0.5) {
                                self.kind_draws[DRAW_DELETE] += 1;
                                return self.realize_delete(h, shortest);
                            }
                            self.kind_draws[DRAW_WEIGHT] += 1;
                            return self.realize_weight_change(h, shortest);
                        }
                        continue; // redraw
                    }
                    let edge = self.dead[self.rng.random_range(0..self.dead.len())];
                    let weight = match self.parked_weight[edge].take() {
                        Some(w) => w,
                        None => self.draw_weight(),
                    };
                    self.mark_alive(edge);
                    return Ok(ChangeEvent::Insert { edge, weight });
                }
                DRAW_DELETE => return self.realize_delete(h, shortest),
                _ => return self.realize_weight_change(h, shortest),
            }
        }
    }

    fn realize_delete(
        &mut self,
        h: &Hypergraph,
        shortest: Option<&SPState>,
    ) -> Result<ChangeEvent> {
        let edge = self.pick_target(shortest)?;
        self.parked_weight[edge] = Some(h.edge(edge)?.weight);
        self.mark_dead(edge);
        Ok(ChangeEvent::Delete { edge })
    }

    fn realize_weight_change(
        &mut self,
        h: &Hypergraph,
        shortest: Option<&SPState>,
    ) -> Result<ChangeEvent> {
        let edge = self.pick_target(shortest)?;
        let current = h.edge(edge)?.weight;
        loop {
            let weight = self.draw_weight();
            if weight > current {
                return Ok(ChangeEvent::Increase { edge, weight });
            }
            if weight < current {
                return Ok(ChangeEvent::Decrease { edge, weight });
            }
            // Exact hit on the current weight: redraw. Impossible to leave
            // this loop only if the range is the single current value.
            if self.params.w_min == self.params.w_max && self.params.w_min == current {
                return Err(Error::BadParams(
                    "weight range collapsed onto the current weight".into(),
                ));
            }
        }
    }
}
