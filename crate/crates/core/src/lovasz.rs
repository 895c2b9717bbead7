//! Constructive degree-capped vertex partitions.
//!
//! Given caps `d_1 >= ... >= d_k` with `sum d_i >= Δ(H) - k + 1`, the vertex
//! set splits into classes `V_i` with `Δ(H[V_i]) <= d_i`. The search starts
//! from a round-robin partition and repeatedly moves a vertex that exceeds
//! its class cap to the class `j` minimising `deg_j(v) - d_j`. Every such
//! move strictly lowers the potential `Φ = Σ_i (e(V_i) - d_i |V_i|)`:
//! summing `deg_j(v) - d_j` over all classes gives at most `k - 1`, so the
//! minimum is below the current class's excess, which is at least 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
    /// Potential after the move.
    pub potential: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LovaszPartition {
    pub assignment: Vec<usize>,
    pub initial_potential: i64,
    pub moves: Vec<Move>,
}

impl LovaszPartition {
    pub fn classes(&self, k: usize) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Recorded potentials, starting with the initial one.
    pub fn potential_trace(&self) -> Vec<i64> {
        std::iter::once(self.initial_potential)
            .chain(self.moves.iter().map(|m| m.potential))
            .collect()
    }
}

/// `Σ_i (e(V_i) - d_i |V_i|)` for the given assignment.
pub fn potential(h: &Graph, assignment: &[usize], bounds: &DegreeBounds) -> i64 {
    let caps = bounds.as_slice();
    let inside: i64 = h.edges().filter(|&(u, v)| assignment[u] == assignment[v]).count() as i64;
    let weight: i64 = assignment.iter().map(|&c| caps[c] as i64).sum();
    inside - weight
}

/// Largest degree inside each class.
pub fn class_max_degrees(h: &Graph, assignment: &[usize], k: usize) -> Vec<usize> {
    let mut max = vec![0; k];
    for v in 0..h.n() {
        let c = assignment[v];
        let d = h.neighbors(v).iter().filter(|&&w| assignment[w] == c).count();
        max[c] = max[c].max(d);
    }
    max
}

pub fn lovasz_decomposition(h: &Graph, bounds: &DegreeBounds) -> Result<LovaszPartition> {
    let k = bounds.classes();
    let caps = bounds.as_slice();
    if bounds.total() + k < h.max_degree() + 1 {
        return Err(Error::NotApplicable(format!(
            "sum of caps {} is below Δ - k + 1 = {}",
            bounds.total(),
            h.max_degree() as i64 - k as i64 + 1
        )));
    }
    let n = h.n();
    let mut assignment: Vec<usize> = (0..n).map(|v| v % k).collect();
    // inside[v][c]: neighbours of v currently in class c.
    let mut inside = vec![vec![0usize; k]; n];
    for (v, counts) in inside.iter_mut().enumerate() {
        for &w in h.neighbors(v) {
            counts[assignment[w]] += 1;
        }
    }
    let initial_potential = potential(h, &assignment, bounds);
    let mut current = initial_potential;
    let mut moves = Vec::new();
    while let Some(v) = (0..n).find(|&v| inside[v][assignment[v]] > caps[assignment[v]]) {
        let from = assignment[v];
        let excess = |c: usize| inside[v][c] as i64 - caps[c] as i64;
        let to = (0..k).min_by_key(|&c| (excess(c), c)).expect("k >= 1");
        let change = excess(to) - excess(from);
        debug_assert!(change < 0);
        assignment[v] = to;
        for &w in h.neighbors(v) {
            inside[w][from] -= 1;
            inside[w][to] += 1;
        }
        current += change;
        moves.push(Move { vertex: v, from, to, potential: current });
    }
    Ok(LovaszPartition { assignment, initial_potential, moves })
}
