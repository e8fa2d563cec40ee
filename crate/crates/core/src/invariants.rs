//! Closer-vertex counts and the unbalancedness invariants built on them.
//!
//! For vertices `u` and `v`, `n(u, v)` counts the vertices `w` with
//! `dist(u, w) < dist(v, w)`; vertices equidistant from both count for
//! neither side. Each invariant sums `|n(u, v) - n(v, u)|` over a different
//! set of unordered pairs:
//!
//! | invariant | pairs                       |
//! |-----------|-----------------------------|
//! | Mostar    | edges                       |
//! | uB₂       | pairs at distance 1 or 2    |
//! | uB        | all pairs                   |
//!
//! Everything here is the plain O(n³) pairwise comparison. It is the
//! reference semantics, not a fast path.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::tree::canonical_form;

/// The matrix `N[u][v] = n(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CloserCounts {
    n: usize,
    counts: Vec<u32>,
}

impl CloserCounts {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.counts[u * self.n + v]
    }

    /// `|n(u, v) - n(v, u)|`
    pub fn imbalance(&self, u: usize, v: usize) -> u64 {
        u64::from(self.get(u, v).abs_diff(self.get(v, u)))
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.counts[u * self.n..(u + 1) * self.n]
    }
}

pub fn closer_counts(d: &DistanceMatrix) -> CloserCounts {
    let n = d.order();
    let mut counts = vec![0u32; n * n];
    for u in 0..n {
        let du = d.row(u);
        for v in u + 1..n {
            let dv = d.row(v);
            let (mut uv, mut vu) = (0u32, 0u32);
            for (a, b) in du.iter().zip(dv) {
                match a.cmp(b) {
                    std::cmp::Ordering::Less => uv += 1,
                    std::cmp::Ordering::Greater => vu += 1,
                    std::cmp::Ordering::Equal => {}
                }
            }
            counts[u * n + v] = uv;
            counts[v * n + u] = vu;
        }
    }
    CloserCounts { n, counts }
}

/// Sum of imbalances over the edges of `g`.
pub fn mostar_index(g: &Graph, counts: &CloserCounts) -> u64 {
    g.edges().map(|(u, v)| counts.imbalance(u, v)).sum()
}

/// Sum of imbalances over all unordered pairs (uB).
pub fn unbalancedness(counts: &CloserCounts) -> u64 {
    let n = counts.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| counts.imbalance(u, v))
        .sum()
}

/// Sum of imbalances over pairs at distance at most two (uB₂).
pub fn square_unbalancedness(d: &DistanceMatrix, counts: &CloserCounts) -> u64 {
    let n = counts.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            if d.get(u, v) <= 2 {
                total += counts.imbalance(u, v);
            }
        }
    }
    total
}

pub fn is_distance_balanced(g: &Graph) -> Result<bool> {
    let counts = closer_counts(&all_pairs_distances(g)?);
    Ok(g.edges().all(|(u, v)| counts.get(u, v) == counts.get(v, u)))
}

pub fn is_highly_distance_balanced(g: &Graph) -> Result<bool> {
    let counts = closer_counts(&all_pairs_distances(g)?);
    let n = g.order();
    Ok((0..n).all(|u| (u + 1..n).all(|v| counts.get(u, v) == counts.get(v, u))))
}

/// Distances and closer counts of one connected graph, computed once.
#[derive(Clone, Debug)]
pub struct DistanceProfile {
    pub distances: DistanceMatrix,
    pub counts: CloserCounts,
}

impl DistanceProfile {
    pub fn new(g: &Graph) -> Result<Self> {
        let distances = all_pairs_distances(g)?;
        let counts = closer_counts(&distances);
        Ok(DistanceProfile { distances, counts })
    }

    pub fn unbalancedness(&self) -> u64 {
        unbalancedness(&self.counts)
    }

    pub fn square_unbalancedness(&self) -> u64 {
        square_unbalancedness(&self.distances, &self.counts)
    }

    /// True when every pair at distance exactly `k` is balanced.
    pub fn balanced_at_distance(&self, k: u32) -> bool {
        let n = self.counts.order();
        (0..n).all(|u| {
            (u + 1..n).all(|v| self.distances.get(u, v) != k || self.counts.imbalance(u, v) == 0)
        })
    }
}

/// All invariants of one graph, as reported by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    /// Canonical level sequence; present only when the graph is a tree.
    pub canonical: Option<String>,
    pub n: usize,
    pub mo: u64,
    pub ub: u64,
    pub ub2: u64,
    pub distance_balanced: bool,
    pub highly_distance_balanced: bool,
}

impl InvariantRecord {
    pub fn compute(g: &Graph) -> Result<Self> {
        let profile = DistanceProfile::new(g)?;
        Ok(Self::from_profile(g, &profile))
    }

    pub fn from_profile(g: &Graph, profile: &DistanceProfile) -> Self {
        let mo = mostar_index(g, &profile.counts);
        let ub = profile.unbalancedness();
        InvariantRecord {
            canonical: canonical_form(g).ok().map(|s| s.to_string()),
            n: g.order(),
            mo,
            ub,
            ub2: profile.square_unbalancedness(),
            distance_balanced: mo == 0,
            highly_distance_balanced: ub == 0,
        }
    }
}
