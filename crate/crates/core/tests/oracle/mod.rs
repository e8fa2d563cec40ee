//! Reference computations that share no code with the library's distance
//! and counting paths: Floyd–Warshall on an adjacency matrix and literal
//! sums over vertex triples.

#![allow(dead_code)]

use std::collections::HashSet;

use rayon::prelude::*;
use ublab::tree::{canonical_form, prufer_decode};
use ublab::{Graph, LevelSequence};

pub struct Naive {
    pub n: usize,
    pub dist: Vec<Vec<u64>>,
}

impl Naive {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        const INF: u64 = u64::MAX / 4;
        let mut dist = vec![vec![INF; n]; n];
        for (v, row) in dist.iter_mut().enumerate() {
            row[v] = 0;
        }
        for &(u, v) in edges {
            dist[u][v] = 1;
            dist[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = dist[i][k] + dist[k][j];
                    if via < dist[i][j] {
                        dist[i][j] = via;
                    }
                }
            }
        }
        Naive { n, dist }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Naive::new(g.order(), &g.edges().collect::<Vec<_>>())
    }

    /// Number of `w` strictly closer to `u` than to `v`.
    pub fn closer(&self, u: usize, v: usize) -> u64 {
        (0..self.n).filter(|&w| self.dist[u][w] < self.dist[v][w]).count() as u64
    }

    fn imbalance(&self, u: usize, v: usize) -> u64 {
        self.closer(u, v).abs_diff(self.closer(v, u))
    }

    fn pair_sum(&self, keep: impl Fn(u64) -> bool) -> u64 {
        let mut total = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if keep(self.dist[u][v]) {
                    total += self.imbalance(u, v);
                }
            }
        }
        total
    }

    pub fn mo(&self) -> u64 {
        self.pair_sum(|d| d == 1)
    }

    pub fn ub(&self) -> u64 {
        self.pair_sum(|_| true)
    }

    pub fn ub2(&self) -> u64 {
        self.pair_sum(|d| d <= 2)
    }
}

/// Canonical forms of every labeled tree on `n` vertices, via all
/// `n^(n-2)` Prüfer sequences.
pub fn prufer_census(n: usize) -> HashSet<LevelSequence> {
    if n == 1 {
        return [canonical_form(&Graph::from_edges(1, []).unwrap()).unwrap()].into();
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    // Split on the leading label so the workers each take one prefix.
    let chunk = (total / n).max(1);
    (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut seen = HashSet::new();
            let mut seq = vec![0usize; len];
            for idx in c * chunk..((c + 1) * chunk).min(total) {
                let mut x = idx;
                for slot in seq.iter_mut().rev() {
                    *slot = x % n;
                    x /= n;
                }
                let g = prufer_decode(&seq, n).unwrap();
                seen.insert(canonical_form(&g).unwrap());
            }
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}
