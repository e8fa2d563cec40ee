//! Simple undirected graphs and unweighted all-pairs distances.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted, so two graphs built from the same edge
/// set compare equal regardless of insertion order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `order` vertices from an edge list.
    ///
    /// Self-loops, repeated edges (in either orientation) and endpoints
    /// outside `0..order` are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); order];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Vertices reachable from `source`, as BFS hop counts (`None` when
    /// unreachable).
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::with_capacity(self.order());
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.order() && self.is_connected()
    }

    /// Vertices of degree at least three.
    pub fn branch_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Returns the isomorphic copy in which vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length must equal the order");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Graph::from_edges(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Hop distances between all pairs of vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// Runs one BFS per vertex. Fails with [`Error::DisconnectedGraph`] as soon
/// as a search misses a vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        let row = g.bfs(s);
        let reached = row.iter().filter(|d| d.is_some()).count();
        if reached < n {
            return Err(Error::DisconnectedGraph {
                source_vertex: s,
                reached,
                order: n,
            });
        }
        dist.extend(row.into_iter().map(|d| d.expect("all reached")));
    }
    Ok(DistanceMatrix { n, dist })
}

/// Unordered pairs `{u, v}` (reported with `u < v`) at distance one or two,
/// i.e. the edge set of the square of the graph.
pub fn square_pairs(d: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = d.order();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d.get(u, v) <= 2 {
                pairs.push((u, v));
            }
        }
    }
    pairs
}
