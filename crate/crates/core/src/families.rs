//! Named tree families, their closed-form uB / uB₂ values, and the
//! leg-straightening transform used to push a tree towards fewer branch
//! vertices.
//!
//! Labeling conventions are fixed so that outputs are byte-stable:
//!
//! * star: center `0`, leaves `1..n`;
//! * path: `0 - 1 - ... - (n-1)`;
//! * spider: center `0`, then each leg in the given order, labeled
//!   consecutively from the center outwards;
//! * double star: centers `0` and `n/2`, leaves `1..n/2` on the first and
//!   `n/2+1..n` on the second.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::canonical_form;

/// `(n - 1)(n - 2)`, the minimum of uB and uB₂ over trees of order `n`.
pub fn star_bound(n: usize) -> u64 {
    let n = n as u64;
    if n < 3 {
        0
    } else {
        (n - 1) * (n - 2)
    }
}

pub fn make_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidOrder { order: n, reason: "a star needs at least one vertex" });
    }
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidOrder { order: n, reason: "a path needs at least one vertex" });
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Two stars of order `n/2` whose centers are joined by an edge.
pub fn make_double_star(n: usize) -> Result<Graph> {
    check_double_star_order(n)?;
    let h = n / 2;
    let edges = (1..h).map(|v| (0, v)).chain(std::iter::once((0, h))).chain((h + 1..n).map(|v| (h, v)));
    Graph::from_edges(n, edges)
}

fn check_double_star_order(n: usize) -> Result<()> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidOrder { order: n, reason: "a double star needs an even order of at least 4" });
    }
    Ok(())
}

/// Leg lengths (vertex counts, center excluded) of a spider, in
/// non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpiderSpec {
    legs: Vec<usize>,
}

impl SpiderSpec {
    pub fn new(legs: Vec<usize>) -> Result<Self> {
        if legs.is_empty() {
            return Err(Error::InvalidSpec("a spider needs at least one leg".into()));
        }
        if legs.contains(&0) {
            return Err(Error::InvalidSpec("leg lengths must be at least 1".into()));
        }
        if legs.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpec(format!("leg lengths must be non-increasing, got {legs:?}")));
        }
        Ok(SpiderSpec { legs })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Number of legs, which is the degree of the center.
    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    pub fn order(&self) -> usize {
        1 + self.legs.iter().sum::<usize>()
    }
}

pub fn make_spider(spec: &SpiderSpec) -> Graph {
    let mut edges = Vec::with_capacity(spec.order() - 1);
    let mut next = 1;
    for &len in spec.legs() {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(spec.order(), edges).expect("spider edges are simple")
}

/// Exact uB₂ of a spider from its leg lengths.
///
/// A leg of length `m` with `2m <= n` contributes
/// `(n-2) + (n-3) + ... + (n-2m)`; a long leg with `2m > n` contributes
/// `(n-2) + ... + 1 + 0 + 1 + ... + (2m-n)` instead. Pairs of neighbors of
/// the center add `n_i - n_j` for each `i < j`.
///
/// Defined for two or more legs. Its agreement with direct computation is
/// established for three or more; for two legs (paths) it is only reported.
pub fn ub2_spider_closed_form(spec: &SpiderSpec) -> Result<u64> {
    if spec.leg_count() < 2 {
        return Err(Error::InvalidSpec("closed form needs at least two legs".into()));
    }
    let n = spec.order() as i64;
    let legs: Vec<i64> = spec.legs().iter().map(|&m| m as i64).collect();
    let mut total = 0i64;
    for (i, &m) in legs.iter().enumerate() {
        total += if i == 0 && 2 * m > n {
            let over = 2 * m - n;
            (n - 1) * (n - 2) / 2 + over * (over + 1) / 2
        } else {
            (2 * m - 1) * n - m * (2 * m + 1) + 1
        };
    }
    for i in 0..legs.len() {
        for j in i + 1..legs.len() {
            total += legs[i] - legs[j];
        }
    }
    Ok(total as u64)
}

/// `(n-2)^2 + 2(n/2 - 1)^2`
pub fn ub2_double_star_closed_form(n: usize) -> Result<u64> {
    check_double_star_order(n)?;
    let n = n as u64;
    Ok((n - 2).pow(2) + 2 * (n / 2 - 1).pow(2))
}

/// The same value written as `(n-1)(n-2) + (n-2)(n-4)/2`.
pub fn ub2_double_star_excess_form(n: usize) -> Result<u64> {
    check_double_star_order(n)?;
    let m = n as u64;
    Ok(star_bound(n) + (m - 2) * (m - 4) / 2)
}

pub fn ub_star_closed_form(n: usize) -> u64 {
    star_bound(n)
}

pub fn ub2_path_closed_form(n: usize) -> u64 {
    star_bound(n)
}

/// A branch vertex `center` all of whose branches but one are pendant
/// paths, together with the data needed to straighten those paths into a
/// single pendant path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTwoSplit {
    tree: Graph,
    pub center: usize,
    /// Vertices of each pendant path, listed from the center outwards.
    /// Ordered by non-increasing length, ties by first vertex.
    pub legs: Vec<Vec<usize>>,
    /// Vertices of the remaining branch, sorted.
    pub heavy: Vec<usize>,
    /// Neighbor of `center` inside the remaining branch.
    pub attachment: usize,
}

impl CaseTwoSplit {
    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn leg_lengths(&self) -> Vec<usize> {
        self.legs.iter().map(Vec::len).collect()
    }

    /// Number of pendant paths `k`; the center has degree `k + 1`.
    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    /// Order of the center plus its pendant paths, `n'`.
    pub fn path_side_order(&self) -> usize {
        1 + self.legs.iter().map(Vec::len).sum::<usize>()
    }

    /// The guaranteed decrease `(3n' - 2k - 3)(k - 1)` of uB₂ under the
    /// transform.
    pub fn decrease_bound(&self) -> i64 {
        let np = self.path_side_order() as i64;
        let k = self.leg_count() as i64;
        (3 * np - 2 * k - 3) * (k - 1)
    }
}

/// Walks a branch from `center` through `first`; returns the path's
/// vertices if the branch is a pendant path.
fn pendant_path(t: &Graph, center: usize, first: usize) -> Option<Vec<usize>> {
    let mut path = vec![first];
    let (mut prev, mut cur) = (center, first);
    loop {
        match t.degree(cur) {
            1 => return Some(path),
            2 => {
                let next = t.neighbors(cur).iter().copied().find(|&w| w != prev)?;
                path.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

/// Every branch vertex that qualifies as a split center, in vertex order.
pub fn case2_candidates(t: &Graph) -> Result<Vec<CaseTwoSplit>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let mut out = Vec::new();
    for c in t.branch_vertices() {
        let mut legs = Vec::new();
        let mut heavy_roots = Vec::new();
        for &w in t.neighbors(c) {
            match pendant_path(t, c, w) {
                Some(p) => legs.push(p),
                None => heavy_roots.push(w),
            }
        }
        let [d] = heavy_roots[..] else { continue };
        legs.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        let path_side = 1 + legs.iter().map(Vec::len).sum::<usize>();
        if 2 * path_side > n {
            continue;
        }
        let mut in_path_side = vec![false; n];
        in_path_side[c] = true;
        for v in legs.iter().flatten() {
            in_path_side[*v] = true;
        }
        let heavy = (0..n).filter(|&v| !in_path_side[v]).collect();
        out.push(CaseTwoSplit { tree: t.clone(), center: c, legs, heavy, attachment: d });
    }
    Ok(out)
}

/// Picks the split with the smallest `n'`, then the smallest canonical
/// form of the transformed tree, then the smallest center label.
pub fn case2_split(t: &Graph) -> Result<CaseTwoSplit> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.branch_vertices().len() < 2 {
        return Err(Error::NoSplit);
    }
    case2_candidates(t)?
        .into_iter()
        .map(|s| {
            let key = (
                s.path_side_order(),
                canonical_form(&case2_transform(&s)).expect("transform yields a tree"),
                s.center,
            );
            (key, s)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, s)| s)
        .ok_or(Error::NoSplit)
}

/// Replaces the center and its pendant paths by one path of the same
/// order hanging from the attachment vertex. Labels are preserved: the
/// new path runs `attachment - center - legs[0]... - legs[1]... - ...`.
pub fn case2_transform(split: &CaseTwoSplit) -> Graph {
    let t = &split.tree;
    let mut in_heavy = vec![false; t.order()];
    for &v in &split.heavy {
        in_heavy[v] = true;
    }
    let mut edges: Vec<(usize, usize)> =
        t.edges().filter(|&(u, v)| in_heavy[u] && in_heavy[v]).collect();
    let mut prev = split.attachment;
    for v in std::iter::once(split.center).chain(split.legs.iter().flatten().copied()) {
        edges.push((prev, v));
        prev = v;
    }
    Graph::from_edges(t.order(), edges).expect("transform keeps the graph simple")
}
