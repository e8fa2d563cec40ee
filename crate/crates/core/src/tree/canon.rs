use crate::error::{Error, Result};
use crate::graph::Graph;

use super::level::LevelSequence;

/// The one or two central vertices of a tree, found by peeling leaves.
/// Returned in increasing order.
pub fn centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Level sequence of the tree hanging from `root`, ignoring the branch
/// through `blocked`. Children are ordered by non-increasing sequence,
/// which makes the result the lexicographically largest ordering.
pub(crate) fn rooted_sequence(g: &Graph, root: usize, blocked: Option<usize>) -> Vec<u32> {
    // BFS order so every child is processed before its parent in reverse.
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; g.order()];
    parent[root] = root;
    if let Some(b) = blocked {
        parent[b] = b;
    }
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }

    let mut pending: Vec<Vec<Vec<u32>>> = vec![Vec::new(); g.order()];
    let mut done: Vec<u32> = Vec::new();
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut pending[v]);
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        seq.push(0);
        for child in children {
            seq.extend(child.into_iter().map(|d| d + 1));
        }
        if v == root {
            done = seq;
        } else {
            pending[parent[v]].push(seq);
        }
    }
    done
}

/// Canonical level sequence of a free tree.
///
/// A tree with one center is rooted there. A tree with two centers `a`
/// and `b` splits into the half containing `a` and the half containing
/// `b`; it is rooted at `a` when the `b`-half is no larger than the
/// `a`-half, comparing first by order and then lexicographically by rooted
/// sequence. This is the same representative the free-tree enumerator
/// emits, so the two can be compared directly.
pub fn canonical_form(g: &Graph) -> Result<LevelSequence> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let root = match centers(g)[..] {
        [c] => c,
        [a, b] => {
            let half_a = rooted_sequence(g, a, Some(b));
            let half_b = rooted_sequence(g, b, Some(a));
            if (half_b.len(), &half_b) <= (half_a.len(), &half_a) {
                a
            } else {
                b
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    };
    Ok(LevelSequence::from_raw(rooted_sequence(g, root, None)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn centers_of_paths_and_stars() {
        assert_eq!(centers(&g(1, &[])), vec![0]);
        assert_eq!(centers(&g(4, &[(0, 1), (1, 2), (2, 3)])), vec![1, 2]);
        assert_eq!(centers(&g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])), vec![2]);
        assert_eq!(centers(&g(4, &[(3, 0), (3, 1), (3, 2)])), vec![3]);
    }

    #[test]
    fn p4_labelings_agree() {
        let a = canonical_form(&g(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        let b = canonical_form(&g(4, &[(2, 0), (0, 3), (3, 1)])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "0,1,2,1");
        let star = canonical_form(&g(4, &[(2, 0), (2, 1), (2, 3)])).unwrap();
        assert_eq!(star.to_string(), "0,1,1,1");
        assert_ne!(a, star);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(canonical_form(&g(3, &[(0, 1), (1, 2), (2, 0)])), Err(Error::NotATree));
        assert_eq!(canonical_form(&g(4, &[(0, 1), (2, 3)])), Err(Error::NotATree));
    }

    #[test]
    fn children_sorted_descending() {
        // spider with legs 1,2 rooted at the centre: 0,1,2,1
        let seq = rooted_sequence(&g(4, &[(0, 1), (0, 2), (2, 3)]), 0, None);
        assert_eq!(seq, vec![0, 1, 2, 1]);
    }
}
