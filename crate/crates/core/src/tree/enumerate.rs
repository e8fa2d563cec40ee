//! Free trees of a fixed order, one per isomorphism class.
//!
//! This is the Wright–Richmond–Odlyzko–McKay generator. Candidates are
//! rooted level sequences visited in decreasing lexicographic order by the
//! Beyer–Hedetniemi successor. A candidate is kept when its root is a
//! center, which is read off by splitting it into the first principal
//! subtree (`left`) and everything else (`rest`):
//!
//! * `height(left) <= height(rest)`, and
//! * on equal heights, `left` is not larger than `rest` by order, then
//!   lexicographically.
//!
//! A rejected candidate skips straight past every rooted tree that shares
//! its offending left subtree, which keeps the amortized cost per emitted
//! tree constant.

use super::level::LevelSequence;

/// Iterator over the canonical level sequences of all free trees on `n`
/// vertices. Output order is deterministic and starts with the path.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    layout: Option<Vec<u32>>,
}

impl FreeTrees {
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "trees have at least one vertex");
        let n = n as u32;
        // The path rooted at its (first) center.
        let layout: Vec<u32> = (0..=n / 2).chain(1..(n + 1) / 2).collect();
        FreeTrees { layout: Some(layout) }
    }
}

impl Iterator for FreeTrees {
    type Item = LevelSequence;

    fn next(&mut self) -> Option<LevelSequence> {
        let mut candidate = self.layout.take()?;
        if candidate.len() <= 2 {
            // K1 and K2 have no two principal subtrees to compare.
            return Some(LevelSequence::from_raw(candidate));
        }
        while !is_centered(&candidate) {
            candidate = skip_left_subtree(&candidate)?;
        }
        self.layout = next_rooted(&candidate, None);
        Some(LevelSequence::from_raw(candidate))
    }
}

/// Enumerates the free trees on `n` vertices.
pub fn enumerate_free_trees(n: usize) -> FreeTrees {
    FreeTrees::new(n)
}

pub fn count_free_trees(n: usize) -> usize {
    FreeTrees::new(n).count()
}

/// Index one past the first principal subtree, i.e. the position of the
/// second vertex at depth one (or the length if there is none).
fn split_point(layout: &[u32]) -> usize {
    layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(layout.len(), |(i, _)| i)
}

fn is_centered(layout: &[u32]) -> bool {
    let m = split_point(layout);
    // left = layout[1..m] shifted up one level; rest = root + layout[m..]
    let left_height = layout[1..m].iter().max().map_or(0, |&d| d - 1);
    let rest_height = layout[m..].iter().copied().max().unwrap_or(0);
    if left_height != rest_height {
        return left_height < rest_height;
    }
    let left_len = m - 1;
    let rest_len = layout.len() - m + 1;
    if left_len != rest_len {
        return left_len < rest_len;
    }
    let left = layout[1..m].iter().map(|&d| d - 1);
    let rest = std::iter::once(0).chain(layout[m..].iter().copied());
    left.le(rest)
}

/// Beyer–Hedetniemi successor. Without `p` it replaces the last vertex
/// deeper than level one; with `p` it restarts from that position.
fn next_rooted(layout: &[u32], p: Option<usize>) -> Option<Vec<u32>> {
    let p = match p {
        Some(p) => p,
        None => layout.iter().rposition(|&d| d != 1)?,
    };
    if p == 0 {
        return None;
    }
    let q = layout[..p].iter().rposition(|&d| d + 1 == layout[p])?;
    let mut next = layout.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

fn skip_left_subtree(layout: &[u32]) -> Option<Vec<u32>> {
    let p = split_point(layout) - 1;
    let mut next = next_rooted(layout, Some(p))?;
    if layout[p] > 2 {
        let m = split_point(&next);
        let top = next[1..m].iter().copied().max().unwrap_or(1);
        let len = next.len();
        let tail = top as usize;
        for (slot, depth) in next[len - tail..].iter_mut().zip(1..=top) {
            *slot = depth;
        }
    }
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(n: usize) -> Vec<String> {
        enumerate_free_trees(n).map(|s| s.to_string()).collect()
    }

    #[test]
    fn smallest_orders() {
        assert_eq!(strings(1), vec!["0"]);
        assert_eq!(strings(2), vec!["0,1"]);
        assert_eq!(strings(3), vec!["0,1,1"]);
        assert_eq!(strings(4), vec!["0,1,2,1", "0,1,1,1"]);
    }

    #[test]
    fn counts_through_twelve() {
        let counts: Vec<usize> = (1..=12).map(count_free_trees).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn enumeration_is_repeatable() {
        assert_eq!(strings(9), strings(9));
    }
}
