use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Depth-first depth list of a rooted ordered tree.
///
/// `depths[0] == 0` is the root, and every later entry satisfies
/// `1 <= depths[i] <= depths[i - 1] + 1`. The parent of vertex `i` is the
/// closest earlier vertex one level up.
///
/// The text form is the depths joined by commas, e.g. `0,1,2,2,1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelSequence(Vec<u32>);

impl LevelSequence {
    pub fn new(depths: Vec<u32>) -> Result<Self> {
        match depths.first() {
            None => return Err(Error::MalformedSequence("empty level sequence".into())),
            Some(&d) if d != 0 => {
                return Err(Error::MalformedSequence(format!("root depth must be 0, got {d}")))
            }
            _ => {}
        }
        for (i, w) in depths.windows(2).enumerate() {
            if w[1] == 0 || w[1] > w[0] + 1 {
                return Err(Error::MalformedSequence(format!(
                    "depth {} at position {} after depth {}",
                    w[1],
                    i + 1,
                    w[0]
                )));
            }
        }
        Ok(LevelSequence(depths))
    }

    pub(crate) fn from_raw(depths: Vec<u32>) -> Self {
        debug_assert!(LevelSequence::new(depths.clone()).is_ok());
        LevelSequence(depths)
    }

    pub fn depths(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// Parent of each vertex; the root maps to `None`.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut last_at_depth: Vec<usize> = Vec::new();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let d = d as usize;
                last_at_depth.truncate(d);
                let parent = d.checked_sub(1).map(|p| last_at_depth[p]);
                last_at_depth.push(i);
                parent
            })
            .collect()
    }

    /// The tree with an edge from each non-root vertex to its parent.
    pub fn to_graph(&self) -> Graph {
        let edges = self
            .parents()
            .into_iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i)));
        Graph::from_edges(self.order(), edges).expect("level sequences decode to trees")
    }
}

/// Checks the depth constraints and decodes.
pub fn level_sequence_to_graph(depths: &[u32]) -> Result<Graph> {
    Ok(LevelSequence::new(depths.to_vec())?.to_graph())
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LevelSequence({self})")
    }
}

impl FromStr for LevelSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let depths = s
            .trim()
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::MalformedSequence(format!("bad depth {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        LevelSequence::new(depths)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_star_and_paths() {
        let star = level_sequence_to_graph(&[0, 1, 1, 1]).unwrap();
        assert_eq!(star.degree(0), 3);

        let chain = level_sequence_to_graph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(chain.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);

        // rooted at an internal vertex of P4
        let p4 = level_sequence_to_graph(&[0, 1, 2, 1]).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(p4.branch_vertices(), Vec::<usize>::new());
    }

    #[test]
    fn rejects_bad_depths() {
        for bad in [&[][..], &[1, 2], &[0, 2], &[0, 1, 0], &[0, 1, 3]] {
            assert!(matches!(
                level_sequence_to_graph(bad),
                Err(Error::MalformedSequence(_))
            ));
        }
    }

    #[test]
    fn text_format() {
        let s: LevelSequence = " 0,1,2,2,1 ".parse().unwrap();
        assert_eq!(s.to_string(), "0,1,2,2,1");
        assert_eq!(s.parents(), vec![None, Some(0), Some(1), Some(1), Some(0)]);
        assert!("0,,1".parse::<LevelSequence>().is_err());
        assert!("0;1".parse::<LevelSequence>().is_err());
    }
}
