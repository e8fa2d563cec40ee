//! Text input formats.
//!
//! Edge list: one edge per line as two base-10 vertex indices separated by
//! whitespace. Blank lines and lines starting with `#` are skipped. The
//! vertex set is `0..=max index seen`. Self-loops and repeated edges are
//! errors.
//!
//! Level sequence: one line of comma-separated depths starting with `0`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::LevelSequence;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_vertex = None;
    for (line, content) in content_lines(text) {
        let parse_err = |message: String| Error::Parse { line, message };
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(parse_err(format!("expected two vertex indices, got {content:?}")));
        };
        let parse = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|e| parse_err(format!("bad vertex index {tok:?}: {e}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        max_vertex = max_vertex.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let order = max_vertex.map_or(0, |m| m + 1);
    Graph::from_edges(order, edges)
}

pub fn parse_level_sequence(text: &str) -> Result<LevelSequence> {
    let mut lines = content_lines(text);
    let (line, content) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "no level sequence found".into(),
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra,
            message: "expected a single level sequence".into(),
        });
    }
    content.parse().map_err(|e: Error| Error::Parse { line, message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_star_with_comments() {
        let g = parse_edge_list("# a star\n0 1\n0 2\n\n0\t3\n").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list("0 0\n"), Err(Error::SelfLoop(0)));
        assert_eq!(parse_edge_list("0 1\n1 0\n"), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(parse_edge_list("0 1\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_edge_list("# nothing\n"), Err(Error::EmptyGraph));
    }

    #[test]
    fn level_sequence_input() {
        assert_eq!(parse_level_sequence("0,1,2,3\n").unwrap().order(), 4);
        assert!(matches!(parse_level_sequence("0,1\n0,1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_level_sequence("0,2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_level_sequence("").is_err());
    }
}
