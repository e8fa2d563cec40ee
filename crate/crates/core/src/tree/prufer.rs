use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer sequence into the labeled tree on `n` vertices it
/// encodes. Each step joins the smallest current leaf to the next label.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::MalformedSequence(format!(
            "Prüfer sequences describe trees on at least 2 vertices, got n = {n}"
        )));
    }
    if seq.len() != n - 2 {
        return Err(Error::MalformedSequence(format!(
            "expected {} labels for n = {n}, got {}",
            n - 2,
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::MalformedSequence(format!("label {bad} out of range for n = {n}")));
    }

    let mut remaining = vec![1usize; n];
    for &x in seq {
        remaining[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        remaining[x] -= 1;
        if remaining[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, edges)
}
