//! Distance-unbalancedness of graphs and exhaustive extremal checks over
//! trees.
//!
//! For vertices `u` and `v` of a connected graph, `n(u, v)` is the number
//! of vertices strictly closer to `u` than to `v`. Summing
//! `|n(u, v) - n(v, u)|` over the edges gives the Mostar index, over all
//! pairs the distance-unbalancedness uB, and over pairs at distance at
//! most two the auxiliary uB₂.
//!
//! ```
//! use ublab::families::make_star;
//! use ublab::invariants::InvariantRecord;
//!
//! let record = InvariantRecord::compute(&make_star(5)?)?;
//! assert_eq!((record.mo, record.ub, record.ub2), (12, 12, 12));
//! # Ok::<(), ublab::Error>(())
//! ```
//!
//! The crate is organised as
//!
//! * [`graph`]: graphs and BFS distances;
//! * [`invariants`]: closer counts, Mo, uB, uB₂;
//! * [`tree`]: level sequences, Prüfer decoding, canonical forms and the
//!   free-tree enumerator;
//! * [`families`]: stars, paths, spiders, double stars, closed forms and
//!   the pendant-path transform;
//! * [`verify`]: the exhaustive per-order harness;
//! * [`relaxation`]: brute-force solvers for the leg-length programs;
//! * [`report`] and [`edgelist`]: output and input formats.

pub mod edgelist;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod relaxation;
pub mod report;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use tree::LevelSequence;

/// The guide under `book/`, compiled so its examples run as doctests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    pub mod invariants {}
    #[doc = include_str!("../../../book/src/trees.md")]
    pub mod trees {}
    #[doc = include_str!("../../../book/src/families.md")]
    pub mod families {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
    #[doc = include_str!("../../../book/src/relaxations.md")]
    pub mod relaxations {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
