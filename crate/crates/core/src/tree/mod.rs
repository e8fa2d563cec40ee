//! Tree encodings: level sequences, Prüfer decoding, canonical forms and
//! free-tree enumeration.

mod canon;
mod enumerate;
mod level;
mod prufer;

pub use canon::{canonical_form, centers};
pub use enumerate::{count_free_trees, enumerate_free_trees, FreeTrees};
pub use level::{level_sequence_to_graph, LevelSequence};
pub use prufer::prufer_decode;
