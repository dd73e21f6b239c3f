//! Finitely generated subgroups of free groups, represented by their
//! Stallings graphs.
//!
//! A subgroup given by generator words is turned into a bouquet of loops,
//! folded until deterministic, and trimmed of hanging trees. The resulting
//! core graph answers rank and membership questions, yields a free basis,
//! and intersects with another core graph through the based component of
//! their labeled product.
//!
//! ```
//! use stallings::{intersection_rank, parse_word, Alphabet, StallingsGraph};
//!
//! let ab = Alphabet::free_ab();
//! let h = [parse_word("a^2", &ab).unwrap()];
//! let k = [parse_word("a^3", &ab).unwrap()];
//! assert_eq!(intersection_rank(&h, &k, &ab).unwrap(), 1);
//!
//! let g = StallingsGraph::subgroup(&h, &ab).unwrap();
//! assert!(g.contains(&parse_word("a^-4", &ab).unwrap()).unwrap());
//! ```

pub mod error;
pub mod families;
pub mod graph;
pub mod pullback;
pub mod sample;
pub mod subgroup_file;
pub mod word;

#[cfg(feature = "cli")]
pub mod cli;

pub use error::{Error, Result};
pub use families::{
    achievable_pair, corollary_pair, family_h, family_k, neumann_check, theorem_rank,
    verify_theorem_sweep, FamilySpec,
};
pub use graph::{Edge, StallingsGraph, DEFAULT_MAX_VERTICES};
pub use pullback::{intersection_rank, pullback, pullback_with_pairs, Pullback};
pub use word::{parse_word, reduce, Alphabet, Letter, Word, DEFAULT_MAX_WORD_LEN};
