//! Planar (twin) braid groups and the structure of the pure twin group on six
//! strands as `F₇₁ * (ℤ²)^{*20}`.

pub mod bicoloured;
pub mod cli;
pub mod error;
pub mod free_product;
pub mod graph_words;
pub mod kernel_rewriter;
pub mod p6;
pub mod q_subgroup;
pub mod reidemeister_schreier;
pub mod snf;
pub mod twin_braids;
pub mod verify;

pub use error::{Error, Result};
pub use graph_words::{CommutationGraph, Generator, Word};
