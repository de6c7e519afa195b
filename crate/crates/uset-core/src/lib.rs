//! Uncertain-set kernel: degree algebras, classical fuzzy/rough/soft
//! machinery, plithogenic bundles with contradiction-aware aggregation, the
//! hierarchical and value-domain variants, constrained aggregation,
//! rough/soft/expert composition, time-indexed and probabilistic spaces, and
//! the generalization maps with their samplers.

pub mod classic;
pub mod constrained;
pub mod degree;
pub mod error;
pub mod hierarchy;
pub mod plithogenic;
pub mod reductions;
pub mod roughsoft;
pub mod temporal;
pub mod variants;

pub use error::{Error, Result};
