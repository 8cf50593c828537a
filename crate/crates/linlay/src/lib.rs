//! Linear layouts of graphs: stack (book) and queue layouts, constructions
//! for star/grid products, certificate-producing verifiers, exact
//! small-graph oracles, and the refutation pipeline that turns a claimed
//! small stack layout of a star/grid product into a concrete violation.

pub mod constructions;
pub mod error;
pub mod exact;
pub mod graph;
pub mod hex;
pub mod layout;
pub mod refuter;
pub mod render;

pub use error::{Error, Result};
