pub mod config;
pub mod error;
pub mod finquad;
pub mod graph;
pub mod lattice;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod restriction;
pub mod suite;
pub mod sylvester;

pub use error::{Error, Result};
