pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod closure;
pub mod cone;
pub mod count;
pub mod dd;
pub mod error;
pub mod format;
pub mod graph;
pub mod kempe;
pub mod linalg;
pub mod lp;
pub mod precoloring;
pub mod search;
pub mod signature;
pub mod tait;
pub mod vector;

pub use error::{Error, Result, Violation};
