pub mod auslander;
pub mod category_file;
pub mod checks;
pub mod cli;
pub mod error;
pub mod exactness;
pub mod field;
pub mod homalg;
pub mod lattice;
pub mod quiver;
pub mod report;

pub use error::{Error, Result};
