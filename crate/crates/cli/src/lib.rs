//! Structure documents and batch commands over the `xmod-hopf` library.

pub mod build;
pub mod commands;
pub mod document;
pub mod error;
pub mod export;
pub mod report;

pub use commands::{run, Command, Outcome};
pub use document::{parse, serialize, StructureDocument};
pub use error::InputError;
pub use report::Report;
pub use xmod_hopf;
