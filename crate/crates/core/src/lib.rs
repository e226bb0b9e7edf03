pub mod crossed;
pub mod error;
pub mod graded;
pub mod group;
pub mod hopf_module;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod xi;

pub use crossed::{Arrow, CrossedModule};
pub use error::{AlgebraError, Result};
pub use graded::{ComponentAlgebra, GradedHopfCoalgebra, GrouplikeFamily};
pub use group::{FiniteGroup, GroupAction, GroupHom};
pub use hopf_module::{HopfXiModule, Side, XiIntegral};
pub use linalg::{Field, Matrix, Scalar};
pub use rep::{AModule, GradedHom};
pub use report::{Check, ValidationReport};
pub use xi::{HopfXiAlgebra, HopfXiCoalgebra};
