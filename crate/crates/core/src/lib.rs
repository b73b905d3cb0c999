pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod current;
pub mod error;
pub mod io;
pub mod linalg;
pub mod report;
pub mod rigidity;
pub mod scalar;
pub mod structure;

pub use algebra::{Algebra, IdentityReport, Kind, Violation};
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
