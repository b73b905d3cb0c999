//! Chevalley–Eilenberg and Hochschild/Harrison cohomology in low degrees,
//! derivations, and the decomposable-cochain machinery for current algebras.

pub mod chevalley;
pub mod cochain;
pub mod decomposable;
pub mod derivations;
pub mod h1;
pub mod hochschild;

pub use chevalley::{chevalley_delta, chevalley_dims, coboundary_matrix, cocycles, CohomologyDims};
pub use cochain::{Bilinear, ChevalleyCochain, HochschildCochain, SymmetricCochain};
pub use decomposable::{bullet, delta_on_decomposable, linearized_jacobiator, DecomposableCochain};
pub use derivations::{derivation_space, derivations, inner_derivations};
pub use h1::{h1_current_formula, H1Formula};
pub use hochschild::{harrison_h2, hochschild_delta1, hochschild_delta2};
