//! Exact admissible Arakelov-Green functions, tau constants and epsilon
//! invariants on metrized graphs.
//!
//! Everything is generic over [`Scalar`]. [`Rational`] gives exact results;
//! `f64` runs the same code approximately.
//!
//! ```
//! use metgraph::{catalog, potential, Network, Rational, Scalar};
//!
//! let net = Network::new(catalog::circle::<Rational>()).unwrap();
//! assert_eq!(potential::tau_constant(&net), Rational::ratio(1, 6));
//! ```

pub mod catalog;
mod error;
pub mod function;
pub mod graph;
pub mod green;
pub mod invariants;
pub mod io;
pub mod linalg;
mod network;
pub mod oracle;
pub mod potential;
mod scalar;

pub use error::{Error, Result};
pub use function::{EdgeFunction, EdgePairFunction};
pub use graph::{Divisor, Edge, GraphPoint, MetrizedGraph};
pub use green::{ConnectivityMatrix, GreenFunction, ValueMatrix};
pub use linalg::Matrix;
pub use network::Network;
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

pub type ExactGraph = MetrizedGraph<Rational>;
pub type ExactNetwork = Network<Rational>;
pub type ExactMatrix = Matrix<Rational>;
pub type ExactValueMatrix = ValueMatrix<Rational>;
