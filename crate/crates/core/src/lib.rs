//! Exact computations with finite-dimensional representations of finitely
//! presented PI algebras: trace-ring coordinates (fingerprints), block
//! specializations, central-polynomial irreducibility tests, Cayley–Hamilton
//! trace identities, and a brute-force module-theory oracle to check them.

pub mod algebra;
pub mod cayley;
pub mod central;
pub mod error;
pub mod fingerprint;
pub mod genmat;
pub mod matrices;
pub mod oracle;
pub mod presentations;
pub mod sampling;

pub use algebra::{Field, NCPoly, Ring, Scalar, Word};
pub use error::{Error, Result};
pub use matrices::Matrix;
pub use presentations::{Presentation, Representation};
