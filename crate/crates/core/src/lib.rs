//! Exact computations in the graphical calculus of quantum sl2.
//!
//! Everything is computed over Z[q, q^-1], its fraction field, or truncated
//! Laurent series: intertwiners between tensor products of irreducible
//! modules, Jones-Wenzl projectors, 3j-symbols by several independent routes,
//! closed network values, graded Euler characteristics of complete
//! intersections and the combinatorics of standard-module resolutions.

pub mod bases;
pub mod diagrams;
pub mod error;
pub mod eulerchar;
pub mod laurent;
pub mod networks;
pub mod resolutions;
pub mod tensor_rep;
pub mod threej;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, LaurentSeries, RationalQ};
