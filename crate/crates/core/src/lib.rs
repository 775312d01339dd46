//! Exact computations on hyperelliptic curves over prime fields: Riemann-Roch
//! spaces, Cantor arithmetic on graded Picard classes, Serre-duality residue
//! pairings, and the decision procedures built from them for rank-2 limits of
//! the trivial bundle.

pub mod algebra;
pub mod classification;
pub mod curve;
pub mod error;
pub mod function;
pub mod io;
pub mod pairing;
pub mod picard;
pub mod plane;
pub mod riemann_roch;
pub mod sampling;
pub mod survey;

pub use curve::{Curve, Divisor, Fiber, LocalExpansion, Place};
pub use error::{Error, Result};
pub use function::FunctionElement;
pub use picard::{class_of, DivisorClass};
pub use riemann_roch::{function_divisor, h0, rr_space, RRBasis};
