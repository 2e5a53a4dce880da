//! Exact symbolic computation for U[sl(n+1)] and U_q[sl(n+1)] presented by
//! Chevalley generators and by creation/annihilation generators (CAGs).

pub mod error;
pub mod fock;
pub mod freealg;
pub mod matrep;
pub mod morphisms;
pub mod presentations;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use freealg::{Alphabet, GenSymbol, NCPoly, TensorPoly, Word};
pub use scalar::{Coeff, QMode, RatFunc, Rational, Specialize, Var};

/// Symbolic coefficient: an exact rational function in q (and any other declared indeterminates).
pub type Scalar = RatFunc;
/// Free-algebra element over symbolic coefficients.
pub type Poly = NCPoly<Scalar>;
/// Free-algebra element over numeric rational coefficients.
pub type NumPoly = NCPoly<Rational>;
/// Two-slot tensor element over symbolic coefficients.
pub type Tensor = TensorPoly<Scalar>;
