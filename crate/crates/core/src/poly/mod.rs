//! Exact univariate polynomial arithmetic over `Z`, `Z[i]` and `Q`, with the
//! gcd, resultant, Sturm and determinant kernels used everywhere else.

mod gauss;
mod gcd;
mod int;
mod matrix;
mod roots;
mod sturm;

pub use gauss::{i_pow, substitute_neg_ix, GaussInt, GaussIntPolynomial};
pub use gcd::{coprime, gcd, is_monomial, resultant, squarefree_part, SquarefreeSplit};
pub use int::IntPolynomial;
pub use matrix::{det_fraction_free, PolyMatrix};
pub use roots::complex_roots_float;
pub use sturm::{real_root_count, sturm_count, Bound, SturmChain};

/// Reduced rational with positive denominator, used for the duality constants.
pub type RationalConstant = num_rational::BigRational;
