//! Exact integer and rational machinery: polynomials, resultants, Sturm
//! sequences, factorization, valuations and dyadic enclosures.

pub mod dyadic;
pub mod factor;
pub mod interp;
pub mod modp;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod sturm;
pub mod valuation;

pub use dyadic::DyadicInterval;
pub use factor::{factor_irreducible, Factorization};
pub use poly::IntPoly;
pub use resultant::{discriminant, resultant};
pub use sturm::{isolate_real_roots, sturm_count, Bound, RationalInterval};
pub use valuation::poly_valuation;
