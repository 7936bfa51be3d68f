//! Exact arithmetic: rationals, dense polynomials over a field, and `Q(q)`.

mod field;
mod json;
mod poly;
mod ratfunc;
mod zgcd;

pub use field::{EuclideanDomain, Field};
pub use json::{parse_rational, rational_to_string, JsonCoeff};
pub use poly::Poly;
pub use ratfunc::RationalFunction;
