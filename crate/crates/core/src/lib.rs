//! Smith normal forms of specialized Giambelli-type matrices.
//!
//! Every outside decomposition of a Young diagram gives a matrix of ribbon
//! Schur functions whose determinant is the Schur function of the shape.
//! Under three specializations (`x_i = 1`, a principal `q`-specialization,
//! and a rescaled variant of it) the Smith normal form of that matrix is a
//! product of linear factors read off the diagonal hooks. This crate builds
//! the matrices over exact polynomial rings, computes their Smith forms, and
//! checks them against the predicted diagonals and independent oracles.
//!
//! The algebra is generic over [`arith::Field`] coefficients; the two rings
//! actually used are `Q[t]` ([`QPoly`]) and `Q(q)[y]` ([`QqPoly`]).

pub mod arith;
pub mod error;
pub mod giambelli;
pub mod matrix;
pub mod oracles;
pub mod outside;
pub mod shapes;
pub mod smith;
pub mod specialize;

pub use arith::{EuclideanDomain, Field, Poly, RationalFunction};
pub use error::{Error, Result};
pub use matrix::Matrix;

pub type Rational = num_rational::BigRational;
/// `Q[t]`.
pub type QPoly = Poly<Rational>;
/// `Q(q)[y]`.
pub type QqPoly = Poly<RationalFunction>;
