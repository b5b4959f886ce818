//! Exact computational kit for ternary algebras built on a primitive cube
//! root of unity `w`.
//!
//! The crate provides, bottom to top:
//!
//! * [`scalar`]: arithmetic in Q and in the quadratic field Q(w), including
//!   in-field square roots;
//! * [`matrix`]: generic exact linear algebra over either field;
//! * [`group`]: the order-20 affine group of the line over F_5, in both
//!   permutation and `x -> ax + b` form;
//! * [`free`]: formal ternary polynomials, the six-term `w`-commutator, the
//!   `w`-associators, and the 720-term group-averaged quintic expansion;
//! * [`tensor`]: structure tensors `C^m_{ikl}`, their symmetry and
//!   group-identity checks, and exact basis changes;
//! * [`constructions`]: concrete carriers (rectangular matrices under
//!   `A B^T C`, a binary-derived triple product, cubic matrices with the
//!   `beta`/`gamma` pairings) and structure-constant extraction;
//! * [`classify`]: the four-class catalogue of the two-dimensional case with
//!   best-effort isomorphism witnesses;
//! * [`json`]: the on-disk formats used by the command line tool.
//!
//! Containers are generic over the [`scalar::Scalar`] bound; the two
//! instantiations that actually occur are aliased below. Floating point is
//! deliberately absent: every check in this crate is an exact identity.

pub mod classify;
pub mod constructions;
pub mod error;
pub mod free;
pub mod group;
pub mod json;
pub mod matrix;
pub mod scalar;
pub mod tensor;
pub mod upoly;

pub use error::{Error, Result};
pub use scalar::{rat, sqrt_in_field, EisScalar, Int, Rational, Scalar};

/// Matrix over the plain rationals.
pub type QMatrix = matrix::Matrix<Rational>;

/// Matrix over Q(w); also the carrier of the rectangular-matrix algebras.
pub type EisMatrix = matrix::Matrix<EisScalar>;

/// Coordinate vector over Q(w).
pub type EisVector = Vec<EisScalar>;
