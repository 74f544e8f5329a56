//! Exact symbolic arithmetic for the A2 (sl3) skein calculus.
//!
//! Everything is computed over the field Q(v) with v = q^(1/6): Laurent
//! polynomials with arbitrary-precision rational coefficients, canonical
//! rational functions, quantum integers and binomials, the closed spider
//! evaluations (loop, theta, tetrahedron, 6j), colored triangulations of the
//! marked disk, and the pure braid group matrices acting on the clasped web
//! space basis attached to a triangulation.

pub mod scalar;
pub mod spider;
pub mod tri;
pub mod rep;

pub use scalar::{LaurentPoly, RatFunc, Rational};
