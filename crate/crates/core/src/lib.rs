//! Computational kernel for the geometry of real lines tangent to spheres.
//!
//! The library is organised around the Grassmannian of lines in projective
//! 3-space, seen through Plücker coordinates:
//!
//! * [`exactpoly`] — exact rational arithmetic, homogeneous binary polynomials
//!   and their gcd, and a numeric complex root solver with multiplicities.
//! * [`plucker`] — lines, spheres, the Klein quadric relation, and the
//!   incidence/tangency forms.
//! * [`tangents`] — the finite common-tangent solvers (four in a plane, four
//!   through a point) and the birational point-to-tangent-line correspondence
//!   on a sphere.
//! * [`taucurve`] — the curve of common tangents to two spheres meeting a
//!   fixed line: tracing, degree estimation, known low-degree components, and
//!   the exact rational quartic family of tangent sphere pairs.
//! * [`classify`] — the decision procedure for one line and three spheres
//!   with infinitely many common tangents meeting the line.

pub mod classify;
pub mod error;
pub mod exactpoly;
pub mod plucker;
pub mod tangents;
pub mod taucurve;

pub use error::Error;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
