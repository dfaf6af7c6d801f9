//! Integer minimization of conic functions driven by a comparison oracle.
//!
//! The crate is organized around a Lenstra-style recursion that minimizes a
//! conic (quasiconvex with ray-monotone level sets) function over
//! `ball ∩ lattice ∩ affine subspace`, touching the objective only through
//! `f(x) <= f(y)` queries. Everything that the recursion's correctness rests
//! on — lattice membership, hyperplane slicing, ellipsoid bookkeeping — is
//! carried in exact rational arithmetic; floating point appears only in the
//! pyramid walk of the cone cut (whose output is re-validated exactly), in
//! polytope distance computations, and in the adversarial extension values.
//!
//! Module map:
//!
//! - [`exact`]: arbitrary-precision rational scalars, vectors, matrices, and
//!   the linear-algebra kernels (HNF, linear solve, inversion) on top of them.
//! - [`lattice`]: LLL reduction plus exact SVP/CVP by enumeration, and
//!   ellipsoid flatness directions via the dual-lattice SVP.
//! - [`geometry`]: ellipsoids, cones at an apex, V-polytopes, and the exact
//!   feasibility predicates shared by the minimizer and the adversary lab.
//! - [`oracle`]: the value-oracle / comparison-oracle tiers, call counting,
//!   conic combinators, and the lexicographic constrained-to-unconstrained
//!   reduction.
//! - [`minimize`]: preprocessing, the cone-cut shrinking loop, flatness
//!   branching, and the recursion itself.
//! - [`adversary`]: lower-bound instance families, their layered conic
//!   extensions, and oracle-call measurement against analytic bounds.
//! - [`brute`]: exhaustive enumeration minimizers used as independent oracles
//!   by the test and acceptance suites.

pub mod adversary;
pub mod brute;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod lattice;
pub mod minimize;
pub mod oracle;

pub use error::Error;
pub use exact::{Mat, Rat, Vect};
