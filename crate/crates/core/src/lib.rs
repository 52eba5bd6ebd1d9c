//! Exact operator calculus on the left-invariant forms of a homogeneous
//! complex manifold with invariant Hermitian metric.
//!
//! The input is a unitary (1,0)-coframe together with its exterior
//! differential (a Lie coalgebra with integrable complex structure). From it
//! the crate builds the bigraded operators `d = ∂ + ∂̄`, the Lefschetz pair
//! `L, Λ`, the torsion operators `λ, λ̄, τ, τ̄` and all metric adjoints, then
//! machine-verifies the Hermitian commutation identities and computes kernel
//! tables of the combined Laplacian `□`, together with the duality, Lefschetz,
//! primitive-decomposition and inequality reports they satisfy.
//!
//! All arithmetic is exact over the Gaussian rationals; there is no floating
//! point anywhere and every verdict is tolerance-free.

pub mod calculus;
pub mod exterior;
pub mod harmonic;
pub mod linalg;
pub mod model;
pub mod operator;
pub mod report;
pub mod rng;
pub mod scalar;

pub use exterior::{Bidegree, BigradedForm, Monomial};
pub use linalg::{KernelBasis, Mat};
pub use model::{CoalgebraSpec, HermitianStructure, OpName};
pub use operator::GradedOperator;
pub use scalar::Scalar;
