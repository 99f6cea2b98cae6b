//! Exact arithmetic for homogeneous operators on null-filiform associative
//! algebras.

pub mod algebra;
pub mod error;
pub mod families;
pub mod mpoly;
pub mod mrat;
pub mod operators;
pub mod poly;
pub mod ratfunc;
pub mod ring;
mod roots;
pub mod scalar;
pub mod solver;

pub use algebra::{
    basis_product, grading_degree, is_homogeneous, multiply, power, AlgebraDims, AlgebraElement,
};
pub use error::{Error, Result};
pub use mpoly::{mpoly_gcd, MPoly, Monomial};
pub use mrat::MultiRat;
pub use operators::{
    apply, check_identity, hom_to_matrix, reduce_to_psi_equations, CheckReport, HomogeneousOperator,
    IdentityKind, MatrixOperator,
};
pub use poly::{poly_gcd, Polynomial};
pub use ratfunc::RationalFunction;
pub use scalar::{scalar_arith, ArithOp, Scalar};
