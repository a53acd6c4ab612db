//! Exact bimodule arithmetic over the rationals: tensor products over an
//! algebra, homomorphism spaces and hom-count decompositions.

pub mod algebra;
pub mod exm2;
pub mod fixture;
pub mod linalg;
pub mod module;
pub mod realize;

pub use algebra::{Algebra, AlgebraError};
pub use exm2::{map_from_generator, verify_exm2, Exm2Report};
pub use fixture::{load_algebras, load_bimodule, FixtureError};
pub use linalg::{Matrix, Q};
pub use module::{
    decompose_against, hom_space, isomorphic, tensor_over, Bimodule, BimoduleError, DecomposeError,
    Decomposer, DEFAULT_MAX_DIM,
};
pub use realize::{cartan_of, realize_ca, RealizeError};
