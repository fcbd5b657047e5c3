//! DG Poisson algebra presentations: biderivation brackets, Leibniz
//! differentials, bounded axiom verification, tensor and opposite
//! constructions, and morphisms.

mod check;
mod morphism;
mod presentation;
mod report;
mod sample;

pub use check::check_poisson_axioms;
pub use morphism::MorphismSpec;
pub use presentation::{
    tensor_bracket, tensor_differential, tensor_presentation, PoissonBuilder, PoissonError,
    PoissonPresentation, TensorPresentation,
};
pub use report::{Report, Violation};
pub use sample::{
    enumerate_monomials, group_by_degree, random_element, random_homogeneous_element, SampleRng,
};
