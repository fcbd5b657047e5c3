//! Universal enveloping algebras of presented DG Poisson algebras, realized
//! as noncommutative rewrite systems with PBW-style normal forms, lifted DG
//! (Hopf) structure maps, and bounded verification of the defining
//! identities, confluence and the lifted bialgebra laws.

mod check;
mod constructions;
mod maps;
mod rewrite;
mod word;

pub use check::{
    check_confluence, check_defining_identities, check_hopf_e, doubled_commutative_counts,
    pbw_count,
};
pub use constructions::{
    certify_opposite, induced_morphism, opposite_uea, tensor_uea, InducedMorphism, TensorUea,
};
pub use maps::{
    coassoc_left, coassoc_right, convolve_antipode_left, convolve_antipode_right,
    counit_contract_left, counit_contract_right, monomial_element, tensor_differential_e,
    NcTensor, NcTensor3,
};
pub use rewrite::{build_uea, RewriteSystem, UeaError};
pub use word::{Letter, NcElement, NcWord};
