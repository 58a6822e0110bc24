//! Finite truncated simplicial sets, horn filling, and the chain of
//! morphism sets out of the filtered pair nerve.

mod chain;
mod nerve;
mod set;

pub use chain::{g_chain, hom_enumerate, pair_nerve_map, pull_back_star, GChain, SimplicialMorphism};
pub use nerve::{
    discrete, in_filtration, nerve_group, pair_filtration, pair_nerve, runs, standard_simplex, FiniteGroup,
    PointedFiniteSet,
};
pub use set::{horn_set, is_kan, is_truncated, Horn, HornFailure, TruncatedSimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplicialError {
    #[error("malformed simplicial set: {0}")]
    Shape(String),
    #[error("simplicial identity {identity} fails on simplex {simplex} of level {level}")]
    Identity {
        identity: String,
        level: usize,
        simplex: usize,
    },
    #[error("not a group: {0}")]
    NotGroup(String),
    #[error("multiplication is not associative on ({a}, {b}, {c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("horn ({n}, {k}) out of range for stored levels up to {top}")]
    OutOfRange { n: usize, k: usize, top: usize },
    #[error("basepoint is not an element")]
    Basepoint,
    #[error("not Kan: {0}")]
    NotKan(HornFailure),
    #[error("not truncated: {0}")]
    NotTruncated(HornFailure),
}
