//! Exact algebra of graded manifolds, L-infinity algebras and their
//! integrating simplicial objects.

// Index loops mirror the subscripted formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod constructions;
pub mod dgman;
pub mod linalg;
pub mod linfty;
pub mod nervejet;
pub mod schur;
pub mod simplicial;
pub mod solve;
pub mod superalg;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    struct Intro;
    #[doc = include_str!("../../../book/src/superalgebra.md")]
    struct Superalgebra;
    #[doc = include_str!("../../../book/src/dg-manifolds.md")]
    struct DgManifolds;
    #[doc = include_str!("../../../book/src/linfty.md")]
    struct Linfty;
    #[doc = include_str!("../../../book/src/constructions.md")]
    struct Constructions;
    #[doc = include_str!("../../../book/src/simplicial.md")]
    struct Simplicial;
    #[doc = include_str!("../../../book/src/nerve-jets.md")]
    struct NerveJets;
    #[doc = include_str!("../../../book/src/schur.md")]
    struct Schur;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
