//! Jets of nerves of polynomial group laws: the 1-jet is `𝔤[1]` with the
//! Chevalley–Eilenberg differential, and descent data on the odd line
//! correspond to flat connections.

mod descent;
mod grouplaw;
mod jet;

use thiserror::Error;

use crate::linfty::LInftyError;
use crate::solve::SolveError;
use crate::superalg::AlgebraError;

pub use descent::{descent_mc_bijection, BijectionReport, DescentMc};
pub use grouplaw::{lie_from_group_law, GroupLawError, PolyGroupLaw};
pub use jet::{nerve_one_jet, nerve_one_jet_with, NerveJet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NerveError {
    #[error(transparent)]
    Algebra(AlgebraError),
    #[error(transparent)]
    LInfty(#[from] LInftyError),
    #[error("horn-lift system is inconsistent: {0}")]
    Solve(#[from] SolveError),
    #[error("unexpected chart on the jet: {0}")]
    Chart(String),
}
