//! Worked examples that produce Q-manifolds and L∞ algebras: crossed
//! modules, group cocycles through the Van Est map, the Weil algebra, the
//! gerbe two-form, the jet of the pair-maps presheaf and closed forms on the
//! odd line.
//!
//! Group-valued data is modeled additively over ℚ; only jets at the
//! identity enter the constructions.

mod cocycle;
mod crossed;
mod gerbe;
mod jets;
mod weil;

use thiserror::Error;

use crate::linfty::LInftyError;
use crate::nervejet::GroupLawError;
use crate::superalg::AlgebraError;

pub use cocycle::{
    cocycle_to_linfty, lie_cochain_differential, linfty_from_lie_cochain, vanest, GroupCocycle, LieCochain,
};
pub use crossed::{adjoint_crossed_module, crossed_to_dgla, CrossedModule, CrossedModuleAxiom};
pub use gerbe::{gerbe_coboundary, gerbe_potential, gerbe_two_form, GerbeCocycle};
pub(crate) use jets::form_monomials;
pub use jets::{closed_forms, closed_forms_jet, pair_maps_jet, ClosedForms, PairMapsJet};
pub use weil::{weil, WeilAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LInfty(#[from] LInftyError),
    #[error(transparent)]
    GroupLaw(#[from] GroupLawError),
    #[error("crossed module axioms fail: {}", describe_violations(.0))]
    CrossedModule(Vec<(CrossedModuleAxiom, String)>),
    #[error("cocycle arity must be at least 2, got {0}")]
    CocycleArity(usize),
    #[error("{what} has the wrong shape: expected {expected}, found {found}")]
    Shape {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("action is not a representation of the group: {0}")]
    NotAction(String),
    #[error("group cocycle identity fails in component `{component}`: defect `{defect}`")]
    NotCocycle { component: String, defect: String },
    #[error("structure constants violate Jacobi at ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("gerbe cocycle condition `{condition}` fails: defect `{defect}`")]
    GerbeCocycle { condition: &'static str, defect: String },
}

fn describe_violations(v: &[(CrossedModuleAxiom, String)]) -> String {
    v.iter()
        .map(|(a, w)| format!("{a} (at {w})"))
        .collect::<Vec<_>>()
        .join("; ")
}
