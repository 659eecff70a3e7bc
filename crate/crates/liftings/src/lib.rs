//! Liftings of Nichols algebras over H: the presented families, their
//! infinitesimal braidings, bosonizations at zero parameters and
//! isomorphisms between parameter choices.

mod bosonize;
mod braided;
mod complete;
mod family;
mod iso;
mod lifting;
mod module;
mod mutate;

use hopf_core::HopfError;
use presentations::PresentationError;
use thiserror::Error;

pub use bosonize::{bosonize, BosonizationData};
pub use braided::{braided_nichols_hopf, BraidedHopf};
pub use complete::{align_coproducts, complete, Completion};
pub use family::{family, family_ids, Family, LiftingParams, Variant, FAMILIES};
pub use iso::{verify_parameter_isomorphism, IsoReport, ParamMap, VarSystem};
pub use lifting::{
    build_lifting, compare_zero_parameter, lifting_presentation, lifting_report, LiftingReport, ZeroCompare,
};
pub use module::{
    identify, identify_summands, infinitesimal_braiding, letter_blocks, restrict, simple_names, ExtractedModule,
    SmashView,
};
pub use mutate::{flip_sign, seeded_flip, Mutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftingError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("infinitesimal braiding: {0}")]
    Module(String),
    #[error("Nichols algebra: {0}")]
    Nichols(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("family {family} has no parameter {name}")]
    UnknownParameter { family: String, name: String },
    #[error("dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("mutation: {0}")]
    Mutation(String),
}
