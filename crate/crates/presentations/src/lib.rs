//! Presented algebras: words, rewriting to normal form, overlap
//! resolution and Hopf structure constants on the irreducible monomials.

mod hopf;
mod parse;
mod poly;
mod rewrite;
mod word;

use hopf_core::HopfError;
use thiserror::Error;

pub use hopf::{bialgebra, build_hopf, build_report, BuildReport, PresentedHopf};
pub use parse::{parse, parse_with, Presentation, Relation};
pub use poly::{NcPoly, TPoly};
pub use rewrite::{confluence_check, Ambiguity, ConfluenceReport, Reducer, RewriteSystem, Rule, DEFAULT_CAP};
pub use word::{basis_cmp, Alphabet, Kind, TermOrder, Word};

/// Presentation of H itself, in the text format.
pub const H_PRESENTATION: &str = include_str!("../data/h.pres");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("degree cap {cap} exceeded at {word}")]
    DegreeCapExceeded { cap: usize, word: String },
    #[error("not confluent: {}", unresolved.join("; "))]
    NonConfluent { unresolved: Vec<String> },
    #[error("coproduct not well defined on relation `{relation}`: residue {residue}")]
    CoproductNotWellDefined { relation: String, residue: String },
    #[error("counit not well defined on relation `{relation}`")]
    CounitNotWellDefined { relation: String },
    #[error("no coproduct given for generator {0}")]
    MissingCoproduct(String),
    #[error(transparent)]
    Hopf(HopfError),
}

/// Parses and builds in one go.
pub fn hopf_from_text(text: &str) -> Result<hopf_core::HopfData, PresentationError> {
    let p = PresentedHopf::new(parse(text)?)?;
    build_hopf(&p)
}
