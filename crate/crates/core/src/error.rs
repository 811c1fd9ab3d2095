use thiserror::Error;

use crate::lattice::Weight;

/// Which clause of the admissibility test a highest weight failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityClause {
    NotInF1,
    NotHDominant,
    ShiftNotInF,
}

impl std::fmt::Display for AdmissibilityClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            AdmissibilityClause::NotInF1 => "mu not in F1",
            AdmissibilityClause::NotHDominant => "mu not dominant for h",
            AdmissibilityClause::ShiftNotInF => "mu - delta_p not in F",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum LieError {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("unsupported classical family/rank: {0}")]
    UnsupportedFamily(String),

    #[error("Weyl group order exceeds the limit of {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("invalid symmetric pair: {0}")]
    InvalidPair(String),

    #[error("unknown pair {0:?}")]
    UnknownPair(String),

    #[error("weight {weight} is not dominant")]
    NotDominant { weight: Weight },

    #[error("weight {weight} is not integral for the root system")]
    NonIntegral { weight: Weight },

    #[error("weight {weight} is not in the lattice")]
    NotInLattice { weight: Weight },

    #[error("inadmissible highest weight: {0}")]
    Inadmissible(AdmissibilityClause),

    #[error("character is not Weyl-invariant: {0}")]
    Symmetry(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("invalid Clifford model request: {0}")]
    Clifford(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
