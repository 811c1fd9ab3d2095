//! Exact computational Lie theory for equal-rank compact symmetric spaces.
//!
//! The crate classifies the kernel of the Dirac operator on `G/H` for
//! equal-rank symmetric pairs, and independently checks each verdict by
//! brute-force character arithmetic.
//!
//! ```
//! use dirac_kernel::{dirac::{dirac_kernel, KernelStatus}, lattice::Weight, sympair};
//!
//! let pair = sympair::builtin("so3_so2").unwrap();
//! let mu: Weight = "5/2".parse().unwrap();
//! let result = dirac_kernel(&pair, &mu).unwrap();
//! assert_eq!(result.status, KernelStatus::Minus);
//! assert_eq!(result.dimension, Some(5));
//! ```

pub mod characters;
pub mod cli;
pub mod dirac;
pub mod error;
pub mod lattice;
pub mod roots;
pub mod spin;
pub mod sympair;

pub use error::{AdmissibilityClause, LieError, Result};
pub use lattice::{LatticeSpec, Rational, Weight};
pub use roots::{Family, RootSystem, WeylElement};
pub use sympair::SymmetricPair;
