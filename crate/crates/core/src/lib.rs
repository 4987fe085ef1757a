//! Newell-Littlewood numbers and the Koike-Terada basis of symmetric functions.
//!
//! The crate computes `N_{μ,ν,λ} = Σ c_{α,β}^μ c_{α,γ}^ν c_{β,γ}^λ` and the
//! products `s_[μ] s_[ν] = Σ_λ N_{μ,ν,λ} s_[λ]` by several independent routes:
//!
//! * the defining triple sum over Littlewood-Richardson coefficients
//!   ([`newell_littlewood::nl_number`]),
//! * lattice points of a `3n²`-dimensional polytope ([`polytope`]),
//! * a strip removal/addition rule when one factor is a single row
//!   ([`newell_littlewood::nl_pieri`]),
//! * converting `s_[λ]` to Schur functions through a determinant in the
//!   complete homogeneous functions and back ([`symfunc`]).
//!
//! On top of that sit the Horn / extended Weyl inequality checks
//! ([`inequalities`]) and batch scans of the structural statements and
//! conjectures around these numbers ([`analysis`]).

pub mod analysis;
pub mod inequalities;
pub mod newell_littlewood;
pub mod partition;
pub mod polytope;
pub mod symfunc;
pub mod tableau;

pub use newell_littlewood::{nl_number, nl_product, nl_witnesses, HProfile, Witness};
pub use partition::{Partition, PartitionError, SkewShape};
pub use symfunc::{Expansion, KtExpansion, SchurExpansion};
pub use tableau::{lr_coefficient, Filling};
