//! Exact arithmetic for the Hopf monoid of hypergraphs and its basic
//! invariant: set compositions, rational polynomials, hypergraph species,
//! antipodes, orientation counts and the classical submonoids.

pub mod error;
pub mod generate;
pub mod hopf;
pub mod hypergraph;
pub mod orientations;
pub mod polyring;
pub mod setcomp;
pub mod submonoids;
pub mod verify;

pub use error::{Error, Result};
pub use hopf::{chi_direct, chi_polynomial, zeta_basic, LinearCombination, Species};
pub use hypergraph::Hypergraph;
pub use polyring::{FSignature, Rational, RationalPoly};
pub use setcomp::{Composition, Decomposition, GroundSet, Label, Mask, Relabeling};
