//! Sub-monoids and relatives of the hypergraph Hopf monoid, each with an
//! independent oracle for its basic invariant.

mod graph;
mod paths;
mod simple;
mod simplicial;

pub use graph::{chi_graph, chromatic_brute_force, chromatic_deletion_contraction, Graph};
pub use paths::{catalan, chi_paths, count_tree_pairs, BinaryTree, SetOfPaths};
pub use simple::{chi_shg, SimpleHypergraph};
pub use simplicial::{chi_sc, SimplicialComplex};
