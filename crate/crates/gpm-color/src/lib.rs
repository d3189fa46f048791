//! Optimal coloring and list coloring for the intersection of two
//! generalized partition matroids.
//!
//! A generalized partition matroid caps how many elements a set may take
//! from each block of a partition. Two such matroids over one ground set
//! are the same thing as a bipartite multigraph with vertex capacities,
//! with common independent sets corresponding to simple b-matchings. This
//! crate computes:
//!
//! - the minimum number of common independent sets covering the ground set
//!   (an exact rational capacity formula plus its ceiling),
//! - an explicit cover of that size, by greedy packing plus a
//!   circulation-based exchange step,
//! - kernels of ordered pairs (stable sets under two opposing orders), by
//!   deferred acceptance with quotas,
//! - a list coloring from any lists of at least that minimum size, by
//!   coloring kernels color by color,
//! - brute-force oracles and seeded generators that double-check all of the
//!   above on small instances.

pub mod chromatic;
pub mod circulation;
pub mod error;
pub mod format;
pub mod kernel;
pub mod listcolor;
pub mod matroid;
pub mod oracle;
pub mod test_support;

pub use chromatic::{
    augment_once, chi_of_matroid, chi_of_pair, coloring_violations, expansion_number,
    optimal_coloring, Coloring, ColoringViolation, Rational,
};
pub use circulation::{
    is_feasible_circulation, solve_circulation, violating_cut_check, Arc, Bound,
    CirculationInstance, CirculationResult,
};
pub use error::{Error, Result};
pub use kernel::{KernelResult, OrderedContext, Side};
pub use listcolor::{
    gamma_sets, list_color, verify_list_coloring, ListAssignment, ListColoringOutput,
    ListColoringViolation,
};
pub use matroid::{BipartiteInstance, GeneralizedPartitionMatroid, MatroidPair};
pub use oracle::{
    brute_chi, brute_kernel, brute_list_color, random_instance, random_lists, GeneratorParams,
};
