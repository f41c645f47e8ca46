//! Structural subroutines behind the clique algorithm.

mod boat;
mod holes;
mod modules;
mod twopair;

pub use boat::{extend_to_special_boat, find_small_boat, special_boat_max_clique, BoatPartition, SmallBoatSeed};
pub use holes::{find_hole, find_hole_or_antihole, HoleKind};
pub use modules::{
    co_components_within, find_comparable_nonadjacent, find_proper_homogeneous_nonclique, is_c5, is_homogeneous,
    modular_decomposition, ModuleKind, ModuleNode, ModuleTree, NestedModule,
};
pub use twopair::{
    contract, find_two_pair, weakly_chordal_max_clique, weakly_chordal_max_clique_with, CliqueBackend, Contraction,
    TwoPair,
};
