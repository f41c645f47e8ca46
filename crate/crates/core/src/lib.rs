//! Recognition, optimal colouring and maximum cliques for b-perfect graphs.
//!
//! A graph is b-perfect when every induced subgraph has equal chromatic and
//! b-chromatic numbers. This crate recognises the class through its 22
//! minimal forbidden induced subgraphs ([`family`]), colours its members
//! optimally with the b-greedy procedure ([`greedy`]), and finds maximum
//! cliques through a structural decomposition ([`clique`]). Exhaustive
//! reference solvers live in [`oracle`].

pub mod clique;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod iso;
pub mod oracle;
pub mod structure;

pub use clique::{
    clique, clique_unchecked, clique_via_module_tree, clique_via_module_tree_unchecked, CliqueResult, CliqueStep,
};
pub use coloring::Coloring;
pub use error::{Error, Result};
pub use family::{find_forbidden, find_induced, is_b_perfect, Embedding, ForbiddenPattern};
pub use graph::{Graph, VertexSet};
pub use greedy::{b_greedy, EliminationTrace};
pub use io::{encode_graph6, parse_graph, Format};
pub use iso::are_isomorphic;
