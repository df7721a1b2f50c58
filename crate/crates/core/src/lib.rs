//! Signed graphs over small simple graphs, with exact (exhaustive) algorithms
//! for balance, switching, frustration, switching automorphism groups,
//! signed colorations and clusterability. The Petersen graph gets a
//! dedicated labeling and a six-way switching-isomorphism classifier.

pub mod automorphism;
pub mod clustering;
pub mod coloring;
pub mod cycles;
pub mod error;
pub mod frustration;
pub mod graph;
pub mod group;
pub mod perm;
pub mod petersen;
pub mod signed;
pub mod six;
pub mod swaut;

pub use automorphism::{automorphisms, graph_automorphisms};
pub use clustering::{
    cluster_number, cluster_report, inclusterability_index, is_clusterable, max_inclusterability, ClusterReport,
    Clusterability,
};
pub use coloring::{chromatic_numbers, count_colorations, Coloration};
pub use cycles::{enumerate_cycles, Cycle};
pub use error::{Error, Result};
pub use frustration::{alpha_k, frustration_index, frustration_number, frustration_report, FrustrationReport};
pub use graph::{ContractionResult, EdgeSet, Graph, VertexSet};
pub use group::{identify_group, FiniteGroup, GroupLabel};
pub use perm::Permutation;
pub use petersen::{petersen, MatchingClass, Petersen, PetersenLabeling};
pub use signed::{Balance, Sign, SignedGraph, SwitchingFunction};
pub use six::{classify_mask, classify_six, minimal_representative, SixType};
pub use swaut::{
    aut_signed, coset_system, lift_permutation, orbit_counts, sp_inverse, sp_multiply, swaut, CosetSystem,
    SwitchingPermutation,
};
