//! Consistent walks and cycles in finite vertex-transitive graphs.

pub mod error;
pub mod generation;
pub mod graph;
pub mod io;
pub mod local_actions;
pub mod perm;
pub mod products;
pub mod reachability;
pub mod walks;

pub use error::{Error, Result};
pub use generation::{
    overlap_maximal_representatives, shunt_generating_set, verify_generation, GenerationReport, OverlapMatrix,
    Representatives,
};
pub use graph::{
    automorphism_group, group_from_generators, is_n_arc_transitive, is_vertex_transitive, lex_blowup, local_group,
    named_graph, twin_vertices, wreath_generators, Blowup, Graph, LocalAction,
};
pub use local_actions::{
    arc_local_group, find_trivial_walk_4valent, find_trivial_walk_exhaustive, find_trivial_walk_wps,
    verify_shunt_pattern, weakly_p_subregular, ArcLocalGroup, PatternStatus, SearchMethod, ShuntPattern, TrivialWalk,
    WpsWitness, DEFAULT_DEPTH_CAP,
};
pub use perm::{
    generated_orbit, generated_tuple_orbit, GeneratingSearch, GroupSpec, Permutation, PermutationGroup,
    DEFAULT_GROUP_CAP,
};
pub use products::{
    blowup_cycle_family, check_blowup_hypotheses, check_census, verify_no_trivial_stabilizer, wreath_group,
    BlowupCycleFamily, HypothesisReport, LiftedCycle, TrivialStabilizerCheck,
};
pub use reachability::{
    certify_trivial_stabilizer, check_conditions, property_r_by_chase, property_r_by_shunt_group, sim_alpha_classes,
    stabilizer_fixes_successors, Certificate, CertificationFailure, ConditionReport, PrefixConditions, PropertyRMethod,
    PropertyRReport, PropertyRWitness, Seed, SimClasses, DEFAULT_ORBIT_CAP,
};
pub use walks::{
    consistent_cycle_orbits, induced_cycle, is_consistent, shunts, successor_count, successors, ConsistencyWitness,
    CycleCensus, CycleOrbit, CycleOrbitTable, Walk,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/consistent-walks.md")]
    mod consistent_walks {}
    #[doc = include_str!("../../../book/src/property-r.md")]
    mod property_r {}
    #[doc = include_str!("../../../book/src/trivial-walks.md")]
    mod trivial_walks {}
    #[doc = include_str!("../../../book/src/blowups.md")]
    mod blowups {}
    #[doc = include_str!("../../../book/src/generation.md")]
    mod generation {}
    #[doc = include_str!("../../../book/src/input-formats.md")]
    mod input_formats {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
