use thiserror::Error;

/// Errors surfaced by every module of the crate.
///
/// Each variant carries a stable machine-readable [`code`](Error::code) so
/// that front ends can map failures without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("point {point} is moved outside the domain")]
    DomainNotInvariant { point: usize },
    #[error("image list is not a permutation of 0..{degree}")]
    InvalidPermutation { degree: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph has {0} vertices, at least 3 are required")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphisms,
    #[error("graph has no {0}-arcs")]
    NoNArcs(usize),
    #[error("unknown graph spec `{0}`")]
    UnknownSpec(String),
    #[error("bad parameters for graph spec `{0}`")]
    BadParameters(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("walk is not consistent under the group")]
    NotConsistent,
    #[error("walk must have length at least {min}")]
    WalkTooShort { min: usize },
    #[error("group is not vertex-transitive")]
    NotVertexTransitive,
    #[error("group is not arc-transitive")]
    NotArcTransitive,
    #[error("graph is not connected")]
    NotConnected,
    #[error("walk orbit exceeds the cap of {cap} walks")]
    OrbitTooLarge { cap: usize },

    #[error("local group is not transitive")]
    NotTransitive,
    #[error("local group is not weakly p-subregular for any prime p")]
    NoWitness,
    #[error("graph valence is {found}, expected {expected}")]
    WrongValence { expected: usize, found: usize },
    #[error("vertex stabilizer order {0} has a prime factor other than 2 and 3")]
    BadStabilizerOrder(usize),
    #[error("base graph is not vertex-transitive")]
    BaseNotVertexTransitive,
    #[error("no representative set satisfies the overlap condition")]
    SelectionFailed,
    #[error("no trivial-stabilizer walk found within depth {0}")]
    DepthExhausted(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// An identity that must hold for every valid input did not.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::DomainNotInvariant { .. } => "domain_not_invariant",
            Error::InvalidPermutation { .. } => "invalid_permutation",
            Error::LoopEdge(_) => "loop_edge",
            Error::DuplicateEdge(..) => "duplicate_edge",
            Error::TooFewVertices(_) => "too_few_vertices",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::NotAutomorphisms => "not_automorphisms",
            Error::NoNArcs(_) => "no_n_arcs",
            Error::UnknownSpec(_) => "unknown_spec",
            Error::BadParameters(_) => "bad_parameters",
            Error::InvalidWalk(_) => "invalid_walk",
            Error::NotConsistent => "not_consistent",
            Error::WalkTooShort { .. } => "walk_too_short",
            Error::NotVertexTransitive => "not_vertex_transitive",
            Error::NotArcTransitive => "not_arc_transitive",
            Error::NotConnected => "not_connected",
            Error::OrbitTooLarge { .. } => "orbit_too_large",
            Error::NotTransitive => "not_transitive",
            Error::NoWitness => "no_witness",
            Error::WrongValence { .. } => "wrong_valence",
            Error::BadStabilizerOrder(_) => "bad_stabilizer_order",
            Error::BaseNotVertexTransitive => "base_not_vertex_transitive",
            Error::SelectionFailed => "selection_failed",
            Error::DepthExhausted(_) => "depth_exhausted",
            Error::Parse { .. } => "parse_error",
            Error::Invariant(_) => "invariant_violated",
        }
    }

    /// True for errors that signal an instance beyond the configured caps.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::OrbitTooLarge { .. } | Error::DepthExhausted(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
