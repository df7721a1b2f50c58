use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph has {found} vertices, limit is {limit}")]
    TooManyVertices { found: usize, limit: usize },

    #[error("graph has {found} edges, limit is {limit}")]
    TooManyEdges { found: usize, limit: usize },

    #[error("{operation}: {found} exceeds the search limit of {limit}")]
    SearchLimit {
        operation: &'static str,
        found: usize,
        limit: usize,
    },

    #[error("edge mask has bits beyond edge count {0}")]
    EdgeMaskOutOfRange(usize),

    #[error("sequence is not a cycle of the graph: {0}")]
    NotACycle(String),

    #[error("edge set is not a matching")]
    NotAMatching,

    #[error("matching does not fit any known class")]
    UnclassifiedMatching,

    #[error("signed graphs are over different underlying graphs")]
    GraphMismatch,

    #[error("underlying graph is not the Petersen graph")]
    NotPetersen,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation degree {found} does not match expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group axiom violated: {0}")]
    GroupAxiom(String),

    #[error("not a subgroup")]
    NotASubgroup,

    #[error("coset representative system is not closed under conjugation")]
    NotConjugationClosed,

    #[error("element is not in the group")]
    NotInGroup,

    #[error("coloration enumeration of {colors}^{vertices} assignments exceeds budget")]
    ColoringBudget { colors: usize, vertices: usize },

    #[error("unsupported argument: {0}")]
    Unsupported(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has maximum degree {0}, shortcut requires at most 3")]
    NotSubcubic(usize),
}
