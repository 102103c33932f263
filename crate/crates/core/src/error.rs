use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices or no edges")]
    EmptyGraph,

    #[error("graph is not connected")]
    GraphDisconnected,

    #[error("edge {edge} has nonpositive length {length}")]
    NonpositiveLength { edge: usize, length: String },

    #[error("edge {edge} refers to vertex {vertex}, but the graph has {count} vertices")]
    DanglingVertex { edge: usize, vertex: usize, count: usize },

    #[error("vertex index {index} out of range (graph has {count} vertices)")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("edge index {index} out of range (graph has {count} edges)")]
    EdgeOutOfRange { index: usize, count: usize },

    #[error("offset {offset} is outside edge {edge} of length {length}")]
    OffsetOutOfRange { edge: usize, offset: String, length: String },

    #[error("vertex set is not adequate (loops or parallel edges present)")]
    NotAdequate,

    #[error("edge {edge} is not a bridge")]
    NotABridge { edge: usize },

    #[error("edge {edge} cannot be compared with itself here")]
    SameEdge { edge: usize },

    #[error("shifted Laplacian is singular; the graph is disconnected")]
    SingularShift,

    #[error("divisor has degree {degree}; the admissible measure needs degree != -2")]
    BadDegree { degree: i64 },

    #[error("divisor has {got} coefficients but the graph has {expected} vertices")]
    DivisorLength { expected: usize, got: usize },

    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),

    #[error("{field}: {message}")]
    Parse { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
