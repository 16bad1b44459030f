use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    DisconnectedGraph(usize),

    #[error("pattern graph is disconnected")]
    DisconnectedPattern,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph format error at line {line}: {msg}")]
    GraphFormat { line: usize, msg: String },

    #[error("bad family parameters for {family}: {msg}")]
    BadParams { family: String, msg: String },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("missing transcription data for list `{list}`: {msg}")]
    MissingData { list: String, msg: String },

    #[error("syntax error at {line}:{col}: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },

    #[error("unknown macro `{0}`")]
    UnknownMacro(String),

    #[error("macro `{name}` expects {expected} arguments, got {got}")]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("macro `{name}` is defined twice")]
    DuplicateMacro { name: String },

    #[error("edge ({0},{1}) is not in the graph")]
    NotAnEdge(usize, usize),

    #[error("vertex index {0} out of range (universe size {1})")]
    VertexRange(usize, usize),

    #[error("graph is not a partial cube")]
    NotPartialCube,

    #[error("theta relation is not transitive: edges {0:?} and {1:?} related only through {2:?}")]
    ThetaNotTransitive((usize, usize), (usize, usize), (usize, usize)),

    #[error("resource budget exceeded after {0} explored positions")]
    ResourceBudgetExceeded(u64),

    #[error("class `{0}` is not registered")]
    UnknownClass(String),

    #[error("relation file error at line {line}: {msg}")]
    RelationFormat { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
