use thiserror::Error;

/// Errors raised by graph construction, codecs and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range for order {order}")]
    EndpointOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("bad graph6 header: {0}")]
    BadHeader(String),
    #[error("graph6 payload has {found} characters, expected {expected}")]
    PayloadLengthMismatch { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonCanonicalPadding,
    #[error("order {0} is not supported by this encoding")]
    OrderUnsupported(usize),
    #[error("malformed edge list: {0}")]
    BadEdgeList(String),
    #[error("line {line}: {source}")]
    Corpus {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("cannot parse graph name `{0}`")]
    BadGraphName(String),

    #[error("order {order} exceeds the exact-search cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("graph is disconnected")]
    GraphDisconnected,
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("part {part} has {size} vertices, below the required {required}")]
    PartsTooSmall { part: usize, size: usize, required: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
