use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("edge index {index} out of range ({m} edges)")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("the two edges must be distinct")]
    SameEdge,
    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("root {root} out of range for a tree on {n} vertices")]
    BadRoot { root: usize, n: usize },
    #[error("search budget of {limit} branch nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("bound undefined: graph has an isolated vertex (minimum degree 0)")]
    UndefinedBound,
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("infeasible pattern: {0}")]
    InfeasiblePattern(String),
    #[error("(a, b) = ({a}, {b}) is out of the realizable range")]
    OutOfRange { a: usize, b: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
