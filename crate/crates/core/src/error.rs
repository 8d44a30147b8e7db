use thiserror::Error;

/// Errors raised by graph construction, the exact ladder and the oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix order mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("entry ({row}, {col}) is not 0 or 1")]
    NonBinary { row: usize, col: usize },

    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("adjacency matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("vertex {0} has a self-loop")]
    SelfLoop(usize),

    #[error("graph is not regular: vertex {vertex} has degree {degree}, expected {expected}")]
    Irregular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("degree {0} is too low; need q = degree - 1 >= 1")]
    DegreeTooLow(usize),

    #[error("graph is disconnected: only {reached} of {n} vertices reachable from 0")]
    Disconnected { reached: usize, n: usize },

    #[error("unknown graph name '{0}'")]
    UnknownGraph(String),

    #[error("infeasible regular graph parameters: {0}")]
    InfeasibleParameters(String),

    #[error("no connected simple graph found after {0} pairing attempts")]
    RejectionBudget(usize),

    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoopLine { line: usize, vertex: usize },

    #[error("k must be at least 1")]
    ZeroIndex,

    #[error("epsilon must be a positive finite number, got {0}")]
    InvalidEpsilon(f64),

    #[error("graph order {0} is too small for the spectral expansion step count")]
    DegenerateOrder(usize),

    #[error("Jacobi eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("ladder invariant violated at L[{index}] = {value}: {what}")]
    LadderInvariant {
        index: usize,
        value: u64,
        what: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
