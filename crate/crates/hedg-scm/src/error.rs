use hedg_core::{HedgError, NodeSet};
use hedg_dist::DistError;
use thiserror::Error;

/// Errors raised by construction, solving, and analysis of causal models.
#[derive(Debug, Error)]
pub enum ScmError {
    #[error(transparent)]
    Graph(#[from] HedgError),

    #[error(transparent)]
    Dist(#[from] DistError),

    #[error("node {0} has no domain")]
    MissingDomain(String),

    #[error("domain given for {0}, which is not a node of the graph")]
    StrayDomain(String),

    #[error("node {0} has an empty domain")]
    EmptyDomain(String),

    #[error("domain of {0} exceeds 256 values")]
    DomainTooLarge(String),

    #[error("error table given for {0:?}, which is not a stored hyperedge")]
    StrayErrorSpace(NodeSet),

    #[error("no error table for hyperedge {0:?}")]
    MissingErrorSpace(NodeSet),

    #[error("error table for {edge:?} is empty or has non-finite entries")]
    ErrorTableEntry { edge: NodeSet },

    #[error("error table for {edge:?} sums to {sum}, expected 1")]
    ErrorTableMass { edge: NodeSet, sum: f64 },

    #[error("no mechanism for node {0}")]
    MissingMechanism(String),

    #[error("mechanism given for {0}, which is not a node of the graph")]
    StrayMechanism(String),

    #[error("mechanism table for {node} has {got} entries, expected {expected}")]
    MechanismArity {
        node: String,
        got: usize,
        expected: usize,
    },

    #[error("mechanism for {node} outputs {value}, outside its domain of size {card}")]
    MechanismRange { node: String, value: u8, card: usize },

    #[error("loop {loop_nodes:?} has no solution at input index {input}")]
    NoSolution { loop_nodes: NodeSet, input: usize },

    #[error("loop {loop_nodes:?} has several solutions at input index {input}")]
    MultipleSolutions {
        loop_nodes: NodeSet,
        input: usize,
        first: Vec<u8>,
        second: Vec<u8>,
    },

    #[error("replacement distribution for {node} has {got} entries, expected {expected}")]
    ReplacementArity {
        node: String,
        got: usize,
        expected: usize,
    },

    #[error("intervention target {0} is not a node of the graph")]
    UnknownTarget(String),

    #[error("coefficient matrix is {rows}x{cols}, expected {n}x{n}")]
    MatrixShape { rows: usize, cols: usize, n: usize },

    #[error("coefficient b[{child}, {parent}] is nonzero but the graph has no edge {parent} -> {child}")]
    CoefficientSupport { child: String, parent: String },

    #[error("noise covariance is not symmetric at ({0}, {1})")]
    AsymmetricNoise(String, String),

    #[error("noise covariance [{a}, {b}] is nonzero but no hyperedge joins {a} and {b}")]
    NoiseSupport { a: String, b: String },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("conditioning block is singular")]
    SingularConditioning,

    #[error("sampler hit its singularity guard on {hits} of {draws} draws")]
    DegenerateSample { hits: usize, draws: usize },

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("{got} samples is too few, need at least {min}")]
    TooFewSamples { got: usize, min: usize },
}
