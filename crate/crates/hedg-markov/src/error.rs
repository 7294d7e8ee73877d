use hedg_core::HedgError;
use hedg_dist::DistError;
use hedg_orders::OrderError;
use hedg_separation::SepError;
use thiserror::Error;

/// Everything that can go wrong while evaluating a Markov property.
#[derive(Debug, Error)]
pub enum MarkovError {
    #[error(transparent)]
    Graph(#[from] HedgError),

    #[error(transparent)]
    Dist(#[from] DistError),

    #[error(transparent)]
    Sep(#[from] SepError),

    #[error(transparent)]
    Order(#[from] OrderError),

    /// The distribution's variable set differs from the graph's node set.
    #[error("distribution variables do not match the graph's nodes")]
    VarMismatch,

    /// The requested property quantifies over a total order, but none was
    /// supplied.
    #[error("property `{0}` requires a total order")]
    MissingOrder(&'static str),

    /// The requested property is stated on the augmented graph, but no
    /// witness distribution over its nodes was supplied.
    #[error("property `{0}` requires a witness distribution over the augmented nodes")]
    MissingWitness(&'static str),

    /// The witness's variables are not exactly the augmented graph's nodes.
    #[error("witness variables do not match the augmented graph's nodes")]
    WitnessVarMismatch,

    /// The witness does not project onto the given distribution.
    #[error("witness marginal differs from the observed distribution by {diff:.3e}")]
    WitnessMarginalMismatch { diff: f64 },

    /// The exhaustive quantification would be too large for this graph.
    #[error("graph has {nodes} nodes, above the limit of {limit} for this check")]
    SizeLimit { nodes: usize, limit: usize },

    /// An unrecognized property name (used when parsing).
    #[error("unknown Markov property `{0}`")]
    UnknownProperty(String),

    /// Two checks came out in a combination the known implications rule out;
    /// this indicates a defect in a checker, not in the inputs.
    #[error("`{holds}` holds but `{fails}` fails, contradicting a proven implication")]
    HierarchyConflict {
        holds: &'static str,
        fails: &'static str,
    },
}
