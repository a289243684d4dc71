use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("edge `{edge}` has an empty boundary")]
    EmptyBoundary { edge: String },

    #[error("edge `{edge}` is a loop (graph mode requires two distinct endpoints)")]
    LoopEdge { edge: String },

    #[error("edge `{edge}` has {arity} endpoints; graph mode requires exactly 2")]
    BadArity { edge: String, arity: usize },

    #[error("duplicate {kind} identifier `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    #[error("unknown {kind} identifier `{id}`")]
    UnknownId { kind: &'static str, id: String },

    #[error("operation requires a graph (every edge with exactly 2 endpoints)")]
    NotGraphMode,

    #[error("edge set is not cyclic")]
    NotCyclic,

    #[error("edge set is not a single cycle")]
    NotACycle,

    #[error("cycle is odd")]
    OddCycle,

    #[error("cycles are not pairwise independent")]
    NotIndependent,

    #[error("invalid gliding system: {0}")]
    InvalidGlidingSystem(String),

    #[error("state is not a vertex of the complex")]
    NotAState,

    #[error("edge set is not a dimer covering")]
    NotACovering,

    #[error("invalid loop: {0}")]
    InvalidLoop(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("complex is disconnected")]
    Disconnected,

    #[error("pair of states has no hull; the presentation does not apply")]
    NoHull,

    #[error("unknown generator {0}")]
    UnknownGenerator(usize),

    #[error("no half chosen for glide {0}")]
    MissingHalf(usize),

    #[error("v-half incidence violated on glide {glide}: {detail}")]
    VHalfIncidence { glide: usize, detail: String },

    #[error("cycle enumeration exceeded the limit of {limit} cycles")]
    CycleLimit { limit: usize },

    #[error("complex construction exceeded the limit of {limit} cubes")]
    CubeLimit { limit: usize },

    #[error("state set of size {size} exceeds the limit of {limit}")]
    StateLimit { size: usize, limit: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by exhausting a configured budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::CycleLimit { .. } | Error::CubeLimit { .. } | Error::StateLimit { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Enumeration budgets shared by the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_cycles: usize,
    pub max_cubes: usize,
    pub max_states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cycles: 200_000,
            max_cubes: 2_000_000,
            max_states: 1_000_000,
        }
    }
}
