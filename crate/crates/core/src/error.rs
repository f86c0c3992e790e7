use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("budget exceeded: {what} passed the cap of {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },

    #[error("more than {limit} results")]
    LimitExceeded { limit: usize },

    #[error("distance of {vertex} equals the ball radius; its arrows are clipped")]
    ClippedDistance { vertex: String },

    #[error("ball of radius {radius} reaches its boundary; labels would depend on vertices outside it")]
    ClippedBall { radius: usize },

    #[error("maxlen {maxlen} is below the eccentricity; a geodesic of that length extends")]
    MaxLenTooSmall { maxlen: usize },

    #[error("horizon {horizon} too small (need at least {needed})")]
    HorizonTooSmall { horizon: usize, needed: usize },

    #[error("{0} is not a vertex of this graph")]
    InvalidVertex(String),

    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: String, v: String },

    #[error("edge {{{u}, {v}}} is not a basis-generator edge")]
    NotBasisEdge { u: String, v: String },

    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("vertex {0} is unreachable")]
    Unreachable(String),

    #[error("search budget of {limit} nodes exceeded")]
    SearchBudget { limit: usize },
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    /// True for the failures the CLI reports with the "budget exceeded" exit code.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::LimitExceeded { .. } | Error::SearchBudget { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
