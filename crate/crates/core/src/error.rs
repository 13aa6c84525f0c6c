use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown token `{token}` at position {position}")]
    Parse { position: usize, token: String },

    #[error("q must lie in (0, 1), got {0}")]
    QOutOfRange(f64),

    #[error("series {series} takes {expected} phase(s), got {got}")]
    PhaseArity {
        series: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("phase must be finite, got {0}")]
    InvalidPhase(f64),

    #[error("cutoff must be at least 1, got {0}")]
    InvalidCutoff(usize),

    #[error("cutoff {cutoff} leaves no interior vectors for margin {margin}")]
    NoInterior { cutoff: usize, margin: usize },

    #[error("{check} does not apply to series {series}")]
    NotApplicable {
        check: &'static str,
        series: &'static str,
    },

    #[error("structural failure: {0}")]
    Structural(String),

    #[error("rewriting exceeded the step budget of {0}")]
    StepBudget(usize),

    #[error("unknown series `{0}`")]
    UnknownSeries(String),

    #[error("unknown orbit base `{0}`")]
    UnknownOrbit(String),

    #[error("inconsistent rewrite rules for `{0}`")]
    InconsistentRules(String),
}
