use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} = {value} (expected {expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("sectors belong to different annuli (r = {0} vs r = {1})")]
    MismatchedAnnuli(f64, f64),

    #[error("invalid radial coloring: {0}")]
    InvalidColoring(String),

    #[error("{gadget} cannot be embedded: requires r > {threshold}")]
    Infeasible { gadget: &'static str, threshold: f64 },

    #[error("placement search for {gadget} failed at r = {r} (best margin {best_margin})")]
    SearchFailure {
        gadget: &'static str,
        r: f64,
        best_margin: f64,
    },

    #[error("no odd cycle with at most {n_max} vertices fits at r = {r}")]
    NotFound { r: f64, n_max: usize },

    #[error("graph has {n} vertices; the exact solver accepts at most {max}")]
    SizeLimit { n: usize, max: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("assignment has {got} colors for {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
