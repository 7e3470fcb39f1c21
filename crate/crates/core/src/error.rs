use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual pipeline stages.
#[derive(Debug, Error)]
pub enum Error {
    #[error("hamiltonian is invalid: {0}")]
    InvalidHamiltonian(String),
    #[error("invalid time interval [{t0}, {t1}]")]
    InvalidInterval { t0: f64, t1: f64 },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix too close to singular for a reliable inverse")]
    IllConditionedInverse,
    #[error("eigenvalue clustering is ambiguous at tolerance {tol:e} (spread {spread:e}, separation {separation:e})")]
    AmbiguousClustering {
        tol: f64,
        spread: f64,
        separation: f64,
    },
    #[error("not enough data: {0}")]
    NotEnoughData(String),
    #[error("duplicate row index {0} in Hankel index set")]
    DuplicateRow(usize),
    #[error("no singular-value gap found up to order {max_order} (best ratio {best_ratio:e})")]
    NoRankGap { max_order: usize, best_ratio: f64 },
    #[error("rank-deficient system: {0}")]
    RankDeficient(String),
    #[error("repeated roots detected (separation {0:e} relative); use block realization instead")]
    RepeatedRoots(f64),
    #[error("degenerate Schur stencil: s_mu = 0")]
    SingularStencil,
    #[error("evaluation point hits a pole: z * lambda = 1")]
    PoleAtEvaluation,
    #[error("argument outside the convergence domain: {0}")]
    DomainError(String),
    #[error("zero sample in phase track at index {0}")]
    ZeroCrossing(usize),
    #[error("phase refinement exhausted after {0} rounds")]
    RefinementExhausted(usize),
    #[error("no sign change of the discriminant in the bracket [{0}, {1}]")]
    BracketError(f64, f64),
    #[error("eigenvalue matching ambiguous along the loop after {0} refinements")]
    MatchingAmbiguous(usize),
    #[error("observable family resolves only {0} of {1} operator directions")]
    PartialVisibility(usize, usize),
    #[error("Jordan structure of the shift pencil not separable: {0}")]
    JordanDetectionAmbiguous(String),
    #[error("linear algebra backend failure: {0}")]
    Linalg(String),
    #[error("schur iteration failed to converge at index {0}")]
    SchurNoConvergence(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("file format error: {0}")]
    Format(String),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Linalg(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
