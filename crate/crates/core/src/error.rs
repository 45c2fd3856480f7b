use alloc::boxed::Box;
use alloc::string::String;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not unimodular: |det - 1| = {0:e}")]
    NonUnimodular(f64),
    #[error("eigenvalues are not separated: min gap {0:e}")]
    RepeatedEigenvalues(f64),
    #[error("boundary element is not strongly loxodromic")]
    BoundaryNotLoxodromic,
    #[error("solver did not converge after {restarts} restarts (best residual {residual:e})")]
    NoConvergence { restarts: usize, residual: f64 },
    #[error("requested commutator root could not be realized")]
    RootChoiceUnrealizable,
    #[error("gauge slice is degenerate for this input")]
    GaugeDegenerate,
    #[error("parameter constraint violated: {0}")]
    ConstraintViolated(&'static str),
    #[error("relation residual {0:e} exceeds tolerance")]
    RelationResidual(f64),
    #[error("square-root branch undefined: {0}")]
    DomainError(&'static str),
    #[error("matrix does not commute with the glued curve (residual {0:e})")]
    NotInCentralizer(f64),
    #[error("element is not strongly loxodromic")]
    NotStronglyLoxodromic,
    #[error("eigenvalues do not match target (gap {0:e})")]
    EigenvalueMismatch(f64),
    #[error("eigenvector basis is ill-conditioned (condition {0:e})")]
    IllConditioned(f64),
    #[error("edge {edge}: glued boundaries do not carry inverse spectra (gap {gap:e})")]
    SpectraMismatch { edge: usize, gap: f64 },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("pants {id}: {source}")]
    Pants { id: usize, source: Box<Error> },
    #[error("unknown generator {0}")]
    UnknownGenerator(usize),
    #[error("spectrum is not positive real")]
    NotPositiveRealSpectrum,
    #[error("boundary parameters lie on the degenerate Jacobian locus")]
    DegenerateJacobian,
    #[error("element is not loxodromic")]
    NotLoxodromic,
    #[error("fixed points are not null for the Hermitian form (residual {0:e})")]
    NotNullFixedPoints(f64),
    #[error("linear system determinant vanishes ({0:e})")]
    DegenerateDelta(f64),
    #[error("solution is not conjugate-paired (gap {0:e})")]
    ConjugacyInconsistent(f64),
}

pub type Result<T> = core::result::Result<T, Error>;
