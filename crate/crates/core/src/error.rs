use thiserror::Error;

/// Every failure the library can report.
///
/// Variants that describe a broken cross-check (`RouteMismatch`,
/// `GenericPointMismatch`, ...) are hard failures: they mean two exact
/// computations that must agree did not.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyBases,
    #[error("bases {0:?} and {1:?} have different cardinalities")]
    UnequalCardinality(Vec<usize>, Vec<usize>),
    #[error("exchange axiom fails: removing {elem} from {b1:?} admits no replacement from {b2:?}")]
    ExchangeAxiomViolation {
        b1: Vec<usize>,
        b2: Vec<usize>,
        elem: usize,
    },
    #[error("rank {r} out of range for ground set of size {n}")]
    RankOutOfRange { r: usize, n: usize },
    #[error("minor would have an empty ground set")]
    EmptyGroundSetResult,
    #[error("subset {subset:?} is not contained in a ground set of size {n}")]
    SubsetOutOfRange { subset: Vec<usize>, n: usize },
    #[error("submodularity fails at S = {s:?}, S' = {t:?}")]
    SubmodularityViolation { s: Vec<usize>, t: Vec<usize> },
    #[error("ground set of size {size} exceeds the guardrail {limit} (raise with --max-ground or TAUTMAT_GUARDRAIL)")]
    GuardrailExceeded { size: usize, limit: usize },
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("interpolation samples are inconsistent with degree bound {0}")]
    InconsistentSamples(usize),
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("integration at two generic points disagrees")]
    GenericPointMismatch,
    #[error("coefficient of a monomial of degree {degree} below the top degree does not vanish")]
    SubDegreeNonzero { degree: usize },
    #[error("expected an integer, got {0}")]
    NonIntegral(String),
    #[error("verification samples disagree with the interpolant after escalating the degree bound to {0}")]
    InterpolationInconsistent(usize),
    #[error("sample point {0} hits a pole")]
    PoleAtSample(String),
    #[error("exterior powers need a class with nonnegative multiplicities")]
    MixedSigns,
    #[error("the two routes for {0} disagree")]
    RouteMismatch(String),
    #[error("division by x + y is not exact; the Tutte polynomial has a constant term")]
    InexactDivision,
    #[error("Euler characteristic routes disagree: {0}")]
    ChiRouteMismatch(String),
    #[error("lattice count {count} differs from Euler characteristic {chi} at {at}")]
    CountMismatch {
        at: String,
        count: String,
        chi: String,
    },
    #[error("identity fails: {0}")]
    IdentityFailure(String),
    #[error("matroid has a loop or a coloop")]
    LoopOrColoopPresent,
    #[error("invalid flag matroid: {0}")]
    InvalidFlag(String),
    #[error(
        "not a matroid quotient: flat {flat:?} of the first matroid is not a flat of the second"
    )]
    NotAQuotient { flat: Vec<usize> },
    #[error("indicator identity fails at {0}")]
    IndicatorIdentityFails(String),
    #[error("valuativity fails for {0}")]
    ValuativityFails(String),
    #[error("property violated: {0}")]
    PropertyViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at {at}: {msg}")]
    ParseError { at: String, msg: String },
    #[error("validation error: {0}")]
    ValidationError(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
