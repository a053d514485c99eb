use thiserror::Error;

/// Errors raised by the library.
///
/// Mismatches found by the verification harnesses are reported as data,
/// never through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("not a permutation in one-line notation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("not a strong composition: {0}")]
    InvalidStrongComposition(String),

    #[error("{code} is not the Lehmer code of a permutation in S_{n}")]
    InvalidCode { code: String, n: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u64, u64),

    #[error("ambient mismatch: {0} vs {1} variables")]
    AmbientMismatch(usize, usize),

    #[error("exact division failed: nonzero remainder")]
    InexactDivision,

    #[error("basis {basis} is indexed by {expected}, got {got}")]
    SpeciesMismatch {
        basis: &'static str,
        expected: &'static str,
        got: String,
    },

    #[error("index {index} does not fit in {n} variables")]
    NTooSmall { index: String, n: usize },

    #[error("not in the span of the {basis} basis: stuck at monomial {monomial}")]
    NotInSpan { basis: &'static str, monomial: String },

    #[error("triangularity violation: {basis}{index} does not have {monomial} as extreme term with coefficient 1")]
    TriangularityViolation {
        basis: &'static str,
        index: String,
        monomial: String,
    },

    #[error("{object} objects are indexed by a {expected}")]
    ObjectIndexMismatch {
        object: &'static str,
        expected: &'static str,
    },

    #[error("no combinatorial rule expands {source_basis} into {target}")]
    UnsupportedPair {
        source_basis: &'static str,
        target: &'static str,
    },

    #[error("bump of {0} has no unique dominance-minimal admissible result")]
    BumpNonUnique(String),

    #[error("unknown {what}: {name}")]
    Unknown { what: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
