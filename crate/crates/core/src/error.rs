//! Crate-wide error type.

use std::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The requested prime-field modulus is composite (or < 2).
    NonPrimeModulus(u64),
    /// Inversion of zero in a field.
    DivisionByZero,
    /// Two elements (or an element and an operation) belong to different
    /// coefficient fields.
    ContextMismatch,
    /// Operands live over different variable sets.
    VarSetMismatch,
    /// Vector/exponent lengths disagree.
    LengthMismatch { expected: usize, got: usize },
    /// A generator of a local ideal has a nonzero constant term.
    NonLocalGenerator,
    /// A homogeneous ideal was given an inhomogeneous generator.
    NonHomogeneous,
    /// No truncation order `E <= cap` certified `m^E` inside the ideal.
    /// Inconclusive: the ideal may still be m-primary.
    NotPrimaryUpTo(u32),
    /// The ideal is provably not m-primary.
    NotPrimary,
    /// Some generator of the candidate sub-ideal lies outside the ambient ideal.
    NotContained,
    /// The zero ideal was passed where a nonzero one is required.
    ZeroIdeal,
    /// A monomial-only code path received a non-monomial generator.
    NotMonomial,
    /// A claimed minimal prime does not contain the ideal.
    ContainmentFailure(String),
    /// The supplied decomposition has the wrong minimal dimension.
    DimensionMismatch { ideal: usize, primes: usize },
    /// The coefficient field has too few elements for the requested family.
    FieldTooSmall { needed: u64, available: u64 },
    /// The form family is not independent.
    DependentFamily,
    /// Finite differences of the colength sequence did not stabilize.
    EscalateSamples { s_max: u32 },
    /// A fiber presentation did not stabilize within its degree bound.
    NotStabilized { d_max: u32 },
    /// Reduction search exhausted all candidates.
    SearchFailed(Box<crate::search::SearchDiagnostics>),
    /// Text input could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrimeModulus(p) => write!(f, "modulus {} is not prime", p),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ContextMismatch => write!(f, "field context mismatch"),
            Error::VarSetMismatch => write!(f, "variable set mismatch"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {}, got {}", expected, got)
            }
            Error::NonLocalGenerator => {
                write!(f, "generator has a nonzero constant term (not in m)")
            }
            Error::NonHomogeneous => write!(f, "generator is not homogeneous"),
            Error::NotPrimaryUpTo(e) => write!(
                f,
                "no power m^E with E <= {} certified inside the ideal (inconclusive)",
                e
            ),
            Error::NotPrimary => write!(f, "ideal is not m-primary"),
            Error::NotContained => {
                write!(f, "candidate ideal is not contained in the ambient ideal")
            }
            Error::ZeroIdeal => write!(f, "zero ideal not allowed here"),
            Error::NotMonomial => write!(f, "non-monomial generators; supply a decomposition"),
            Error::ContainmentFailure(p) => {
                write!(f, "claimed prime {} does not contain the ideal", p)
            }
            Error::DimensionMismatch { ideal, primes } => write!(
                f,
                "dimension mismatch: quotient has dim {}, decomposition minimum is {}",
                ideal, primes
            ),
            Error::FieldTooSmall { needed, available } => write!(
                f,
                "field too small: need {} distinct elements, have {}",
                needed, available
            ),
            Error::DependentFamily => write!(f, "linear form family is not independent"),
            Error::EscalateSamples { s_max } => write!(
                f,
                "colength differences not stabilized at s_max = {}; increase the sample count",
                s_max
            ),
            Error::NotStabilized { d_max } => write!(
                f,
                "fiber presentation did not stabilize by degree {}",
                d_max
            ),
            Error::SearchFailed(d) => write!(f, "reduction search failed: {}", d),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
