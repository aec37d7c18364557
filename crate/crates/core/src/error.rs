use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names are part of the public contract: the CLI prints them
/// verbatim on the diagnostic stream so scripted sweeps can match on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotPrime: {0} is not a prime (or prime power where a field size is expected)")]
    NotPrime(u64),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("DegreeOutOfRange: extension degree {0} must lie in 1..=16")]
    DegreeOutOfRange(u32),
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("FieldMismatch: operands belong to different fields")]
    FieldMismatch,
    #[error("OrderUnavailable: no element of order {n} in a field of size {q}")]
    OrderUnavailable { n: u64, q: u64 },

    #[error("NotCoprime: gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },

    #[error("NotCosetClosed: defining set is not closed under multiplication by {q} mod {n} (missing {missing})")]
    NotCosetClosed { n: usize, q: u32, missing: usize },
    #[error("DuplicateResidues: residue {0} listed more than once")]
    DuplicateResidues(usize),
    #[error("ResidueOutOfRange: residue {residue} not in [0, {n})")]
    ResidueOutOfRange { residue: usize, n: usize },
    #[error("NotDivisor: polynomial does not divide x^{0} - 1")]
    NotDivisor(usize),
    #[error("NotMonic: generator polynomial must be monic")]
    NotMonic,
    #[error("DeltaOutOfRange: designed distance {delta} must lie in 2..={n}")]
    DeltaOutOfRange { delta: usize, n: usize },
    #[error("KOutOfRange: dimension {k} must lie in 0..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("LengthMismatch: codes have different length or alphabet")]
    LengthMismatch,

    #[error("ZeroCode: the zero code has no minimum weight")]
    ZeroCode,
    #[error("EmptyDifference: the first code is contained in the second")]
    EmptyDifference,

    #[error("NotNested: C2^perp is not contained in C1")]
    NotNested,
    #[error("NonpositiveDimension: logical dimension {0} < 1")]
    NonpositiveDimension(i64),
    #[error("GaugeOutOfRange: gauge dimension {r} not in 0..={max}")]
    GaugeOutOfRange { r: usize, max: usize },
    #[error("InexactDistance: distances were not computed exactly within the budget")]
    InexactDistance,
    #[error("ConstantFactor: f(x) must have degree >= 1")]
    ConstantFactor,
    #[error("RangeViolation: b = {b} outside [0, {bound})")]
    RangeViolation { b: usize, bound: i64 },
    #[error("TNotInAdmissibleSet: T and its negation must lie inside T(C1^perp) \\ T(C1)")]
    TNotInAdmissibleSet,
    #[error("HullTooLarge: k1 + k2 = {sum} >= n = {n}")]
    HullTooLarge { sum: usize, n: usize },
    #[error("DimensionIdentity: {0}")]
    DimensionIdentity(String),

    #[error("UnknownCommand: {0}")]
    UnknownCommand(String),
    #[error("BadFlag: {0}")]
    BadFlag(String),
    #[error("SchemaViolation: {0}")]
    SchemaViolation(String),
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("SearchSpaceTooLarge: {cosets} cyclotomic cosets (limit 20)")]
    SearchSpaceTooLarge { cosets: usize },
    #[error("Io: {0}")]
    Io(String),
}

impl Error {
    /// The stable name of the error, as surfaced by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::TooLarge(_) => "TooLarge",
            Error::DegreeOutOfRange(_) => "DegreeOutOfRange",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::OrderUnavailable { .. } => "OrderUnavailable",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::NotCosetClosed { .. } => "NotCosetClosed",
            Error::DuplicateResidues(_) => "DuplicateResidues",
            Error::ResidueOutOfRange { .. } => "ResidueOutOfRange",
            Error::NotDivisor(_) => "NotDivisor",
            Error::NotMonic => "NotMonic",
            Error::DeltaOutOfRange { .. } => "DeltaOutOfRange",
            Error::KOutOfRange { .. } => "KOutOfRange",
            Error::LengthMismatch => "LengthMismatch",
            Error::ZeroCode => "ZeroCode",
            Error::EmptyDifference => "EmptyDifference",
            Error::NotNested => "NotNested",
            Error::NonpositiveDimension(_) => "NonpositiveDimension",
            Error::GaugeOutOfRange { .. } => "GaugeOutOfRange",
            Error::InexactDistance => "InexactDistance",
            Error::ConstantFactor => "ConstantFactor",
            Error::RangeViolation { .. } => "RangeViolation",
            Error::TNotInAdmissibleSet => "TNotInAdmissibleSet",
            Error::HullTooLarge { .. } => "HullTooLarge",
            Error::DimensionIdentity(_) => "DimensionIdentity",
            Error::UnknownCommand(_) => "UnknownCommand",
            Error::BadFlag(_) => "BadFlag",
            Error::SchemaViolation(_) => "SchemaViolation",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            Error::Io(_) => "Io",
        }
    }

    /// True for failures that indicate a bug or environment problem rather
    /// than an input that violates a precondition.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::DimensionIdentity(_) | Error::Io(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
