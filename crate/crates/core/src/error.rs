use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("length must be an odd positive integer, got {0}")]
    OddLengthRequired(usize),

    #[error("polynomial division by zero")]
    DivisionByZero,

    #[error("division requires a divisor with a unit leading coefficient over {ring}, got leading coefficient {leading}")]
    NonUnitDivisor { ring: &'static str, leading: u8 },

    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolyParse { input: String, reason: String },

    #[error("cannot parse vector {input:?}: {reason}")]
    VectorParse { input: String, reason: String },

    #[error("{0} is not liftable: a Hensel lift exists only for squarefree divisors of x^n-1 with nonzero constant term")]
    NotLiftable(String),

    #[error("matrix rows must all have length {expected}, row {row} has length {got}")]
    RaggedMatrix { expected: usize, row: usize, got: usize },

    #[error("matrix must have at least one column")]
    EmptyMatrix,

    #[error("vector entries must lie in {{0,1,2,3}}, found {0}")]
    SymbolOutOfRange(u8),

    #[error("binary words must have even length, got {0}")]
    OddBinaryLength(usize),

    #[error("the zero code has no nonzero codeword, minimum distance is undefined")]
    ZeroCode,

    #[error("code has {size} codewords, exceeding the enumeration limit of {limit}")]
    EnumerationTooLarge { size: u128, limit: u128 },

    #[error("f*g*h must equal x^n-1 over Z4 (n = {n})")]
    NotAFactorization { n: usize },

    #[error("multiplier count must be l-1 = {expected}, got {got}")]
    MultiplierCount { expected: usize, got: usize },

    #[error("invalid search parameters: {0}")]
    InvalidSearch(String),

    #[error("no target distance: binary record table has no entry for length {length}, dimension {dimension}")]
    NoTargetDistance { length: u32, dimension: u32 },

    #[error("table parse error at line {line}: {reason}")]
    TableParse { line: usize, reason: String },

    #[error("record store: {0}")]
    Store(String),

    #[error("duplicate record id {0:?}")]
    DuplicateId(String),

    #[error("no record with id {0:?}")]
    UnknownId(String),

    #[error("malformed construction descriptor: {0}")]
    BadDescriptor(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
