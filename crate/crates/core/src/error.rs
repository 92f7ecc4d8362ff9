use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at column {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("coefficient not representable in the field: {0}")]
    NotRepresentable(String),

    #[error("{0} is not a prime modulus")]
    InvalidModulus(u64),

    #[error("unrecognized field `{0}` (expected Q or Fp:<prime>)")]
    InvalidField(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands belong to different ring contexts")]
    ContextMismatch,

    #[error("monomial length {found} does not match ring with {expected} variables")]
    LengthMismatch { expected: usize, found: usize },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("resource limit exceeded: {what} > {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("the ideal is the unit ideal")]
    ImproperIdeal,

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("construction hypothesis violated:\n{0}")]
    ConditionFailed(String),

    #[error("{poly} is not in the ideal ({ideal})")]
    NotInIdeal { poly: String, ideal: String },

    #[error("lift failed: {0}")]
    LiftFailure(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
