use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("argument `{0}` is used in an attack but was never declared")]
    UndeclaredArgument(String),

    #[error("invalid argument name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidName(String),

    #[error("invalid framework: {0}")]
    InvalidFramework(String),

    #[error("{what} needs {required} but the cap is {cap}")]
    TooLarge {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("value {value} of `{argument}` is outside the truth domain of {logic}")]
    DomainViolation {
        argument: String,
        value: String,
        logic: String,
    },

    #[error("assignment has {found} values but the framework has {expected} arguments")]
    AssignmentMismatch { expected: usize, found: usize },

    #[error("value {0} is not a truth value in [0,1]")]
    OutOfUnitInterval(String),

    #[error("cannot parse `{0}` as a rational number")]
    InvalidNumber(String),

    #[error("invalid negation: {0}")]
    InvalidNegation(String),

    #[error("invalid t-norm: {0}")]
    InvalidTNorm(String),

    #[error("t-norm `{name}` is not left-continuous near x={x}, y={y}")]
    NonLeftContinuous { name: String, x: String, y: String },

    #[error("ternarization is undefined: `{argument}` has value 1 and so does its attacker `{attacker}`")]
    Partiality { argument: String, attacker: String },

    #[error("geometrical update of `{argument}` is undefined: one attacker has value 1 and another has value 0")]
    GeometricalSingularity { argument: String },

    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}
