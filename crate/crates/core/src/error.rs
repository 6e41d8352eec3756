use thiserror::Error;

/// Which alphabet of a machine an identifier belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    State,
    Input,
    Output,
    EnvState,
    Action,
    Observation,
}

impl std::fmt::Display for SetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SetKind::State => "state",
            SetKind::Input => "input",
            SetKind::Output => "output",
            SetKind::EnvState => "environment state",
            SetKind::Action => "action",
            SetKind::Observation => "observation",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown {kind} `{id}`")]
    UnknownIdentifier { kind: SetKind, id: String },

    #[error("duplicate {kind} `{id}`")]
    DuplicateIdentifier { kind: SetKind, id: String },

    #[error("{kind} set must not be empty")]
    EmptySet { kind: SetKind },

    #[error("invalid identifier `{id}`: {reason}")]
    InvalidIdentifier { id: String, reason: &'static str },

    #[error("malformed machine: {0}")]
    Malformed(String),

    #[error("incompatible alphabets: {0}")]
    IncompatibleAlphabets(String),

    #[error("morphism shape: {0}")]
    MorphismShape(String),

    #[error("wiring: {0}")]
    Wiring(String),

    #[error("construction: {0}")]
    Construction(String),

    #[error("encoding: {0}")]
    Encoding(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("observer `{observer}`: step {step} recorded after step {last}")]
    OutOfOrder { observer: String, step: u64, last: u64 },

    #[error("numerical: {0}")]
    Numerical(String),

    #[error("no revisit or goal within {cap} steps")]
    CapExceeded { cap: usize },

    #[error("meta-observation edge {from} -> {to} would close a cycle: {cycle:?}")]
    CyclicMeta {
        from: String,
        to: String,
        cycle: Vec<String>,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("missing transition for ({0}, {1})")]
    MissingTransition(String, String),

    #[error("missing {0} entry for `{1}`")]
    MissingEntry(&'static str, String),

    #[error("undeclared {kind} `{id}` referenced in {context}")]
    UndeclaredReference {
        kind: SetKind,
        id: String,
        context: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
