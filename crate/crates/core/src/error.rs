use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("arity {d} is not supported: {reason}")]
    Arity { d: usize, reason: &'static str },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("unknown catalog graph `{0}`")]
    UnknownCatalog(String),

    #[error("invalid graph: {}", join(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("invalid gluing: {0}")]
    Glue(String),

    #[error("invalid precoloring {0:?}")]
    Precoloring(Vec<u8>),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("crossing {pair:?}-Kempe chains at positions {first:?} and {second:?}; the embedding is not plane")]
    CrossingChains {
        pair: (u8, u8),
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// A single failed structural check reported by graph validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Degree { vertex: usize, degree: usize },
    NuNotBijective(String),
    Disconnected { components: usize },
    Rotation(String),
    Genus(usize),
    EndpointOutOfRange { edge: usize, vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Degree { vertex, degree } => {
                write!(
                    f,
                    "internal vertex {vertex} has degree {degree}, expected 3"
                )
            }
            Violation::NuNotBijective(msg) => write!(f, "nu is not a bijection: {msg}"),
            Violation::Disconnected { components } => {
                write!(f, "graph has {components} connected components")
            }
            Violation::Rotation(msg) => write!(f, "bad rotation system: {msg}"),
            Violation::Genus(g) => write!(f, "rotation system has genus {g}, not plane"),
            Violation::EndpointOutOfRange { edge, vertex } => {
                write!(f, "edge {edge} ends at unknown vertex {vertex}")
            }
        }
    }
}
