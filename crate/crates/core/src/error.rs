use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("a space needs at least one point")]
    NoPoints,
    #[error("{0} points exceeds the supported maximum of 8")]
    TooManyPoints(usize),
    #[error("set {0:?} lies outside the ground set")]
    OutOfRange(Subset),
    #[error("family does not contain the empty set")]
    MissingEmpty,
    #[error("family does not contain the full set")]
    MissingFull,
    #[error("family is not closed under union: {0:?} ∪ {1:?} is missing")]
    NotClosedUnderUnion(Subset, Subset),
    #[error("family is not closed under intersection: {0:?} ∩ {1:?} is missing")]
    NotClosedUnderIntersection(Subset, Subset),
    #[error("subspace carrier is empty")]
    EmptyCarrier,
}

impl TopologyError {
    /// Message with point labels instead of indices.
    pub fn describe(&self, labels: &[String]) -> String {
        use crate::space::format_set;
        match self {
            TopologyError::OutOfRange(s) => {
                format!("set {} lies outside the ground set", s.bits())
            }
            TopologyError::NotClosedUnderUnion(a, b) => format!(
                "family is not closed under union: {} ∪ {} = {} is missing",
                format_set(labels, *a),
                format_set(labels, *b),
                format_set(labels, a.union(*b))
            ),
            TopologyError::NotClosedUnderIntersection(a, b) => format!(
                "family is not closed under intersection: {} ∩ {} = {} is missing",
                format_set(labels, *a),
                format_set(labels, *b),
                format_set(labels, a.intersection(*b))
            ),
            other => other.to_string(),
        }
    }
}

/// Errors from reading `.top`, `.map` and set literals.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid topology: {0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl ParseError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TokenError {
    #[error("unknown token `{0}`")]
    Unknown(String),
    #[error("malformed expression: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("scope {scope} needs about {estimate} membership checks, over the budget of {budget}")]
    ScopeTooLarge {
        scope: usize,
        estimate: u128,
        budget: u128,
    },
}
