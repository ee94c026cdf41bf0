use thiserror::Error;

use crate::exactmath::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial is not a valid argument to {0}")]
    ZeroPolynomial(&'static str),
    #[error("{op}: unsupported degree {degree} (allowed {min}..={max})")]
    UnsupportedDegree {
        op: &'static str,
        degree: usize,
        min: usize,
        max: usize,
    },
    #[error("common factor: resultant is zero, no Bezout certificate")]
    NoBezoutCertificate,
    #[error("requires squarefree polynomial")]
    NotSquarefree,
    #[error("resolvent undefined at this pair (A{index} has a vanishing denominator)")]
    ResolventUndefined { index: u8 },
    #[error("z = {0} is a root of f_a: parameter undefined")]
    RootOfFamily(Rat),
    #[error("F_m(x,y) = 0: value undefined")]
    ZeroFormValue,
    #[error("usage: {0}")]
    Usage(String),
    #[error("no valid evaluation grid within offset {0}")]
    GridExhausted(usize),
    #[error("internal fault: {0}")]
    Internal(String),
    #[error("malformed golden data: {0}")]
    GoldenData(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for errors caused by the caller's input rather than by a broken
    /// invariant inside the library.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::ZeroPolynomial(_)
                | Error::UnsupportedDegree { .. }
                | Error::NoBezoutCertificate
                | Error::NotSquarefree
                | Error::ResolventUndefined { .. }
                | Error::RootOfFamily(_)
                | Error::ZeroFormValue
                | Error::Usage(_)
        )
    }
}
