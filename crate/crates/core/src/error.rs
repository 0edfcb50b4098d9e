use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside the domain of the requested operation. The
    /// message names the violated rule.
    Parameter(String),
    /// A computation would exceed a configured size cap.
    Resource {
        what: &'static str,
        requested: u128,
        cap: u128,
    },
    /// The quantity has no closed form in this crate (e.g. `|L|` of an
    /// abelian p-group of rank three or more that is not elementary).
    Unsupported(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Resource {
                what,
                requested,
                cap,
            } => write!(f, "{what} {requested} exceeds the cap {cap}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
