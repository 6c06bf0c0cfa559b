use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar parameter fell outside the range where the formula is defined.
    Domain { what: &'static str, value: f64 },
    /// A sampled function value or coefficient was NaN or infinite.
    NonFinite { what: &'static str },
    /// The functional already exceeds 1 at `r = 0`, so no Bohr radius exists.
    NoRadius { value_at_zero: f64 },
    /// A parameter grid or sample set was empty.
    EmptyGrid,
    /// No closed form is registered under the requested name.
    UnknownName,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "domain error: {what} (got {value})"),
            Error::NonFinite { what } => write!(f, "non-finite value in {what}"),
            Error::NoRadius { value_at_zero } => {
                write!(f, "functional is {value_at_zero} > 1 at r = 0; no radius exists")
            }
            Error::EmptyGrid => f.write_str("empty parameter grid"),
            Error::UnknownName => f.write_str("unknown check or closed-form name"),
        }
    }
}

impl core::error::Error for Error {}
