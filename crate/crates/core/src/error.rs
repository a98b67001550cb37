use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A variable index outside `1..=n`.
    IndexOutOfRange {
        index: u32,
        n: u32,
    },
    /// Ambient size larger than the bitset width.
    AmbientTooLarge {
        n: u32,
    },
    AmbientMismatch {
        left: u32,
        right: u32,
    },
    /// Product of ideals whose supports share a variable.
    OverlappingSupport,
    InvalidParams(&'static str),
    ZeroIdeal,
    UnitIdeal,
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    EmptyTable,
    /// `J` and `K` do not partition the minimal generators of `I`.
    NotAPartition,
    /// Every generator, or none, is divisible by the splitting variable.
    DegeneratePartition,
    InvalidField(u32),
    /// Consecutive boundary maps do not compose to zero.
    NotAComplex {
        degree: i32,
    },
    /// Two Betti-table methods disagreed.
    MethodDisagreement,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, n } => {
                write!(f, "variable index {index} out of range 1..={n}")
            }
            Error::AmbientTooLarge { n } => {
                write!(f, "ambient size {n} exceeds {}", crate::MAX_VARS)
            }
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient sizes differ: {left} vs {right}")
            }
            Error::OverlappingSupport => f.write_str("ideals share variables; product is not squarefree"),
            Error::InvalidParams(why) => write!(f, "invalid parameters: {why}"),
            Error::ZeroIdeal => f.write_str("zero ideal"),
            Error::UnitIdeal => f.write_str("unit ideal"),
            Error::CapExceeded { what, value, cap } => {
                write!(f, "{what} = {value} exceeds cap {cap}")
            }
            Error::EmptyTable => f.write_str("empty Betti table"),
            Error::NotAPartition => f.write_str("generators of J and K do not partition those of I"),
            Error::DegeneratePartition => f.write_str("splitting variable divides all generators or none"),
            Error::InvalidField(p) => write!(f, "{p} is not a prime below 65536"),
            Error::NotAComplex { degree } => {
                write!(f, "boundary maps do not compose to zero at degree {degree}")
            }
            Error::MethodDisagreement => f.write_str("Hochster and Taylor tables disagree"),
        }
    }
}

impl core::error::Error for Error {}
