use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size must be at least 1")]
    EmptyInput,
    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("invalid interval [{x}, {y}] for length {len}")]
    InvalidInterval { x: usize, y: usize, len: usize },
    #[error("no set bit {side} position {index}")]
    NoSetBit { side: Side, index: usize },
    #[error("occurrence {occurrence} of bit {bit} does not exist (count {count})")]
    NoSuchOccurrence {
        bit: u8,
        occurrence: usize,
        count: usize,
    },
    #[error("value is already present")]
    Duplicate,
    #[error("corrupt dump: {0}")]
    Corrupt(&'static str),
    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left of"),
            Side::Right => f.write_str("right of"),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
