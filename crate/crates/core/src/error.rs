//! Crate-wide error type.

use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    EmptyVertexSet,

    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate vertex {vertex} in subset")]
    DuplicateVertex { vertex: usize },

    #[error("vertex subset must be nonempty")]
    EmptySubset,

    #[error("color {color} out of range 1..={color_count}")]
    ColorOutOfRange { color: u32, color_count: u16 },

    #[error("color count must be positive")]
    NoColors,

    #[error("color count {requested} exceeds supported maximum {max}")]
    TooManyColors { requested: u64, max: u16 },

    #[error("spec length {spec_len} does not match color count {color_count}")]
    SpecLengthMismatch { spec_len: usize, color_count: u16 },

    #[error("forbidden clique size at position {index} must be at least 2, got {value}")]
    SpecEntryTooSmall { index: usize, value: usize },

    #[error("color map is not a permutation of 1..={color_count}")]
    NotAPermutation { color_count: u16 },

    #[error("power must be at least 1")]
    ZeroPower,

    #[error("cycle length must be at least 3, got {n}")]
    CycleTooShort { n: usize },

    /// A configured size cap was exceeded. This is a desk-scale guard,
    /// recoverable by raising the cap, never a silent truncation.
    #[error("{what} size {size} exceeds configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("coloring `{which}` has a monochromatic K_{k} in color {color}: {witness:?}")]
    BaseColoringInvalid {
        which: &'static str,
        color: u16,
        k: usize,
        witness: Vec<usize>,
    },

    #[error("designated vertex block induces a color-1 edge {{{u},{v}}}")]
    ColorOneEdgeInBlock { u: usize, v: usize },

    #[error("block size m={m} exceeds vertex count {s}")]
    BlockTooLarge { m: usize, s: usize },

    #[error("colorings use different color counts: {left} vs {right}")]
    ColorCountMismatch { left: u16, right: u16 },

    #[error("input coloring has a monochromatic triangle in color {color}: {witness:?}")]
    InputViolatesSpec { color: u16, witness: Vec<usize> },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("invalid cap override {value:?}: expected a positive integer")]
    InvalidCapOverride { value: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }
}
