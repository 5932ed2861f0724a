//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring must have at least one X- and one Y-variable (got n={n}, m={m})")]
    InvalidRing { n: usize, m: usize },

    #[error("multidegree has length {got}, ring has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operator index {index} out of range for {group} group of size {size}")]
    OperatorIndex {
        group: &'static str,
        index: usize,
        size: usize,
    },

    #[error("cohomological degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("block corner ({u0},{v0}) lies in the undefined strip (-n,0) x (-m,0)")]
    InvalidBlockCorner { u0: i64, v0: i64 },

    #[error("window [{umin},{umax}]x[{vmin},{vmax}] does not contain the four corner points")]
    WindowTooSmall {
        umin: i64,
        umax: i64,
        vmin: i64,
        vmax: i64,
    },

    #[error("component at ({u},{v}) is infinite-dimensional; operation requires finite components")]
    InfiniteComponent { u: i64, v: i64 },

    #[error("no rational bigraded series: a summand contains a Laurent state")]
    NoRationalSeries,

    #[error("dimension polynomial undefined: infinite dimensions meet the {quadrant} quadrant")]
    InfiniteDimsInQuadrant { quadrant: &'static str },

    #[error("unknown special module `{0}`")]
    UnknownSpecial(String),

    #[error("monomial must be nonzero (a bare `1` or zero exponent vector is rejected)")]
    ZeroMonomial,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("localization monomial must be nonzero")]
    ZeroLocalization,
}

pub type Result<T> = std::result::Result<T, Error>;
