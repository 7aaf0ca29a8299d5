use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u32, b: u32 },

    #[error("expected 0 < a < b, got a = {a}, b = {b}")]
    BadOrder { a: u32, b: u32 },

    #[error("{what} count {count} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, count: u128, cap: u128 },

    #[error("invalid diagonal {i}-{j} in a polygon with points 0..={b}")]
    InvalidDiagonal { i: usize, j: usize, b: usize },

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("({x}, {y}) is not a laser source on this path")]
    InvalidSource { x: usize, y: usize },

    #[error("binomial formula for {what} is not integral")]
    NonIntegral { what: &'static str },

    #[error("face is not a face of the noncrossing complex: {0}")]
    NotAFaceOfHat(String),

    #[error("face is not a face of the complex: {0}")]
    NotAFace(String),

    #[error("{cone} is not a cone vertex; witness face {witness}")]
    NotConeVertex { cone: String, witness: String },

    #[error("pair ({facet}, {subface}) is not free")]
    NotFree { facet: String, subface: String },

    #[error("{0} is not admissible where an admissible diagonal is required")]
    AdmissibilityViolated(String),

    #[error("structural property violated: {0}")]
    PropertyViolated(String),

    #[error("collapse schedule failed at stage r = {r}, q = {q}: {reason}")]
    ScheduleFailed { r: usize, q: usize, reason: String },

    #[error("matching is not perfect: {0}")]
    NotPerfect(String),

    #[error("ground set of {0} elements exceeds the 128-element face encoding")]
    GroundTooLarge(usize),

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
