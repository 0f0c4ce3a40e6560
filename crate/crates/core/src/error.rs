use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not divisible by 1+t (value at -1 is {remainder})")]
    NotDivisible { remainder: BigInt },
    #[error("polynomial is not palindromic with degree bound {degree_bound}")]
    NotPalindromic { degree_bound: usize },
    #[error("vertex {vertex} is out of range for a complex on {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("vertex {vertex} appears in no facet")]
    UnusedVertex { vertex: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("facet list is empty or contains an empty facet")]
    EmptyInput,
    #[error("operation requires a nonempty complex")]
    EmptyComplex,
    #[error("{vertex} is not a vertex of the complex")]
    NotAVertex { vertex: usize },
    #[error("{face:?} is not a face of the complex")]
    NotAFace { face: Vec<usize> },
    #[error("dimension {dim} is outside 1..={max}")]
    DimensionOutOfRange { dim: usize, max: isize },
    #[error("operation needs a complex of {expected} dimension, got dimension {dim}")]
    WrongParity { expected: &'static str, dim: isize },
    #[error("complex is not a {0}")]
    NotASphere(&'static str),
    #[error("parameter {name} = {value} is too small (minimum {min})")]
    TooSmall { name: &'static str, value: usize, min: usize },
    #[error("probability {0} is outside [0, 1]")]
    BadProbability(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("census over {requested} vertices exceeds the cap of {cap}; pass --force to override")]
    CapExceeded { requested: usize, cap: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}
