use thiserror::Error;

use crate::table::{AxiomReport, Element};

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid order {0}: must be between 1 and 255")]
    InvalidOrder(usize),
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("{0:?} is not a permutation of the elements")]
    NotAPermutation(Vec<Element>),
    #[error("not a weak BCC-algebra: {0}")]
    NotWeakBcc(Box<AxiomReport>),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("elements {x} and {y} lie in different branches")]
    CrossBranch { x: Element, y: Element },
    #[error("element {x} is outside 0..{order}")]
    NoSuchElement { x: Element, order: usize },
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("order {order} exceeds the enumeration cap {cap}; pass the override to search anyway")]
    OrderAboveCap { order: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
