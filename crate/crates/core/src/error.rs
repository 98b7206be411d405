use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup order must be positive")]
    EmptySemigroup,
    #[error("table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("not an inverse semigroup")]
    NotInverseSemigroup,
    #[error("not a completely regular semigroup")]
    NotCompletelyRegular,
    #[error("not a group")]
    NotAGroup,
    #[error("subset is not closed under multiplication")]
    NotClosed,
    #[error("{what} exceeds the size cap ({requested} > {cap})")]
    TooLarge {
        what: String,
        requested: usize,
        cap: usize,
    },
    #[error("sandwich entry {value} at ({lambda}, {i}) is not a group element")]
    InvalidSandwichEntry {
        lambda: usize,
        i: usize,
        value: usize,
    },
    #[error("sandwich matrix must be {rows}x{cols}")]
    SandwichShape { rows: usize, cols: usize },
    #[error("construction needs at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("girth family needs n >= 3, got {0}")]
    BadN(usize),
    #[error("{0}")]
    BadParams(String),
    #[error("semigroup is commutative: no commuting graph")]
    CommutativeSemigroup,
    #[error("unknown export format {0:?}")]
    UnknownFormat(String),
    #[error("unsupported enumeration order {0}")]
    OrderUnsupported(usize),
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
