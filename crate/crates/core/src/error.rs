use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semigroup must have at least one element")]
    EmptyCarrier,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("table is not square: {0}")]
    NonSquareTable(String),
    #[error("table entry ({row}, {col}) = {value} is out of range for order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("operation is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("element index {index} is out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("subset has length {got}, semigroup has order {expected}")]
    SubsetLength { got: usize, expected: usize },
    #[error("predicate requires a non-empty subset")]
    EmptySubset,
    #[error("prime/semiprime predicates apply only to ideals")]
    NotAnIdeal,
    #[error("predicate requires a non-empty Q-fuzzy subset")]
    EmptyFuzzySubset,
    #[error("Q must be a non-empty set of distinct labels")]
    InvalidQSet,
    #[error("unknown label `{0}` in Q")]
    UnknownQLabel(String),
    #[error("grade matrix has shape {got_rows}x{got_cols}, expected {rows}x{cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("grade {0} is outside [0, 1]")]
    GradeOutOfRange(String),
    #[error("cannot parse grade `{0}`")]
    GradeParse(String),
    #[error("fuzzy subsets belong to different semigroups or Q-sets")]
    MixedOwners,
    #[error("intersection of an empty family")]
    EmptyFamily,
    #[error("alpha {alpha} exceeds 1 - sup = {limit}")]
    AlphaOutOfRange { alpha: String, limit: String },
    #[error("beta {0} is outside [0, 1]")]
    BetaOutOfRange(String),
    #[error("order {order} exceeds the enumeration ceiling {ceiling}")]
    OrderTooLarge { order: usize, ceiling: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("unknown semigroup class `{0}`")]
    UnknownClass(String),
    #[error("unknown predicate kind `{0}`")]
    UnknownKind(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("`{label}` is not a hypothesis of {theorem}")]
    UnknownHypothesisLabel { theorem: String, label: String },
    #[error("invalid sampling configuration: {0}")]
    InvalidConfig(String),
    #[error("{0}")]
    Json(String),
}
