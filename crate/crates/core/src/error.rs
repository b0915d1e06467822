use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,

    #[error("generators must be positive, got {0}")]
    NonPositive(i64),

    #[error("integers are not coprime (gcd = {gcd})")]
    NonCoprime { gcd: i64 },

    #[error("negative input {0}")]
    NegativeInput(i64),

    #[error("generator list is not minimal: {value} is generated by the others")]
    NotMinimal { value: i64 },

    #[error("Apery modulus {0} is not a positive element of the semigroup")]
    ModulusNotInSemigroup(i64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid corners: {0}")]
    InvalidCorners(String),

    #[error(
        "corner ({x},{y}) collapses to a two-generated member; use the dedicated half-parameter variant"
    )]
    DegenerateCorner { x: i64, y: i64 },

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("case tag {0} has no exceptional matrix")]
    WrongTag(String),

    #[error("matrix has rank below n-1")]
    RankDeficient,

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("binomial is not homogeneous: degrees {plus} and {minus}")]
    NotHomogeneous { plus: i64, minus: i64 },

    #[error("negative exponent in {0}")]
    NegativeExponent(String),

    #[error("{0} is not a gap of the base semigroup")]
    NotAGap(i64),

    #[error("adjoined gaps are not minimal generators: {value}")]
    DuplicateGenerator { value: i64 },

    #[error("complex is broken: {0}")]
    ComplexBroken(String),

    #[error("{theorem} violated: {detail}")]
    TheoremViolation { theorem: String, detail: String },

    #[error("family has {size} members, above the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("unknown table {0}")]
    UnknownTable(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::NonPositive(_) => "NonPositive",
            Error::NonCoprime { .. } => "NonCoprime",
            Error::NegativeInput(_) => "NegativeInput",
            Error::NotMinimal { .. } => "NotMinimal",
            Error::ModulusNotInSemigroup(_) => "ModulusNotInSemigroup",
            Error::InvalidParams(_) => "InvalidParams",
            Error::InvalidCorners(_) => "InvalidCorners",
            Error::DegenerateCorner { .. } => "DegenerateCorner",
            Error::ParityViolation(_) => "ParityViolation",
            Error::WrongTag(_) => "WrongTag",
            Error::RankDeficient => "RankDeficient",
            Error::MalformedMatrix(_) => "MalformedMatrix",
            Error::NotHomogeneous { .. } => "NotHomogeneous",
            Error::NegativeExponent(_) => "NegativeExponent",
            Error::NotAGap(_) => "NotAGap",
            Error::DuplicateGenerator { .. } => "DuplicateGenerator",
            Error::ComplexBroken(_) => "ComplexBroken",
            Error::TheoremViolation { .. } => "TheoremViolation",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::UnknownTable(_) => "UnknownTable",
            Error::InvalidSpec(_) => "InvalidSpec",
        }
    }
}
