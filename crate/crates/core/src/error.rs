use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: u64, cap: u64 },
    #[error("{0} is not above the lower weight in the root order")]
    OrderViolation(String),
    #[error("level {level} has {size} vertices, over the cap {cap}")]
    LevelCap { level: usize, size: usize, cap: usize },
    #[error("index set {0} is not admissible")]
    NotAdmissible(String),
    #[error("point {0} is outside the weight polytope")]
    NotInPolytope(String),
    #[error("drift {0} is not dominant")]
    NotDominantDrift(String),
    #[error("{0} is not a weight at this level")]
    NotAWeight(String),
    #[error("Newton solver stalled after {iterations} iterations (gradient norm {gradient})")]
    NoConvergence { iterations: usize, gradient: f64 },
    #[error("enumeration of {count} words exceeds the cap {cap}")]
    EnumerationCap { count: u64, cap: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnsupportedType(_) => "UnsupportedType",
            Error::DimensionCap { .. } => "DimensionCap",
            Error::OrderViolation(_) => "OrderViolation",
            Error::LevelCap { .. } => "LevelCap",
            Error::NotAdmissible(_) => "NotAdmissible",
            Error::NotInPolytope(_) => "NotInPolytope",
            Error::NotDominantDrift(_) => "NotDominantDrift",
            Error::NotAWeight(_) => "NotAWeight",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::EnumerationCap { .. } => "EnumerationCap",
            Error::Invalid(_) => "Invalid",
        }
    }
}
