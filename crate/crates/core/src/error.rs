use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid vertex type {0:?}: {1}")]
    InvalidVertexType(Vec<u32>, &'static str),
    #[error("{0} is not one of the 21 catalog vertex types")]
    NotInCatalog(String),
    #[error("unknown lattice family `{0}`")]
    UnknownFamily(String),
    #[error("invalid strip sequence: {0}")]
    InvalidStrips(String),
    #[error("invalid extent: {0}")]
    InvalidExtent(String),
    #[error("torus of {width}x{height} cells is too small for {family}; minimum is {min}")]
    TorusTooSmall {
        family: String,
        width: u32,
        height: u32,
        min: String,
    },
    #[error("operation requires family {expected}, got {found}")]
    WrongFamily { expected: String, found: String },
    #[error("face {0} is out of range for a patch of {1} faces")]
    FaceOutOfRange(usize, usize),
    #[error("face {0} is not a hexagon")]
    NotAHexagon(usize),
    #[error("substitution targets {0} and {1} are adjacent")]
    AdjacentTargets(usize, usize),
    #[error("probability {0} is outside (0, 1)")]
    ProbabilityOutOfRange(f64),
    #[error("threshold k must be at least 1")]
    InvalidK,
    #[error("state is not at a fixpoint of the bootstrap dynamics")]
    NotAtFixpoint,
    #[error("face {0} has a clipped neighborhood (touches the window boundary)")]
    ClippedNeighborhood(usize),
    #[error("empty face set")]
    EmptyFaceSet,
    #[error("ring decomposition is not supported for {0}")]
    UnsupportedFamily(String),
    #[error("invalid patch: {0}")]
    InvalidPatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("io: {0}")]
    Io(String),
    #[error("serialization: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}
