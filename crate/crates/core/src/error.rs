use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty cone argument")]
    EmptyConeArgument,

    #[error("element index {index} out of range for poset of {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("poset has no least element")]
    MissingLeastElement,

    #[error("poset has no greatest element")]
    MissingGreatestElement,

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("self-cover on element {0}")]
    SelfCover(usize),

    #[error("cover relation contains a cycle through element {0}")]
    CoverCycle(usize),

    #[error("poset has {size} elements, above the limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("class with support {0} is empty")]
    EmptyClass(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("exact search refused: {0}")]
    SearchRefused(String),

    #[error("identity check failed: {0}")]
    IdentityViolated(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
