use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph order {n} exceeds the size limit of {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid bipartition: {0}")]
    InvalidPartition(String),
    #[error("bipartition is unbalanced: |X| = {x}, |Y| = {y}")]
    UnbalancedPartition { x: usize, y: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("matching pair {{{0},{1}}} is an edge of the graph, not of its complement")]
    MatchingNotInComplement(usize, usize),
    #[error("matching does not cover every vertex")]
    MatchingNotPerfect,
    #[error("operation needs even order, got n = {0}")]
    OddOrder(usize),
    #[error("operation needs odd order, got n = {0}")]
    EvenOrder(usize),
    #[error("vertex sets do not partition the graph: {0}")]
    NotAPartition(String),
    #[error("part {0} has odd size")]
    OddPart(usize),
    #[error("leftover vertices cannot be paired: {0}")]
    LeftoverUnpairable(String),
    #[error("Hall condition on non-neighbourhoods fails")]
    HallConditionFails,
    #[error("input too small: {0}")]
    TooSmall(String),
    #[error("graph is not almost regular (max degree {max}, min degree {min})")]
    NotAlmostRegular { max: usize, min: usize },
    #[error("graph has no complete degree-extension")]
    NoExtensionExists,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("edge {{{0},{1}}} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("composition is cyclic but a treelike composition was requested")]
    CyclicSpecRejected,
    #[error("malformed composition: {0}")]
    MalformedSpec(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("color index {index} out of range 1..={k}")]
    ColorOutOfRange { index: usize, k: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
