use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Why an edge set failed to be a spanning tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeDefect {
    Cardinality { expected: usize, got: usize },
    Disconnected,
    Cyclic,
}

impl core::fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TreeDefect::Cardinality { expected, got } => {
                write!(f, "expected {expected} edges, got {got}")
            }
            TreeDefect::Disconnected => f.write_str("edge set does not connect all vertices"),
            TreeDefect::Cyclic => f.write_str("edge set contains a cycle"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid grid size {0}: must be at least 1")]
    InvalidSize(i64),
    #[error("coordinate ({x}, {y}) lies outside the {n}-grid")]
    OutOfRange { x: u32, y: u32, n: u32 },
    #[error("the {0}-grid cannot be tiled by a 5x5 arrangement of equal squares")]
    Tiling(u32),
    #[error("concentric layer {i} of the {n}-grid is not a cycle")]
    Layer { i: u32, n: u32 },
    #[error("not a spanning tree: {0}")]
    NotSpanningTree(TreeDefect),
    #[error("edge {0} belongs to the tree and has no fundamental cycle")]
    NotAChord(u32),
    #[error("edge id {id} is not an edge of the {n}-grid")]
    UnknownEdge { id: u32, n: u32 },
    #[error("empty cycle")]
    EmptyCycle,
    #[error("the 1-grid has no non-tree edges")]
    NoChords,
    #[error("construction check failed: {0}")]
    ConstructionInvalid(String),
    #[error("the recursive step needs n >= 4, got {0}")]
    RecursionNotApplicable(u32),
    #[error("malformed expanded grid: {0}")]
    MalformedExpanded(String),
    #[error("invalid subgrid: {0}")]
    Subgrid(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("point lies on the curve; winding number undefined")]
    DegeneratePoint,
    #[error("COUNTEREXAMPLE: {0}")]
    Counterexample(String),
    #[error("the {n}-grid is too large for exhaustive enumeration (limit {limit}); use sampling")]
    TooLarge { n: u32, limit: u32 },
    #[error("the 1-grid has an empty graphic matroid")]
    EmptyMatroid,
}
