use thiserror::Error;

/// Errors produced by construction, validation, and the solver pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} appears in more than one part")]
    OverlappingParts { element: usize },

    #[error("element {element} is not covered by any part")]
    UncoveredElement { element: usize },

    #[error("part {part} has non-positive capacity")]
    NonPositiveCap { part: usize },

    #[error("parts and caps have different lengths ({parts} parts, {caps} caps)")]
    LengthMismatch { parts: usize, caps: usize },

    #[error("part {part} is empty")]
    EmptyPart { part: usize },

    #[error("element {element} is out of range (universe has {universe} elements)")]
    ElementOutOfRange { element: usize, universe: usize },

    #[error("the two matroids have different ground sets ({left} vs {right} elements)")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("edge index {index} is out of range ({edges} edges)")]
    EdgeIndexOutOfRange { index: usize, edges: usize },

    #[error("vertex {vertex} is out of range ({vertices} vertices)")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("vertex {vertex} on the {side} side is isolated")]
    IsolatedVertex { vertex: usize, side: &'static str },

    #[error("malformed circulation instance: {reason}")]
    MalformedInstance { reason: String },

    #[error("partial coloring is invalid: {reason}")]
    InvalidPartial { reason: String },

    #[error("element {element} is already covered by the partial coloring")]
    AlreadyCovered { element: usize },

    #[error("augmentation circulation is infeasible; this is a bug")]
    InternalInfeasible,

    #[error("coloring does not cover the whole ground set (element {element} missing)")]
    IncompleteColoring { element: usize },

    #[error("labels are not a bijection onto 1..=n: {reason}")]
    InvalidLabels { reason: String },

    #[error("kernel search failed to produce a kernel; this is a bug")]
    NoKernelFound,

    #[error(
        "lists shorter than the required {required}, as (element, length) pairs: {offenders:?}"
    )]
    ListTooShort {
        required: usize,
        offenders: Vec<(usize, usize)>,
    },

    #[error("duplicate color {color:?} in list of element {element}")]
    DuplicateListColor { element: usize, color: String },

    #[error("list assignment covers {lists} elements, instance has {elements}")]
    ListCountMismatch { lists: usize, elements: usize },

    #[error("internal invariant violated: {reason}")]
    InternalInvariantViolated { reason: String },

    #[error("instance too large for exhaustive search: {reason}")]
    InstanceTooLarge { reason: String },

    #[error("invalid input file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
