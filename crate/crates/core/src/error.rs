use std::fmt;

use thiserror::Error;

/// A violated assumption of an n-gon configuration. Indices are 1-based and
/// cyclic, as in the statements being checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooFewPoints { n: usize, min: usize },
    InfiniteVertex { index: usize },
    CoincidentVertices { first: usize, second: usize },
    /// (i): `A_index` lies on `l_line`.
    VertexOnLine { index: usize, line: usize },
    /// (ii): `l_prev = l_next` with `prev = index-1`, `next = index+1` (cyclic).
    EqualLines { index: usize, prev: usize, next: usize },
    /// (iii): `l_index` is parallel to `l_next`.
    ParallelLines { index: usize, next: usize },
    /// A collinear triple other than the one a degenerate statement allows.
    CollinearTriple { indices: [usize; 3] },
    /// A required incidence does not hold.
    MissingIncidence(String),
}

impl Violation {
    /// Short tag naming the assumption: "i", "ii", "iii", or a descriptive word.
    pub fn assumption(&self) -> &'static str {
        match self {
            Violation::VertexOnLine { .. } => "i",
            Violation::EqualLines { .. } => "ii",
            Violation::ParallelLines { .. } => "iii",
            Violation::TooFewPoints { .. } => "size",
            Violation::InfiniteVertex { .. } => "finite",
            Violation::CoincidentVertices { .. } => "distinct",
            Violation::CollinearTriple { .. } => "collinear",
            Violation::MissingIncidence(_) => "incidence",
        }
    }

    /// The primary index the violation refers to, when there is one.
    pub fn index(&self) -> Option<usize> {
        match self {
            Violation::VertexOnLine { index, .. }
            | Violation::EqualLines { index, .. }
            | Violation::ParallelLines { index, .. }
            | Violation::InfiniteVertex { index } => Some(*index),
            Violation::CoincidentVertices { first, .. } => Some(*first),
            Violation::CollinearTriple { indices } => Some(indices[0]),
            Violation::TooFewPoints { .. } | Violation::MissingIncidence(_) => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewPoints { n, min } => write!(f, "{n} points given, at least {min} required"),
            Violation::InfiniteVertex { index } => write!(f, "A_{index} is a point at infinity"),
            Violation::CoincidentVertices { first, second } => {
                write!(f, "coincident vertices A_{first} = A_{second}")
            }
            Violation::VertexOnLine { index, line } => {
                write!(f, "assumption (i) violated at index {index}: A_{index} lies on l_{line}")
            }
            Violation::EqualLines { index, prev, next } => {
                write!(f, "assumption (ii) violated at index {index}: l_{prev} = l_{next}")
            }
            Violation::ParallelLines { index, next } => {
                write!(f, "assumption (iii) violated at index {index}: l_{index} is parallel to l_{next}")
            }
            Violation::CollinearTriple { indices: [a, b, c] } => {
                write!(f, "A_{a}, A_{b}, A_{c} are collinear")
            }
            Violation::MissingIncidence(s) => write!(f, "missing incidence: {s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("coincident points")]
    CoincidentPoints,
    #[error("coincident lines")]
    CoincidentLines,
    #[error("homogeneous triple is zero")]
    ZeroTriple,
    #[error("the line at infinity is not allowed here")]
    LineAtInfinity,
    #[error("a finite point is required")]
    PointAtInfinity,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("characteristic 2 is not supported (circles divide by 2; tangential hexagons fail in characteristic 2)")]
    CharacteristicTwo,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("not in general position")]
    NotInGeneralPosition,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("point does not lie on the line")]
    NotOnLine,
    #[error("zero denominator in ratio")]
    ZeroRatioDenominator,
    #[error("undefined ratio")]
    UndefinedRatio,
    #[error("invalid quad: {0}")]
    InvalidQuad(&'static str),
    #[error("apex on base line")]
    ApexOnBaseLine,
    #[error("invalid degenerate axis input: {0}")]
    InvalidDegenerateAxis(&'static str),
    #[error("degenerate involution: center coincides with a fixed pair point")]
    DegenerateInvolution,
    #[error("degenerate circle")]
    DegenerateCircle,
    #[error("identical circles")]
    IdenticalCircles,
    #[error("no finite radical axis")]
    NoFiniteRadicalAxis,
    #[error("invalid configuration: {0}")]
    Config(Violation),
    #[error("center undefined")]
    CenterUndefined,
    #[error("degenerate ratio: {0} vanishes")]
    DegenerateRatio(&'static str),
    #[error("nondegeneracy violated: {0}")]
    Nondegeneracy(&'static str),
    #[error("merge point at infinity, perturb first")]
    MergeAtInfinity,
    #[error("forbidden position: {0}")]
    ForbiddenPosition(&'static str),
    #[error("sampling budget exceeded")]
    BudgetExceeded,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<Violation> for GeomError {
    fn from(v: Violation) -> Self {
        GeomError::Config(v)
    }
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
