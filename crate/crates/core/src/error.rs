use core::fmt;

use crate::lattice::{Point, Rect};

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the core crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Integer overflow while computing coordinates or extents.
    Overflow,
    /// A rectangle with `lo > hi` on some axis.
    InvalidRect { lo: Point, hi: Point },
    /// Lattice spacings must be positive.
    InvalidLattice { w: i64, h: i64 },
    /// A shift or discriminated offset must be nonzero.
    ZeroShift,
    /// Tile counts must be at least one.
    InvalidCount { nx: i64, ny: i64 },
    /// The operation needs a configuration without holes.
    HasHoles,
    /// A point that must lie inside a rectangle does not.
    OutOfRect { point: Point, rect: Rect },
    /// A pattern set needs at least one pattern.
    EmptyPatternSet,
    /// `duplicate_odd` and `DuplicateOdd` need an odd-mode condition.
    NotOddMode,
    /// A starting condition failed validation.
    InvalidCondition(&'static str),
    /// A construction would exceed the side limit.
    ResourceLimit { side: i64, max_side: i64 },
    /// More steps were scheduled than allowed.
    TooManySteps { steps: usize, max_steps: usize },
    /// The shifted-stack seed must sit on a centered square.
    DomainMismatch,
    /// A chosen hole offset is not a block offset of the tiling.
    NotInOffsets(Point),
    /// A line is outside the window or crosses a hole.
    BadLine,
    /// Strict growth of the boundary profile is only defined for layered toast.
    NotLayered,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => write!(f, "coordinate overflow"),
            Error::InvalidRect { lo, hi } => write!(f, "invalid rectangle {lo} .. {hi}"),
            Error::InvalidLattice { w, h } => write!(f, "invalid lattice spacings ({w}, {h})"),
            Error::ZeroShift => write!(f, "shift must be nonzero"),
            Error::InvalidCount { nx, ny } => write!(f, "invalid tile counts ({nx}, {ny})"),
            Error::HasHoles => write!(f, "configuration must be hole-free"),
            Error::OutOfRect { point, rect } => write!(f, "{point} is outside {rect}"),
            Error::EmptyPatternSet => write!(f, "pattern set is empty"),
            Error::NotOddMode => write!(f, "condition is not in odd mode"),
            Error::InvalidCondition(why) => write!(f, "invalid condition: {why}"),
            Error::ResourceLimit { side, max_side } => {
                write!(f, "side {side} exceeds the limit {max_side}")
            }
            Error::TooManySteps { steps, max_steps } => {
                write!(f, "{steps} steps exceed the limit {max_steps}")
            }
            Error::DomainMismatch => write!(f, "seed must be defined on a centered square"),
            Error::NotInOffsets(t) => write!(f, "{t} is not a block offset"),
            Error::BadLine => write!(f, "line is outside the window or crosses a hole"),
            Error::NotLayered => write!(f, "toast is not layered"),
        }
    }
}

impl core::error::Error for Error {}
