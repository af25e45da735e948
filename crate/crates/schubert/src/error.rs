//! Error type shared by all rings.

use crate::chow_mod2::Ch2Class;
use crate::young::{Frame, Partition};
use std::fmt;

/// Everything that can go wrong in a computation.
///
/// Variants carrying partitions or classes keep enough data to name the
/// failing invariant in diagnostics (the CLI prints them verbatim).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition does not fit the frame it was used with.
    Frame { partition: Partition, frame: Frame },
    /// Two classes from different frames were combined.
    FrameMismatch { left: Frame, right: Frame },
    /// Input that is not a weakly decreasing sequence, a malformed frame
    /// string, or an out-of-range argument.
    Input(String),
    /// `halved` was called on a partition that is not a doubled partition.
    NotDoubled(Partition),
    /// An even-diagram operation was applied to a non-even diagram.
    NotEven { partition: Partition, frame: Frame },
    /// The even-diagram classification matched zero or several branches.
    /// This cannot happen for valid input; it signals a bug.
    Decomposition {
        partition: Partition,
        frame: Frame,
        branches: usize,
    },
    /// A degree was requested of a class that is not homogeneous of top
    /// codimension.
    Degree(String),
    /// An extra-class tag combination that the frame parity rules out, or a
    /// tagged class where a plain one was required.
    Tag(String),
    /// The twist of a class disagrees with the twist of the cohomology group
    /// it was used in.
    Twist(String),
    /// Rank and Witt-degree of a top class had different parities. The
    /// degree recipe guarantees equal parity, so this signals a bug.
    Parity { rank: i128, witt: i128 },
    /// The Schubert class has no lift to the requested twist; carries the
    /// nonzero Steenrod square obstructing it.
    NotLiftable {
        partition: Partition,
        twist: crate::young::Twist,
        obstruction: Ch2Class,
    },
    /// Codimensions of a Schubert problem do not add up to the dimension of
    /// the Grassmannian.
    Area { total: u64, expected: u64 },
    /// The request exceeds the configured resource bound.
    Resource(String),
    /// An internal consistency check failed; always a bug, never bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Frame { partition, frame } => {
                write!(f, "partition {partition} does not fit the {frame} frame")
            }
            Error::FrameMismatch { left, right } => {
                write!(f, "frame mismatch: {left} vs {right}")
            }
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::NotDoubled(p) => write!(f, "partition {p} is not a doubled partition"),
            Error::NotEven { partition, frame } => {
                write!(f, "partition {partition} is not an even diagram in the {frame} frame")
            }
            Error::Decomposition { partition, frame, branches } => write!(
                f,
                "even diagram {partition} in {frame} matched {branches} decomposition branches (bug)"
            ),
            Error::Degree(msg) => write!(f, "degree undefined: {msg}"),
            Error::Tag(msg) => write!(f, "inadmissible extra-class tag: {msg}"),
            Error::Twist(msg) => write!(f, "twist mismatch: {msg}"),
            Error::Parity { rank, witt } => write!(
                f,
                "rank {rank} and Witt degree {witt} have different parities (bug)"
            ),
            Error::NotLiftable { partition, twist, obstruction } => write!(
                f,
                "class {partition} has no {twist}-twisted lift; Sq2 obstruction: {obstruction}"
            ),
            Error::Area { total, expected } => write!(
                f,
                "codimensions sum to {total}, expected the dimension {expected} of the Grassmannian"
            ),
            Error::Resource(msg) => write!(f, "resource bound exceeded: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violated (bug): {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
