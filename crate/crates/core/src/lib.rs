//! Static range minimum query (RMQ) structures.
//!
//! The crate builds up to an index that answers `min(A[i..=j])` in constant
//! time with a linear number of machine words, through a sequence of simpler
//! constructions that are kept around as baselines:
//!
//! * [`SqrtRmq`]: `⌈√n⌉` blocks with stored block minima, `O(√n)` query and
//!   point update.
//! * [`LevelRmq`]: a hierarchy of levels with block sizes `2^(2^x)`, storing
//!   one-sided running minima and parent-aligned span tables as plain words.
//!   Offers the recursive `O(log log n)` query and the loop-free `O(1)` query.
//! * [`PackedRmq`]: the same hierarchy with every table entry replaced by a
//!   relative offset packed into `2^(x+1)` bits, for `O(n)` words total.
//! * [`GeneralRmq`]: arbitrary `n`, padded to a multiple of a power-tower block
//!   size with one packed index per block plus top-level tables.
//!
//! [`scan_min`], [`SparseTable`] and [`FullTable`] serve as oracles.

mod error;
mod general;
mod level;
mod log_table;
mod oracle;
mod packed;
mod packed_seq;
mod space;
mod sqrt;
mod universe;

pub mod dataset;
pub mod query_stream;

pub use error::RmqError;
pub use general::{choose_m, GeneralRmq, GeneralSpaceReport};
pub use level::{is_power_tower, LevelParams, LevelRmq, QueryPlan};
pub use log_table::LogTable;
pub use oracle::{check_range, scan_argmin, scan_min, FullTable, SparseTable};
pub use packed::{DecodeError, PackedRmq, PackedTables};
pub use packed_seq::PackedIntSequence;
pub use space::{SpaceReport, SpaceRow, TableKind};
pub use sqrt::SqrtRmq;
pub use universe::{Element, Universe, DEFAULT_UNIVERSE_BOUND};

/// Common query surface shared by every structure in the crate.
pub trait RangeMin {
    /// Number of addressable elements.
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Minimum of the inclusive range `i..=j`.
    fn range_min(&self, i: usize, j: usize) -> Result<Element, RmqError>;

    /// A position in `i..=j` holding the minimum, for structures that can
    /// report one. `None` means the structure only tracks values.
    fn range_argmin(&self, _i: usize, _j: usize) -> Option<Result<usize, RmqError>> {
        None
    }

    /// Words of auxiliary index storage, excluding the input values.
    fn index_words(&self) -> usize;
}

/// Number of 64-bit words needed to hold `bytes` bytes.
#[inline]
pub(crate) fn words_for_bytes(bytes: usize) -> usize {
    bytes.div_ceil(8)
}
