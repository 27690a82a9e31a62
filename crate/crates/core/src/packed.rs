//! Hierarchical RMQ with offset-encoded, bit-packed tables.
//!
//! Every table entry stores the distance from its own index (or from the
//! start of its span) to a position holding the minimum, rather than the
//! minimum itself. At level `x` such distances are below `s_{x+1} =
//! 2^(2^(x+1))`, so `2^(x+1)` bits per entry suffice, and summed over all
//! levels each table family costs fewer than `2·log₂ n` bits per index:
//! `O(n)` words in total. Values are recovered by dereferencing the input.

use std::io::{self, Read, Write};

use thiserror::Error;

use crate::level::{is_power_tower, tower_height};
use crate::oracle::check_range;
use crate::space::{SpaceReport, TableKind};
use crate::{Element, LogTable, PackedIntSequence, RangeMin, RmqError};

const MAGIC: &[u8; 8] = b"RMQPACK1";
const FORMAT_VERSION: u64 = 1;

/// Offset tables for one power-tower sized array, without the array.
///
/// All query methods take the array slice and a log table covering at least
/// its length, so several instances can share one backing sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedTables {
    n: usize,
    height: usize,
    /// `C_x`: distance leftwards from `i` to its block-prefix minimum.
    prefix: Vec<PackedIntSequence>,
    /// `C'_x`: distance rightwards from `i` to its block-suffix minimum.
    suffix: Vec<PackedIntSequence>,
    /// `D_x`: distance from the span start to the span minimum.
    span: Vec<PackedIntSequence>,
    min_pos: usize,
}

impl PackedTables {
    pub fn new(values: &[Element]) -> Result<Self, RmqError> {
        let n = values.len();
        if n == 0 {
            return Err(RmqError::EmptyInput);
        }
        if !is_power_tower(n) {
            return Err(RmqError::NotPowerTower(n));
        }
        let height = tower_height(n);
        let mut prefix = Vec::with_capacity(height);
        let mut suffix = Vec::with_capacity(height);
        let mut span = Vec::with_capacity(height);
        for x in 0..height {
            let shift = 1usize << x;
            let width = (2 * shift) as u32;
            let s = 1usize << shift;

            let mut c = PackedIntSequence::new(width, n)?;
            let mut pos = 0;
            for i in 0..n {
                if i & (s - 1) == 0 || values[i] < values[pos] {
                    pos = i;
                }
                c.set_unchecked(i, (i - pos) as u64);
            }

            let mut c_rev = PackedIntSequence::new(width, n)?;
            let mut block_argmin = vec![0; n >> shift];
            let mut pos = n - 1;
            for i in (0..n).rev() {
                if (i + 1) & (s - 1) == 0 || values[i] <= values[pos] {
                    pos = i;
                }
                c_rev.set_unchecked(i, (pos - i) as u64);
                if i & (s - 1) == 0 {
                    block_argmin[i >> shift] = pos;
                }
            }

            let mut d = PackedIntSequence::new(width, n)?;
            let unused = d.max_value();
            for (parent, siblings) in block_argmin.chunks(s).enumerate() {
                let base = parent * s * s;
                for p in 0..s {
                    let start = base + p * s;
                    for q in 0..p {
                        d.set_unchecked(base + p * s + q, unused);
                    }
                    let mut best = siblings[p];
                    for (q, &cand) in siblings.iter().enumerate().skip(p) {
                        if values[cand] < values[best] {
                            best = cand;
                        }
                        d.set_unchecked(base + p * s + q, (best - start) as u64);
                    }
                }
            }

            prefix.push(c);
            suffix.push(c_rev);
            span.push(d);
        }
        let min_pos = crate::scan_argmin(values, 0, n - 1)?;
        Ok(Self {
            n,
            height,
            prefix,
            suffix,
            span,
            min_pos,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn min_pos(&self) -> usize {
        self.min_pos
    }

    pub fn prefix_offsets(&self, level: usize) -> &PackedIntSequence {
        &self.prefix[level]
    }

    pub fn suffix_offsets(&self, level: usize) -> &PackedIntSequence {
        &self.suffix[level]
    }

    pub fn span_offsets(&self, level: usize) -> &PackedIntSequence {
        &self.span[level]
    }

    /// Position of a minimum of `data[i..=j]`; the caller guarantees
    /// `i ≤ j < n`, `data.len() == n` and a log table covering `n`.
    #[inline]
    pub fn argmin_unchecked(&self, data: &[Element], log: &LogTable, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < self.n && data.len() == self.n);
        if i == 0 && j == self.n - 1 {
            return self.min_pos;
        }
        if j - i < 2 {
            return if data[j] < data[i] { j } else { i };
        }
        let level = log.floor_loglog(j - i);
        let shift = 1usize << level;
        let bi = i >> shift;
        let bj = j >> shift;
        let mut best = i + self.suffix[level].get_unchecked(i) as usize;
        if bj - bi >= 2 {
            let mid = self.span_argmin_unchecked(data, level, bi + 1, bj - 1);
            if data[mid] < data[best] {
                best = mid;
            }
        }
        let right = j - self.prefix[level].get_unchecked(j) as usize;
        if data[right] < data[best] {
            best = right;
        }
        best
    }

    #[inline(always)]
    fn span_argmin_unchecked(
        &self,
        data: &[Element],
        level: usize,
        first: usize,
        last: usize,
    ) -> usize {
        let shift = 1usize << level;
        let mask = (1usize << shift) - 1;
        let p1 = first >> shift;
        let p2 = last >> shift;
        let d = &self.span[level];
        let head = (p1 << (2 * shift)) + ((first & mask) << shift);
        let start = first << shift;
        if p1 == p2 {
            return start + d.get_unchecked(head + (last & mask)) as usize;
        }
        let left = start + d.get_unchecked(head + mask) as usize;
        let base = p2 << (2 * shift);
        let right = base + d.get_unchecked(base + (last & mask)) as usize;
        if data[right] < data[left] {
            right
        } else {
            left
        }
    }

    pub fn space_report(&self) -> SpaceReport {
        let mut report = SpaceReport::default();
        for x in 0..self.height {
            for (kind, seq) in [
                (TableKind::Prefix, &self.prefix[x]),
                (TableKind::Suffix, &self.suffix[x]),
                (TableKind::Span, &self.span[x]),
            ] {
                report.push(
                    Some(x),
                    kind,
                    seq.width() as usize,
                    seq.len(),
                    seq.word_len(),
                );
            }
        }
        report.push(None, TableKind::Scalars, 64, 1, 1);
        report
    }

    pub fn space_words(&self) -> usize {
        self.space_report().total_words()
    }

    /// Checks that every stored offset points inside its block or span.
    pub fn check_offsets(&self) -> Result<(), String> {
        if self.min_pos >= self.n {
            return Err(format!("minimum position {} out of range", self.min_pos));
        }
        for x in 0..self.height {
            let shift = 1usize << x;
            let s = 1usize << shift;
            for i in 0..self.n {
                let c = self.prefix[x].get_unchecked(i) as usize;
                if c > (i & (s - 1)) {
                    return Err(format!("C_{x}[{i}] = {c} leaves the block"));
                }
                let c_rev = self.suffix[x].get_unchecked(i) as usize;
                if c_rev > (s - 1) - (i & (s - 1)) {
                    return Err(format!("C'_{x}[{i}] = {c_rev} leaves the block"));
                }
            }
            for cell in 0..self.n {
                let p = (cell >> shift) & (s - 1);
                let q = cell & (s - 1);
                if p > q {
                    continue;
                }
                let o = self.span[x].get_unchecked(cell) as usize;
                if o >= (q - p + 1) * s {
                    return Err(format!("D_{x} cell {cell} offset {o} leaves its span"));
                }
            }
        }
        Ok(())
    }

    fn write_header<W: Write>(&self, w: &mut W) -> io::Result<()> {
        w.write_all(MAGIC)?;
        for v in [
            FORMAT_VERSION,
            self.n as u64,
            self.height as u64,
            self.min_pos as u64,
        ] {
            w.write_all(&v.to_le_bytes())?;
        }
        for seq in self.tables() {
            for v in [seq.width() as u64, seq.len() as u64, seq.word_len() as u64] {
                w.write_all(&v.to_le_bytes())?;
            }
        }
        Ok(())
    }

    fn tables(&self) -> impl Iterator<Item = &PackedIntSequence> {
        (0..self.height).flat_map(move |x| [&self.prefix[x], &self.suffix[x], &self.span[x]])
    }
}

/// Error decoding a serialized [`PackedRmq`].
#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("unexpected end of input")]
    Truncated,
    #[error("bad magic bytes")]
    BadMagic,
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u64),
    #[error("inconsistent encoding: {0}")]
    Invalid(String),
    #[error(transparent)]
    Structure(#[from] RmqError),
    #[error(transparent)]
    Io(io::Error),
}

impl From<io::Error> for DecodeError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::UnexpectedEof {
            DecodeError::Truncated
        } else {
            DecodeError::Io(e)
        }
    }
}

/// Constant-time RMQ in `O(n)` words over a power-tower length.
///
/// Keeps its own copy of the input, which offset decoding dereferences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedRmq {
    data: Vec<Element>,
    tables: PackedTables,
    log: LogTable,
}

impl PackedRmq {
    pub fn new(values: &[Element]) -> Result<Self, RmqError> {
        let tables = PackedTables::new(values)?;
        Ok(Self {
            data: values.to_vec(),
            tables,
            log: LogTable::new(values.len())?,
        })
    }

    pub fn data(&self) -> &[Element] {
        &self.data
    }

    pub fn tables(&self) -> &PackedTables {
        &self.tables
    }

    pub fn height(&self) -> usize {
        self.tables.height
    }

    pub fn query(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.argmin(i, j).map(|p| self.data[p])
    }

    /// A position in `i..=j` holding the range minimum.
    pub fn argmin(&self, i: usize, j: usize) -> Result<usize, RmqError> {
        check_range(i, j, self.data.len())?;
        Ok(self.tables.argmin_unchecked(&self.data, &self.log, i, j))
    }

    /// Per-level, per-table word counts, including the log table.
    pub fn space_report(&self) -> SpaceReport {
        let mut report = self.tables.space_report();
        report.push(
            None,
            TableKind::Log,
            8,
            self.log.max_key() + 1,
            self.log.words(),
        );
        report
    }

    pub fn space_words(&self) -> usize {
        self.space_report().total_words()
    }

    /// Serializes the tables followed by the retained input.
    ///
    /// Layout, all integers little-endian `u64` unless noted:
    /// magic `"RMQPACK1"` (8 bytes), version, `n`, `K`, position of the
    /// array minimum, then for each level `x < K` and each table in the
    /// order `C_x`, `C'_x`, `D_x` a triple (width, entries, words); then
    /// every table's words in the same order; then `n` values as `i64`.
    pub fn write_to<W: Write>(&self, w: &mut W) -> io::Result<()> {
        self.tables.write_header(w)?;
        for seq in self.tables.tables() {
            for word in seq.words() {
                w.write_all(&word.to_le_bytes())?;
            }
        }
        for v in &self.data {
            w.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.write_to(&mut out)
            .expect("writing to a Vec cannot fail");
        out
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self, DecodeError> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(DecodeError::BadMagic);
        }
        let version = read_u64(r)?;
        if version != FORMAT_VERSION {
            return Err(DecodeError::UnsupportedVersion(version));
        }
        let n = read_usize(r)?;
        let height = read_usize(r)?;
        let min_pos = read_usize(r)?;
        if !is_power_tower(n) {
            return Err(RmqError::NotPowerTower(n).into());
        }
        if height != tower_height(n) {
            return Err(DecodeError::Invalid(format!(
                "height {height} does not match n = {n}"
            )));
        }
        let mut shapes = Vec::with_capacity(3 * height);
        for t in 0..3 * height {
            let width = read_u64(r)?;
            let len = read_usize(r)?;
            let words = read_usize(r)?;
            let expect = 2u64 << (t / 3);
            if width != expect || len != n {
                return Err(DecodeError::Invalid(format!(
                    "table {t}: width {width}, length {len}; expected {expect}, {n}"
                )));
            }
            shapes.push((width as u32, len, words));
        }
        let mut seqs = Vec::with_capacity(shapes.len());
        for (width, len, words) in shapes {
            if words != (len * width as usize).div_ceil(64) {
                return Err(DecodeError::Invalid(format!(
                    "{words} words for {len} entries of {width} bits"
                )));
            }
            let raw = (0..words).map(|_| read_u64(r)).collect::<Result<_, _>>()?;
            seqs.push(PackedIntSequence::from_words(width, len, raw)?);
        }
        let data: Vec<Element> = (0..n)
            .map(|_| read_u64(r).map(|v| v as Element))
            .collect::<Result<_, _>>()?;
        let mut trailing = [0u8; 1];
        if r.read(&mut trailing)? != 0 {
            return Err(DecodeError::Invalid("trailing bytes".into()));
        }

        let mut prefix = Vec::with_capacity(height);
        let mut suffix = Vec::with_capacity(height);
        let mut span = Vec::with_capacity(height);
        let mut it = seqs.into_iter();
        for _ in 0..height {
            prefix.push(it.next().unwrap());
            suffix.push(it.next().unwrap());
            span.push(it.next().unwrap());
        }
        let tables = PackedTables {
            n,
            height,
            prefix,
            suffix,
            span,
            min_pos,
        };
        tables.check_offsets().map_err(DecodeError::Invalid)?;
        Ok(Self {
            data,
            tables,
            log: LogTable::new(n)?,
        })
    }

    pub fn from_bytes(mut bytes: &[u8]) -> Result<Self, DecodeError> {
        Self::read_from(&mut bytes)
    }
}

impl RangeMin for PackedRmq {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn range_min(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.query(i, j)
    }

    fn range_argmin(&self, i: usize, j: usize) -> Option<Result<usize, RmqError>> {
        Some(self.argmin(i, j))
    }

    fn index_words(&self) -> usize {
        self.space_words()
    }
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64, DecodeError> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_usize<R: Read>(r: &mut R) -> Result<usize, DecodeError> {
    let v = read_u64(r)?;
    usize::try_from(v).map_err(|_| DecodeError::Invalid(format!("{v} exceeds usize")))
}
