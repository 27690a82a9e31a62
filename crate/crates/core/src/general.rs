//! Constant-time, linear-space RMQ for arbitrary `n`.
//!
//! The input is padded with the universe sentinel `u-1` up to a multiple of
//! `m = 2^(2^⌊log log n⌋)`, which satisfies `m ≤ n < m²`. Each length-`m`
//! block gets its own [`PackedTables`]; queries spanning several blocks use
//! top-level one-sided offsets and an all-pairs table over the `⌈n/m⌉ ≤ m`
//! blocks.

use std::path::Path;

use crate::dataset::{self, DatasetError};
use crate::oracle::check_range;
use crate::space::{SpaceReport, TableKind};
use crate::{Element, LogTable, PackedIntSequence, PackedTables, RangeMin, RmqError, Universe};

const TOP_WIDTH: u32 = 32;
const TOP_SPAN_UNUSED: u64 = u64::MAX;

/// Block size `m = 2^(2^⌊log₂ log₂ n⌋)` for `n ≥ 2`.
pub fn choose_m(n: usize) -> Result<usize, RmqError> {
    if n < 2 {
        return Err(RmqError::Argument(format!(
            "block size needs n >= 2, got {n}"
        )));
    }
    let loglog = n.ilog2().ilog2();
    Ok(1usize << (1usize << loglog))
}

/// Storage of a [`GeneralRmq`]: the padded data copy and the index proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSpaceReport {
    pub data_words: usize,
    /// Block tables are summed per level across blocks.
    pub index: SpaceReport,
}

#[derive(Debug, Clone)]
pub struct GeneralRmq {
    original_n: usize,
    m: usize,
    universe: Universe,
    padded: Vec<Element>,
    blocks: Vec<PackedTables>,
    top_prefix: PackedIntSequence,
    top_suffix: PackedIntSequence,
    /// `g × g` row-major absolute positions; `p > q` cells unused.
    top_span: Vec<u64>,
    min_pos: usize,
    log: LogTable,
}

impl GeneralRmq {
    pub fn new(values: &[Element]) -> Result<Self, RmqError> {
        Self::with_universe(values, Universe::default())
    }

    pub fn with_universe(values: &[Element], universe: Universe) -> Result<Self, RmqError> {
        let n = values.len();
        if n == 0 {
            return Err(RmqError::EmptyInput);
        }
        universe.validate(values)?;
        let sentinel = universe.sentinel();
        if let Some(index) = values.iter().position(|&v| v == sentinel) {
            return Err(RmqError::SentinelCollision { index, sentinel });
        }
        let min_pos = crate::scan_argmin(values, 0, n - 1)?;

        if n == 1 {
            return Ok(Self {
                original_n: 1,
                m: 1,
                universe,
                padded: values.to_vec(),
                blocks: Vec::new(),
                top_prefix: PackedIntSequence::new(TOP_WIDTH, 0)?,
                top_suffix: PackedIntSequence::new(TOP_WIDTH, 0)?,
                top_span: Vec::new(),
                min_pos,
                log: LogTable::new(1)?,
            });
        }

        let mut log = LogTable::new(n)?;
        let m = 1usize << (1usize << log.floor_loglog(n));
        let g = n.div_ceil(m);
        let padded_len = g * m;
        log.extend_to(padded_len);

        let mut padded = Vec::with_capacity(padded_len);
        padded.extend_from_slice(values);
        padded.resize(padded_len, sentinel);

        let blocks = padded
            .chunks(m)
            .map(PackedTables::new)
            .collect::<Result<Vec<_>, _>>()?;

        let mut top_prefix = PackedIntSequence::new(TOP_WIDTH, padded_len)?;
        let mut top_suffix = PackedIntSequence::new(TOP_WIDTH, padded_len)?;
        let mut pos = 0;
        for i in 0..padded_len {
            if i % m == 0 || padded[i] < padded[pos] {
                pos = i;
            }
            top_prefix.set_unchecked(i, (i - pos) as u64);
        }
        let mut pos = padded_len - 1;
        for i in (0..padded_len).rev() {
            if (i + 1) % m == 0 || padded[i] <= padded[pos] {
                pos = i;
            }
            top_suffix.set_unchecked(i, (pos - i) as u64);
        }

        let block_argmin: Vec<usize> = blocks
            .iter()
            .enumerate()
            .map(|(b, t)| b * m + t.min_pos())
            .collect();
        let mut top_span = vec![TOP_SPAN_UNUSED; g * g];
        for p in 0..g {
            let mut best = block_argmin[p];
            for q in p..g {
                if padded[block_argmin[q]] < padded[best] {
                    best = block_argmin[q];
                }
                top_span[p * g + q] = best as u64;
            }
        }

        Ok(Self {
            original_n: n,
            m,
            universe,
            padded,
            blocks,
            top_prefix,
            top_suffix,
            top_span,
            min_pos,
            log,
        })
    }

    /// Loads a dataset file (text or `RMQ1` binary) and builds over it.
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, DatasetError> {
        let values = dataset::load(path)?;
        Ok(Self::new(&values)?)
    }

    pub fn len(&self) -> usize {
        self.original_n
    }

    pub fn is_empty(&self) -> bool {
        self.original_n == 0
    }

    /// Block size `m` (1 for a single element).
    pub fn block_size(&self) -> usize {
        self.m
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, b: usize) -> &PackedTables {
        &self.blocks[b]
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// The padded sequence `A'`, of length `m·⌈n/m⌉`.
    pub fn padded(&self) -> &[Element] {
        &self.padded
    }

    /// Minimum over whole blocks `p..=q` from the top span table.
    pub fn top_span_min(&self, p: usize, q: usize) -> Result<Element, RmqError> {
        let g = self.blocks.len();
        check_range(p, q, g)?;
        Ok(self.padded[self.top_span[p * g + q] as usize])
    }

    pub fn query(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.argmin(i, j).map(|p| self.padded[p])
    }

    pub fn argmin(&self, i: usize, j: usize) -> Result<usize, RmqError> {
        check_range(i, j, self.original_n)?;
        if i == 0 && j == self.original_n - 1 {
            return Ok(self.min_pos);
        }
        let shift = self.m.trailing_zeros();
        let bi = i >> shift;
        let bj = j >> shift;
        if bi == bj {
            let base = bi << shift;
            let block = &self.padded[base..base + self.m];
            let local = self.blocks[bi].argmin_unchecked(block, &self.log, i - base, j - base);
            return Ok(base + local);
        }
        let data = &self.padded;
        let mut best = i + self.top_suffix.get_unchecked(i) as usize;
        if bj - bi >= 2 {
            let mid = self.top_span[(bi + 1) * self.blocks.len() + bj - 1] as usize;
            if data[mid] < data[best] {
                best = mid;
            }
        }
        let right = j - self.top_prefix.get_unchecked(j) as usize;
        if data[right] < data[best] {
            best = right;
        }
        Ok(best)
    }

    pub fn space_report(&self) -> GeneralSpaceReport {
        let mut index = SpaceReport::default();
        if let Some(first) = self.blocks.first() {
            // identical geometry in every block, so scale the first one
            let count = self.blocks.len();
            for row in first.space_report().rows {
                index.push(
                    row.level,
                    row.table,
                    row.width_bits,
                    row.entries * count,
                    row.words * count,
                );
            }
        }
        for (kind, seq) in [
            (TableKind::TopPrefix, &self.top_prefix),
            (TableKind::TopSuffix, &self.top_suffix),
        ] {
            index.push(None, kind, seq.width() as usize, seq.len(), seq.word_len());
        }
        let g = self.blocks.len();
        index.push(None, TableKind::TopSpan, 64, g * g, g * g);
        index.push(
            None,
            TableKind::Log,
            8,
            self.log.max_key() + 1,
            self.log.words(),
        );
        index.push(None, TableKind::Scalars, 64, 3, 3);
        GeneralSpaceReport {
            data_words: self.padded.len(),
            index,
        }
    }

    pub fn space_words(&self) -> usize {
        self.space_report().index.total_words()
    }
}

impl RangeMin for GeneralRmq {
    fn len(&self) -> usize {
        self.original_n
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
