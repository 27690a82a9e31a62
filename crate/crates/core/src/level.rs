//! Hierarchical block tables over `n = 2^(2^K)`, one word per entry.
//!
//! Level `x` partitions the array into `n / 2^(2^x)` blocks of size
//! `s_x = 2^(2^x)`; a level `x+1` block is the parent of `s_x` consecutive
//! level `x` siblings. Each level below `K` stores
//!
//! * `C_x[i]`: minimum from the start of `i`'s block through `i`,
//! * `C'_x[i]`: minimum from `i` through the end of `i`'s block,
//! * `D_x`: for each parent `b` and sibling pair `p ≤ q`, the minimum over
//!   siblings `p..=q`, at offset `b·s_{x+1} + p·s_x + q`.
//!
//! Level `K` is the whole array and only keeps its minimum.

use crate::oracle::check_range;
use crate::space::{SpaceReport, TableKind};
use crate::{Element, LogTable, RangeMin, RmqError};

/// Cell value for `p > q` entries of a span table.
pub(crate) const SPAN_UNUSED: Element = Element::MAX;

/// True when `n = 2^(2^k)` for some `k ≥ 0`.
pub fn is_power_tower(n: usize) -> bool {
    n.is_power_of_two() && (n.trailing_zeros() as usize).is_power_of_two()
}

/// `log₂ log₂ n` for a power-tower `n`.
#[inline]
pub(crate) fn tower_height(n: usize) -> usize {
    debug_assert!(is_power_tower(n));
    n.trailing_zeros().trailing_zeros() as usize
}

/// Block geometry of one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelParams {
    pub level: usize,
    /// `s_x = 2^(2^x)`.
    pub block_size: usize,
    /// `b_x = n / s_x`.
    pub block_count: usize,
}

impl LevelParams {
    pub fn new(n: usize, level: usize) -> Result<Self, RmqError> {
        if !is_power_tower(n) {
            return Err(RmqError::NotPowerTower(n));
        }
        let height = tower_height(n);
        if level > height {
            return Err(RmqError::Argument(format!(
                "level {level} exceeds top level {height} for n = {n}"
            )));
        }
        let shift = 1usize << level;
        Ok(Self {
            level,
            block_size: 1 << shift,
            block_count: n >> shift,
        })
    }

    /// `log₂ s_x = 2^x`.
    pub fn shift(&self) -> usize {
        1 << self.level
    }
}

/// Where a constant-time query gets its answer from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryPlan {
    /// `(0, n-1)`: the stored array minimum.
    Whole,
    /// `j - i < 2`: `min(A[i], A[j])`.
    Direct,
    /// One-sided tables at `level`, plus a span lookup when
    /// `last_block - first_block ≥ 2`.
    Table {
        level: usize,
        first_block: usize,
        last_block: usize,
    },
}

/// Unpacked hierarchical RMQ over a power-tower length.
#[derive(Debug, Clone)]
pub struct LevelRmq {
    data: Vec<Element>,
    height: usize,
    prefix: Vec<Vec<Element>>,
    suffix: Vec<Vec<Element>>,
    span: Vec<Vec<Element>>,
    min_value: Element,
    log: LogTable,
}

impl LevelRmq {
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
            let s = 1usize << shift;
            let c = one_sided_prefix(values, s);
            let c_rev = one_sided_suffix(values, s);
            // the suffix minimum at a block start is the block minimum
            let block_mins: Vec<Element> = (0..n).step_by(s).map(|i| c_rev[i]).collect();
            span.push(build_span_table(&block_mins, s));
            prefix.push(c);
            suffix.push(c_rev);
        }
        Ok(Self {
            data: values.to_vec(),
            height,
            prefix,
            suffix,
            span,
            min_value: *values.iter().min().unwrap(),
            log: LogTable::new(n)?,
        })
    }

    /// `K = log₂ log₂ n`; tables exist for levels `0..K`.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn params(&self, level: usize) -> Result<LevelParams, RmqError> {
        LevelParams::new(self.data.len(), level)
    }

    pub fn data(&self) -> &[Element] {
        &self.data
    }

    pub fn min_value(&self) -> Element {
        self.min_value
    }

    pub fn log_table(&self) -> &LogTable {
        &self.log
    }

    pub fn prefix_minima(&self, level: usize) -> &[Element] {
        &self.prefix[level]
    }

    pub fn suffix_minima(&self, level: usize) -> &[Element] {
        &self.suffix[level]
    }

    /// Flattened `D_x`; cells with `p > q` hold `Element::MAX`.
    pub fn span_table(&self, level: usize) -> &[Element] {
        &self.span[level]
    }

    /// Recursive query, descending from the top level while both endpoints
    /// share a block.
    pub fn query_recursive(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.query_recursive_traced(i, j).map(|(v, _)| v)
    }

    /// Recursive query that also reports the number of levels visited.
    pub fn query_recursive_traced(&self, i: usize, j: usize) -> Result<(Element, usize), RmqError> {
        let n = self.data.len();
        check_range(i, j, n)?;
        if i == 0 && j == n - 1 {
            return Ok((self.min_value, 0));
        }
        if self.height == 0 {
            return Ok((self.data[i].min(self.data[j]), 0));
        }
        Ok(self.descend(self.height - 1, i, j, 1))
    }

    fn descend(&self, x: usize, i: usize, j: usize, depth: usize) -> (Element, usize) {
        let shift = 1usize << x;
        let bi = i >> shift;
        let bj = j >> shift;
        if bi == bj {
            if x == 0 {
                // blocks of two: i and j cover the whole range
                return (self.data[i].min(self.data[j]), depth);
            }
            return self.descend(x - 1, i, j, depth + 1);
        }
        let mut v = self.suffix[x][i].min(self.prefix[x][j]);
        if bj - bi >= 2 {
            // i and j share the level x+1 block, so one D lookup covers the span
            let mask = (1usize << shift) - 1;
            let parent = i >> (2 * shift);
            let cell = (parent << (2 * shift)) + (((bi + 1) & mask) << shift) + ((bj - 1) & mask);
            v = v.min(self.span[x][cell]);
        }
        (v, depth)
    }

    /// `ℓ = ⌊log log (j - i)⌋` for `j - i ≥ 2`.
    pub fn query_level(&self, i: usize, j: usize) -> Result<usize, RmqError> {
        check_range(i, j, self.data.len())?;
        if j - i < 2 {
            return Err(RmqError::Argument(format!(
                "query level needs j - i >= 2, got ({i}, {j})"
            )));
        }
        Ok(self.log.floor_loglog(j - i))
    }

    /// The decision `query_const` makes for `(i, j)`.
    pub fn plan(&self, i: usize, j: usize) -> Result<QueryPlan, RmqError> {
        let n = self.data.len();
        check_range(i, j, n)?;
        if i == 0 && j == n - 1 {
            return Ok(QueryPlan::Whole);
        }
        if j - i < 2 {
            return Ok(QueryPlan::Direct);
        }
        let level = self.log.floor_loglog(j - i);
        let shift = 1usize << level;
        Ok(QueryPlan::Table {
            level,
            first_block: i >> shift,
            last_block: j >> shift,
        })
    }

    /// Minimum over level-`level` blocks `first..=last`.
    ///
    /// The run may cross at most one parent boundary, in which case it is
    /// answered with one lookup in each parent.
    pub fn span_min(&self, level: usize, first: usize, last: usize) -> Result<Element, RmqError> {
        if level >= self.height {
            return Err(RmqError::Argument(format!(
                "no span table at level {level} (height {})",
                self.height
            )));
        }
        let blocks = self.data.len() >> (1usize << level);
        check_range(first, last, blocks)?;
        let shift = 1usize << level;
        if (last >> shift) - (first >> shift) > 1 {
            return Err(RmqError::Argument(format!(
                "blocks {first}..={last} at level {level} cross more than one parent boundary"
            )));
        }
        Ok(self.span_min_unchecked(level, first, last))
    }

    #[inline(always)]
    fn span_min_unchecked(&self, level: usize, first: usize, last: usize) -> Element {
        let shift = 1usize << level;
        let mask = (1usize << shift) - 1;
        let p1 = first >> shift;
        let p2 = last >> shift;
        let d = &self.span[level];
        let head = (p1 << (2 * shift)) + ((first & mask) << shift);
        if p1 == p2 {
            d[head + (last & mask)]
        } else {
            d[head + mask].min(d[(p2 << (2 * shift)) + (last & mask)])
        }
    }

    /// Loop-free query: jump straight to the query level.
    #[inline]
    pub fn query_const(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        let n = self.data.len();
        check_range(i, j, n)?;
        if i == 0 && j == n - 1 {
            return Ok(self.min_value);
        }
        if j - i < 2 {
            return Ok(self.data[i].min(self.data[j]));
        }
        let level = self.log.floor_loglog(j - i);
        let shift = 1usize << level;
        let bi = i >> shift;
        let bj = j >> shift;
        let v = self.suffix[level][i].min(self.prefix[level][j]);
        if bj - bi >= 2 {
            Ok(v.min(self.span_min_unchecked(level, bi + 1, bj - 1)))
        } else {
            Ok(v)
        }
    }

    pub fn space_report(&self) -> SpaceReport {
        let n = self.data.len();
        let mut report = SpaceReport::default();
        for x in 0..self.height {
            report.push(Some(x), TableKind::Prefix, 64, n, n);
            report.push(Some(x), TableKind::Suffix, 64, n, n);
            report.push(Some(x), TableKind::Span, 64, n, n);
        }
        let log = &self.log;
        report.push(None, TableKind::Log, 8, log.max_key() + 1, log.words());
        report.push(None, TableKind::Scalars, 64, 1, 1);
        report
    }

    /// Overwrites every span table cell so that span lookups return wrong
    /// answers. Exists only to exercise mismatch reporting.
    #[doc(hidden)]
    pub fn corrupt_span_tables(&mut self) {
        for d in &mut self.span {
            d.fill(Element::MIN);
        }
    }
}

impl RangeMin for LevelRmq {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn range_min(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.query_const(i, j)
    }

    fn index_words(&self) -> usize {
        self.space_report().total_words()
    }
}

fn one_sided_prefix(values: &[Element], block: usize) -> Vec<Element> {
    let mut out = Vec::with_capacity(values.len());
    for (i, &v) in values.iter().enumerate() {
        let m = if i & (block - 1) == 0 {
            v
        } else {
            v.min(out[i - 1])
        };
        out.push(m);
    }
    out
}

fn one_sided_suffix(values: &[Element], block: usize) -> Vec<Element> {
    let n = values.len();
    let mut out = vec![0; n];
    for i in (0..n).rev() {
        out[i] = if (i + 1) & (block - 1) == 0 {
            values[i]
        } else {
            values[i].min(out[i + 1])
        };
    }
    out
}

/// Running minima over sibling block minima, one `s × s` square per parent.
fn build_span_table(block_mins: &[Element], s: usize) -> Vec<Element> {
    let mut d = vec![SPAN_UNUSED; block_mins.len() * s];
    for (parent, siblings) in block_mins.chunks(s).enumerate() {
        let base = parent * s * s;
        for p in 0..s {
            let mut running = siblings[p];
            for q in p..s {
                running = running.min(siblings[q]);
                d[base + p * s + q] = running;
            }
        }
    }
    d
}
