//! Reference implementations used as ground truth and baselines.

use crate::{Element, LogTable, RangeMin, RmqError};

/// Validates `0 ≤ i ≤ j < len`.
#[inline]
pub fn check_range(i: usize, j: usize, len: usize) -> Result<(), RmqError> {
    if i > j || j >= len {
        return Err(RmqError::Range { i, j, len });
    }
    Ok(())
}

/// Leftmost position of the minimum of `values[i..=j]`, by linear scan.
pub fn scan_argmin(values: &[Element], i: usize, j: usize) -> Result<usize, RmqError> {
    check_range(i, j, values.len())?;
    let mut best = i;
    for (k, &v) in values.iter().enumerate().take(j + 1).skip(i + 1) {
        if v < values[best] {
            best = k;
        }
    }
    Ok(best)
}

/// Minimum of `values[i..=j]`, by linear scan.
pub fn scan_min(values: &[Element], i: usize, j: usize) -> Result<Element, RmqError> {
    scan_argmin(values, i, j).map(|k| values[k])
}

/// Minima of all power-of-two windows: row `k` holds `min(values[i..i + 2^k])`.
#[derive(Debug, Clone)]
pub struct SparseTable {
    rows: Vec<Vec<Element>>,
    log: LogTable,
}

impl SparseTable {
    pub fn new(values: &[Element]) -> Result<Self, RmqError> {
        let n = values.len();
        if n == 0 {
            return Err(RmqError::EmptyInput);
        }
        let log = LogTable::new(n)?;
        let levels = log.floor_log2(n) + 1;
        let mut rows = Vec::with_capacity(levels);
        rows.push(values.to_vec());
        for k in 1..levels {
            let half = 1 << (k - 1);
            let prev: &Vec<Element> = &rows[k - 1];
            let row = (0..=n - (1 << k))
                .map(|i| prev[i].min(prev[i + half]))
                .collect();
            rows.push(row);
        }
        Ok(Self { rows, log })
    }

    pub fn row(&self, k: usize) -> &[Element] {
        &self.rows[k]
    }

    pub fn levels(&self) -> usize {
        self.rows.len()
    }

    pub fn query(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        check_range(i, j, self.rows[0].len())?;
        let k = self.log.floor_log2(j - i + 1);
        let row = &self.rows[k];
        Ok(row[i].min(row[j + 1 - (1 << k)]))
    }
}

impl RangeMin for SparseTable {
    fn len(&self) -> usize {
        self.rows[0].len()
    }

    fn range_min(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.query(i, j)
    }

    // Row 0 is a copy of the input and is not counted.
    fn index_words(&self) -> usize {
        self.rows[1..].iter().map(Vec::len).sum::<usize>() + self.log.words()
    }
}

/// Every `(i, j)` answer precomputed; `Θ(n²)` words, for oracle-scale inputs.
#[derive(Debug, Clone)]
pub struct FullTable {
    n: usize,
    // row i holds j = i..n, starting at offsets[i]
    cells: Vec<Element>,
    offsets: Vec<usize>,
}

impl FullTable {
    pub fn new(values: &[Element]) -> Result<Self, RmqError> {
        let n = values.len();
        if n == 0 {
            return Err(RmqError::EmptyInput);
        }
        let mut cells = Vec::with_capacity(n * (n + 1) / 2);
        let mut offsets = Vec::with_capacity(n);
        for i in 0..n {
            offsets.push(cells.len());
            let mut running = values[i];
            for &v in &values[i..] {
                running = running.min(v);
                cells.push(running);
            }
        }
        Ok(Self { n, cells, offsets })
    }

    pub fn query(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        check_range(i, j, self.n)?;
        Ok(self.cells[self.offsets[i] + (j - i)])
    }
}

impl RangeMin for FullTable {
    fn len(&self) -> usize {
        self.n
    }

    fn range_min(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.query(i, j)
    }

    fn index_words(&self) -> usize {
        self.cells.len() + self.offsets.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn scan_examples() {
        assert_eq!(scan_min(&[5], 0, 0), Ok(5));
        assert_eq!(scan_min(&[2, 2, 2], 0, 2), Ok(2));
        assert_eq!(scan_min(&[3, 1, 4, 1, 5], 1, 3), Ok(1));
        assert_eq!(scan_argmin(&[3, 1, 4, 1, 5], 1, 3), Ok(1));
        assert_eq!(scan_argmin(&[3, 1, 4, 1, 5], 2, 4), Ok(3));
    }

    #[test]
    fn scan_rejects_bad_ranges() {
        let a = [1, 2, 3];
        assert_eq!(
            scan_min(&a, 2, 1),
            Err(RmqError::Range { i: 2, j: 1, len: 3 })
        );
        assert!(scan_min(&a, 0, 3).is_err());
        assert!(scan_min(&[], 0, 0).is_err());
    }

    #[test]
    fn sparse_examples() {
        let t = SparseTable::new(&[4, 2, 7, 1]).unwrap();
        assert_eq!(t.query(0, 3), Ok(1));
        assert_eq!(t.query(2, 2), Ok(7));
        assert!(t.query(1, 4).is_err());

        let desc: Vec<Element> = (0..37).rev().map(|v| v + 100).collect();
        let t = SparseTable::new(&desc).unwrap();
        assert_eq!(t.query(0, 36), Ok(100));
    }

    #[test]
    fn sparse_rows_hold_window_minima() {
        let a = [9, 3, 7, 1, 8, 2, 6, 5, 4];
        let t = SparseTable::new(&a).unwrap();
        assert_eq!(t.levels(), 4);
        for k in 0..t.levels() {
            for (i, &v) in t.row(k).iter().enumerate() {
                assert_eq!(v, scan_min(&a, i, i + (1 << k) - 1).unwrap());
            }
        }
    }

    #[test]
    fn full_table_examples() {
        let a = [3, 1, 4, 1, 5];
        let t = FullTable::new(&a).unwrap();
        for i in 0..a.len() {
            assert_eq!(t.query(i, i), Ok(a[i]));
            for j in i..a.len() {
                assert_eq!(t.query(i, j), scan_min(&a, i, j));
            }
        }
        let z = [0, 4, 2, 9];
        let t = FullTable::new(&z).unwrap();
        for j in 0..z.len() {
            assert_eq!(t.query(0, j), Ok(0));
        }
    }

    proptest! {
        #[test]
        fn oracles_agree(values in prop::collection::vec(any::<i64>(), 1..80)) {
            let sparse = SparseTable::new(&values).unwrap();
            let full = FullTable::new(&values).unwrap();
            for i in 0..values.len() {
                for j in i..values.len() {
                    let want = scan_min(&values, i, j).unwrap();
                    prop_assert_eq!(sparse.query(i, j).unwrap(), want);
                    prop_assert_eq!(full.query(i, j).unwrap(), want);
                }
            }
        }
    }
}
