use crate::oracle::check_range;
use crate::{Element, RangeMin, RmqError};

/// `⌈√n⌉` blocks with stored block minima.
///
/// Queries combine a scanned prefix, a scan over the block minima of the
/// covered span, and a scanned suffix. Point updates rescan one block.
#[derive(Debug, Clone)]
pub struct SqrtRmq {
    data: Vec<Element>,
    block_size: usize,
    block_mins: Vec<Element>,
}

impl SqrtRmq {
    pub fn new(values: &[Element]) -> Result<Self, RmqError> {
        let n = values.len();
        if n == 0 {
            return Err(RmqError::EmptyInput);
        }
        let block_size = ceil_sqrt(n);
        Self::with_block_size(values, block_size)
    }

    /// Builds with an explicit block size instead of `⌈√n⌉`.
    pub fn with_block_size(values: &[Element], block_size: usize) -> Result<Self, RmqError> {
        if values.is_empty() {
            return Err(RmqError::EmptyInput);
        }
        if block_size == 0 {
            return Err(RmqError::Argument("block size must be positive".into()));
        }
        let block_mins = values
            .chunks(block_size)
            .map(|c| *c.iter().min().unwrap())
            .collect();
        Ok(Self {
            data: values.to_vec(),
            block_size,
            block_mins,
        })
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn block_mins(&self) -> &[Element] {
        &self.block_mins
    }

    pub fn data(&self) -> &[Element] {
        &self.data
    }

    pub fn query(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.query_counted(i, j).map(|(v, _)| v)
    }

    /// Query that also reports how many elements (data cells plus block
    /// minima) were examined.
    pub fn query_counted(&self, i: usize, j: usize) -> Result<(Element, usize), RmqError> {
        check_range(i, j, self.data.len())?;
        let bi = i / self.block_size;
        let bj = j / self.block_size;
        if bi == bj {
            let v = *self.data[i..=j].iter().min().unwrap();
            return Ok((v, j - i + 1));
        }
        let prefix_end = (bi + 1) * self.block_size;
        let suffix_start = bj * self.block_size;
        let prefix = &self.data[i..prefix_end];
        let span = &self.block_mins[bi + 1..bj];
        let suffix = &self.data[suffix_start..=j];
        let v = prefix
            .iter()
            .chain(span)
            .chain(suffix)
            .copied()
            .min()
            .unwrap();
        Ok((v, prefix.len() + span.len() + suffix.len()))
    }

    /// Sets `data[index] = value` and rescans the affected block.
    pub fn update(&mut self, index: usize, value: Element) -> Result<(), RmqError> {
        self.update_counted(index, value).map(|_| ())
    }

    /// Update that reports how many elements the block rescan touched.
    pub fn update_counted(&mut self, index: usize, value: Element) -> Result<usize, RmqError> {
        let len = self.data.len();
        if index >= len {
            return Err(RmqError::Index { index, len });
        }
        self.data[index] = value;
        let b = index / self.block_size;
        let start = b * self.block_size;
        let end = (start + self.block_size).min(len);
        let block = &self.data[start..end];
        self.block_mins[b] = *block.iter().min().unwrap();
        Ok(block.len())
    }
}

impl RangeMin for SqrtRmq {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn range_min(&self, i: usize, j: usize) -> Result<Element, RmqError> {
        self.query(i, j)
    }

    fn index_words(&self) -> usize {
        self.block_mins.len() + 1
    }
}

fn ceil_sqrt(n: usize) -> usize {
    let r = n.isqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan_min;

    const SIXTEEN: [Element; 16] = [5, 3, 8, 1, 9, 2, 4, 7, 6, 0, 11, 10, 13, 12, 15, 14];

    #[test]
    fn geometry() {
        let s = SqrtRmq::new(&SIXTEEN).unwrap();
        assert_eq!(s.block_size(), 4);
        assert_eq!(s.block_mins().len(), 4);

        let s = SqrtRmq::new(&[7; 9]).unwrap();
        assert_eq!(s.block_mins(), &[7, 7, 7]);

        let s = SqrtRmq::new(&[3, 1, 4, 1]).unwrap();
        assert_eq!(s.block_size(), 2);
        assert_eq!(s.block_mins(), &[1, 1]);

        // short final block: n = 10, b = 4 → blocks of 4, 4, 2
        let s = SqrtRmq::new(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(s.block_size(), 4);
        assert_eq!(s.block_mins(), &[6, 2, 0]);
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(SqrtRmq::new(&[]).unwrap_err(), RmqError::EmptyInput);
    }

    #[test]
    fn ceil_sqrt_values() {
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(2), 2);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(17), 5);
        assert_eq!(ceil_sqrt(130), 12);
    }

    #[test]
    fn queries() {
        let s = SqrtRmq::new(&SIXTEEN).unwrap();
        assert_eq!(s.query(2, 9), Ok(0));
        // inside one block: plain scan
        assert_eq!(s.query_counted(4, 6), Ok((2, 3)));
        assert!(s.query(3, 16).is_err());
        assert!(s.query(5, 4).is_err());
    }

    #[test]
    fn exhaustive_small() {
        for n in 1..=64usize {
            let a: Vec<Element> = (0..n).map(|k| ((k * 7919) % 31) as Element - 15).collect();
            let s = SqrtRmq::new(&a).unwrap();
            for i in 0..n {
                for j in i..n {
                    let (v, touched) = s.query_counted(i, j).unwrap();
                    assert_eq!(v, scan_min(&a, i, j).unwrap());
                    assert!(touched <= 3 * s.block_size());
                }
            }
        }
    }

    #[test]
    fn update_lowers_block_min() {
        let mut s = SqrtRmq::new(&SIXTEEN).unwrap();
        s.update(13, -4).unwrap();
        assert_eq!(s.block_mins()[3], -4);
        assert_eq!(s.query(12, 15), Ok(-4));
    }

    #[test]
    fn update_raising_unique_min_rescans() {
        let mut s = SqrtRmq::new(&SIXTEEN).unwrap();
        // block 2 is [6, 0, 11, 10]; raising the 0 exposes 6
        let touched = s.update_counted(9, 50).unwrap();
        assert_eq!(touched, 4);
        assert_eq!(s.block_mins()[2], 6);
        let mut mirror = SIXTEEN.to_vec();
        mirror[9] = 50;
        for i in 0..16 {
            for j in i..16 {
                assert_eq!(s.query(i, j).unwrap(), scan_min(&mirror, i, j).unwrap());
            }
        }
    }

    #[test]
    fn update_out_of_range() {
        let mut s = SqrtRmq::new(&[1, 2, 3]).unwrap();
        assert_eq!(s.update(3, 0), Err(RmqError::Index { index: 3, len: 3 }));
    }
}
