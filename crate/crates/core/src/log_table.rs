use crate::{words_for_bytes, RmqError};

/// Precomputed `⌊log₂ k⌋` for `k` in `1..=n`, one byte per entry.
///
/// Entry 0 is a sentinel stored as 0; no query path reads it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogTable {
    floor_log2: Vec<u8>,
}

impl LogTable {
    pub fn new(n: usize) -> Result<Self, RmqError> {
        if n == 0 {
            return Err(RmqError::Argument(
                "log table needs at least one key".into(),
            ));
        }
        let mut table = Self {
            floor_log2: vec![0],
        };
        table.extend_to(n);
        Ok(table)
    }

    /// Grows the table so that it covers keys up to `n`.
    pub fn extend_to(&mut self, n: usize) {
        let start = self.floor_log2.len();
        if n < start {
            return;
        }
        self.floor_log2.reserve(n + 1 - start);
        for k in start.max(1)..=n {
            let v = if k == 1 {
                0
            } else {
                self.floor_log2[k / 2] + 1
            };
            self.floor_log2.push(v);
        }
    }

    /// Largest key covered.
    pub fn max_key(&self) -> usize {
        self.floor_log2.len() - 1
    }

    #[inline(always)]
    pub fn floor_log2(&self, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.max_key());
        self.floor_log2[k] as usize
    }

    /// `⌊log₂ log₂ k⌋` for `k ≥ 2`, as two chained lookups.
    #[inline(always)]
    pub fn floor_loglog(&self, k: usize) -> usize {
        debug_assert!(k >= 2);
        self.floor_log2(self.floor_log2(k))
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.floor_log2
    }

    pub fn words(&self) -> usize {
        words_for_bytes(self.floor_log2.len())
    }
}
