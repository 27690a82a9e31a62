use crate::RmqError;

/// Fixed-width unsigned integers packed into 64-bit words.
///
/// The width is a power of two between 2 and 64, so it divides 64 and no
/// entry straddles a word boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedIntSequence {
    width: u32,
    len: usize,
    words: Vec<u64>,
}

impl PackedIntSequence {
    /// Zero-filled sequence of `len` entries of `width` bits.
    pub fn new(width: u32, len: usize) -> Result<Self, RmqError> {
        check_width(width)?;
        Ok(Self {
            width,
            len,
            words: vec![0; word_count(width, len)],
        })
    }

    /// Rebuilds a sequence from its raw word storage.
    pub fn from_words(width: u32, len: usize, words: Vec<u64>) -> Result<Self, RmqError> {
        check_width(width)?;
        if words.len() != word_count(width, len) {
            return Err(RmqError::Argument(format!(
                "{} words cannot hold exactly {len} entries of {width} bits",
                words.len()
            )));
        }
        Ok(Self { width, len, words })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn word_len(&self) -> usize {
        self.words.len()
    }

    /// Largest storable value.
    pub fn max_value(&self) -> u64 {
        u64::MAX >> (64 - self.width)
    }

    pub fn get(&self, index: usize) -> Result<u64, RmqError> {
        if index >= self.len {
            return Err(RmqError::Index {
                index,
                len: self.len,
            });
        }
        Ok(self.get_unchecked(index))
    }

    /// Reads entry `index` with a left shift that drops the higher entries
    /// followed by a right shift that drops the lower ones.
    #[inline(always)]
    pub fn get_unchecked(&self, index: usize) -> u64 {
        debug_assert!(index < self.len);
        let bit = index * self.width as usize;
        let offset = (bit & 63) as u32;
        let word = self.words[bit >> 6];
        (word << (64 - self.width - offset)) >> (64 - self.width)
    }

    pub fn set(&mut self, index: usize, value: u64) -> Result<(), RmqError> {
        if index >= self.len {
            return Err(RmqError::Index {
                index,
                len: self.len,
            });
        }
        if value > self.max_value() {
            return Err(RmqError::Argument(format!(
                "value {value} does not fit in {} bits",
                self.width
            )));
        }
        self.set_unchecked(index, value);
        Ok(())
    }

    #[inline]
    pub(crate) fn set_unchecked(&mut self, index: usize, value: u64) {
        debug_assert!(value <= self.max_value());
        let bit = index * self.width as usize;
        let offset = bit & 63;
        let mask = self.max_value() << offset;
        let w = &mut self.words[bit >> 6];
        *w = (*w & !mask) | (value << offset);
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(|i| self.get_unchecked(i))
    }
}

fn check_width(width: u32) -> Result<(), RmqError> {
    if !(2..=64).contains(&width) || !width.is_power_of_two() {
        return Err(RmqError::Argument(format!(
            "entry width {width} must be a power of two in 2..=64"
        )));
    }
    Ok(())
}

fn word_count(width: u32, len: usize) -> usize {
    (len * width as usize).div_ceil(64)
}
