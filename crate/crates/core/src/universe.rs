use crate::RmqError;

/// Element type stored in every structure: one signed machine word.
pub type Element = i64;

/// Default universe bound `u`, so elements range over `-2^62 ..= 2^62 - 1`.
pub const DEFAULT_UNIVERSE_BOUND: u64 = 1 << 62;

/// The value universe `{-u, ..., u-1}`.
///
/// The largest value `u-1` doubles as the padding sentinel used by
/// [`GeneralRmq`](crate::GeneralRmq).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    bound: u64,
}

impl Default for Universe {
    fn default() -> Self {
        Self {
            bound: DEFAULT_UNIVERSE_BOUND,
        }
    }
}

impl Universe {
    /// `bound` must lie in `1..=2^63` so both ends fit in an `i64`.
    pub fn new(bound: u64) -> Result<Self, RmqError> {
        if bound == 0 || bound > 1 << 63 {
            return Err(RmqError::Argument(format!(
                "universe bound {bound} must lie in 1..=2^63"
            )));
        }
        Ok(Self { bound })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn min_value(&self) -> Element {
        (self.bound as i128).wrapping_neg() as Element
    }

    pub fn max_value(&self) -> Element {
        (self.bound - 1) as Element
    }

    pub fn sentinel(&self) -> Element {
        self.max_value()
    }

    pub fn contains(&self, value: Element) -> bool {
        value >= self.min_value() && value <= self.max_value()
    }

    /// Checks every value against the universe.
    pub fn validate(&self, values: &[Element]) -> Result<(), RmqError> {
        match values.iter().position(|&v| !self.contains(v)) {
            Some(index) => Err(RmqError::OutOfUniverse {
                index,
                value: values[index],
                bound: self.bound,
            }),
            None => Ok(()),
        }
    }
}
