use std::fmt;

use clap::ValueEnum;
use rmqkit::{
    is_power_tower, Element, GeneralRmq, LevelRmq, PackedRmq, RangeMin, RmqError, SparseTable,
    SqrtRmq,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Impl {
    Sqrt,
    Level,
    Packed,
    General,
    Sparse,
}

impl Impl {
    pub const ALL: [Impl; 5] = [
        Impl::Sqrt,
        Impl::Level,
        Impl::Packed,
        Impl::General,
        Impl::Sparse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Impl::Sqrt => "sqrt",
            Impl::Level => "level",
            Impl::Packed => "packed",
            Impl::General => "general",
            Impl::Sparse => "sparse",
        }
    }

    fn needs_power_tower(self) -> bool {
        matches!(self, Impl::Level | Impl::Packed)
    }

    /// Why this implementation cannot be built over `n` values, if it can't.
    pub fn skip_reason(self, n: usize) -> Option<String> {
        (self.needs_power_tower() && !is_power_tower(n))
            .then(|| format!("n = {n} is not of the form 2^(2^k)"))
    }

    pub fn build(
        self,
        values: &[Element],
        fault: Option<Fault>,
    ) -> Result<Box<dyn RangeMin>, RmqError> {
        Ok(match self {
            Impl::Sqrt => Box::new(SqrtRmq::new(values)?),
            Impl::Level => {
                let mut r = LevelRmq::new(values)?;
                if fault == Some(Fault::SpanTable) {
                    r.corrupt_span_tables();
                }
                Box::new(r)
            }
            Impl::Packed => Box::new(PackedRmq::new(values)?),
            Impl::General => Box::new(GeneralRmq::new(values)?),
            Impl::Sparse => Box::new(SparseTable::new(values)?),
        })
    }
}

impl fmt::Display for Impl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Deliberate table corruption for testing mismatch reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Overwrite the level structure's span tables.
    SpanTable,
}
