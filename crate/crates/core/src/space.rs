use std::fmt;

/// Which table a [`SpaceRow`] accounts for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// One-sided minima from the block start (`C_x`).
    Prefix,
    /// One-sided minima to the block end (`C'_x`).
    Suffix,
    /// Parent-aligned span minima (`D_x`).
    Span,
    /// Floor-log lookup table.
    Log,
    /// Whole-array minimum and other constant-size fields.
    Scalars,
    /// Top-level one-sided minima of the padded wrapper.
    TopPrefix,
    TopSuffix,
    /// Top-level all-pairs block span table of the padded wrapper.
    TopSpan,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableKind::Prefix => "C",
            TableKind::Suffix => "C'",
            TableKind::Span => "D",
            TableKind::Log => "log",
            TableKind::Scalars => "scalars",
            TableKind::TopPrefix => "C_top",
            TableKind::TopSuffix => "C'_top",
            TableKind::TopSpan => "D_top",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceRow {
    /// Hierarchy level, `None` for level-independent tables.
    pub level: Option<usize>,
    pub table: TableKind,
    pub width_bits: usize,
    pub entries: usize,
    pub words: usize,
}

/// Word-level storage breakdown of an index (input values excluded).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpaceReport {
    pub rows: Vec<SpaceRow>,
}

impl SpaceReport {
    pub fn total_words(&self) -> usize {
        self.rows.iter().map(|r| r.words).sum()
    }

    pub fn level_words(&self, level: usize) -> usize {
        self.rows
            .iter()
            .filter(|r| r.level == Some(level))
            .map(|r| r.words)
            .sum()
    }

    /// Distinct levels that appear, ascending.
    pub fn levels(&self) -> Vec<usize> {
        let mut levels: Vec<usize> = self.rows.iter().filter_map(|r| r.level).collect();
        levels.sort_unstable();
        levels.dedup();
        levels
    }

    pub(crate) fn push(
        &mut self,
        level: Option<usize>,
        table: TableKind,
        width_bits: usize,
        entries: usize,
        words: usize,
    ) {
        self.rows.push(SpaceRow {
            level,
            table,
            width_bits,
            entries,
            words,
        });
    }
}
