use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use anyhow::Result;
use rmqkit::query_stream::QueryStream;
use rmqkit::Element;

use crate::impls::Impl;

pub const CSV_HEADER: &str = "impl,n,build_ms,index_words,queries,total_ns,ns_per_query";

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub implementation: Impl,
    pub n: usize,
    pub build_ms: f64,
    pub index_words: usize,
    pub queries: usize,
    pub total_ns: u128,
    pub checksum: Element,
}

impl BenchRow {
    pub fn ns_per_query(&self) -> f64 {
        if self.queries == 0 {
            0.0
        } else {
            self.total_ns as f64 / self.queries as f64
        }
    }
}

#[derive(Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{:.3},{},{},{},{:.2}",
                r.implementation,
                r.n,
                r.build_ms,
                r.index_words,
                r.queries,
                r.total_ns,
                r.ns_per_query()
            );
        }
        out
    }

    pub fn checksums_agree(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].checksum == w[1].checksum)
    }
}

/// Builds each implementation once and runs the same seeded query stream
/// through it, folding answers into a checksum.
pub fn run(values: &[Element], impls: &[Impl], queries: usize, seed: u64) -> Result<BenchReport> {
    let n = values.len();
    let stream: Vec<(usize, usize)> = QueryStream::new(n, seed).take(queries).collect();
    let mut report = BenchReport::default();
    for &which in impls {
        if let Some(reason) = which.skip_reason(n) {
            eprintln!("{which}: skipped ({reason})");
            continue;
        }
        let start = Instant::now();
        let r = which.build(values, None)?;
        let build_ms = start.elapsed().as_secs_f64() * 1e3;

        let mut checksum: Element = 0;
        let start = Instant::now();
        for &(i, j) in &stream {
            checksum = checksum.wrapping_add(r.range_min(black_box(i), black_box(j))?);
        }
        let total_ns = start.elapsed().as_nanos();
        black_box(checksum);
        eprintln!("{which}: checksum {checksum}");

        report.rows.push(BenchRow {
            implementation: which,
            n,
            build_ms,
            index_words: r.index_words(),
            queries: stream.len(),
            total_ns,
            checksum,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_shape_and_checksums() {
        let values: Vec<Element> = (0..256).map(|k| (k * 31 % 17) as Element).collect();
        let report = run(&values, &Impl::ALL, 1000, 5).unwrap();
        assert_eq!(report.rows.len(), 5);
        assert!(report.checksums_agree());
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        for line in lines {
            assert_eq!(line.split(',').count(), 7);
        }
    }

    #[test]
    fn skips_tower_only_impls() {
        let values: Vec<Element> = (0..100).collect();
        let report = run(&values, &Impl::ALL, 10, 5).unwrap();
        let names: Vec<_> = report
            .rows
            .iter()
            .map(|r| r.implementation.name())
            .collect();
        assert_eq!(names, vec!["sqrt", "general", "sparse"]);
    }
}
