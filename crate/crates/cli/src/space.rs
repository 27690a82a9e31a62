use std::fmt::Write as _;

use anyhow::Result;
use rmqkit::{is_power_tower, Element, GeneralRmq, LevelRmq, PackedRmq, SpaceReport};

fn table(out: &mut String, structure: &str, report: &SpaceReport) {
    for row in &report.rows {
        let level = row.level.map_or_else(|| "-".to_string(), |l| l.to_string());
        let _ = writeln!(
            out,
            "{structure:<8} {level:>5} {:<7} {:>5} {:>12} {:>12}",
            row.table.to_string(),
            row.width_bits,
            row.entries,
            row.words
        );
    }
    let _ = writeln!(
        out,
        "{structure:<8} {:>5} {:<7} {:>5} {:>12} {:>12}",
        "total",
        "",
        "",
        "",
        report.total_words()
    );
}

pub fn render(values: &[Element]) -> Result<String> {
    let n = values.len();
    let mut out = String::new();
    let _ = writeln!(out, "n = {n}");
    let _ = writeln!(
        out,
        "{:<8} {:>5} {:<7} {:>5} {:>12} {:>12}",
        "struct", "level", "table", "bits", "entries", "words"
    );
    let mut totals = Vec::new();
    if is_power_tower(n) {
        let level = LevelRmq::new(values)?.space_report();
        let packed = PackedRmq::new(values)?.space_report();
        table(&mut out, "level", &level);
        table(&mut out, "packed", &packed);
        totals.push(("level", level.total_words()));
        totals.push(("packed", packed.total_words()));
    } else {
        let _ = writeln!(out, "level: skipped (n = {n} is not of the form 2^(2^k))");
        let _ = writeln!(out, "packed: skipped (n = {n} is not of the form 2^(2^k))");
    }
    let general = GeneralRmq::new(values)?;
    let report = general.space_report();
    table(&mut out, "general", &report.index);
    let _ = writeln!(
        out,
        "general: block size {}, {} blocks, padded data copy {} words",
        general.block_size(),
        general.block_count(),
        report.data_words
    );
    totals.push(("general", report.index.total_words()));
    for (name, words) in totals {
        let _ = writeln!(
            out,
            "{name}: {words} index words ({:.3} per element)",
            words as f64 / n as f64
        );
    }
    Ok(out)
}
