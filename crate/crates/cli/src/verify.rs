use anyhow::Result;
use rmqkit::query_stream::QueryStream;
use rmqkit::{scan_min, Element, RangeMin};

use crate::impls::{Fault, Impl};
use crate::Mode;

/// Checks every requested implementation; returns false on any mismatch.
pub fn run(
    values: &[Element],
    impls: &[Impl],
    mode: Mode,
    queries: usize,
    seed: u64,
    fault: Option<Fault>,
) -> Result<bool> {
    let n = values.len();
    let reference: Option<Vec<(usize, usize, Element)>> = match mode {
        Mode::Exhaustive => None,
        Mode::Random => Some(
            QueryStream::new(n, seed)
                .take(queries)
                .map(|(i, j)| Ok((i, j, scan_min(values, i, j)?)))
                .collect::<Result<_>>()?,
        ),
    };

    let mut all_ok = true;
    for &which in impls {
        if let Some(reason) = which.skip_reason(n) {
            println!("{which}: skipped ({reason})");
            continue;
        }
        let r = which.build(values, fault)?;
        let outcome = match &reference {
            None => check_exhaustive(r.as_ref(), values),
            Some(queries) => check_list(r.as_ref(), queries),
        }?;
        match outcome {
            Ok(checks) => println!("{which}: ok ({checks} queries)"),
            Err((i, j, got, want)) => {
                println!("mismatch: impl={which} i={i} j={j} got={got} want={want}");
                all_ok = false;
            }
        }
    }
    Ok(all_ok)
}

type Mismatch = (usize, usize, Element, Element);

fn check_exhaustive(r: &dyn RangeMin, values: &[Element]) -> Result<Result<usize, Mismatch>> {
    let n = values.len();
    let mut checks = 0;
    for i in 0..n {
        let mut want = values[i];
        for (j, &v) in values.iter().enumerate().skip(i) {
            want = want.min(v);
            let got = r.range_min(i, j)?;
            if got != want {
                return Ok(Err((i, j, got, want)));
            }
            checks += 1;
        }
    }
    Ok(Ok(checks))
}

fn check_list(
    r: &dyn RangeMin,
    queries: &[(usize, usize, Element)],
) -> Result<Result<usize, Mismatch>> {
    for &(i, j, want) in queries {
        let got = r.range_min(i, j)?;
        if got != want {
            return Ok(Err((i, j, got, want)));
        }
    }
    Ok(Ok(queries.len()))
}
