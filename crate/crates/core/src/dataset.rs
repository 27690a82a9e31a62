//! Dataset generation and the on-disk formats.
//!
//! * Text: ASCII signed decimal integers separated by any whitespace.
//! * Binary: magic `RMQ1`, a little-endian `u64` count, then that many
//!   little-endian `i64` values.
//!
//! Loading detects the format from the magic bytes and rejects values
//! outside the default universe.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;

use rand_core::RngCore;
use thiserror::Error;

use crate::query_stream::rng;
use crate::{Element, RmqError, Universe};

pub const BINARY_MAGIC: &[u8; 4] = b"RMQ1";

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("cannot parse token {token:?} (value #{index}) as a signed 64-bit integer")]
    Parse { token: String, index: usize },
    #[error("binary dataset declares {declared} values but holds {actual} bytes of payload")]
    LengthMismatch { declared: u64, actual: usize },
    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },
    #[error(transparent)]
    Structure(#[from] RmqError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    Uniform,
    Sorted,
    Reverse,
    Constant,
    Sawtooth,
}

impl Distribution {
    pub const ALL: [Distribution; 5] = [
        Distribution::Uniform,
        Distribution::Sorted,
        Distribution::Reverse,
        Distribution::Constant,
        Distribution::Sawtooth,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Sorted => "sorted",
            Distribution::Reverse => "reverse",
            Distribution::Constant => "constant",
            Distribution::Sawtooth => "sawtooth",
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Distribution {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| DatasetError::Unknown {
                kind: "distribution",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Bin,
}

impl FromStr for Format {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "bin" => Ok(Format::Bin),
            _ => Err(DatasetError::Unknown {
                kind: "format",
                name: s.to_string(),
            }),
        }
    }
}

/// Deterministic dataset of `n` values from `dist`.
///
/// Values are drawn from the universe minus its sentinel, so every dataset
/// is accepted by [`GeneralRmq`](crate::GeneralRmq).
pub fn generate(
    n: usize,
    dist: Distribution,
    seed: u64,
    universe: Universe,
) -> Result<Vec<Element>, RmqError> {
    if n == 0 {
        return Err(RmqError::EmptyInput);
    }
    let mut rng = rng(seed);
    let lo = universe.min_value();
    // values in lo ..= sentinel - 1, i.e. 2u - 1 choices
    let span = (universe.bound() - 1) * 2 + 1;
    let mut draw = move || lo.wrapping_add((rng.next_u64() % span) as Element);
    let values = match dist {
        Distribution::Uniform => (0..n).map(|_| draw()).collect(),
        Distribution::Sorted => {
            let mut v: Vec<Element> = (0..n).map(|_| draw()).collect();
            v.sort_unstable();
            v
        }
        Distribution::Reverse => {
            let mut v: Vec<Element> = (0..n).map(|_| draw()).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        }
        Distribution::Constant => vec![draw(); n],
        Distribution::Sawtooth => {
            // descending teeth of length ⌈√n⌉ on a rising baseline
            let period = n.isqrt().max(2);
            (0..n)
                .map(|i| ((i / period) + (period - 1 - i % period)) as Element)
                .collect()
        }
    };
    Ok(values)
}

pub fn encode_text(values: &[Element]) -> String {
    let mut out = String::with_capacity(values.len() * 8);
    for v in values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

pub fn encode_binary(values: &[Element]) -> Vec<u8> {
    let mut out = Vec::with_capacity(12 + values.len() * 8);
    out.extend_from_slice(BINARY_MAGIC);
    out.extend_from_slice(&(values.len() as u64).to_le_bytes());
    for v in values {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

pub fn decode_text(text: &str) -> Result<Vec<Element>, DatasetError> {
    text.split_ascii_whitespace()
        .enumerate()
        .map(|(index, token)| {
            token.parse().map_err(|_| DatasetError::Parse {
                token: token.to_string(),
                index,
            })
        })
        .collect()
}

pub fn decode_binary(bytes: &[u8]) -> Result<Vec<Element>, DatasetError> {
    let payload =
        bytes
            .strip_prefix(BINARY_MAGIC.as_slice())
            .ok_or_else(|| DatasetError::Unknown {
                kind: "binary magic",
                name: String::from_utf8_lossy(&bytes[..bytes.len().min(4)]).into_owned(),
            })?;
    if payload.len() < 8 {
        return Err(DatasetError::LengthMismatch {
            declared: 0,
            actual: payload.len(),
        });
    }
    let (count, body) = payload.split_at(8);
    let declared = u64::from_le_bytes(count.try_into().unwrap());
    if (body.len() as u128) != declared as u128 * 8 {
        return Err(DatasetError::LengthMismatch {
            declared,
            actual: body.len(),
        });
    }
    Ok(body
        .chunks_exact(8)
        .map(|c| Element::from_le_bytes(c.try_into().unwrap()))
        .collect())
}

/// Decodes either format, then checks non-emptiness and the default universe.
pub fn decode(bytes: &[u8]) -> Result<Vec<Element>, DatasetError> {
    let values = if bytes.starts_with(BINARY_MAGIC) {
        decode_binary(bytes)?
    } else {
        let text = std::str::from_utf8(bytes)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        decode_text(text)?
    };
    if values.is_empty() {
        return Err(RmqError::EmptyInput.into());
    }
    Universe::default().validate(&values)?;
    Ok(values)
}

pub fn load(path: impl AsRef<Path>) -> Result<Vec<Element>, DatasetError> {
    decode(&fs::read(path)?)
}

pub fn save(
    path: impl AsRef<Path>,
    values: &[Element],
    format: Format,
) -> Result<(), DatasetError> {
    let bytes = match format {
        Format::Text => encode_text(values).into_bytes(),
        Format::Bin => encode_binary(values),
    };
    fs::write(path, bytes)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distributions_parse() {
        for d in Distribution::ALL {
            assert_eq!(d.name().parse::<Distribution>().unwrap(), d);
        }
        assert!("zipf".parse::<Distribution>().is_err());
        assert_eq!("bin".parse::<Format>().unwrap(), Format::Bin);
        assert!("csv".parse::<Format>().is_err());
    }

    #[test]
    fn generated_shapes() {
        let u = Universe::default();
        let c = generate(4, Distribution::Constant, 1, u).unwrap();
        assert!(c.iter().all(|&v| v == c[0]));
        let s = generate(100, Distribution::Sorted, 1, u).unwrap();
        assert!(s.windows(2).all(|w| w[0] <= w[1]));
        let r = generate(100, Distribution::Reverse, 1, u).unwrap();
        assert!(r.windows(2).all(|w| w[0] >= w[1]));
        let t = generate(100, Distribution::Sawtooth, 1, u).unwrap();
        assert_eq!(&t[..10], &[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(t[10], 10);
        assert!(generate(0, Distribution::Uniform, 1, u).is_err());
    }

    #[test]
    fn uniform_stays_below_sentinel() {
        let u = Universe::new(3).unwrap();
        let v = generate(10_000, Distribution::Uniform, 9, u).unwrap();
        assert!(v.iter().all(|&x| (-3..=1).contains(&x)));
        for want in -3..=1 {
            assert!(v.contains(&want));
        }
        let wide = Universe::new(1 << 63).unwrap();
        let v = generate(1000, Distribution::Uniform, 9, wide).unwrap();
        assert!(v.iter().all(|&x| x != i64::MAX));
    }

    #[test]
    fn deterministic() {
        let u = Universe::default();
        for d in Distribution::ALL {
            assert_eq!(
                generate(64, d, 5, u).unwrap(),
                generate(64, d, 5, u).unwrap()
            );
        }
    }

    #[test]
    fn text_tolerates_whitespace() {
        assert_eq!(decode(b"  3\t-1\n\n 4 \r\n1").unwrap(), vec![3, -1, 4, 1]);
        assert!(matches!(
            decode(b"3 x 4"),
            Err(DatasetError::Parse { index: 1, .. })
        ));
        assert!(matches!(
            decode(b"   "),
            Err(DatasetError::Structure(RmqError::EmptyInput))
        ));
        let too_big = format!("1 {}", i64::MAX);
        assert!(matches!(
            decode(too_big.as_bytes()),
            Err(DatasetError::Structure(RmqError::OutOfUniverse {
                index: 1,
                ..
            }))
        ));
    }

    #[test]
    fn binary_layout() {
        let bytes = encode_binary(&[1, -2]);
        assert_eq!(&bytes[..4], b"RMQ1");
        assert_eq!(&bytes[4..12], &2u64.to_le_bytes());
        assert_eq!(&bytes[12..20], &1i64.to_le_bytes());
        assert_eq!(&bytes[20..28], &(-2i64).to_le_bytes());
        assert_eq!(decode(&bytes).unwrap(), vec![1, -2]);
        assert!(matches!(
            decode(&bytes[..27]),
            Err(DatasetError::LengthMismatch { declared: 2, .. })
        ));
    }

    #[test]
    fn file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let values = generate(1000, Distribution::Uniform, 3, Universe::default()).unwrap();
        for (format, name) in [(Format::Text, "a.txt"), (Format::Bin, "a.bin")] {
            let path = dir.path().join(name);
            save(&path, &values, format).unwrap();
            assert_eq!(load(&path).unwrap(), values);
        }
        assert!(matches!(
            load(dir.path().join("missing")),
            Err(DatasetError::Io(_))
        ));
    }
}
