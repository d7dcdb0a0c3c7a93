//! Parsers and writers for the documented text formats.
//!
//! Three tracking formats cover the structural families found in the wild:
//! a wide per-frame CSV, a long sensor-row CSV and a frame-line `.dat`
//! format, plus CSV formats for events and game codes. The exact grammars
//! are normative and documented in `docs/formats.md`. All parsers consume
//! arbitrary byte input and return either a value or a structured
//! [`ParseError`]; they never panic on malformed data.

mod code;
mod dat;
mod events;
mod long;
mod wide;

pub use code::parse_code_csv;
pub use dat::parse_tracking_dat;
pub use events::parse_events_csv;
pub use long::parse_tracking_long_csv;
pub use wide::{parse_tracking_wide_csv, write_tracking_wide_csv};

use std::io::Read;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    /// Input violates the format grammar; `line` is 1-based.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ParseError {
    fn format(line: usize, message: impl Into<String>) -> Self {
        ParseError::Format {
            line,
            message: message.into(),
        }
    }
}

/// A non-fatal problem encountered while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

/// Accounting of a parse run. For row-oriented formats,
/// `rows_read` = accepted rows + `rows_skipped`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub rows_read: usize,
    pub rows_skipped: usize,
    pub warnings: Vec<ParseWarning>,
}

impl ParseReport {
    fn skip(&mut self, line: usize, message: impl Into<String>) {
        self.rows_skipped += 1;
        self.warn(line, message);
    }

    fn warn(&mut self, line: usize, message: impl Into<String>) {
        self.warnings.push(ParseWarning {
            line,
            message: message.into(),
        });
    }
}

/// Framerate assumed when a source carries fewer than two timestamps.
pub const DEFAULT_FRAMERATE: f64 = 25.0;

fn read_utf8(mut source: impl Read) -> Result<String, ParseError> {
    let mut buf = Vec::new();
    source.read_to_end(&mut buf)?;
    String::from_utf8(buf).map_err(|e| {
        let line = 1 + buf_line_of(e.as_bytes(), e.utf8_error().valid_up_to());
        ParseError::format(line, "input is not valid UTF-8")
    })
}

fn buf_line_of(bytes: &[u8], offset: usize) -> usize {
    bytes[..offset].iter().filter(|&&b| b == b'\n').count()
}

/// Median of successive deltas mapped to frames per second via `scale/delta`.
/// Returns [`DEFAULT_FRAMERATE`] when fewer than two samples exist.
fn framerate_from_deltas(times: &[f64], scale: f64) -> f64 {
    if times.len() < 2 {
        return DEFAULT_FRAMERATE;
    }
    let mut deltas: Vec<f64> = times.windows(2).map(|w| w[1] - w[0]).collect();
    deltas.sort_by(|a, b| a.partial_cmp(b).expect("deltas are finite"));
    let mid = deltas.len() / 2;
    let median = if deltas.len() % 2 == 1 {
        deltas[mid]
    } else {
        (deltas[mid - 1] + deltas[mid]) / 2.0
    };
    scale / median
}

fn parse_finite(cell: &str) -> Option<f64> {
    cell.trim().parse::<f64>().ok().filter(|v| v.is_finite())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_framerate_is_robust_to_dropped_frames() {
        // one dropped frame (delta 100) must not shift the median delta of 50
        let times = [0.0, 50.0, 100.0, 200.0, 250.0, 300.0, 350.0];
        assert_eq!(framerate_from_deltas(&times, 1000.0), 20.0);
    }

    #[test]
    fn framerate_defaults_without_deltas() {
        assert_eq!(framerate_from_deltas(&[], 1000.0), DEFAULT_FRAMERATE);
        assert_eq!(framerate_from_deltas(&[10.0], 1000.0), DEFAULT_FRAMERATE);
    }

    #[test]
    fn invalid_utf8_is_a_format_error() {
        let res = read_utf8(&b"abc\n\xff"[..]);
        assert!(matches!(res, Err(ParseError::Format { line: 2, .. })));
    }
}
