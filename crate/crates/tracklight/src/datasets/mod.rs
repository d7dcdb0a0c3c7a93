//! Dataset registry, fetching, caching and the bundled offline sample.
//!
//! Public datasets are described by a line-oriented registry file users
//! edit (see `docs/formats.md`). [`fetch_segment`] downloads a segment into
//! `<cache_dir>/<dataset_id>/<segment_id>`, verifies its SHA-256 digest on
//! every call (cached or fresh) and serializes concurrent fetches of the
//! same segment with a file lock. The bundled synthetic handball sample
//! from [`get_dataset_sample`] keeps tests and the example pipeline fully
//! offline.

mod fetch;
mod registry;
mod sample;

pub use fetch::{fetch_segment, fetch_segment_with, HttpTransport, Transport};
pub use registry::{load_registry, DatasetRegistryEntry, SegmentFormat, SegmentInfo};
pub use sample::get_dataset_sample;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("dataset {dataset_id:?} has no segment {segment_id:?}")]
    UnknownSegment {
        dataset_id: String,
        segment_id: String,
    },
    #[error("id {0:?} is not a plain file name")]
    InvalidId(String),
    #[error("digest mismatch: expected {expected}, got {actual}")]
    Integrity { expected: String, actual: String },
    #[error("transfer failed: {0}")]
    Transfer(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
