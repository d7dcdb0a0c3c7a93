use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::{DatasetError, DatasetRegistryEntry};

/// Byte-fetching abstraction so tests (and offline setups) can substitute
/// the network. Implementations return the full response body of a GET.
pub trait Transport {
    fn get(&self, url: &str) -> Result<Vec<u8>, DatasetError>;
}

/// HTTP(S) GET transport. No authentication; follows up to 5 redirects.
#[derive(Debug, Default)]
pub struct HttpTransport;

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<Vec<u8>, DatasetError> {
        let agent: ureq::Agent = ureq::config::Config::builder()
            .max_redirects(5)
            .build()
            .into();
        let mut response = agent
            .get(url)
            .call()
            .map_err(|e| DatasetError::Transfer(e.to_string()))?;
        response
            .body_mut()
            .read_to_vec()
            .map_err(|e| DatasetError::Transfer(e.to_string()))
    }
}

/// Fetches `segment_id` of `entry` into `<cache_dir>/<dataset_id>/<segment_id>`
/// over HTTP(S). See [`fetch_segment_with`] for the full contract.
pub fn fetch_segment(
    entry: &DatasetRegistryEntry,
    segment_id: &str,
    cache_dir: &Path,
) -> Result<PathBuf, DatasetError> {
    fetch_segment_with(entry, segment_id, cache_dir, &HttpTransport)
}

/// Fetches a segment using the given transport.
///
/// The SHA-256 digest from the registry is enforced on every call: a cached
/// file with a matching digest is returned without touching the transport;
/// a tampered cached file triggers a re-download; and a download whose
/// digest still mismatches removes any bad cached file and fails with an
/// integrity error. Transfer failures leave the cache untouched. Concurrent
/// fetches of the same segment serialize on an exclusive file lock.
pub fn fetch_segment_with(
    entry: &DatasetRegistryEntry,
    segment_id: &str,
    cache_dir: &Path,
    transport: &dyn Transport,
) -> Result<PathBuf, DatasetError> {
    let info = entry
        .segments
        .get(segment_id)
        .ok_or_else(|| DatasetError::UnknownSegment {
            dataset_id: entry.dataset_id.clone(),
            segment_id: segment_id.to_string(),
        })?;
    validate_id(&entry.dataset_id)?;
    validate_id(segment_id)?;

    let dir = cache_dir.join(&entry.dataset_id);
    fs::create_dir_all(&dir)?;

    let lock_path = dir.join(format!(".{segment_id}.lock"));
    let lock_file = fs::File::create(&lock_path)?;
    lock_file.lock()?; // released when the handle drops at return

    let target = dir.join(segment_id);
    if target.exists() && file_digest(&target)? == info.sha256 {
        return Ok(target);
    }

    let bytes = transport.get(&info.url)?;
    let digest = hex_digest(&bytes);
    if digest != info.sha256 {
        if target.exists() {
            fs::remove_file(&target)?;
        }
        return Err(DatasetError::Integrity {
            expected: info.sha256.clone(),
            actual: digest,
        });
    }

    let tmp = dir.join(format!(".{segment_id}.part"));
    fs::write(&tmp, &bytes)?;
    fs::rename(&tmp, &target)?;
    Ok(target)
}

fn validate_id(id: &str) -> Result<(), DatasetError> {
    let plain = !id.is_empty()
        && id != "."
        && id != ".."
        && !id.contains('/')
        && !id.contains('\\')
        && !id.starts_with('.');
    if plain {
        Ok(())
    } else {
        Err(DatasetError::InvalidId(id.to_string()))
    }
}

fn file_digest(path: &Path) -> Result<String, DatasetError> {
    Ok(hex_digest(&fs::read(path)?))
}

fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}
