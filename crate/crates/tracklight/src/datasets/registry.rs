use std::collections::BTreeMap;
use std::path::Path;

use crate::core::{Pitch, PitchBoundedness, PitchUnit, Sport};

use super::DatasetError;

/// On-disk format of one dataset segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentFormat {
    WideCsv,
    LongCsv,
    Dat,
}

impl SegmentFormat {
    fn parse(token: &str) -> Option<Self> {
        match token {
            "wide_csv" => Some(SegmentFormat::WideCsv),
            "long_csv" => Some(SegmentFormat::LongCsv),
            "dat" => Some(SegmentFormat::Dat),
            _ => None,
        }
    }
}

/// One downloadable segment: where it lives and how to verify it.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentInfo {
    pub url: String,
    /// Lowercase hex SHA-256 of the file contents, 64 characters.
    pub sha256: String,
    pub format: SegmentFormat,
}

/// A registered dataset with its segments, pitch and nominal framerate.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetRegistryEntry {
    pub dataset_id: String,
    pub segments: BTreeMap<String, SegmentInfo>,
    pub pitch: Pitch,
    pub framerate: f64,
}

/// Loads the registry file: one segment definition per line,
///
/// ```text
/// dataset_id<TAB>segment_id<TAB>url<TAB>sha256<TAB>format<TAB>framerate<TAB>xmin,xmax,ymin,ymax,unit,sport
/// ```
///
/// with `#` comments and blank lines allowed. Each dataset_id may appear on
/// exactly one line; duplicates are a format error.
pub fn load_registry(path: &Path) -> Result<Vec<DatasetRegistryEntry>, DatasetError> {
    let text = std::fs::read_to_string(path)?;
    let mut entries: Vec<DatasetRegistryEntry> = Vec::new();

    for (line_no, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 7 {
            return Err(format_err(line_no, format!("expected 7 tab-separated fields, found {}", fields.len())));
        }
        let dataset_id = fields[0].trim();
        let segment_id = fields[1].trim();
        if dataset_id.is_empty() || segment_id.is_empty() {
            return Err(format_err(line_no, "empty dataset_id or segment_id"));
        }
        if entries.iter().any(|e| e.dataset_id == dataset_id) {
            return Err(format_err(line_no, format!("duplicate dataset_id {:?}", dataset_id)));
        }
        let sha256 = fields[3].trim().to_ascii_lowercase();
        if sha256.len() != 64 || !sha256.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(format_err(line_no, "sha256 must be 64 hex characters"));
        }
        let Some(format) = SegmentFormat::parse(fields[4].trim()) else {
            return Err(format_err(line_no, format!("unknown format {:?} (wide_csv, long_csv or dat)", fields[4])));
        };
        let framerate: f64 = fields[5]
            .trim()
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite() && *v > 0.0)
            .ok_or_else(|| format_err(line_no, format!("framerate {:?} must be a positive number", fields[5])))?;
        let pitch = parse_pitch(fields[6], line_no)?;

        let mut segments = BTreeMap::new();
        segments.insert(
            segment_id.to_string(),
            SegmentInfo {
                url: fields[2].trim().to_string(),
                sha256,
                format,
            },
        );
        entries.push(DatasetRegistryEntry {
            dataset_id: dataset_id.to_string(),
            segments,
            pitch,
            framerate,
        });
    }
    Ok(entries)
}

fn parse_pitch(cell: &str, line_no: usize) -> Result<Pitch, DatasetError> {
    let parts: Vec<&str> = cell.trim().split(',').collect();
    if parts.len() != 6 {
        return Err(format_err(line_no, "pitch must be `xmin,xmax,ymin,ymax,unit,sport`"));
    }
    let nums: Vec<f64> = parts[..4]
        .iter()
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format_err(line_no, "unparsable pitch coordinate"))?;
    let unit = match parts[4].trim() {
        "meters" => PitchUnit::Meters,
        "centimeters" => PitchUnit::Centimeters,
        // percent needs physical length/width the registry line cannot carry
        other => return Err(format_err(line_no, format!("unsupported pitch unit {:?}", other))),
    };
    let sport = match parts[5].trim() {
        "football" => Sport::Football,
        "handball" => Sport::Handball,
        "other" => Sport::Other,
        other => return Err(format_err(line_no, format!("unknown sport {:?}", other))),
    };
    Pitch::new(
        (nums[0], nums[1]),
        (nums[2], nums[3]),
        unit,
        PitchBoundedness::Fixed,
        None,
        None,
        sport,
    )
    .map_err(|e| format_err(line_no, e.to_string()))
}

fn format_err(line: usize, message: impl Into<String>) -> DatasetError {
    DatasetError::Format {
        line,
        message: message.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_registry(content: &str) -> tempfile::NamedTempFile {
        use std::io::Write;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    const GOOD_LINE: &str = "eigd_h\tseg_48_00\thttps://example.org/seg.csv\t0123456789abcdef0123456789abcdef0123456789abcdef0123456789abcdef\twide_csv\t20\t0,40,0,20,meters,handball";

    #[test]
    fn loads_one_entry_with_one_segment() {
        let f = write_registry(&format!("# comment\n\n{GOOD_LINE}\n"));
        let entries = load_registry(f.path()).unwrap();
        assert_eq!(entries.len(), 1);
        let entry = &entries[0];
        assert_eq!(entry.dataset_id, "eigd_h");
        assert_eq!(entry.segments.len(), 1);
        assert_eq!(entry.segments["seg_48_00"].format, SegmentFormat::WideCsv);
        assert_eq!(entry.pitch.sport(), Sport::Handball);
        assert_eq!(entry.framerate, 20.0);
    }

    #[test]
    fn duplicate_dataset_id_fails() {
        let f = write_registry(&format!("{GOOD_LINE}\n{GOOD_LINE}\n"));
        assert!(matches!(
            load_registry(f.path()),
            Err(DatasetError::Format { line: 2, .. })
        ));
    }

    #[test]
    fn short_sha256_fails() {
        let bad = GOOD_LINE.replace(
            "0123456789abcdef0123456789abcdef0123456789abcdef0123456789abcdef",
            "0123456789abcdef0123456789abcdef0123456789abcdef0123456789abcde",
        );
        let f = write_registry(&bad);
        assert!(matches!(load_registry(f.path()), Err(DatasetError::Format { .. })));
    }

    #[test]
    fn unknown_format_fails() {
        let bad = GOOD_LINE.replace("wide_csv", "parquet");
        let f = write_registry(&bad);
        assert!(load_registry(f.path()).is_err());
    }
}
