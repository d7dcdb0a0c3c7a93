use std::fmt::Write as _;
use std::io::Read;

use crate::core::{Direction, TrackingData};

use super::{framerate_from_deltas, parse_finite, ParseError, ParseReport};

/// Parses the wide tracking CSV: header `frame,t_ms,<pid>_x,<pid>_y[,...]`,
/// one row per frame. The framerate is derived from the median of
/// successive `t_ms` deltas; empty coordinate cells mean missing.
pub fn parse_tracking_wide_csv(
    source: impl Read,
) -> Result<(TrackingData, ParseReport), ParseError> {
    let text = super::read_utf8(source)?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::format(1, "missing header"))?;
    let player_ids = parse_wide_header(header)?;
    let n_players = player_ids.len();

    let mut report = ParseReport::default();
    let mut coords: Vec<f64> = Vec::new();
    let mut times: Vec<f64> = Vec::new();
    let mut frames = 0usize;

    for (line_no, line) in lines {
        report.rows_read += 1;
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 2 + 2 * n_players {
            report.skip(line_no, format!("expected {} cells, found {}", 2 + 2 * n_players, cells.len()));
            continue;
        }
        let Some(t_ms) = parse_finite(cells[1]) else {
            report.skip(line_no, format!("unparsable t_ms {:?}", cells[1]));
            continue;
        };
        if let Some(&prev) = times.last() {
            if t_ms <= prev {
                return Err(ParseError::format(
                    line_no,
                    format!("t_ms {} is not strictly increasing (previous {})", t_ms, prev),
                ));
            }
        }
        match parse_coordinate_cells(&cells[2..]) {
            Ok(row) => {
                coords.extend_from_slice(&row);
                times.push(t_ms);
                frames += 1;
            }
            Err(msg) => report.skip(line_no, msg),
        }
    }

    let framerate = framerate_from_deltas(&times, 1000.0);
    let td = TrackingData::new(coords, frames, player_ids, framerate, Direction::Unspecified)
        .map_err(|e| ParseError::format(1, e.to_string()))?;
    Ok((td, report))
}

fn parse_wide_header(header: &str) -> Result<Vec<String>, ParseError> {
    let cells: Vec<&str> = header.split(',').collect();
    if cells.len() < 2 || cells[0].trim() != "frame" || cells[1].trim() != "t_ms" {
        return Err(ParseError::format(1, "header must start with `frame,t_ms`"));
    }
    let coord_cols = &cells[2..];
    if coord_cols.len() % 2 != 0 {
        return Err(ParseError::format(
            1,
            format!("odd number of coordinate columns ({})", coord_cols.len()),
        ));
    }
    let mut player_ids = Vec::with_capacity(coord_cols.len() / 2);
    for pair in coord_cols.chunks_exact(2) {
        let x = pair[0].trim();
        let y = pair[1].trim();
        let (Some(px), Some(py)) = (x.strip_suffix("_x"), y.strip_suffix("_y")) else {
            return Err(ParseError::format(
                1,
                format!("coordinate columns must pair `<pid>_x,<pid>_y`, found {:?},{:?}", x, y),
            ));
        };
        if px != py || px.is_empty() {
            return Err(ParseError::format(
                1,
                format!("column pair {:?},{:?} does not share a player id", x, y),
            ));
        }
        if player_ids.iter().any(|id| id == px) {
            return Err(ParseError::format(1, format!("duplicate player id {:?}", px)));
        }
        player_ids.push(px.to_string());
    }
    Ok(player_ids)
}

/// One row of coordinate cells to numeric pairs; empty pair = missing.
fn parse_coordinate_cells(cells: &[&str]) -> Result<Vec<f64>, String> {
    let mut row = Vec::with_capacity(cells.len());
    for (k, pair) in cells.chunks_exact(2).enumerate() {
        let x = pair[0].trim();
        let y = pair[1].trim();
        match (x.is_empty(), y.is_empty()) {
            (true, true) => {
                row.push(f64::NAN);
                row.push(f64::NAN);
            }
            (false, false) => {
                let px = x.parse::<f64>().map_err(|_| format!("unparsable cell {:?}", x))?;
                let py = y.parse::<f64>().map_err(|_| format!("unparsable cell {:?}", y))?;
                if px.is_nan() != py.is_nan() {
                    return Err(format!("player {} has exactly one missing coordinate", k));
                }
                row.push(px);
                row.push(py);
            }
            _ => return Err(format!("player {} has exactly one empty coordinate cell", k)),
        }
    }
    Ok(row)
}

/// Writes the wide tracking CSV. Missing samples become empty cells and
/// `t_ms = round(1000 * t / framerate)`, so re-parsing the output yields an
/// equal `TrackingData` (coordinates bit-exact, framerate re-derived).
pub fn write_tracking_wide_csv(td: &TrackingData) -> String {
    let mut out = String::from("frame,t_ms");
    for id in td.player_ids() {
        let _ = write!(out, ",{id}_x,{id}_y");
    }
    out.push('\n');
    for t in 0..td.n_frames() {
        let t_ms = (1000.0 * t as f64 / td.framerate()).round() as i64;
        let _ = write!(out, "{t},{t_ms}");
        for k in 0..td.n_players() {
            let p = td.point(t, k);
            if p.is_missing() {
                out.push_str(",,");
            } else {
                // shortest round-trip formatting keeps coordinates bit-exact
                let _ = write!(out, ",{},{}", p.x, p.y);
            }
        }
        out.push('\n');
    }
    out
}
