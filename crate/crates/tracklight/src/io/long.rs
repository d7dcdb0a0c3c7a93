use std::collections::BTreeMap;
use std::io::Read;

use crate::core::{Direction, TrackingData};

use super::{framerate_from_deltas, parse_finite, ParseError, ParseReport};

/// Parses the long (sensor-row) tracking CSV: header
/// `t_ms,group_id,player_id,x,y`, one row per player per timestamp, rows in
/// any order. Rows are pivoted per group onto the union time base of that
/// group; timestamps without a sample for a player become missing.
/// Player ids are sorted lexicographically within each group.
pub fn parse_tracking_long_csv(
    source: impl Read,
) -> Result<(BTreeMap<String, TrackingData>, ParseReport), ParseError> {
    let text = super::read_utf8(source)?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::format(1, "missing header"))?;
    if header
        .split(',')
        .map(str::trim)
        .collect::<Vec<_>>()
        != ["t_ms", "group_id", "player_id", "x", "y"]
    {
        return Err(ParseError::format(
            1,
            "header must be `t_ms,group_id,player_id,x,y`",
        ));
    }

    let mut report = ParseReport::default();
    // group -> (t_ms bits, player) -> (x, y)
    let mut groups: BTreeMap<String, BTreeMap<(u64, String), (f64, f64)>> = BTreeMap::new();

    for (line_no, line) in lines {
        report.rows_read += 1;
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 5 {
            report.skip(line_no, format!("expected 5 cells, found {}", cells.len()));
            continue;
        }
        let Some(t_ms) = parse_finite(cells[0]) else {
            report.skip(line_no, format!("unparsable t_ms {:?}", cells[0]));
            continue;
        };
        let t_ms = if t_ms == 0.0 { 0.0 } else { t_ms }; // fold -0.0 into 0.0
        let group = cells[1].trim();
        let player = cells[2].trim();
        if group.is_empty() || player.is_empty() {
            report.skip(line_no, "empty group_id or player_id");
            continue;
        }
        let (Some(x), Some(y)) = (parse_finite(cells[3]), parse_finite(cells[4])) else {
            report.skip(line_no, "unparsable coordinate cell");
            continue;
        };
        let key = (t_ms.to_bits(), player.to_string());
        let samples = groups.entry(group.to_string()).or_default();
        if let Some(&(px, py)) = samples.get(&key) {
            if px != x || py != y {
                return Err(ParseError::format(
                    line_no,
                    format!(
                        "conflicting duplicate for t_ms {}, group {:?}, player {:?}",
                        t_ms, group, player
                    ),
                ));
            }
            // exact duplicate row, nothing new
            continue;
        }
        samples.insert(key, (x, y));
    }

    let mut out = BTreeMap::new();
    for (group, samples) in groups {
        let mut times: Vec<f64> = samples.keys().map(|(bits, _)| f64::from_bits(*bits)).collect();
        times.sort_by(|a, b| a.partial_cmp(b).expect("times are finite"));
        times.dedup();

        let mut player_ids: Vec<String> =
            samples.keys().map(|(_, p)| p.clone()).collect();
        player_ids.sort();
        player_ids.dedup();

        let frames = times.len();
        let n_players = player_ids.len();
        let mut coords = vec![f64::NAN; frames * 2 * n_players];
        for ((t_bits, player), (x, y)) in &samples {
            let t = f64::from_bits(*t_bits);
            let row = times.partition_point(|&v| v < t);
            let col = player_ids.binary_search(player).expect("id collected above");
            coords[row * 2 * n_players + 2 * col] = *x;
            coords[row * 2 * n_players + 2 * col + 1] = *y;
        }

        let framerate = framerate_from_deltas(&times, 1000.0);
        let td = TrackingData::new(coords, frames, player_ids, framerate, Direction::Unspecified)
            .map_err(|e| ParseError::format(1, e.to_string()))?;
        out.insert(group, td);
    }
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pivots_rows_into_group_matrices() {
        let src = "t_ms,group_id,player_id,x,y\n0,H,a,0,0\n0,H,b,1,1\n50,H,a,0.5,0\n";
        let (groups, report) = parse_tracking_long_csv(src.as_bytes()).unwrap();
        let td = &groups["H"];
        assert_eq!(td.n_frames(), 2);
        assert_eq!(td.n_players(), 2);
        assert_eq!(td.player_ids(), ["a", "b"]);
        assert_eq!(td.point(1, 0).x, 0.5);
        assert!(td.point(1, 1).is_missing(), "player b has no sample at t=50");
        assert_eq!(report.rows_read, 3);
    }

    #[test]
    fn single_row_single_group() {
        let src = "t_ms,group_id,player_id,x,y\n0,H,a,3,4\n";
        let (groups, _) = parse_tracking_long_csv(src.as_bytes()).unwrap();
        let td = &groups["H"];
        assert_eq!((td.n_frames(), td.n_players()), (1, 1));
        assert_eq!((td.point(0, 0).x, td.point(0, 0).y), (3.0, 4.0));
    }

    #[test]
    fn conflicting_duplicate_names_the_line() {
        let src = "t_ms,group_id,player_id,x,y\n0,H,a,3,4\n0,H,a,3,5\n";
        assert!(matches!(
            parse_tracking_long_csv(src.as_bytes()),
            Err(ParseError::Format { line: 3, .. })
        ));
    }

    #[test]
    fn exact_duplicate_is_tolerated() {
        let src = "t_ms,group_id,player_id,x,y\n0,H,a,3,4\n0,H,a,3,4\n";
        let (groups, _) = parse_tracking_long_csv(src.as_bytes()).unwrap();
        assert_eq!(groups["H"].n_frames(), 1);
    }

    #[test]
    fn missing_header_field_fails() {
        let res = parse_tracking_long_csv("t_ms,group_id,player_id,x\n".as_bytes());
        assert!(matches!(res, Err(ParseError::Format { line: 1, .. })));
    }

    #[test]
    fn unsorted_rows_land_on_sorted_time_base() {
        let src = "t_ms,group_id,player_id,x,y\n100,H,a,2,0\n0,H,a,1,0\n50,H,a,1.5,0\n";
        let (groups, _) = parse_tracking_long_csv(src.as_bytes()).unwrap();
        let td = &groups["H"];
        assert_eq!(td.framerate(), 20.0);
        let xs: Vec<f64> = (0..3).map(|t| td.point(t, 0).x).collect();
        assert_eq!(xs, vec![1.0, 1.5, 2.0]);
    }

    #[test]
    fn groups_are_independent() {
        let src = "t_ms,group_id,player_id,x,y\n0,H,a,1,1\n0,A,z,2,2\n40,A,z,3,3\n";
        let (groups, _) = parse_tracking_long_csv(src.as_bytes()).unwrap();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups["H"].n_frames(), 1);
        assert_eq!(groups["A"].n_frames(), 2);
        assert_eq!(groups["A"].framerate(), 25.0);
    }
}
