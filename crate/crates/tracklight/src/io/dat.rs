use std::collections::BTreeMap;
use std::io::Read;

use crate::core::{Direction, TrackingData};

use super::{framerate_from_deltas, parse_finite, ParseError, ParseReport};

/// Base rate assumed when frame numbers advance by 1 per line.
const DAT_BASE_FPS: f64 = 25.0;

/// Parses the frame-line `.dat` tracking format. Each line covers one frame:
///
/// ```text
/// <frame_no>:<team>,<player_id>,<x>,<y>;...;:<ball_x>,<ball_y>:
/// ```
///
/// with team 0 = home and 1 = away, and coordinates in centimeters (kept
/// raw; reconciliation happens in `transforms`). Frame numbers must be
/// strictly increasing. Player sets are the union over all lines; players
/// absent on a line are missing that frame. The declared framerate assumes
/// 25 fps at a frame-number spacing of 1 and divides by the median spacing.
pub fn parse_tracking_dat(
    source: impl Read,
) -> Result<(TrackingData, TrackingData, TrackingData, ParseReport), ParseError> {
    let text = super::read_utf8(source)?;
    let mut report = ParseReport::default();

    // accepted line -> (frame_no, per-team samples, ball)
    struct FrameLine {
        samples: [BTreeMap<String, (f64, f64)>; 2],
        ball: Option<(f64, f64)>,
    }

    let mut frame_numbers: Vec<f64> = Vec::new();
    let mut frame_lines: Vec<FrameLine> = Vec::new();
    // first-appearance order per team
    let mut rosters: [Vec<String>; 2] = [Vec::new(), Vec::new()];

    for (line_no, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        report.rows_read += 1;
        let parts: Vec<&str> = line.split(':').collect();
        if parts.len() != 4 || !parts[3].is_empty() {
            report.skip(line_no, "line is not `<frame>:<players>:<ball>:`");
            continue;
        }
        let Ok(frame_no) = parts[0].trim().parse::<u64>() else {
            report.skip(line_no, format!("unparsable frame number {:?}", parts[0]));
            continue;
        };
        if let Some(&prev) = frame_numbers.last() {
            if frame_no as f64 <= prev {
                return Err(ParseError::format(
                    line_no,
                    format!("frame number {} is not strictly increasing", frame_no),
                ));
            }
        }

        let mut fl = FrameLine {
            samples: [BTreeMap::new(), BTreeMap::new()],
            ball: None,
        };
        for chunk in parts[1].split(';') {
            if chunk.is_empty() {
                continue; // chunks are `;`-terminated, so one empty tail is expected
            }
            match parse_player_chunk(chunk) {
                Ok((team, player_id, x, y)) => {
                    if fl.samples[team].contains_key(&player_id) {
                        report.warn(line_no, format!("duplicate chunk for player {:?}", player_id));
                        continue;
                    }
                    if !rosters[team].iter().any(|p| *p == player_id) {
                        rosters[team].push(player_id.clone());
                    }
                    fl.samples[team].insert(player_id, (x, y));
                }
                Err(msg) => report.warn(line_no, format!("skipped chunk {:?}: {}", chunk, msg)),
            }
        }
        match parse_ball_chunk(parts[2]) {
            Ok(ball) => fl.ball = Some(ball),
            Err(msg) => report.warn(line_no, format!("skipped ball chunk: {}", msg)),
        }

        frame_numbers.push(frame_no as f64);
        frame_lines.push(fl);
    }

    let framerate = framerate_from_deltas(&frame_numbers, DAT_BASE_FPS);
    let frames = frame_lines.len();

    let mut team_data = Vec::with_capacity(2);
    for team in 0..2 {
        let ids = &rosters[team];
        let mut coords = vec![f64::NAN; frames * 2 * ids.len()];
        for (t, fl) in frame_lines.iter().enumerate() {
            for (k, id) in ids.iter().enumerate() {
                if let Some(&(x, y)) = fl.samples[team].get(id) {
                    coords[t * 2 * ids.len() + 2 * k] = x;
                    coords[t * 2 * ids.len() + 2 * k + 1] = y;
                }
            }
        }
        let td = TrackingData::new(coords, frames, ids.clone(), framerate, Direction::Unspecified)
            .map_err(|e| ParseError::format(1, e.to_string()))?;
        team_data.push(td);
    }

    let mut ball_coords = vec![f64::NAN; frames * 2];
    for (t, fl) in frame_lines.iter().enumerate() {
        if let Some((x, y)) = fl.ball {
            ball_coords[2 * t] = x;
            ball_coords[2 * t + 1] = y;
        }
    }
    let ball = TrackingData::new(
        ball_coords,
        frames,
        vec!["ball".to_string()],
        framerate,
        Direction::Unspecified,
    )
    .map_err(|e| ParseError::format(1, e.to_string()))?;

    let away = team_data.pop().expect("two teams pushed");
    let home = team_data.pop().expect("two teams pushed");
    Ok((home, away, ball, report))
}

fn parse_player_chunk(chunk: &str) -> Result<(usize, String, f64, f64), String> {
    let fields: Vec<&str> = chunk.split(',').collect();
    if fields.len() != 4 {
        return Err(format!("expected 4 fields, found {}", fields.len()));
    }
    let team = match fields[0].trim() {
        "0" => 0,
        "1" => 1,
        other => return Err(format!("team must be 0 or 1, found {:?}", other)),
    };
    let player_id = fields[1].trim();
    if player_id.is_empty() {
        return Err("empty player id".into());
    }
    let (Some(x), Some(y)) = (parse_finite(fields[2]), parse_finite(fields[3])) else {
        return Err("unparsable coordinate".into());
    };
    Ok((team, player_id.to_string(), x, y))
}

fn parse_ball_chunk(chunk: &str) -> Result<(f64, f64), String> {
    let fields: Vec<&str> = chunk.split(',').collect();
    if fields.len() != 2 {
        return Err(format!("expected 2 fields, found {}", fields.len()));
    }
    let (Some(x), Some(y)) = (parse_finite(fields[0]), parse_finite(fields[1])) else {
        return Err("unparsable coordinate".into());
    };
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_line() {
        let (home, away, ball, report) =
            parse_tracking_dat("1:0,7,100,200;:300,400:".as_bytes()).unwrap();
        assert_eq!(home.n_players(), 1);
        assert_eq!(home.player_ids(), ["7"]);
        assert_eq!((home.point(0, 0).x, home.point(0, 0).y), (100.0, 200.0));
        assert_eq!(away.n_players(), 0);
        assert_eq!(away.n_frames(), 1);
        assert_eq!((ball.point(0, 0).x, ball.point(0, 0).y), (300.0, 400.0));
        assert_eq!(report.rows_read, 1);
        assert_eq!(report.rows_skipped, 0);
    }

    #[test]
    fn empty_stream_yields_three_empty_objects() {
        let (home, away, ball, report) = parse_tracking_dat("".as_bytes()).unwrap();
        assert_eq!(home.n_frames(), 0);
        assert_eq!(away.n_frames(), 0);
        assert_eq!(ball.n_frames(), 0);
        assert_eq!(ball.n_players(), 1);
        assert_eq!(report.rows_read, 0);
    }

    #[test]
    fn non_increasing_frames_fail() {
        let src = "5:0,7,1,1;:0,0:\n5:0,7,2,2;:0,0:";
        assert!(matches!(
            parse_tracking_dat(src.as_bytes()),
            Err(ParseError::Format { line: 2, .. })
        ));
    }

    #[test]
    fn malformed_chunk_is_skipped_with_warning() {
        let src = "1:0,7,100,200;2,9,1,1;:300,400:";
        let (home, away, _, report) = parse_tracking_dat(src.as_bytes()).unwrap();
        assert_eq!(home.n_players(), 1);
        assert_eq!(away.n_players(), 0);
        assert_eq!(report.warnings.len(), 1);
        assert_eq!(report.rows_skipped, 0);
    }

    #[test]
    fn absent_player_is_missing_that_frame() {
        let src = "1:0,7,100,200;0,8,10,20;:0,0:\n2:0,7,110,210;:0,0:";
        let (home, _, _, _) = parse_tracking_dat(src.as_bytes()).unwrap();
        assert_eq!(home.n_players(), 2);
        assert_eq!(home.player_ids(), ["7", "8"]);
        assert!(home.point(1, 1).is_missing());
        assert!(!home.point(1, 0).is_missing());
    }

    #[test]
    fn framerate_follows_frame_spacing() {
        let src = "2:0,7,1,1;:0,0:\n4:0,7,2,2;:0,0:\n6:0,7,3,3;:0,0:";
        let (home, _, _, _) = parse_tracking_dat(src.as_bytes()).unwrap();
        assert_eq!(home.framerate(), 12.5);
    }

    #[test]
    fn malformed_ball_leaves_ball_missing() {
        let src = "1:0,7,100,200;:nope:";
        let (_, _, ball, report) = parse_tracking_dat(src.as_bytes()).unwrap();
        assert!(ball.point(0, 0).is_missing());
        assert_eq!(report.warnings.len(), 1);
    }
}
