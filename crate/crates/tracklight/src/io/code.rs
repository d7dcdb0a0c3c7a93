use std::collections::BTreeMap;
use std::io::Read;

use crate::core::GameCode;

use super::{ParseError, DEFAULT_FRAMERATE};

/// Parses the game-code CSV: header `frame,token`, one row per frame with
/// frames 0..F-1 contiguous and in order. Definitions default to the
/// identity mapping and the framerate to [`DEFAULT_FRAMERATE`]; both can be
/// replaced by rebuilding the [`GameCode`].
pub fn parse_code_csv(source: impl Read) -> Result<GameCode, ParseError> {
    let text = super::read_utf8(source)?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::format(1, "missing header"))?;
    if header.split(',').map(str::trim).collect::<Vec<_>>() != ["frame", "token"] {
        return Err(ParseError::format(1, "header must be `frame,token`"));
    }

    let mut values: Vec<String> = Vec::new();
    for (line_no, line) in lines {
        let Some((frame_cell, token)) = line.split_once(',') else {
            return Err(ParseError::format(line_no, "expected `frame,token`"));
        };
        let frame: usize = frame_cell
            .trim()
            .parse()
            .map_err(|_| ParseError::format(line_no, format!("unparsable frame {:?}", frame_cell)))?;
        if frame != values.len() {
            return Err(ParseError::format(
                line_no,
                format!(
                    "frame column must be contiguous: expected {}, found {}",
                    values.len(),
                    frame
                ),
            ));
        }
        let token = token.trim();
        if token.is_empty() {
            return Err(ParseError::format(line_no, "empty token"));
        }
        values.push(token.to_string());
    }

    let definitions: BTreeMap<String, String> =
        values.iter().map(|t| (t.clone(), t.clone())).collect();
    GameCode::new("code", values, definitions, DEFAULT_FRAMERATE)
        .map_err(|e| ParseError::format(1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_contiguous_rows() {
        let code = parse_code_csv("frame,token\n0,H\n1,H\n2,A\n".as_bytes()).unwrap();
        assert_eq!(code.values(), ["H", "H", "A"]);
        assert_eq!(code.definitions()["H"], "H");
    }

    #[test]
    fn gap_in_frames_fails() {
        let res = parse_code_csv("frame,token\n0,H\n2,A\n".as_bytes());
        assert!(matches!(res, Err(ParseError::Format { line: 3, .. })));
    }

    #[test]
    fn duplicate_frame_fails() {
        let res = parse_code_csv("frame,token\n0,H\n0,A\n".as_bytes());
        assert!(res.is_err());
    }

    #[test]
    fn empty_body_gives_empty_code() {
        let code = parse_code_csv("frame,token\n".as_bytes()).unwrap();
        assert_eq!(code.n_frames(), 0);
    }
}
