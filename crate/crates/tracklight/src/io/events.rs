use std::collections::BTreeMap;
use std::io::Read;

use crate::core::{Event, EventList, Outcome, Point};

use super::{parse_finite, ParseError, ParseReport};

const EVENT_HEADER: [&str; 8] = [
    "event_id",
    "gameclock",
    "team",
    "player_id",
    "outcome",
    "x",
    "y",
    "qualifiers",
];

/// Parses the events CSV. Empty optional cells mean absent; the qualifiers
/// cell is `k1=v1|k2=v2` or empty. Rows violating the x-iff-y invariant or
/// carrying a negative gameclock are skipped with a warning. Output is
/// sorted by gameclock; if the source was unsorted a stable sort is applied
/// and a warning recorded.
pub fn parse_events_csv(source: impl Read) -> Result<(EventList, ParseReport), ParseError> {
    let text = super::read_utf8(source)?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::format(1, "missing header"))?;
    if header.split(',').map(str::trim).collect::<Vec<_>>() != EVENT_HEADER {
        return Err(ParseError::format(
            1,
            format!("header must be `{}`", EVENT_HEADER.join(",")),
        ));
    }

    let mut report = ParseReport::default();
    let mut events: Vec<Event> = Vec::new();
    let mut sorted = true;

    for (line_no, line) in lines {
        report.rows_read += 1;
        match parse_event_row(line) {
            Ok(event) => {
                if let Some(prev) = events.last() {
                    if prev.gameclock > event.gameclock {
                        sorted = false;
                    }
                }
                events.push(event);
            }
            Err(msg) => report.skip(line_no, msg),
        }
    }

    if !sorted {
        report.warn(0, "events were unsorted; stable sort by gameclock applied");
        events.sort_by(|a, b| {
            a.gameclock
                .partial_cmp(&b.gameclock)
                .expect("gameclocks are finite")
        });
    }

    let list = EventList::new(events).map_err(|e| ParseError::format(1, e.to_string()))?;
    Ok((list, report))
}

fn parse_event_row(line: &str) -> Result<Event, String> {
    let cells: Vec<&str> = line.split(',').collect();
    if cells.len() != 8 {
        return Err(format!("expected 8 cells, found {}", cells.len()));
    }
    let event_id = cells[0].trim();
    if event_id.is_empty() {
        return Err("empty event_id".into());
    }
    let gameclock = parse_finite(cells[1]).ok_or_else(|| format!("unparsable gameclock {:?}", cells[1]))?;
    if gameclock < 0.0 {
        return Err(format!("negative gameclock {}", gameclock));
    }

    let mut event = Event::new(event_id, gameclock);
    event.team = non_empty(cells[2]);
    event.player_id = non_empty(cells[3]);
    event.outcome = match cells[4].trim() {
        "" => None,
        "success" => Some(Outcome::Success),
        "failure" => Some(Outcome::Failure),
        other => return Err(format!("unknown outcome {:?}", other)),
    };
    event.position = match (cells[5].trim().is_empty(), cells[6].trim().is_empty()) {
        (true, true) => None,
        (false, false) => {
            let x = parse_finite(cells[5]).ok_or_else(|| format!("unparsable x {:?}", cells[5]))?;
            let y = parse_finite(cells[6]).ok_or_else(|| format!("unparsable y {:?}", cells[6]))?;
            Some(Point::new(x, y))
        }
        _ => return Err("x is present iff y is present".into()),
    };
    event.qualifiers = parse_qualifiers(cells[7])?;
    Ok(event)
}

fn non_empty(cell: &str) -> Option<String> {
    let cell = cell.trim();
    (!cell.is_empty()).then(|| cell.to_string())
}

fn parse_qualifiers(cell: &str) -> Result<BTreeMap<String, String>, String> {
    let cell = cell.trim();
    let mut map = BTreeMap::new();
    if cell.is_empty() {
        return Ok(map);
    }
    for part in cell.split('|') {
        let Some((k, v)) = part.split_once('=') else {
            return Err(format!("qualifier {:?} is not `key=value`", part));
        };
        if k.is_empty() {
            return Err("empty qualifier key".into());
        }
        map.insert(k.to_string(), v.to_string());
    }
    Ok(map)
}
