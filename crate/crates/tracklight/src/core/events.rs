use std::collections::BTreeMap;

use super::{CoreError, Point};

/// Outcome of a match event where the source annotates one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure,
}

/// One discrete match event. `position` encodes the x-iff-y invariant
/// structurally: either both coordinates are present or neither is.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub event_id: String,
    /// Seconds from segment start; sub-second values allowed.
    pub gameclock: f64,
    pub team: Option<String>,
    pub player_id: Option<String>,
    pub outcome: Option<Outcome>,
    pub position: Option<Point>,
    pub qualifiers: BTreeMap<String, String>,
}

impl Event {
    pub fn new(event_id: impl Into<String>, gameclock: f64) -> Self {
        Event {
            event_id: event_id.into(),
            gameclock,
            team: None,
            player_id: None,
            outcome: None,
            position: None,
            qualifiers: BTreeMap::new(),
        }
    }
}

/// Ordered list of match events, sorted by gameclock (non-decreasing).
#[derive(Debug, Clone, PartialEq)]
pub struct EventList {
    events: Vec<Event>,
}

/// Filter over an [`EventList`]; absent fields match everything.
#[derive(Debug, Clone, Default)]
pub struct EventPredicate {
    pub event_id: Option<String>,
    pub team: Option<String>,
    /// Inclusive gameclock range (lo, hi).
    pub gameclock_range: Option<(f64, f64)>,
}

impl EventList {
    /// Validates ordering and per-event invariants.
    pub fn new(events: Vec<Event>) -> Result<Self, CoreError> {
        for (i, e) in events.iter().enumerate() {
            if e.event_id.is_empty() {
                return Err(CoreError::InvalidEvent {
                    index: i,
                    reason: "empty event_id".into(),
                });
            }
            if !(e.gameclock.is_finite() && e.gameclock >= 0.0) {
                return Err(CoreError::InvalidEvent {
                    index: i,
                    reason: format!("gameclock {} must be finite and >= 0", e.gameclock),
                });
            }
            if let Some(p) = &e.position {
                if p.x.is_nan() || p.y.is_nan() {
                    return Err(CoreError::InvalidEvent {
                        index: i,
                        reason: "event position must have both coordinates".into(),
                    });
                }
            }
            if i > 0 && events[i - 1].gameclock > e.gameclock {
                return Err(CoreError::UnsortedEvents { index: i });
            }
        }
        Ok(EventList { events })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Keeps events matching all present predicate fields, in order.
    pub fn filter(&self, predicate: &EventPredicate) -> Result<EventList, CoreError> {
        if let Some((lo, hi)) = predicate.gameclock_range {
            if lo > hi {
                return Err(CoreError::InvalidGameclockRange { lo, hi });
            }
        }
        let events = self
            .events
            .iter()
            .filter(|e| {
                predicate
                    .event_id
                    .as_ref()
                    .is_none_or(|id| &e.event_id == id)
                    && predicate
                        .team
                        .as_ref()
                        .is_none_or(|t| e.team.as_ref() == Some(t))
                    && predicate
                        .gameclock_range
                        .is_none_or(|(lo, hi)| e.gameclock >= lo && e.gameclock <= hi)
            })
            .cloned()
            .collect();
        // order and invariants survive filtering untouched
        Ok(EventList { events })
    }
}
