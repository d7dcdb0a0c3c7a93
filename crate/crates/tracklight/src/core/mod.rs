//! Provider-independent core data structures.
//!
//! All types in this module are immutable after construction: constructors
//! validate their invariants once and every later operation builds new
//! values instead of mutating. Missing samples are represented by a
//! non-signaling NaN in numeric matrices; a tracking sample is missing iff
//! both its x and y coordinate are NaN (never exactly one of the pair).

mod code;
mod events;
mod pitch;
mod property;
mod tracking;

pub use code::{CodeInterval, GameCode};
pub use events::{Event, EventList, EventPredicate, Outcome};
pub use pitch::{Pitch, PitchBoundedness, PitchUnit, Sport};
pub use property::PlayerProperty;
pub use tracking::{Direction, Point, TrackingData};

use thiserror::Error;

/// Errors raised by core type constructors and accessors.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("player index {index} out of range for {count} players")]
    PlayerIndexOutOfRange { index: usize, count: usize },
    #[error("frame index {index} out of range for {count} frames")]
    FrameIndexOutOfRange { index: usize, count: usize },
    #[error("coordinate matrix has {actual} values, expected {expected} (frames x 2 per player)")]
    CoordinateCountMismatch { actual: usize, expected: usize },
    #[error("framerate must be a positive finite number, got {0}")]
    InvalidFramerate(f64),
    #[error("sample at frame {frame} for player {player} has exactly one missing coordinate")]
    HalfMissingSample { frame: usize, player: usize },
    #[error("player ids must be distinct non-empty strings")]
    InvalidPlayerIds,
    #[error("event {index} breaks gameclock ordering")]
    UnsortedEvents { index: usize },
    #[error("event {index}: {reason}")]
    InvalidEvent { index: usize, reason: String },
    #[error("gameclock range is invalid: lo {lo} > hi {hi}")]
    InvalidGameclockRange { lo: f64, hi: f64 },
    #[error("code token {token:?} at frame {frame} has no definition")]
    UndefinedToken { token: String, frame: usize },
    #[error("pitch axis range invalid: {axis} min {min} must be below max {max}")]
    InvalidPitchRange {
        axis: char,
        min: f64,
        max: f64,
    },
    #[error("percent-unit pitch requires physical length and width")]
    MissingPhysicalSize,
    #[error("property value count {actual} does not match frames x players = {expected}")]
    PropertySizeMismatch { actual: usize, expected: usize },
}
