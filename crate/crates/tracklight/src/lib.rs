//! tracklight — a provider- and sports-independent toolkit for team-sport
//! spatiotemporal data analysis.
//!
//! The crate is organized around a small set of core data structures
//! ([`TrackingData`], [`EventList`], [`GameCode`], [`Pitch`],
//! [`PlayerProperty`]) that decouple analysis code from any provider format.
//! Everything else consumes and produces these types:
//!
//! - [`io`] parses and writes the documented text formats,
//! - [`datasets`] fetches, caches and verifies public datasets and bundles
//!   an offline sample,
//! - [`transforms`] provides spatial transforms and a zero-phase Butterworth
//!   low-pass filter,
//! - [`models`] is the analysis toolbox (kinematics, metabolic power,
//!   centroid measures, approximate entropy), all following the same
//!   fit-then-query contract,
//! - [`vis`] renders deterministic SVG pitches, positions and trajectories.

pub mod core;
pub mod datasets;
pub mod io;
pub mod models;
pub mod transforms;
pub mod vis;

pub use crate::core::{
    CoreError, Direction, Event, EventList, EventPredicate, GameCode, Outcome, Pitch,
    PitchBoundedness, PitchUnit, PlayerProperty, Point, Sport, TrackingData,
};
