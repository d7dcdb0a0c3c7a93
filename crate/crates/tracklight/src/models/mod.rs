//! Fit-then-query analysis models.
//!
//! Every model follows the same contract: construct it, call `fit` with
//! core data structures, then query stored results. Querying an unfitted
//! model yields [`ModelError::NotFitted`]. Fitting is single-writer; once
//! `fit` returned, any number of concurrent reads is safe. All outputs copy
//! the framerate (and, for per-player outputs, the player ids) of the
//! fitted input.

mod centroid;
mod entropy;
mod kinematics;
mod kinetics;

pub use centroid::CentroidModel;
pub use entropy::ApproximateEntropyModel;
pub use kinematics::{AccelerationModel, DistanceModel, VelocityModel};
pub use kinetics::{KineticsParams, MetabolicPowerModel};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("model is not fitted; call fit() first")]
    NotFitted,
    #[error("at least {required} frames required, got {actual}")]
    TooFewFrames { required: usize, actual: usize },
    #[error("fitted inputs disagree: {0}")]
    Mismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("player {player_id:?}: non-missing prefix length {actual} is below m + 2 = {required}")]
    SeriesTooShort {
        player_id: String,
        actual: usize,
        required: usize,
    },
}

/// Fit status and source bookkeeping common to all models.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ModelState {
    pub fitted: bool,
    pub source_framerate: Option<f64>,
    pub source_player_ids: Option<Vec<String>>,
}

impl ModelState {
    fn fitted(framerate: f64, player_ids: &[String]) -> Self {
        ModelState {
            fitted: true,
            source_framerate: Some(framerate),
            source_player_ids: Some(player_ids.to_vec()),
        }
    }
}

/// Frame-wise speed matrix (F x P, row-major): central differences at
/// interior frames, one-sided at the ends, NaN wherever a needed neighbor
/// sample is missing. Shared by the velocity, acceleration and metabolic
/// power models.
fn speeds(td: &crate::TrackingData) -> Vec<f64> {
    let f = td.n_frames();
    let p = td.n_players();
    let fr = td.framerate();
    let mut out = vec![f64::NAN; f * p];
    for k in 0..p {
        for t in 0..f {
            let v = if t == 0 {
                td.point(1, k).distance(&td.point(0, k)) * fr
            } else if t == f - 1 {
                td.point(f - 1, k).distance(&td.point(f - 2, k)) * fr
            } else {
                td.point(t + 1, k).distance(&td.point(t - 1, k)) * fr / 2.0
            };
            out[t * p + k] = v;
        }
    }
    out
}

/// Central difference of a scalar series (one-sided at the ends), scaled by
/// the framerate; NaN inputs propagate to every estimate that touches them.
fn scalar_rate(series: &[f64], framerate: f64) -> Vec<f64> {
    let n = series.len();
    let mut out = vec![f64::NAN; n];
    for t in 0..n {
        out[t] = if t == 0 {
            (series[1] - series[0]) * framerate
        } else if t == n - 1 {
            (series[n - 1] - series[n - 2]) * framerate
        } else {
            (series[t + 1] - series[t - 1]) * framerate / 2.0
        };
    }
    out
}
