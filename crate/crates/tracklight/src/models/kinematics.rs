use crate::core::{PlayerProperty, TrackingData};

use super::{scalar_rate, speeds, ModelError, ModelState};

/// Frame-wise and cumulative distance covered per player, in meters.
#[derive(Debug, Default)]
pub struct DistanceModel {
    fitted: Option<DistanceFit>,
}

#[derive(Debug)]
struct DistanceFit {
    frame_distance: PlayerProperty,
    cumulative_distance: PlayerProperty,
}

impl DistanceModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&self) -> ModelState {
        match &self.fitted {
            Some(fit) => ModelState::fitted(
                fit.frame_distance.framerate(),
                fit.frame_distance.player_ids(),
            ),
            None => ModelState::default(),
        }
    }

    pub fn fit(&mut self, td: &TrackingData) -> Result<(), ModelError> {
        if td.n_frames() < 1 {
            return Err(ModelError::TooFewFrames {
                required: 1,
                actual: td.n_frames(),
            });
        }
        let f = td.n_frames();
        let p = td.n_players();
        let mut step = vec![0.0f64; f * p];
        let mut cumulative = vec![0.0f64; f * p];
        for k in 0..p {
            let mut total = 0.0;
            for t in 1..f {
                // distance() yields NaN when either endpoint is missing
                let d = td.point(t, k).distance(&td.point(t - 1, k));
                step[t * p + k] = d;
                if d.is_finite() {
                    total += d;
                }
                cumulative[t * p + k] = total;
            }
        }
        let frame_distance = PlayerProperty::new(
            step,
            f,
            td.player_ids().to_vec(),
            "frame_distance",
            "m",
            td.framerate(),
        )
        .expect("dimensions match by construction");
        let cumulative_distance = PlayerProperty::new(
            cumulative,
            f,
            td.player_ids().to_vec(),
            "cumulative_distance",
            "m",
            td.framerate(),
        )
        .expect("dimensions match by construction");
        self.fitted = Some(DistanceFit {
            frame_distance,
            cumulative_distance,
        });
        Ok(())
    }

    /// Euclidean distance between consecutive positions; row 0 is 0 and any
    /// step touching a missing sample is missing.
    pub fn frame_distance(&self) -> Result<PlayerProperty, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.frame_distance.clone())
            .ok_or(ModelError::NotFitted)
    }

    /// Running sum of frame distances, treating missing steps as 0.
    pub fn cumulative_distance(&self) -> Result<PlayerProperty, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.cumulative_distance.clone())
            .ok_or(ModelError::NotFitted)
    }
}

/// Frame-wise speed per player (m/s) from central differences.
#[derive(Debug, Default)]
pub struct VelocityModel {
    velocity: Option<PlayerProperty>,
}

impl VelocityModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&self) -> ModelState {
        match &self.velocity {
            Some(v) => ModelState::fitted(v.framerate(), v.player_ids()),
            None => ModelState::default(),
        }
    }

    pub fn fit(&mut self, td: &TrackingData) -> Result<(), ModelError> {
        if td.n_frames() < 2 {
            return Err(ModelError::TooFewFrames {
                required: 2,
                actual: td.n_frames(),
            });
        }
        let values = speeds(td);
        self.velocity = Some(
            PlayerProperty::new(
                values,
                td.n_frames(),
                td.player_ids().to_vec(),
                "velocity",
                "m/s",
                td.framerate(),
            )
            .expect("dimensions match by construction"),
        );
        Ok(())
    }

    pub fn velocity(&self) -> Result<PlayerProperty, ModelError> {
        self.velocity.clone().ok_or(ModelError::NotFitted)
    }
}

/// Signed rate of change of speed per player (m/s^2): the central
/// difference of the speed sequence, not the norm of the position's second
/// derivative, because the metabolic model downstream is defined on
/// forward acceleration.
#[derive(Debug, Default)]
pub struct AccelerationModel {
    acceleration: Option<PlayerProperty>,
}

impl AccelerationModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&self) -> ModelState {
        match &self.acceleration {
            Some(a) => ModelState::fitted(a.framerate(), a.player_ids()),
            None => ModelState::default(),
        }
    }

    pub fn fit(&mut self, td: &TrackingData) -> Result<(), ModelError> {
        if td.n_frames() < 3 {
            return Err(ModelError::TooFewFrames {
                required: 3,
                actual: td.n_frames(),
            });
        }
        let f = td.n_frames();
        let p = td.n_players();
        let v = speeds(td);
        let mut values = vec![f64::NAN; f * p];
        for k in 0..p {
            let column: Vec<f64> = (0..f).map(|t| v[t * p + k]).collect();
            for (t, a) in scalar_rate(&column, td.framerate()).into_iter().enumerate() {
                values[t * p + k] = a;
            }
        }
        self.acceleration = Some(
            PlayerProperty::new(
                values,
                f,
                td.player_ids().to_vec(),
                "acceleration",
                "m/s^2",
                td.framerate(),
            )
            .expect("dimensions match by construction"),
        );
        Ok(())
    }

    pub fn acceleration(&self) -> Result<PlayerProperty, ModelError> {
        self.acceleration.clone().ok_or(ModelError::NotFitted)
    }
}
