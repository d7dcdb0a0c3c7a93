use crate::core::{PlayerProperty, TrackingData};

use super::{scalar_rate, speeds, ModelError, ModelState};

/// Parameters of the metabolic power model.
#[derive(Debug, Clone, PartialEq)]
pub struct KineticsParams {
    /// Dimensionless terrain multiplier on the energy cost (1.0 = track).
    pub terrain_factor: f64,
    /// Gravitational acceleration in m/s^2.
    pub g: f64,
}

impl Default for KineticsParams {
    fn default() -> Self {
        KineticsParams {
            terrain_factor: 1.0,
            g: 9.81,
        }
    }
}

/// Energy cost of accelerated running via the equivalent-slope formulation:
/// forward acceleration is treated as running up an equivalent slope
/// ES = a/g with apparent weight multiplier EM = sqrt(ES^2 + 1), and the
/// energy cost per meter is a quintic in ES scaled by EM and terrain.
fn energy_cost(es: f64, em: f64, terrain_factor: f64) -> f64 {
    (155.4 * es.powi(5) - 30.4 * es.powi(4) - 43.3 * es.powi(3) + 46.3 * es.powi(2)
        + 19.5 * es
        + 3.6)
        * em
        * terrain_factor
}

/// Instantaneous and cumulative metabolic power per player.
///
/// Power is energy cost (J/kg/m) times speed (m/s), in W/kg. The cumulative
/// series is a left Riemann sum of power over time in J/kg, with missing
/// power samples contributing zero.
#[derive(Debug, Default)]
pub struct MetabolicPowerModel {
    fitted: Option<MetabolicFit>,
}

#[derive(Debug)]
struct MetabolicFit {
    metabolic_power: PlayerProperty,
    cumulative_metabolic_power: PlayerProperty,
}

impl MetabolicPowerModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&self) -> ModelState {
        match &self.fitted {
            Some(fit) => ModelState::fitted(
                fit.metabolic_power.framerate(),
                fit.metabolic_power.player_ids(),
            ),
            None => ModelState::default(),
        }
    }

    pub fn fit(&mut self, td: &TrackingData, params: &KineticsParams) -> Result<(), ModelError> {
        if td.n_frames() < 3 {
            return Err(ModelError::TooFewFrames {
                required: 3,
                actual: td.n_frames(),
            });
        }
        if !(params.terrain_factor.is_finite() && params.terrain_factor > 0.0) {
            return Err(ModelError::InvalidParameter(format!(
                "terrain_factor must be positive, got {}",
                params.terrain_factor
            )));
        }
        if !(params.g.is_finite() && params.g > 0.0) {
            return Err(ModelError::InvalidParameter(format!(
                "g must be positive, got {}",
                params.g
            )));
        }

        let f = td.n_frames();
        let p = td.n_players();
        let fr = td.framerate();
        let v = speeds(td);

        let mut power = vec![f64::NAN; f * p];
        let mut cumulative = vec![0.0f64; f * p];
        for k in 0..p {
            let speed_col: Vec<f64> = (0..f).map(|t| v[t * p + k]).collect();
            let accel_col = scalar_rate(&speed_col, fr);
            let mut total = 0.0;
            for t in 0..f {
                let (vi, ai) = (speed_col[t], accel_col[t]);
                if vi.is_finite() && ai.is_finite() {
                    let es = ai / params.g;
                    let em = (es * es + 1.0).sqrt();
                    let pw = energy_cost(es, em, params.terrain_factor) * vi;
                    power[t * p + k] = pw;
                    total += pw / fr;
                }
                cumulative[t * p + k] = total;
            }
        }

        let metabolic_power = PlayerProperty::new(
            power,
            f,
            td.player_ids().to_vec(),
            "metabolic_power",
            "W/kg",
            fr,
        )
        .expect("dimensions match by construction");
        let cumulative_metabolic_power = PlayerProperty::new(
            cumulative,
            f,
            td.player_ids().to_vec(),
            "cumulative_metabolic_power",
            "J/kg",
            fr,
        )
        .expect("dimensions match by construction");
        self.fitted = Some(MetabolicFit {
            metabolic_power,
            cumulative_metabolic_power,
        });
        Ok(())
    }

    pub fn metabolic_power(&self) -> Result<PlayerProperty, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.metabolic_power.clone())
            .ok_or(ModelError::NotFitted)
    }

    pub fn cumulative_metabolic_power(&self) -> Result<PlayerProperty, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.cumulative_metabolic_power.clone())
            .ok_or(ModelError::NotFitted)
    }
}
