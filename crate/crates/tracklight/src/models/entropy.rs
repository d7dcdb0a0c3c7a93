use crate::core::PlayerProperty;

use super::{ModelError, ModelState};

/// Approximate entropy (regularity statistic) of one scalar series per
/// player: ApEn = Phi^m(r) - Phi^(m+1)(r), where Phi^m is the mean log
/// fraction of template windows of length m lying within Chebyshev distance
/// r of each other. Self-matches are included, so every count is positive.
///
/// The input is any scalar [`PlayerProperty`] (a velocity series, a
/// coordinate column, ...); the model does not pick a signal itself. Each
/// player's series is the longest non-missing prefix; a series that resumes
/// after a gap yields a missing result for that player.
#[derive(Debug, Default)]
pub struct ApproximateEntropyModel {
    fitted: Option<ApEnFit>,
}

#[derive(Debug)]
struct ApEnFit {
    values: Vec<f64>,
    player_ids: Vec<String>,
    framerate: f64,
}

impl ApproximateEntropyModel {
    pub fn new() -> Self {
        Self::default()
    }

    /// Embedding dimension used when none is given.
    pub const DEFAULT_M: usize = 2;

    pub fn state(&self) -> ModelState {
        match &self.fitted {
            Some(fit) => ModelState::fitted(fit.framerate, &fit.player_ids),
            None => ModelState::default(),
        }
    }

    /// Fits per-player approximate entropy.
    ///
    /// `m` is the embedding dimension (>= 1). `r` is the match tolerance;
    /// when `None`, it defaults to 0.2 times the per-player standard
    /// deviation of the analyzed prefix (which is 0 for a constant series
    /// and then matches exact equality). An explicit `r` must be positive.
    /// Every player's non-missing prefix must hold at least m + 2 samples.
    pub fn fit(
        &mut self,
        prop: &PlayerProperty,
        m: usize,
        r: Option<f64>,
    ) -> Result<(), ModelError> {
        if m < 1 {
            return Err(ModelError::InvalidParameter(
                "embedding dimension m must be >= 1".into(),
            ));
        }
        if let Some(r) = r {
            if !(r.is_finite() && r > 0.0) {
                return Err(ModelError::InvalidParameter(format!(
                    "tolerance r must be positive, got {}",
                    r
                )));
            }
        }

        let mut values = Vec::with_capacity(prop.n_players());
        for k in 0..prop.n_players() {
            let series = prop.column(k).expect("k < n_players");
            let prefix_len = series.iter().position(|v| v.is_nan()).unwrap_or(series.len());
            let has_embedded_gap = series[prefix_len..].iter().any(|v| !v.is_nan());
            if has_embedded_gap {
                values.push(f64::NAN);
                continue;
            }
            let prefix = &series[..prefix_len];
            if prefix.len() < m + 2 {
                return Err(ModelError::SeriesTooShort {
                    player_id: prop.player_ids()[k].clone(),
                    actual: prefix.len(),
                    required: m + 2,
                });
            }
            let tolerance = r.unwrap_or_else(|| 0.2 * population_std(prefix));
            values.push(approximate_entropy(prefix, m, tolerance));
        }

        self.fitted = Some(ApEnFit {
            values,
            player_ids: prop.player_ids().to_vec(),
            framerate: prop.framerate(),
        });
        Ok(())
    }

    /// One ApEn value per player, in the fitted property's player order.
    pub fn approximate_entropy(&self) -> Result<Vec<f64>, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.values.clone())
            .ok_or(ModelError::NotFitted)
    }

    pub fn player_ids(&self) -> Result<Vec<String>, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.player_ids.clone())
            .ok_or(ModelError::NotFitted)
    }
}

fn population_std(series: &[f64]) -> f64 {
    let n = series.len() as f64;
    let mean = series.iter().sum::<f64>() / n;
    (series.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n).sqrt()
}

/// Single-pass computation of Phi^m and Phi^(m+1): an (m+1)-window pair
/// matches iff its m-window pair matches and the appended elements do, so
/// both counts come out of one scan over template pairs.
fn approximate_entropy(series: &[f64], m: usize, r: f64) -> f64 {
    let n = series.len();
    let count_m = n - m + 1;
    let count_m1 = n - m;

    let mut matches_m = vec![0usize; count_m];
    let mut matches_m1 = vec![0usize; count_m1];
    for i in 0..count_m {
        for j in 0..count_m {
            let mut d = 0.0f64;
            for k in 0..m {
                d = d.max((series[i + k] - series[j + k]).abs());
            }
            if d <= r {
                matches_m[i] += 1;
                if i < count_m1 && j < count_m1 && (series[i + m] - series[j + m]).abs() <= r {
                    matches_m1[i] += 1;
                }
            }
        }
    }

    let phi_m = matches_m
        .iter()
        .map(|&c| (c as f64 / count_m as f64).ln())
        .sum::<f64>()
        / count_m as f64;
    let phi_m1 = matches_m1
        .iter()
        .map(|&c| (c as f64 / count_m1 as f64).ln())
        .sum::<f64>()
        / count_m1 as f64;
    phi_m - phi_m1
}
