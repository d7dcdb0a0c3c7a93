use super::CoreError;

/// A frames x players matrix of scalar values produced by analysis models
/// (velocity, acceleration, metabolic power, ...). Missing values use the
/// NaN marker. Carries the player ids of the tracking data it was derived
/// from so a column is always attributable to a player.
#[derive(Debug, Clone)]
pub struct PlayerProperty {
    values: Vec<f64>,
    frames: usize,
    player_ids: Vec<String>,
    name: String,
    unit: String,
    framerate: f64,
}

impl PlayerProperty {
    pub fn new(
        values: Vec<f64>,
        frames: usize,
        player_ids: Vec<String>,
        name: impl Into<String>,
        unit: impl Into<String>,
        framerate: f64,
    ) -> Result<Self, CoreError> {
        if !(framerate.is_finite() && framerate > 0.0) {
            return Err(CoreError::InvalidFramerate(framerate));
        }
        let expected = frames * player_ids.len();
        if values.len() != expected {
            return Err(CoreError::PropertySizeMismatch {
                actual: values.len(),
                expected,
            });
        }
        Ok(PlayerProperty {
            values,
            frames,
            player_ids,
            name: name.into(),
            unit: unit.into(),
            framerate,
        })
    }

    pub fn n_frames(&self) -> usize {
        self.frames
    }

    pub fn n_players(&self) -> usize {
        self.player_ids.len()
    }

    pub fn player_ids(&self) -> &[String] {
        &self.player_ids
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn unit(&self) -> &str {
        &self.unit
    }

    pub fn framerate(&self) -> f64 {
        self.framerate
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value for player `k` at frame `t`.
    pub fn value(&self, t: usize, k: usize) -> f64 {
        self.values[t * self.player_ids.len() + k]
    }

    /// The whole series of player `k`.
    pub fn column(&self, k: usize) -> Result<Vec<f64>, CoreError> {
        if k >= self.n_players() {
            return Err(CoreError::PlayerIndexOutOfRange {
                index: k,
                count: self.n_players(),
            });
        }
        Ok((0..self.frames).map(|t| self.value(t, k)).collect())
    }

    /// Values of the final frame, one per player. Empty when F = 0.
    pub fn last_row(&self) -> Vec<f64> {
        if self.frames == 0 {
            return Vec::new();
        }
        (0..self.n_players())
            .map(|k| self.value(self.frames - 1, k))
            .collect()
    }
}

/// Bit-exact equality, mirroring [`crate::TrackingData`]'s semantics.
impl PartialEq for PlayerProperty {
    fn eq(&self, other: &Self) -> bool {
        self.frames == other.frames
            && self.player_ids == other.player_ids
            && self.name == other.name
            && self.unit == other.unit
            && self.framerate == other.framerate
            && self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_must_match() {
        let err = PlayerProperty::new(vec![1.0; 5], 2, vec!["a".into(), "b".into()], "v", "m/s", 10.0);
        assert!(matches!(err, Err(CoreError::PropertySizeMismatch { .. })));
    }

    #[test]
    fn column_and_last_row() {
        let p = PlayerProperty::new(
            vec![1.0, 2.0, 3.0, 4.0],
            2,
            vec!["a".into(), "b".into()],
            "v",
            "m/s",
            10.0,
        )
        .unwrap();
        assert_eq!(p.column(1).unwrap(), vec![2.0, 4.0]);
        assert_eq!(p.last_row(), vec![3.0, 4.0]);
        assert!(p.column(2).is_err());
    }
}
