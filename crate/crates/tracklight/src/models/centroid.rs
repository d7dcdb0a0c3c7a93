use crate::core::{PlayerProperty, Point, TrackingData};

use super::{ModelError, ModelState};

/// Team centroid measures: the frame-wise mean position of non-missing
/// players, the distance between two team centroids, and the stretch index
/// (mean player distance to the own centroid) as a dispersion measure.
#[derive(Debug, Default)]
pub struct CentroidModel {
    fitted: Option<CentroidFit>,
}

#[derive(Debug)]
struct CentroidFit {
    centroid: TrackingData,
    stretch_index: PlayerProperty,
    source_player_ids: Vec<String>,
}

impl CentroidModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&self) -> ModelState {
        match &self.fitted {
            Some(fit) => ModelState::fitted(fit.centroid.framerate(), &fit.source_player_ids),
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

        let mut centroid_coords = Vec::with_capacity(f * 2);
        let mut stretch = vec![f64::NAN; f];
        for t in 0..f {
            let present: Vec<Point> = (0..p)
                .map(|k| td.point(t, k))
                .filter(|pt| !pt.is_missing())
                .collect();
            if present.is_empty() {
                centroid_coords.push(f64::NAN);
                centroid_coords.push(f64::NAN);
                continue;
            }
            let n = present.len() as f64;
            let cx = present.iter().map(|pt| pt.x).sum::<f64>() / n;
            let cy = present.iter().map(|pt| pt.y).sum::<f64>() / n;
            centroid_coords.push(cx);
            centroid_coords.push(cy);
            let center = Point::new(cx, cy);
            stretch[t] = present.iter().map(|pt| pt.distance(&center)).sum::<f64>() / n;
        }

        let centroid = TrackingData::new(
            centroid_coords,
            f,
            vec!["centroid".to_string()],
            td.framerate(),
            td.direction(),
        )
        .expect("centroid matrix is valid by construction");
        let stretch_index = PlayerProperty::new(
            stretch,
            f,
            vec!["team".to_string()],
            "stretch_index",
            "m",
            td.framerate(),
        )
        .expect("dimensions match by construction");
        self.fitted = Some(CentroidFit {
            centroid,
            stretch_index,
            source_player_ids: td.player_ids().to_vec(),
        });
        Ok(())
    }

    /// Frame-wise mean position of the non-missing players (P = 1 tracking
    /// object); missing only when every player is missing that frame.
    pub fn centroid(&self) -> Result<TrackingData, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.centroid.clone())
            .ok_or(ModelError::NotFitted)
    }

    /// Mean distance of non-missing players to their centroid.
    pub fn stretch_index(&self) -> Result<PlayerProperty, ModelError> {
        self.fitted
            .as_ref()
            .map(|f| f.stretch_index.clone())
            .ok_or(ModelError::NotFitted)
    }

    /// Frame-wise distance between this team's centroid and `other`'s;
    /// both models must be fitted on the same frame count and framerate.
    pub fn centroid_distance(&self, other: &CentroidModel) -> Result<PlayerProperty, ModelError> {
        let a = self.fitted.as_ref().ok_or(ModelError::NotFitted)?;
        let b = other.fitted.as_ref().ok_or(ModelError::NotFitted)?;
        if a.centroid.n_frames() != b.centroid.n_frames() {
            return Err(ModelError::Mismatch(format!(
                "frame counts {} vs {}",
                a.centroid.n_frames(),
                b.centroid.n_frames()
            )));
        }
        if a.centroid.framerate() != b.centroid.framerate() {
            return Err(ModelError::Mismatch(format!(
                "framerates {} vs {}",
                a.centroid.framerate(),
                b.centroid.framerate()
            )));
        }
        let f = a.centroid.n_frames();
        let values: Vec<f64> = (0..f)
            .map(|t| a.centroid.point(t, 0).distance(&b.centroid.point(t, 0)))
            .collect();
        Ok(PlayerProperty::new(
            values,
            f,
            vec!["team".to_string()],
            "centroid_distance",
            "m",
            a.centroid.framerate(),
        )
        .expect("dimensions match by construction"))
    }
}
