use super::CoreError;

/// A 2D position sample. The missing marker is NaN in both coordinates;
/// mixed NaN/value pairs are rejected by every constructor in this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    /// The dedicated missing marker.
    pub const MISSING: Point = Point {
        x: f64::NAN,
        y: f64::NAN,
    };

    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// True iff this sample is the missing marker.
    pub fn is_missing(&self) -> bool {
        self.x.is_nan() && self.y.is_nan()
    }

    /// Euclidean distance to `other`; NaN if either sample is missing.
    pub fn distance(&self, other: &Point) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }
}

/// Attacking direction of the tracked team within a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
    Unspecified,
}

/// Spatiotemporal tracking data: an F x 2P coordinate matrix at a fixed
/// framerate. Column 2k holds the x coordinate of player k, column 2k+1
/// its y coordinate (0-based). Values are stored in the unit declared by
/// the pitch the data belongs to; no unit conversion happens here.
#[derive(Debug, Clone)]
pub struct TrackingData {
    coords: Vec<f64>,
    frames: usize,
    player_ids: Vec<String>,
    framerate: f64,
    direction: Direction,
}

impl TrackingData {
    /// Builds tracking data from a row-major coordinate matrix.
    ///
    /// `coords.len()` must equal `frames * 2 * player_ids.len()`. Player ids
    /// must be distinct and non-empty, the framerate positive, and every
    /// (x, y) pair either fully present or fully missing.
    pub fn new(
        coords: Vec<f64>,
        frames: usize,
        player_ids: Vec<String>,
        framerate: f64,
        direction: Direction,
    ) -> Result<Self, CoreError> {
        if !(framerate.is_finite() && framerate > 0.0) {
            return Err(CoreError::InvalidFramerate(framerate));
        }
        validate_player_ids(&player_ids)?;
        let expected = frames * 2 * player_ids.len();
        if coords.len() != expected {
            return Err(CoreError::CoordinateCountMismatch {
                actual: coords.len(),
                expected,
            });
        }
        let width = 2 * player_ids.len();
        for t in 0..frames {
            for k in 0..player_ids.len() {
                let x = coords[t * width + 2 * k];
                let y = coords[t * width + 2 * k + 1];
                if x.is_nan() != y.is_nan() {
                    return Err(CoreError::HalfMissingSample {
                        frame: t,
                        player: k,
                    });
                }
            }
        }
        Ok(TrackingData {
            coords,
            frames,
            player_ids,
            framerate,
            direction,
        })
    }

    /// Convenience constructor from per-frame point rows.
    pub fn from_frames(
        rows: Vec<Vec<Point>>,
        player_ids: Vec<String>,
        framerate: f64,
        direction: Direction,
    ) -> Result<Self, CoreError> {
        let frames = rows.len();
        let mut coords = Vec::with_capacity(frames * 2 * player_ids.len());
        for row in &rows {
            if row.len() != player_ids.len() {
                return Err(CoreError::CoordinateCountMismatch {
                    actual: row.len() * 2,
                    expected: player_ids.len() * 2,
                });
            }
            for p in row {
                coords.push(p.x);
                coords.push(p.y);
            }
        }
        Self::new(coords, frames, player_ids, framerate, direction)
    }

    /// Internal constructor for operations that preserve all invariants by
    /// construction (transforms, filters). Skips re-validation.
    pub(crate) fn from_validated_parts(
        coords: Vec<f64>,
        frames: usize,
        player_ids: Vec<String>,
        framerate: f64,
        direction: Direction,
    ) -> Self {
        debug_assert_eq!(coords.len(), frames * 2 * player_ids.len());
        TrackingData {
            coords,
            frames,
            player_ids,
            framerate,
            direction,
        }
    }

    pub fn n_frames(&self) -> usize {
        self.frames
    }

    pub fn n_players(&self) -> usize {
        self.player_ids.len()
    }

    pub fn framerate(&self) -> f64 {
        self.framerate
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn player_ids(&self) -> &[String] {
        &self.player_ids
    }

    /// The raw row-major F x 2P coordinate matrix.
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Position of player `k` at frame `t` without bounds diagnostics.
    /// Panics on out-of-range indices like slice indexing does; use
    /// [`TrackingData::player_slice`] / [`TrackingData::frame_slice`] for
    /// checked access.
    pub fn point(&self, t: usize, k: usize) -> Point {
        let width = 2 * self.player_ids.len();
        Point {
            x: self.coords[t * width + 2 * k],
            y: self.coords[t * width + 2 * k + 1],
        }
    }

    /// All positions of player `k`, one per frame.
    pub fn player_slice(&self, k: usize) -> Result<Vec<Point>, CoreError> {
        if k >= self.n_players() {
            return Err(CoreError::PlayerIndexOutOfRange {
                index: k,
                count: self.n_players(),
            });
        }
        Ok((0..self.frames).map(|t| self.point(t, k)).collect())
    }

    /// Positions of all players at frame `t`, in `player_ids` order.
    pub fn frame_slice(&self, t: usize) -> Result<Vec<Point>, CoreError> {
        if t >= self.frames {
            return Err(CoreError::FrameIndexOutOfRange {
                index: t,
                count: self.frames,
            });
        }
        Ok((0..self.n_players()).map(|k| self.point(t, k)).collect())
    }

    /// Applies `f` to every non-missing sample, leaving missing samples
    /// missing. Any NaN produced by `f` collapses the sample to missing so
    /// the both-or-neither invariant holds unconditionally.
    pub(crate) fn map_points(&self, f: impl Fn(Point) -> Point) -> TrackingData {
        let width = 2 * self.player_ids.len();
        let mut coords = self.coords.clone();
        for t in 0..self.frames {
            for k in 0..self.player_ids.len() {
                let idx = t * width + 2 * k;
                let p = Point::new(coords[idx], coords[idx + 1]);
                if p.is_missing() {
                    continue;
                }
                let q = f(p);
                let q = if q.x.is_nan() || q.y.is_nan() {
                    Point::MISSING
                } else {
                    q
                };
                coords[idx] = q.x;
                coords[idx + 1] = q.y;
            }
        }
        TrackingData::from_validated_parts(
            coords,
            self.frames,
            self.player_ids.clone(),
            self.framerate,
            self.direction,
        )
    }
}

/// Bit-exact equality: coordinates compare by their IEEE-754 bit patterns,
/// so missing samples compare equal to missing samples.
impl PartialEq for TrackingData {
    fn eq(&self, other: &Self) -> bool {
        self.frames == other.frames
            && self.player_ids == other.player_ids
            && self.framerate == other.framerate
            && self.direction == other.direction
            && self.coords.len() == other.coords.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

fn validate_player_ids(ids: &[String]) -> Result<(), CoreError> {
    for (i, id) in ids.iter().enumerate() {
        if id.is_empty() || ids[..i].contains(id) {
            return Err(CoreError::InvalidPlayerIds);
        }
    }
    Ok(())
}
