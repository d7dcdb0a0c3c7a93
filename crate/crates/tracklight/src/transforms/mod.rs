//! Spatial transformations and signal filtering of tracking data.
//!
//! All operations are pure: they return new [`TrackingData`] values,
//! preserve the missing mask (the filter's short-segment rule is the one
//! documented exception) and never alter framerate, direction or player
//! ids. Coordinates carry whatever unit the source pitch declares, so unit
//! reconciliation between providers is an explicit [`rescale_to_pitch`]
//! call rather than hidden conversion.

mod filter;

pub use filter::{butterworth_lowpass, FilterSpec};

use thiserror::Error;

use crate::core::{Pitch, Point, TrackingData};

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("filter order must be >= 1, got {0}")]
    InvalidOrder(usize),
    #[error("cutoff {cutoff_hz} Hz must lie in (0, {nyquist}) Hz (Nyquist)")]
    CutoffOutOfRange { cutoff_hz: f64, nyquist: f64 },
    #[error("source pitch has a zero-width or non-finite axis range")]
    DegenerateSourceRange,
}

/// Shifts every non-missing sample by (dx, dy).
pub fn translate(td: &TrackingData, dx: f64, dy: f64) -> TrackingData {
    td.map_points(|p| Point::new(p.x + dx, p.y + dy))
}

/// Scales every non-missing sample to (fx * x, fy * y).
pub fn scale(td: &TrackingData, fx: f64, fy: f64) -> TrackingData {
    td.map_points(|p| Point::new(fx * p.x, fy * p.y))
}

/// Rotates every non-missing sample about the origin, counter-clockwise
/// positive, angle in degrees.
pub fn rotate(td: &TrackingData, degrees: f64) -> TrackingData {
    let (sin, cos) = degrees.to_radians().sin_cos();
    td.map_points(|p| Point::new(cos * p.x - sin * p.y, sin * p.x + cos * p.y))
}

/// Mirror axis for [`reflect`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Reflects samples across the given axis: `X` maps (x, y) to (x, -y),
/// `Y` maps (x, y) to (-x, y).
pub fn reflect(td: &TrackingData, axis: Axis) -> TrackingData {
    match axis {
        Axis::X => td.map_points(|p| Point::new(p.x, -p.y)),
        Axis::Y => td.map_points(|p| Point::new(-p.x, p.y)),
    }
}

/// Affine map sending `from`'s axis ranges onto `to`'s, linearly per axis.
pub fn rescale_to_pitch(
    td: &TrackingData,
    from: &Pitch,
    to: &Pitch,
) -> Result<TrackingData, TransformError> {
    let (fx0, fx1) = from.xlim();
    let (fy0, fy1) = from.ylim();
    let (tx0, tx1) = to.xlim();
    let (ty0, ty1) = to.ylim();
    if fx1 - fx0 == 0.0 || fy1 - fy0 == 0.0 || !(fx1 - fx0).is_finite() || !(fy1 - fy0).is_finite()
    {
        return Err(TransformError::DegenerateSourceRange);
    }
    let sx = (tx1 - tx0) / (fx1 - fx0);
    let sy = (ty1 - ty0) / (fy1 - fy0);
    Ok(td.map_points(move |p| Point::new(tx0 + (p.x - fx0) * sx, ty0 + (p.y - fy0) * sy)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{Direction, PitchBoundedness, PitchUnit, Sport};

    fn td_one(p: Point) -> TrackingData {
        TrackingData::from_frames(
            vec![vec![p]],
            vec!["p".into()],
            20.0,
            Direction::Unspecified,
        )
        .unwrap()
    }

    fn point0(td: &TrackingData) -> Point {
        td.point(0, 0)
    }

    #[test]
    fn translate_identity_and_shift() {
        assert_eq!(
            point0(&translate(&td_one(Point::new(1.0, 2.0)), 0.0, 0.0)),
            Point::new(1.0, 2.0)
        );
        assert_eq!(
            point0(&translate(&td_one(Point::new(1.0, 2.0)), -1.0, 3.0)),
            Point::new(0.0, 5.0)
        );
        assert!(point0(&translate(&td_one(Point::MISSING), 1.0, 1.0)).is_missing());
    }

    #[test]
    fn rotate_quarter_turn() {
        let p = point0(&rotate(&td_one(Point::new(1.0, 0.0)), 90.0));
        assert!((p.x - 0.0).abs() < 1e-12);
        assert!((p.y - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rotate_round_trip() {
        let p0 = Point::new(3.7, -1.2);
        let back = point0(&rotate(&rotate(&td_one(p0), 33.0), -33.0));
        assert!((back.x - p0.x).abs() < 1e-9);
        assert!((back.y - p0.y).abs() < 1e-9);
    }

    #[test]
    fn reflect_both_axes() {
        assert_eq!(
            point0(&reflect(&td_one(Point::new(3.0, 4.0)), Axis::X)),
            Point::new(3.0, -4.0)
        );
        assert_eq!(
            point0(&reflect(&td_one(Point::new(3.0, 4.0)), Axis::Y)),
            Point::new(-3.0, 4.0)
        );
    }

    #[test]
    fn scale_identity() {
        assert_eq!(
            point0(&scale(&td_one(Point::new(5.0, 6.0)), 1.0, 1.0)),
            Point::new(5.0, 6.0)
        );
    }

    fn pitch(xlim: (f64, f64), ylim: (f64, f64)) -> Pitch {
        Pitch::new(
            xlim,
            ylim,
            PitchUnit::Meters,
            PitchBoundedness::Fixed,
            None,
            None,
            Sport::Football,
        )
        .unwrap()
    }

    #[test]
    fn rescale_maps_midpoint_and_corner() {
        let from = pitch((0.0, 105.0), (0.0, 68.0));
        let to = pitch((-52.5, 52.5), (-34.0, 34.0));
        let mid = point0(&rescale_to_pitch(&td_one(Point::new(52.5, 34.0)), &from, &to).unwrap());
        assert!((mid.x).abs() < 1e-12 && (mid.y).abs() < 1e-12);
        let corner = point0(&rescale_to_pitch(&td_one(Point::new(0.0, 0.0)), &from, &to).unwrap());
        assert_eq!((corner.x, corner.y), (-52.5, -34.0));
    }

    #[test]
    fn rescale_same_pitch_is_identity() {
        let p = pitch((0.0, 40.0), (0.0, 20.0));
        let out = point0(&rescale_to_pitch(&td_one(Point::new(13.0, 7.0)), &p, &p).unwrap());
        assert!((out.x - 13.0).abs() < 1e-12);
        assert!((out.y - 7.0).abs() < 1e-12);
    }

    #[test]
    fn rescale_round_trip() {
        let a = pitch((0.0, 105.0), (0.0, 68.0));
        let b = pitch((-1.0, 1.0), (-1.0, 1.0));
        let td = td_one(Point::new(17.3, 42.1));
        let there = rescale_to_pitch(&td, &a, &b).unwrap();
        let back = point0(&rescale_to_pitch(&there, &b, &a).unwrap());
        assert!((back.x - 17.3).abs() < 1e-9);
        assert!((back.y - 42.1).abs() < 1e-9);
    }

    #[test]
    fn transforms_preserve_mask_and_metadata() {
        let rows = vec![
            vec![Point::new(1.0, 1.0), Point::MISSING],
            vec![Point::MISSING, Point::new(2.0, 2.0)],
        ];
        let td = TrackingData::from_frames(
            rows,
            vec!["a".into(), "b".into()],
            10.0,
            Direction::LeftToRight,
        )
        .unwrap();
        for out in [
            translate(&td, 4.0, -2.0),
            scale(&td, 2.0, 0.5),
            rotate(&td, 45.0),
            reflect(&td, Axis::X),
        ] {
            assert_eq!(out.framerate(), 10.0);
            assert_eq!(out.direction(), Direction::LeftToRight);
            for t in 0..2 {
                for k in 0..2 {
                    assert_eq!(out.point(t, k).is_missing(), td.point(t, k).is_missing());
                }
            }
        }
    }
}
