//! Deterministic SVG rendering of pitches, positions and trajectories.
//!
//! Output is plain SVG 1.1 text with a fixed element order and all
//! coordinates formatted to 6 decimal places, so equal inputs produce
//! byte-identical documents. A single top-level transform flips the y axis
//! once, making pitch coordinates read conventionally (y up) without
//! touching the data.

mod style;

pub use style::RenderStyle;

use std::fmt::Write as _;

use thiserror::Error;

use crate::core::{Pitch, Sport, TrackingData};

#[derive(Debug, Error)]
pub enum VisError {
    #[error("frame {index} out of range for {count} frames")]
    FrameOutOfRange { index: usize, count: usize },
    #[error("frame range {t0}..{t1} invalid for {count} frames")]
    InvalidRange { t0: usize, t1: usize, count: usize },
    #[error("invalid style: {0}")]
    InvalidStyle(String),
}

/// Fixed 6-decimal coordinate formatting (the SVG output contract).
fn fmt6(v: f64) -> String {
    format!("{v:.6}")
}

/// Renders the pitch backdrop and sport markings with default styling.
/// The viewBox pads the axis ranges by 5% of the larger dimension on every
/// side. Football pitches get an outline, halfway line, center circle and
/// penalty areas; handball courts an outline, center line and 6 m goal-area
/// arcs; anything else just the outline.
pub fn render_pitch(pitch: &Pitch) -> String {
    let style = RenderStyle::default();
    let mut svg = document_open(pitch);
    push_pitch(&mut svg, pitch, &style);
    document_close(&mut svg);
    svg
}

/// Renders the pitch plus one circle per non-missing player at `frame`,
/// in player-id order, colored with the first team color.
pub fn render_positions(
    pitch: &Pitch,
    td: &TrackingData,
    frame: usize,
    style: &RenderStyle,
) -> Result<String, VisError> {
    if frame >= td.n_frames() {
        return Err(VisError::FrameOutOfRange {
            index: frame,
            count: td.n_frames(),
        });
    }
    let mut svg = document_open(pitch);
    push_pitch(&mut svg, pitch, style);
    for k in 0..td.n_players() {
        let p = td.point(frame, k);
        if p.is_missing() {
            continue;
        }
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            fmt6(p.x),
            fmt6(p.y),
            fmt6(style.point_radius()),
            style.team_color(0),
        );
    }
    document_close(&mut svg);
    Ok(svg)
}

/// Renders the pitch plus one polyline per player per non-missing run
/// within `[t0, t1)`; a gap splits the polyline.
pub fn render_trajectories(
    pitch: &Pitch,
    td: &TrackingData,
    frame_range: (usize, usize),
    style: &RenderStyle,
) -> Result<String, VisError> {
    let (t0, t1) = frame_range;
    if t0 >= t1 || t1 > td.n_frames() {
        return Err(VisError::InvalidRange {
            t0,
            t1,
            count: td.n_frames(),
        });
    }
    let mut svg = document_open(pitch);
    push_pitch(&mut svg, pitch, style);
    for k in 0..td.n_players() {
        let mut run: Vec<(f64, f64)> = Vec::new();
        for t in t0..=t1 {
            let sample = (t < t1).then(|| td.point(t, k)).filter(|p| !p.is_missing());
            match sample {
                Some(p) => run.push((p.x, p.y)),
                None => {
                    if !run.is_empty() {
                        push_polyline(&mut svg, &run, style);
                        run.clear();
                    }
                }
            }
        }
    }
    document_close(&mut svg);
    Ok(svg)
}

fn viewbox(pitch: &Pitch) -> (f64, f64, f64, f64) {
    let (x0, x1) = pitch.xlim();
    let (y0, y1) = pitch.ylim();
    // 5% padding per axis
    let mx = 0.05 * (x1 - x0);
    let my = 0.05 * (y1 - y0);
    (x0 - mx, y0 - my, (x1 - x0) + 2.0 * mx, (y1 - y0) + 2.0 * my)
}

fn document_open(pitch: &Pitch) -> String {
    let (vx, vy, vw, vh) = viewbox(pitch);
    let (y0, y1) = pitch.ylim();
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        fmt6(vx),
        fmt6(vy),
        fmt6(vw),
        fmt6(vh),
    );
    // flip the y axis once about the pitch midline (the margins are
    // symmetric, so the viewBox maps onto itself)
    let _ = writeln!(svg, r#"<g transform="matrix(1 0 0 -1 0 {})">"#, fmt6(y0 + y1));
    svg
}

fn document_close(svg: &mut String) {
    svg.push_str("</g>\n</svg>\n");
}

fn push_polyline(svg: &mut String, run: &[(f64, f64)], style: &RenderStyle) {
    let points: Vec<String> = run
        .iter()
        .map(|(x, y)| format!("{},{}", fmt6(*x), fmt6(*y)))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
        points.join(" "),
        style.team_color(0),
        fmt6(style.stroke_width()),
    );
}

fn push_pitch(svg: &mut String, pitch: &Pitch, style: &RenderStyle) {
    let (vx, vy, vw, vh) = viewbox(pitch);
    let _ = writeln!(
        svg,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
        fmt6(vx),
        fmt6(vy),
        fmt6(vw),
        fmt6(vh),
        style.background(),
    );
    let (x0, x1) = pitch.xlim();
    let (y0, y1) = pitch.ylim();
    push_rect(svg, x0, y0, x1 - x0, y1 - y0, style);
    match pitch.sport() {
        Sport::Football => push_football_markings(svg, pitch, style),
        Sport::Handball => push_handball_markings(svg, pitch, style),
        Sport::Other => {}
    }
}

fn push_rect(svg: &mut String, x: f64, y: f64, w: f64, h: f64, style: &RenderStyle) {
    let _ = writeln!(
        svg,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
        fmt6(x),
        fmt6(y),
        fmt6(w),
        fmt6(h),
        style.line_color(),
        fmt6(style.stroke_width()),
    );
}

fn push_line(svg: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, style: &RenderStyle) {
    let _ = writeln!(
        svg,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}"/>"#,
        fmt6(x1),
        fmt6(y1),
        fmt6(x2),
        fmt6(y2),
        style.line_color(),
        fmt6(style.stroke_width()),
    );
}

/// Marking dimensions follow the standard 105 x 68 proportions and scale
/// linearly with the actual axis ranges.
fn push_football_markings(svg: &mut String, pitch: &Pitch, style: &RenderStyle) {
    let (x0, x1) = pitch.xlim();
    let (y0, y1) = pitch.ylim();
    let sx = (x1 - x0) / 105.0;
    let sy = (y1 - y0) / 68.0;
    let cx = (x0 + x1) / 2.0;
    let cy = (y0 + y1) / 2.0;

    push_line(svg, cx, y0, cx, y1, style);
    let _ = writeln!(
        svg,
        r#"<ellipse cx="{}" cy="{}" rx="{}" ry="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
        fmt6(cx),
        fmt6(cy),
        fmt6(9.15 * sx),
        fmt6(9.15 * sy),
        style.line_color(),
        fmt6(style.stroke_width()),
    );
    // penalty areas, 16.5 m deep and 40.32 m wide
    let depth = 16.5 * sx;
    let half_width = 20.16 * sy;
    push_rect(svg, x0, cy - half_width, depth, 2.0 * half_width, style);
    push_rect(svg, x1 - depth, cy - half_width, depth, 2.0 * half_width, style);
}

/// Marking dimensions follow the standard 40 x 20 proportions: center line
/// plus 6 m goal areas (quarter arcs around each post joined by a straight
/// segment).
fn push_handball_markings(svg: &mut String, pitch: &Pitch, style: &RenderStyle) {
    let (x0, x1) = pitch.xlim();
    let (y0, y1) = pitch.ylim();
    let sx = (x1 - x0) / 40.0;
    let sy = (y1 - y0) / 20.0;
    let cx = (x0 + x1) / 2.0;
    let cy = (y0 + y1) / 2.0;

    push_line(svg, cx, y0, cx, y1, style);

    let rx = 6.0 * sx;
    let ry = 6.0 * sy;
    let post = 1.5 * sy; // goal posts sit 1.5 m either side of the center
    for (goal_x, inward, sweep) in [(x0, rx, 1u8), (x1, -rx, 0u8)] {
        let _ = writeln!(
            svg,
            r#"<path d="M {} {} A {} {} 0 0 {} {} {} L {} {} A {} {} 0 0 {} {} {}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            fmt6(goal_x),
            fmt6(cy - post - ry),
            fmt6(rx),
            fmt6(ry),
            sweep,
            fmt6(goal_x + inward),
            fmt6(cy - post),
            fmt6(goal_x + inward),
            fmt6(cy + post),
            fmt6(rx),
            fmt6(ry),
            sweep,
            fmt6(goal_x),
            fmt6(cy + post + ry),
            style.line_color(),
            fmt6(style.stroke_width()),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{Direction, PitchBoundedness, PitchUnit, Point};

    fn other_pitch() -> Pitch {
        Pitch::new(
            (0.0, 10.0),
            (0.0, 5.0),
            PitchUnit::Meters,
            PitchBoundedness::Fixed,
            None,
            None,
            Sport::Other,
        )
        .unwrap()
    }

    fn small_td(rows: Vec<Vec<Point>>) -> TrackingData {
        let ids = (0..rows[0].len()).map(|k| format!("p{k}")).collect();
        TrackingData::from_frames(rows, ids, 20.0, Direction::Unspecified).unwrap()
    }

    #[test]
    fn football_viewbox_arithmetic() {
        let svg = render_pitch(&Pitch::football());
        // margin = 0.05 * 105 = 5.25
        assert!(svg.contains(r#"viewBox="-5.250000 -3.400000 115.500000 74.800000""#));
    }

    #[test]
    fn other_sport_is_outline_plus_background() {
        let svg = render_pitch(&other_pitch());
        assert_eq!(svg.matches("<rect").count(), 2);
        assert_eq!(svg.matches("<line").count(), 0);
        assert_eq!(svg.matches("<path").count(), 0);
    }

    #[test]
    fn rendering_is_byte_deterministic() {
        assert_eq!(render_pitch(&Pitch::handball()), render_pitch(&Pitch::handball()));
        let td = small_td(vec![vec![Point::new(3.0, 2.0)], vec![Point::new(4.0, 2.5)]]);
        let style = RenderStyle::default();
        let a = render_trajectories(&other_pitch(), &td, (0, 2), &style).unwrap();
        let b = render_trajectories(&other_pitch(), &td, (0, 2), &style).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn positions_draw_one_circle_per_present_player() {
        let td = small_td(vec![vec![
            Point::new(10.0, 20.0),
            Point::MISSING,
        ]]);
        let pitch = Pitch::handball();
        let svg = render_positions(&pitch, &td, 0, &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains(r#"cx="10.000000" cy="20.000000""#));
    }

    #[test]
    fn all_players_missing_renders_no_circles() {
        let td = small_td(vec![vec![Point::MISSING, Point::MISSING]]);
        let svg = render_positions(&Pitch::handball(), &td, 0, &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn frame_out_of_range() {
        let td = small_td(vec![vec![Point::new(0.0, 0.0)]]);
        assert!(matches!(
            render_positions(&Pitch::handball(), &td, 1, &RenderStyle::default()),
            Err(VisError::FrameOutOfRange { index: 1, count: 1 })
        ));
    }

    #[test]
    fn straight_run_is_one_polyline_with_all_points() {
        let td = small_td((0..5).map(|t| vec![Point::new(t as f64, 1.0)]).collect());
        let svg = render_trajectories(&other_pitch(), &td, (0, 5), &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches(',').count(), 5, "five x,y pairs in the run");
    }

    #[test]
    fn interior_gap_splits_the_polyline() {
        let mut rows: Vec<Vec<Point>> = (0..5).map(|t| vec![Point::new(t as f64, 1.0)]).collect();
        rows[2][0] = Point::MISSING;
        let td = small_td(rows);
        let svg = render_trajectories(&other_pitch(), &td, (0, 5), &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
    }

    #[test]
    fn empty_range_is_rejected() {
        let td = small_td(vec![vec![Point::new(0.0, 0.0)]]);
        assert!(matches!(
            render_trajectories(&other_pitch(), &td, (1, 1), &RenderStyle::default()),
            Err(VisError::InvalidRange { .. })
        ));
    }

    #[test]
    fn documents_are_well_formed_xml() {
        let (home, _, _, pitch) = crate::datasets::get_dataset_sample();
        for svg in [
            render_pitch(&pitch),
            render_pitch(&Pitch::football()),
            render_positions(&pitch, &home, 0, &RenderStyle::default()).unwrap(),
            render_trajectories(&pitch, &home, (0, 200), &RenderStyle::default()).unwrap(),
        ] {
            roxmltree::Document::parse(&svg).expect("well-formed XML");
        }
    }
}
