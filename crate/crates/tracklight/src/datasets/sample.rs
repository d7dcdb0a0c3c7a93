use std::f64::consts::TAU;

use crate::core::{Direction, Pitch, Point, TrackingData};

/// Frames in the bundled sample (60 s at 20 fps).
const FRAMES: usize = 1200;
const FRAMERATE: f64 = 20.0;
const PLAYERS_PER_TEAM: usize = 7;

/// Returns the bundled synthetic handball segment: home and away squads of
/// 7 players each, a ball object and the 40 x 20 m pitch, 1200 frames at
/// 20 fps. Trajectories are smooth closed-form curves, so repeated calls
/// are bit-identical. Each team contains one contiguous missing span to
/// exercise downstream gap handling.
pub fn get_dataset_sample() -> (TrackingData, TrackingData, TrackingData, Pitch) {
    let home = team(Team::Home);
    let away = team(Team::Away);
    let ball = ball();
    (home, away, ball, Pitch::handball())
}

#[derive(Clone, Copy)]
enum Team {
    Home,
    Away,
}

/// Anchor, amplitude, frequency and phase of one player's x/y oscillation,
/// chosen so every trajectory stays inside the court at plausible speeds.
struct PlayerMotion {
    cx: f64,
    cy: f64,
    ax: f64,
    ay: f64,
    fx: f64,
    fy: f64,
    px: f64,
    py: f64,
}

fn motion(team: Team, k: usize) -> PlayerMotion {
    let k = k as f64;
    match team {
        Team::Home => PlayerMotion {
            cx: 4.0 + 2.2 * k,
            cy: 3.0 + 2.3 * k,
            ax: 2.0 + 0.2 * k,
            ay: 1.5 + 0.18 * k,
            fx: 0.05 + 0.013 * k,
            fy: 0.07 + 0.011 * k,
            px: 0.7 * k,
            py: 1.3 * k,
        },
        Team::Away => PlayerMotion {
            cx: 36.0 - 2.2 * k,
            cy: 17.0 - 2.3 * k,
            ax: 2.1 + 0.19 * k,
            ay: 1.4 + 0.2 * k,
            fx: 0.06 + 0.012 * k,
            fy: 0.08 + 0.01 * k,
            px: 0.9 * k + 0.4,
            py: 1.1 * k + 0.2,
        },
    }
}

/// Missing span (player index, frame range) per team.
fn missing_span(team: Team) -> (usize, std::ops::Range<usize>) {
    match team {
        Team::Home => (3, 500..540),
        Team::Away => (5, 200..230),
    }
}

fn team(side: Team) -> TrackingData {
    let (prefix, direction) = match side {
        Team::Home => ("home", Direction::LeftToRight),
        Team::Away => ("away", Direction::RightToLeft),
    };
    let player_ids: Vec<String> = (1..=PLAYERS_PER_TEAM).map(|k| format!("{prefix}_{k}")).collect();
    let (gap_player, gap_frames) = missing_span(side);

    let mut rows = Vec::with_capacity(FRAMES);
    for t in 0..FRAMES {
        let seconds = t as f64 / FRAMERATE;
        let mut row = Vec::with_capacity(PLAYERS_PER_TEAM);
        for k in 0..PLAYERS_PER_TEAM {
            if k == gap_player && gap_frames.contains(&t) {
                row.push(Point::MISSING);
                continue;
            }
            let m = motion(side, k);
            row.push(Point::new(
                m.cx + m.ax * (TAU * m.fx * seconds + m.px).sin(),
                m.cy + m.ay * (TAU * m.fy * seconds + m.py).sin(),
            ));
        }
        rows.push(row);
    }
    TrackingData::from_frames(rows, player_ids, FRAMERATE, direction)
        .expect("sample construction satisfies all invariants")
}

fn ball() -> TrackingData {
    let rows = (0..FRAMES)
        .map(|t| {
            let seconds = t as f64 / FRAMERATE;
            vec![Point::new(
                20.0 + 15.0 * (TAU * 0.08 * seconds + 1.0).sin(),
                10.0 + 7.0 * (TAU * 0.13 * seconds + 2.0).sin(),
            )]
        })
        .collect();
    TrackingData::from_frames(rows, vec!["ball".to_string()], FRAMERATE, Direction::Unspecified)
        .expect("sample construction satisfies all invariants")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_shape_is_fixed() {
        let (home, away, ball, pitch) = get_dataset_sample();
        assert_eq!(home.n_players(), 7);
        assert_eq!(away.n_players(), 7);
        assert_eq!(ball.n_players(), 1);
        assert_eq!(home.n_frames(), 1200);
        assert_eq!(home.framerate(), 20.0);
        assert_eq!(pitch.xlim(), (0.0, 40.0));
        assert_eq!(pitch.ylim(), (0.0, 20.0));
    }

    #[test]
    fn sample_is_deterministic() {
        let (h1, a1, b1, _) = get_dataset_sample();
        let (h2, a2, b2, _) = get_dataset_sample();
        assert_eq!(h1, h2);
        assert_eq!(a1, a2);
        assert_eq!(b1, b2);
    }

    #[test]
    fn each_team_has_a_missing_span() {
        let (home, away, ball, _) = get_dataset_sample();
        assert!(home.point(510, 3).is_missing());
        assert!(!home.point(499, 3).is_missing());
        assert!(away.point(210, 5).is_missing());
        assert!((0..1200).all(|t| !ball.point(t, 0).is_missing()));
        for td in [&home, &away] {
            let missing: usize = (0..td.n_frames())
                .map(|t| (0..td.n_players()).filter(|&k| td.point(t, k).is_missing()).count())
                .sum();
            assert!(missing > 0);
        }
    }

    #[test]
    fn sample_stays_on_the_court() {
        let (home, away, ball, pitch) = get_dataset_sample();
        let (x0, x1) = pitch.xlim();
        let (y0, y1) = pitch.ylim();
        for td in [&home, &away, &ball] {
            for t in 0..td.n_frames() {
                for k in 0..td.n_players() {
                    let p = td.point(t, k);
                    if p.is_missing() {
                        continue;
                    }
                    assert!(p.x >= x0 && p.x <= x1, "x {} out of court", p.x);
                    assert!(p.y >= y0 && p.y <= y1, "y {} out of court", p.y);
                }
            }
        }
    }
}
