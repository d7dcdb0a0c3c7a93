use std::f64::consts::PI;

use crate::core::TrackingData;

use super::TransformError;

/// Low-pass filter parameters. The defaults (order 3, 1 Hz cutoff) are the
/// usual smoothing regime for position tracking data.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterSpec {
    pub order: usize,
    pub cutoff_hz: f64,
}

impl Default for FilterSpec {
    fn default() -> Self {
        FilterSpec {
            order: 3,
            cutoff_hz: 1.0,
        }
    }
}

/// One second-order section, denominator normalized to a0 = 1.
#[derive(Debug, Clone, Copy)]
struct Sos {
    b0: f64,
    b1: f64,
    b2: f64,
    a1: f64,
    a2: f64,
}

impl Sos {
    /// DC gain of the section.
    fn gain_at_dc(&self) -> f64 {
        (self.b0 + self.b1 + self.b2) / (1.0 + self.a1 + self.a2)
    }

    /// Steady-state direct-form-II-transposed state for unit step input,
    /// used to suppress start-up transients.
    fn unit_step_state(&self) -> (f64, f64) {
        let h = self.gain_at_dc();
        let z1 = self.b1 + self.b2 - (self.a1 + self.a2) * h;
        let z2 = self.b2 - self.a2 * h;
        (z1, z2)
    }
}

/// Zero-phase (forward-backward) Butterworth low-pass of each coordinate
/// column. Filtering runs per contiguous non-missing segment; gaps stay
/// missing and segments too short for the edge padding (3 * (order + 1)
/// samples, odd-reflection) are set entirely to missing. Framerate,
/// player ids and direction are unchanged.
///
/// The forward-backward pass is applied in both time orderings and
/// averaged, which makes the result exactly symmetric under time reversal
/// (edge transients of a single-ordering pass are not).
pub fn butterworth_lowpass(
    td: &TrackingData,
    spec: &FilterSpec,
) -> Result<TrackingData, TransformError> {
    if spec.order < 1 {
        return Err(TransformError::InvalidOrder(spec.order));
    }
    let nyquist = td.framerate() / 2.0;
    if !(spec.cutoff_hz.is_finite() && spec.cutoff_hz > 0.0 && spec.cutoff_hz < nyquist) {
        return Err(TransformError::CutoffOutOfRange {
            cutoff_hz: spec.cutoff_hz,
            nyquist,
        });
    }

    let sections = design_lowpass_sos(spec.order, spec.cutoff_hz, td.framerate());
    let pad = 3 * (spec.order + 1);
    let frames = td.n_frames();
    let n_players = td.n_players();
    let width = 2 * n_players;
    let mut coords = td.coords().to_vec();

    for k in 0..n_players {
        // segment boundaries come from the player's missing mask; x and y
        // columns of a player share it by the both-or-neither invariant
        let missing: Vec<bool> = (0..frames).map(|t| td.point(t, k).is_missing()).collect();
        let mut start = 0usize;
        while start < frames {
            if missing[start] {
                start += 1;
                continue;
            }
            let mut end = start;
            while end < frames && !missing[end] {
                end += 1;
            }
            for axis in 0..2 {
                let col = 2 * k + axis;
                let mut segment: Vec<f64> =
                    (start..end).map(|t| coords[t * width + col]).collect();
                if segment.len() <= pad {
                    segment.iter_mut().for_each(|v| *v = f64::NAN);
                } else {
                    segment = filtfilt_symmetric(&sections, pad, &segment);
                }
                for (i, t) in (start..end).enumerate() {
                    coords[t * width + col] = segment[i];
                }
            }
            start = end;
        }
    }

    Ok(TrackingData::from_validated_parts(
        coords,
        frames,
        td.player_ids().to_vec(),
        td.framerate(),
        td.direction(),
    ))
}

/// Designs the digital cascade: analog Butterworth prototype poles,
/// frequency prewarp, bilinear transform, conjugate pairs combined into
/// second-order sections (plus one first-order section for odd orders).
fn design_lowpass_sos(order: usize, cutoff_hz: f64, framerate: f64) -> Vec<Sos> {
    let warped = 2.0 * framerate * (PI * cutoff_hz / framerate).tan();
    let k = 2.0 * framerate; // bilinear constant
    let n = order;
    let mut sections = Vec::with_capacity(n.div_ceil(2));

    for i in 0..n / 2 {
        // prototype pole with positive imaginary part; its conjugate is implied
        let theta = PI * (2.0 * i as f64 + n as f64 + 1.0) / (2.0 * n as f64);
        let re = warped * theta.cos();
        let mag2 = warped * warped; // |pole| = 1 on the prototype circle
        // analog section: warped^2 / (s^2 - 2*re*s + mag2)
        let a = k * k;
        let b = -2.0 * re * k;
        let c = mag2;
        let a0 = a + b + c;
        sections.push(Sos {
            b0: mag2 / a0,
            b1: 2.0 * mag2 / a0,
            b2: mag2 / a0,
            a1: (-2.0 * a + 2.0 * c) / a0,
            a2: (a - b + c) / a0,
        });
    }
    if n % 2 == 1 {
        // real pole at -warped: analog section warped / (s + warped)
        let a0 = k + warped;
        sections.push(Sos {
            b0: warped / a0,
            b1: warped / a0,
            b2: 0.0,
            a1: (warped - k) / a0,
            a2: 0.0,
        });
    }
    sections
}

/// Runs the cascade once over `x` with initial states scaled to `x[0]`.
fn sosfilt(sections: &[Sos], x: &[f64]) -> Vec<f64> {
    let mut states: Vec<(f64, f64)> = Vec::with_capacity(sections.len());
    let mut scale = x.first().copied().unwrap_or(0.0);
    for s in sections {
        let (z1, z2) = s.unit_step_state();
        states.push((z1 * scale, z2 * scale));
        scale *= s.gain_at_dc();
    }

    let mut out = Vec::with_capacity(x.len());
    for &sample in x {
        let mut v = sample;
        for (s, state) in sections.iter().zip(states.iter_mut()) {
            let y = s.b0 * v + state.0;
            state.0 = s.b1 * v - s.a1 * y + state.1;
            state.1 = s.b2 * v - s.a2 * y;
            v = y;
        }
        out.push(v);
    }
    out
}

/// Forward-backward pass over one gap-free segment with odd-reflection
/// padding of `pad` samples on each side. Requires `x.len() > pad`.
fn filtfilt(sections: &[Sos], pad: usize, x: &[f64]) -> Vec<f64> {
    let n = x.len();
    debug_assert!(n > pad);

    let mut ext = Vec::with_capacity(n + 2 * pad);
    for i in (1..=pad).rev() {
        ext.push(2.0 * x[0] - x[i]);
    }
    ext.extend_from_slice(x);
    for i in 1..=pad {
        ext.push(2.0 * x[n - 1] - x[n - 1 - i]);
    }

    let mut y = sosfilt(sections, &ext);
    y.reverse();
    let mut z = sosfilt(sections, &y);
    z.reverse();
    z[pad..pad + n].to_vec()
}

/// Averages the forward-backward pass over both time orderings. Both runs
/// agree to machine precision away from segment edges; averaging them makes
/// the output exactly invariant under time reversal of the input.
fn filtfilt_symmetric(sections: &[Sos], pad: usize, x: &[f64]) -> Vec<f64> {
    let a = filtfilt(sections, pad, x);
    let reversed: Vec<f64> = x.iter().rev().copied().collect();
    let b = filtfilt(sections, pad, &reversed);
    a.iter()
        .zip(b.iter().rev())
        .map(|(u, v)| 0.5 * (u + v))
        .collect()
}
