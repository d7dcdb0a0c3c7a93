use super::VisError;

/// Marker and stroke styling for position and trajectory renders. Defaults
/// are arbitrary (the reference figures specify none): 0.8-unit markers,
/// 0.15-unit strokes, red/blue team colors on a white background with black
/// pitch lines.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    point_radius: f64,
    stroke_width: f64,
    team_colors: Vec<String>,
    background: String,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            point_radius: 0.8,
            stroke_width: 0.15,
            team_colors: vec!["#e41a1c".to_string(), "#377eb8".to_string()],
            background: "#ffffff".to_string(),
        }
    }
}

impl RenderStyle {
    /// Validates radius > 0, stroke width > 0, at least one team color and
    /// `#rrggbb` color syntax.
    pub fn new(
        point_radius: f64,
        stroke_width: f64,
        team_colors: Vec<String>,
        background: String,
    ) -> Result<Self, VisError> {
        if !(point_radius.is_finite() && point_radius > 0.0) {
            return Err(VisError::InvalidStyle(format!(
                "point_radius must be positive, got {point_radius}"
            )));
        }
        if !(stroke_width.is_finite() && stroke_width > 0.0) {
            return Err(VisError::InvalidStyle(format!(
                "stroke_width must be positive, got {stroke_width}"
            )));
        }
        if team_colors.is_empty() {
            return Err(VisError::InvalidStyle("at least one team color required".into()));
        }
        for color in team_colors.iter().chain([&background]) {
            if !is_hex_color(color) {
                return Err(VisError::InvalidStyle(format!(
                    "color {color:?} is not 7-character #rrggbb"
                )));
            }
        }
        Ok(RenderStyle {
            point_radius,
            stroke_width,
            team_colors,
            background,
        })
    }

    pub fn point_radius(&self) -> f64 {
        self.point_radius
    }

    pub fn stroke_width(&self) -> f64 {
        self.stroke_width
    }

    /// Team color `i`, falling back to the first color when out of range.
    pub fn team_color(&self, i: usize) -> &str {
        self.team_colors.get(i).unwrap_or(&self.team_colors[0])
    }

    pub fn background(&self) -> &str {
        &self.background
    }

    /// Pitch marking color (fixed).
    pub fn line_color(&self) -> &str {
        "#000000"
    }
}

fn is_hex_color(s: &str) -> bool {
    s.len() == 7
        && s.starts_with('#')
        && s.bytes().skip(1).all(|b| b.is_ascii_hexdigit())
}
