use super::CoreError;

/// Unit of the coordinates stored in tracking data on this pitch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PitchUnit {
    Meters,
    Centimeters,
    /// Coordinates in percent of pitch extent; requires the physical
    /// length and width to recover metric scale.
    Percent,
}

/// Whether the axis ranges are provider-fixed or follow the data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PitchBoundedness {
    Fixed,
    Flexible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sport {
    Football,
    Handball,
    Other,
}

/// Cartesian embedding of the playing surface: axis ranges, unit and a
/// sport template used for rendering pitch markings.
#[derive(Debug, Clone, PartialEq)]
pub struct Pitch {
    xlim: (f64, f64),
    ylim: (f64, f64),
    unit: PitchUnit,
    boundedness: PitchBoundedness,
    length: Option<f64>,
    width: Option<f64>,
    sport: Sport,
}

impl Pitch {
    pub fn new(
        xlim: (f64, f64),
        ylim: (f64, f64),
        unit: PitchUnit,
        boundedness: PitchBoundedness,
        length: Option<f64>,
        width: Option<f64>,
        sport: Sport,
    ) -> Result<Self, CoreError> {
        if !(xlim.0.is_finite() && xlim.1.is_finite() && xlim.0 < xlim.1) {
            return Err(CoreError::InvalidPitchRange {
                axis: 'x',
                min: xlim.0,
                max: xlim.1,
            });
        }
        if !(ylim.0.is_finite() && ylim.1.is_finite() && ylim.0 < ylim.1) {
            return Err(CoreError::InvalidPitchRange {
                axis: 'y',
                min: ylim.0,
                max: ylim.1,
            });
        }
        if unit == PitchUnit::Percent && (length.is_none() || width.is_none()) {
            return Err(CoreError::MissingPhysicalSize);
        }
        Ok(Pitch {
            xlim,
            ylim,
            unit,
            boundedness,
            length,
            width,
            sport,
        })
    }

    /// Standard 105 x 68 m football pitch with its origin in the corner.
    pub fn football() -> Pitch {
        Pitch::new(
            (0.0, 105.0),
            (0.0, 68.0),
            PitchUnit::Meters,
            PitchBoundedness::Fixed,
            Some(105.0),
            Some(68.0),
            Sport::Football,
        )
        .expect("static template is valid")
    }

    /// Standard 40 x 20 m handball court with its origin in the corner.
    pub fn handball() -> Pitch {
        Pitch::new(
            (0.0, 40.0),
            (0.0, 20.0),
            PitchUnit::Meters,
            PitchBoundedness::Fixed,
            Some(40.0),
            Some(20.0),
            Sport::Handball,
        )
        .expect("static template is valid")
    }

    pub fn xlim(&self) -> (f64, f64) {
        self.xlim
    }

    pub fn ylim(&self) -> (f64, f64) {
        self.ylim
    }

    pub fn unit(&self) -> PitchUnit {
        self.unit
    }

    pub fn boundedness(&self) -> PitchBoundedness {
        self.boundedness
    }

    pub fn length(&self) -> Option<f64> {
        self.length
    }

    pub fn width(&self) -> Option<f64> {
        self.width
    }

    pub fn sport(&self) -> Sport {
        self.sport
    }
}
