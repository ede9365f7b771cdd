use std::fmt;

use serde::{Deserialize, Serialize};

use crate::FearError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Band {
    VeryLow,
    Low,
    Medium,
    High,
    VeryHigh,
}

impl Band {
    pub const ALL: [Band; 5] = [
        Band::VeryLow,
        Band::Low,
        Band::Medium,
        Band::High,
        Band::VeryHigh,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Band::VeryLow => "VeryLow",
            Band::Low => "Low",
            Band::Medium => "Medium",
            Band::High => "High",
            Band::VeryHigh => "VeryHigh",
        }
    }

    pub fn is_high(self) -> bool {
        self >= Band::High
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Band {
    type Err = FearError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Band::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| FearError::Bands(format!("unknown band `{s}`")))
    }
}

const CUT_SLACK: f64 = 1e-9;

/// Disjoint bands: VeryLow is `[0, c0]`, then `(c0, c1]`, ... up to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntensityBands {
    cuts: [f64; 4],
}

impl Default for IntensityBands {
    fn default() -> Self {
        Self {
            cuts: [0.24, 0.5, 0.73, 0.9],
        }
    }
}

#[derive(Deserialize)]
struct BandFile {
    bands: Vec<BandEntry>,
}

#[derive(Deserialize)]
struct BandEntry {
    label: String,
    upper: f64,
}

impl IntensityBands {
    pub fn new(cuts: [f64; 4]) -> Result<Self, FearError> {
        let mut prev = 0.0;
        for c in cuts {
            if !(c > prev && c < 1.0) {
                return Err(FearError::Bands(
                    "upper bounds must increase strictly inside (0, 1)".into(),
                ));
            }
            prev = c;
        }
        Ok(Self { cuts })
    }

    /// Parses `{"bands": [{"label": "VeryLow", "upper": 0.24}, ...]}`; all
    /// five labels in order, the last upper bound being 1.
    pub fn from_json(text: &str) -> Result<Self, FearError> {
        let file: BandFile =
            serde_json::from_str(text).map_err(|e| FearError::Bands(e.to_string()))?;
        if file.bands.len() != 5 {
            return Err(FearError::Bands(format!("expected 5 bands, got {}", file.bands.len())));
        }
        for (entry, band) in file.bands.iter().zip(Band::ALL) {
            if entry.label != band.name() {
                return Err(FearError::Bands(format!(
                    "expected `{}`, found `{}`",
                    band.name(),
                    entry.label
                )));
            }
        }
        if file.bands[4].upper != 1.0 {
            return Err(FearError::Bands("last band must end at 1".into()));
        }
        let mut cuts = [0.0; 4];
        for (c, e) in cuts.iter_mut().zip(&file.bands) {
            *c = e.upper;
        }
        Self::new(cuts)
    }

    pub fn cuts(&self) -> [f64; 4] {
        self.cuts
    }

    /// Values within `CUT_SLACK` above a cut still count as the lower band,
    /// so integration round-off at a boundary cannot promote a value.
    pub fn classify(&self, value: f64) -> Band {
        let v = if value.is_nan() { 0.0 } else { value.clamp(0.0, 1.0) };
        let k = self.cuts.iter().take_while(|&&c| v > c + CUT_SLACK).count();
        Band::ALL[k]
    }
}

pub fn classify_band(value: f64, bands: &IntensityBands) -> Band {
    bands.classify(value)
}
