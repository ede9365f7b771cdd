//! Prospect-based fear appraisal.
//!
//! Three fuzzy stages feed a weighted fear potential:
//!
//! * undesirability from goal importance and goal achievement,
//! * likelihood from normalised distance and speed,
//! * global intensity (Ig) from sense of reality and proximity.
//!
//! The potential minus a threshold is the fear intensity, which is then
//! sorted into one of five bands.

mod band;
mod model;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use band::{classify_band, Band, IntensityBands};
pub use model::{FearModel, Table1, BANDS_FILE, IG_FILE, LIKELIHOOD_FILE, UNDESIRABILITY_FILE,
    UNDESIRABILITY_ORIGINAL_FILE};

#[derive(Debug, Error)]
pub enum FearError {
    #[error(transparent)]
    Fuzzy(#[from] fuzzy_core::FuzzyError),
    #[error("fear config: {0}")]
    Config(String),
    #[error("band table: {0}")]
    Bands(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// The six crisp appraisal inputs, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AppraisalInputs {
    pub imp_goal: f64,
    pub ach_goal: f64,
    pub distance_norm: f64,
    pub speed_norm: f64,
    pub sense_of_reality: f64,
    /// 1 is "about to happen", 0 is "no chance".
    pub proximity: f64,
}

impl AppraisalInputs {
    pub fn uniform(v: f64) -> Self {
        Self {
            imp_goal: v,
            ach_goal: v,
            distance_norm: v,
            speed_norm: v,
            sense_of_reality: v,
            proximity: v,
        }
    }

    /// Copy with every field clamped to `[0, 1]`; NaN becomes 0.
    pub fn clamped(&self) -> Self {
        let c = |x: f64| if x.is_nan() { 0.0 } else { x.clamp(0.0, 1.0) };
        Self {
            imp_goal: c(self.imp_goal),
            ach_goal: c(self.ach_goal),
            distance_norm: c(self.distance_norm),
            speed_norm: c(self.speed_norm),
            sense_of_reality: c(self.sense_of_reality),
            proximity: c(self.proximity),
        }
    }
}

/// Crisp values for the five proximity tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProximityToken {
    NChance,
    LChance,
    MChance,
    GoingTo,
    AboutTo,
}

impl ProximityToken {
    pub fn value(self) -> f64 {
        match self {
            ProximityToken::NChance => 0.0,
            ProximityToken::LChance => 0.25,
            ProximityToken::MChance => 0.5,
            ProximityToken::GoingTo => 0.75,
            ProximityToken::AboutTo => 1.0,
        }
    }
}

/// Weights for (undesirability, likelihood, Ig) and the fear threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FearConfig {
    pub weights: [f64; 3],
    pub threshold: f64,
}

impl Default for FearConfig {
    fn default() -> Self {
        Self {
            weights: [1.0 / 3.0; 3],
            threshold: 0.0,
        }
    }
}

impl FearConfig {
    pub fn validate(&self) -> Result<(), FearError> {
        if self.weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(FearError::Config("weights must be non-negative".into()));
        }
        let sum: f64 = self.weights.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(FearError::Config(format!("weights sum to {sum}, expected 1")));
        }
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(FearError::Config("threshold must lie in [0, 1]".into()));
        }
        Ok(())
    }
}

/// Every intermediate value of one appraisal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FearState {
    pub undesirability: f64,
    pub likelihood: f64,
    pub ig: f64,
    pub potential: f64,
    pub threshold: f64,
    pub intensity: f64,
    pub band: Band,
}

/// Weighted mean of the three appraisals.
pub fn fear_potential(
    undesirability: f64,
    likelihood: f64,
    ig: f64,
    config: &FearConfig,
) -> Result<f64, FearError> {
    config.validate()?;
    let [wu, wl, wi] = config.weights;
    Ok((wu * undesirability + wl * likelihood + wi * ig).clamp(0.0, 1.0))
}

/// Excess of potential over threshold, floored at 0.
pub fn fear_intensity(potential: f64, threshold: f64) -> f64 {
    if potential > threshold {
        potential - threshold
    } else {
        0.0
    }
}
