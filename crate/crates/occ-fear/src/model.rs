use std::path::Path;

use fuzzy_core::Fis;

use crate::{
    fear_intensity, fear_potential, AppraisalInputs, FearConfig, FearError, FearState,
    IntensityBands,
};

pub const UNDESIRABILITY_FILE: &str = "undesirability.json";
pub const UNDESIRABILITY_ORIGINAL_FILE: &str = "undesirability_original.json";
pub const LIKELIHOOD_FILE: &str = "likelihood.json";
pub const IG_FILE: &str = "ig.json";
pub const BANDS_FILE: &str = "bands.json";

const UNDESIRABILITY_JSON: &str = include_str!("../rulebases/undesirability.json");
const UNDESIRABILITY_ORIGINAL_JSON: &str = include_str!("../rulebases/undesirability_original.json");
const LIKELIHOOD_JSON: &str = include_str!("../rulebases/likelihood.json");
const IG_JSON: &str = include_str!("../rulebases/ig.json");
const BANDS_JSON: &str = include_str!("../rulebases/bands.json");

/// Which undesirability table to use.
///
/// `Amended` sends every "very high achievement" rule with medium or higher
/// importance to VLUD, matching the measured validation outputs. `Original`
/// is the published table as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Table1 {
    #[default]
    Amended,
    Original,
}

impl Table1 {
    pub fn file_name(self) -> &'static str {
        match self {
            Table1::Amended => UNDESIRABILITY_FILE,
            Table1::Original => UNDESIRABILITY_ORIGINAL_FILE,
        }
    }

    fn embedded(self) -> &'static str {
        match self {
            Table1::Amended => UNDESIRABILITY_JSON,
            Table1::Original => UNDESIRABILITY_ORIGINAL_JSON,
        }
    }
}

/// The three appraisal systems plus the band table.
#[derive(Debug, Clone)]
pub struct FearModel {
    undesirability: Fis,
    likelihood: Fis,
    ig: Fis,
    bands: IntensityBands,
}

impl FearModel {
    /// Built-in rulebases with the amended undesirability table.
    pub fn standard() -> Self {
        Self::embedded(Table1::Amended)
    }

    pub fn embedded(table: Table1) -> Self {
        Self::from_texts(
            table.embedded(),
            LIKELIHOOD_JSON,
            IG_JSON,
            BANDS_JSON,
        )
        .expect("built-in rulebases are valid")
    }

    /// Loads the rulebase files from `dir`.
    pub fn from_dir(dir: &Path, table: Table1) -> Result<Self, FearError> {
        let read = |name: &str| {
            let path = dir.join(name);
            std::fs::read_to_string(&path).map_err(|source| FearError::Io {
                path: path.display().to_string(),
                source,
            })
        };
        Self::from_texts(
            &read(table.file_name())?,
            &read(LIKELIHOOD_FILE)?,
            &read(IG_FILE)?,
            &read(BANDS_FILE)?,
        )
    }

    pub fn from_texts(
        undesirability: &str,
        likelihood: &str,
        ig: &str,
        bands: &str,
    ) -> Result<Self, FearError> {
        let model = Self {
            undesirability: undesirability.parse()?,
            likelihood: likelihood.parse()?,
            ig: ig.parse()?,
            bands: IntensityBands::from_json(bands)?,
        };
        for fis in [&model.undesirability, &model.likelihood, &model.ig] {
            if fis.inputs().len() != 2 {
                return Err(FearError::Config(format!(
                    "`{}` must have two inputs",
                    fis.output().name()
                )));
            }
        }
        Ok(model)
    }

    pub fn undesirability_fis(&self) -> &Fis {
        &self.undesirability
    }

    pub fn likelihood_fis(&self) -> &Fis {
        &self.likelihood
    }

    pub fn ig_fis(&self) -> &Fis {
        &self.ig
    }

    pub fn bands(&self) -> &IntensityBands {
        &self.bands
    }

    pub fn undesirability(&self, imp_goal: f64, ach_goal: f64) -> Result<f64, FearError> {
        Ok(self.undesirability.evaluate(&[imp_goal, ach_goal])?)
    }

    pub fn likelihood(&self, distance_norm: f64, speed_norm: f64) -> Result<f64, FearError> {
        Ok(self.likelihood.evaluate(&[distance_norm, speed_norm])?)
    }

    pub fn global_intensity(&self, sense_of_reality: f64, proximity: f64) -> Result<f64, FearError> {
        Ok(self.ig.evaluate(&[sense_of_reality, proximity])?)
    }

    pub fn appraise(
        &self,
        inputs: &AppraisalInputs,
        config: &FearConfig,
    ) -> Result<FearState, FearError> {
        let i = inputs.clamped();
        let undesirability = self.undesirability(i.imp_goal, i.ach_goal)?;
        let likelihood = self.likelihood(i.distance_norm, i.speed_norm)?;
        let ig = self.global_intensity(i.sense_of_reality, i.proximity)?;
        let potential = fear_potential(undesirability, likelihood, ig, config)?;
        let intensity = fear_intensity(potential, config.threshold);
        Ok(FearState {
            undesirability,
            likelihood,
            ig,
            potential,
            threshold: config.threshold,
            intensity,
            band: self.bands.classify(intensity),
        })
    }
}
