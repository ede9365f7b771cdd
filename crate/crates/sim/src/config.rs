use controller::{AgentConfig, LearnerConfig, Limits, Regimes};
use occ_fear::FearConfig;
use serde::{Deserialize, Serialize};

use crate::SimError;

/// Unit of every velocity and rate in a config. `normalized` values are
/// fractions of `full_scale_mph`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpeedUnit {
    Mph,
    Normalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rates {
    pub accel: f64,
    pub decel: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeaderAction {
    Accelerate,
    Decelerate,
    /// Drop straight to the minimum velocity.
    Brake,
    Hold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScriptStep {
    pub action: LeaderAction,
    pub ticks: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LeaderProfile {
    Constant,
    /// Each tick draws brake / accelerate / decelerate / hold with the given
    /// probabilities; `brake_probability` is the aggressiveness knob.
    SeededRandom {
        #[serde(default = "default_p_accel")]
        p_accel: f64,
        #[serde(default = "default_p_decel")]
        p_decel: f64,
        #[serde(default)]
        brake_probability: f64,
    },
    /// Run-length encoded actions; holds after the script ends unless `cycle`.
    Scripted {
        steps: Vec<ScriptStep>,
        #[serde(default)]
        cycle: bool,
    },
}

fn default_p_accel() -> f64 {
    0.35
}

fn default_p_decel() -> f64 {
    0.30
}

impl LeaderProfile {
    pub fn scripted_action(steps: &[ScriptStep], cycle: bool, tick: u64) -> LeaderAction {
        let total: u64 = steps.iter().map(|s| s.ticks).sum();
        if total == 0 {
            return LeaderAction::Hold;
        }
        let mut t = if cycle { tick % total } else { tick };
        for s in steps {
            if t < s.ticks {
                return s.action;
            }
            t -= s.ticks;
        }
        LeaderAction::Hold
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PedestrianEvent {
    pub tick: u64,
    /// Distance ahead of the follower when the pedestrian appears, patches.
    pub gap: f64,
    #[serde(default = "default_pedestrian_ticks")]
    pub duration_ticks: u64,
}

fn default_pedestrian_ticks() -> u64 {
    5
}

/// Controller settings; high rates come from the bullet's `accel`/`decel`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ControllerSection {
    pub limits: Limits,
    pub low_accel: f64,
    pub low_decel: f64,
    pub learner: LearnerConfig,
}

impl Default for ControllerSection {
    fn default() -> Self {
        Self {
            limits: Limits::default(),
            low_accel: 0.03,
            low_decel: 0.03,
            learner: LearnerConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub id: String,
    pub speed_unit: SpeedUnit,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full_scale_mph: Option<f64>,
    /// Simulated seconds per tick.
    pub tick_seconds: f64,
    pub ticks: u64,
    #[serde(default)]
    pub seed: u64,
    /// Initial gap, patches.
    pub separation: f64,
    pub min_velocity: f64,
    pub max_velocity: f64,
    pub bullet: Rates,
    pub target: Rates,
    /// Largest speed drop a follower brake can make in one tick. Absent
    /// means a brake stops the car within the tick.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brake_decel: Option<f64>,
    pub leader: LeaderProfile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pedestrian: Option<PedestrianEvent>,
    #[serde(default)]
    pub controller: ControllerSection,
    #[serde(default)]
    pub fear: FearConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldError {
    pub field: String,
    pub message: String,
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self, SimError> {
        serde_json::from_str(text).map_err(|e| {
            SimError::Config(vec![FieldError {
                field: "<json>".into(),
                message: e.to_string(),
            }])
        })
    }

    /// Multiplier from config speed units to mph.
    pub fn mph_scale(&self) -> f64 {
        match self.speed_unit {
            SpeedUnit::Mph => 1.0,
            SpeedUnit::Normalized => self.full_scale_mph.unwrap_or(f64::NAN),
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        let mut errs = Vec::new();
        let mut bad = |field: &str, message: &str| {
            errs.push(FieldError {
                field: field.into(),
                message: message.into(),
            })
        };
        if !(1.0..=20.0).contains(&self.separation) {
            bad("separation", "must lie in [1, 20] patches");
        }
        if !(self.tick_seconds > 0.0 && self.tick_seconds.is_finite()) {
            bad("tick_seconds", "must be positive");
        }
        for (field, v) in [
            ("bullet.accel", self.bullet.accel),
            ("bullet.decel", self.bullet.decel),
            ("target.accel", self.target.accel),
            ("target.decel", self.target.decel),
        ] {
            if !(0.0..=0.1).contains(&v) {
                bad(field, "rate must lie in [0, 0.1]");
            }
        }
        if !(self.min_velocity >= 0.0 && self.min_velocity <= self.max_velocity) {
            bad("min_velocity", "need 0 <= min_velocity <= max_velocity");
        }
        match self.speed_unit {
            SpeedUnit::Mph => {
                if self.full_scale_mph.is_some() {
                    bad("full_scale_mph", "only allowed with speed_unit normalized");
                }
            }
            SpeedUnit::Normalized => {
                if !self.full_scale_mph.is_some_and(|s| s > 0.0 && s.is_finite()) {
                    bad("full_scale_mph", "required and positive when speed_unit is normalized");
                }
                if self.max_velocity > 1.0 {
                    bad("max_velocity", "normalized velocities must lie in [0, 1]");
                }
            }
        }
        match &self.leader {
            LeaderProfile::SeededRandom {
                p_accel,
                p_decel,
                brake_probability,
            } => {
                let ps = [*p_accel, *p_decel, *brake_probability];
                if ps.iter().any(|p| !(0.0..=1.0).contains(p)) || ps.iter().sum::<f64>() > 1.0 + 1e-12 {
                    bad("leader", "probabilities must lie in [0, 1] and sum to at most 1");
                }
            }
            LeaderProfile::Scripted { steps, .. } => {
                if steps.is_empty() {
                    bad("leader.steps", "script is empty");
                }
            }
            LeaderProfile::Constant => {}
        }
        if self.brake_decel.is_some_and(|b| !(b > 0.0 && b.is_finite())) {
            bad("brake_decel", "must be positive");
        }
        if let Some(p) = &self.pedestrian {
            if !(p.gap >= 0.0 && p.gap.is_finite()) {
                bad("pedestrian.gap", "must be non-negative");
            }
        }
        if !(0.0..=0.1).contains(&self.controller.low_accel) {
            bad("controller.low_accel", "rate must lie in [0, 0.1]");
        }
        if !(0.0..=0.1).contains(&self.controller.low_decel) {
            bad("controller.low_decel", "rate must lie in [0, 0.1]");
        }
        if let Err(e) = self.agent_config_unchecked().validate() {
            bad("controller", &e.to_string());
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(SimError::Config(errs))
        }
    }

    fn agent_config_unchecked(&self) -> AgentConfig {
        let k = self.mph_scale();
        let high_accel = self.bullet.accel * k;
        let high_decel = self.bullet.decel * k;
        AgentConfig {
            limits: self.controller.limits,
            fear: self.fear,
            regimes: Regimes {
                high_accel,
                low_accel: (self.controller.low_accel * k).min(high_accel),
                high_decel,
                low_decel: (self.controller.low_decel * k).min(high_decel),
            },
            learner: self.controller.learner,
        }
    }

    /// Controller settings in mph units.
    pub fn agent_config(&self) -> Result<AgentConfig, SimError> {
        self.validate()?;
        Ok(self.agent_config_unchecked())
    }
}
