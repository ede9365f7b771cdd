use occ_fear::{AppraisalInputs, FearConfig, FearModel, FearState};
use serde::{Deserialize, Serialize};

use crate::{
    derive_appraisal, select_driving_rule, update_learner, ControlError, LearnerConfig,
    LearnerState, Limits, MotorCommand, Regimes, SensedState, Situation, Trend,
};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AgentConfig {
    pub limits: Limits,
    pub fear: FearConfig,
    pub regimes: Regimes,
    pub learner: LearnerConfig,
}

impl AgentConfig {
    pub fn validate(&self) -> Result<(), ControlError> {
        self.limits.validate()?;
        self.fear.validate()?;
        self.regimes.validate()?;
        self.learner.validate()
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct AgentState {
    pub learner: LearnerState,
    pub tick: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepOutput {
    pub command: MotorCommand,
    pub appraisal: AppraisalInputs,
    pub fear: FearState,
    pub state: AgentState,
    /// A pedestrian inside braking distance overrode the normal rules.
    pub pedestrian_override: bool,
}

/// One control tick. Pure: the returned state replaces `state`.
pub fn step_agent(
    model: &FearModel,
    state: &AgentState,
    sensed: &SensedState,
    config: &AgentConfig,
) -> Result<StepOutput, ControlError> {
    config.validate()?;
    let mut appraisal = derive_appraisal(sensed, &config.limits)?;

    let brake_distance = config.limits.required_distance(sensed.own_speed)?;
    let pedestrian_override = sensed
        .pedestrian_gap
        .is_some_and(|p| sensed.own_speed > 0.0 && p <= brake_distance);
    if pedestrian_override {
        // A sudden obstacle inside braking distance will be hit unless the
        // car stops, whatever its speed, so every sensed input is appraised
        // at its worst. Only the configured sense of reality is kept.
        appraisal.imp_goal = 1.0;
        appraisal.ach_goal = 0.0;
        appraisal.distance_norm = 0.0;
        appraisal.speed_norm = 1.0;
        appraisal.proximity = 1.0;
    }

    let fear = model.appraise(&appraisal, &config.fear)?;
    let learner = update_learner(&state.learner, fear.band, state.tick, &config.learner);
    let (_, closing) = sensed.nearest();
    let situation = Situation {
        trend: Trend::from_closing_speed(closing),
        proximity: appraisal.proximity,
    };
    let command = if pedestrian_override {
        MotorCommand::BRAKE
    } else {
        select_driving_rule(fear.band, learner.mode, situation, &config.regimes)
    };
    Ok(StepOutput {
        command,
        appraisal,
        fear,
        state: AgentState {
            learner,
            tick: state.tick + 1,
        },
        pedestrian_override,
    })
}
