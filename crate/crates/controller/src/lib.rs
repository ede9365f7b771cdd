//! Fear-driven following controller.
//!
//! One control step runs sense → appraise → learn → select:
//! sensed gap and speeds become appraisal inputs, the fear model turns them
//! into a banded intensity, the learner watches for a leader that keeps
//! flipping fear between Medium and High, and the driving rules pick a motor
//! command.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod agent;
mod appraisal;
mod learner;
mod rules;
pub mod sight;

use thiserror::Error;

pub use agent::{step_agent, AgentConfig, AgentState, StepOutput};
pub use appraisal::{derive_appraisal, Limits, SensedState};
pub use learner::{count_switches, update_learner, LeaderMode, LearnerConfig, LearnerState};
pub use rules::{select_driving_rule, CommandKind, MotorCommand, Regimes, Situation, Trend};

#[derive(Debug, Error)]
pub enum ControlError {
    #[error("controller config: {0}")]
    Config(String),
    #[error(transparent)]
    Fear(#[from] occ_fear::FearError),
}
