//! Deterministic car-following world.
//!
//! A controlled follower (the bullet) trails a leader (the target) on a
//! straight, non-wrapping road. Positions are in patches (100 ft), speeds in
//! mph, and every rate is a speed change per tick. The leader follows a
//! constant, scripted or seeded-random profile; a pedestrian can be made to
//! appear ahead of the follower at a given tick.

mod config;
mod run;
mod stats;
mod world;

use thiserror::Error;

pub use config::{
    ControllerSection, FieldError, LeaderAction, LeaderProfile, PedestrianEvent, Rates,
    ScenarioConfig, ScriptStep, SpeedUnit,
};
pub use controller::sight::{osd, patches_feet, ssd, Direction, FEET_PER_PATCH, FTPS_PER_MPH};
pub use run::{run_scenario, RunOutput, RunSummary, TickLog, TICKLOG_HEADER};
pub use stats::spearman;
pub use world::{inject_pedestrian, step_world, Pedestrian, Role, VehicleState, WorldState};

#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid scenario config: {}", list(.0))]
    Config(Vec<FieldError>),
    #[error("world already terminated by a collision")]
    Terminated,
    #[error("pedestrian tick {tick} is before the current tick {now}")]
    PastTick { tick: u64, now: u64 },
    #[error(transparent)]
    Control(#[from] controller::ControlError),
}

fn list(errors: &[FieldError]) -> String {
    errors
        .iter()
        .map(|e| format!("{}: {}", e.field, e.message))
        .collect::<Vec<_>>()
        .join("; ")
}
