use controller::{step_agent, AgentState, LeaderMode};
use occ_fear::{Band, FearModel};
use serde::{Deserialize, Serialize};

use crate::world::{inject_pedestrian, step_world, WorldState};
use crate::{spearman, ssd, ScenarioConfig, SimError, FEET_PER_PATCH};

/// CSV column order of [`TickLog`].
pub const TICKLOG_HEADER: [&str; 22] = [
    "tick",
    "time_ms",
    "bullet_position",
    "bullet_speed",
    "target_position",
    "target_speed",
    "gap_patches",
    "gap_feet",
    "ssd_feet",
    "ssd_patches",
    "undesirability",
    "likelihood",
    "ig",
    "potential",
    "intensity",
    "fear_display",
    "band",
    "command",
    "command_rate",
    "learner_mode",
    "learner_switches",
    "pedestrian_gap",
];

/// One control tick, recorded before the world advances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TickLog {
    pub tick: u64,
    pub time_ms: f64,
    pub bullet_position: f64,
    pub bullet_speed: f64,
    pub target_position: f64,
    pub target_speed: f64,
    pub gap_patches: f64,
    pub gap_feet: f64,
    pub ssd_feet: f64,
    pub ssd_patches: f64,
    pub undesirability: f64,
    pub likelihood: f64,
    pub ig: f64,
    pub potential: f64,
    pub intensity: f64,
    /// Intensity on a 0-100 scale.
    pub fear_display: f64,
    pub band: Band,
    pub command: controller::CommandKind,
    pub command_rate: f64,
    pub learner_mode: LeaderMode,
    pub learner_switches: usize,
    /// Gap to a pedestrian the follower can see this tick.
    pub pedestrian_gap: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub scenario: String,
    pub run: u64,
    pub seed: u64,
    pub ticks: u64,
    pub min_gap: f64,
    pub max_band: Option<Band>,
    pub peak_intensity: f64,
    pub collision: bool,
    /// Largest Medium↔High switch count seen inside the learner window.
    pub switch_count: usize,
    pub learner_activations: u32,
    pub band_histogram: [u64; 5],
    /// Rank correlation between gap and intensity over the logged ticks.
    pub gap_fear_spearman: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub logs: Vec<TickLog>,
    pub summary: RunSummary,
}

/// Runs one repetition. The world RNG is seeded with `seed + run`.
pub fn run_scenario(model: &FearModel, config: &ScenarioConfig, run: u64) -> Result<RunOutput, SimError> {
    let agent_cfg = config.agent_config()?;
    let limits = agent_cfg.limits;
    let seed = config.seed.wrapping_add(run);
    let mut world = WorldState::new(config, seed);
    if let Some(p) = config.pedestrian {
        world = inject_pedestrian(&world, p.tick, p.gap, p.duration_ticks)?;
    }
    let mut agent = AgentState::default();
    let mut logs = Vec::with_capacity(config.ticks as usize);
    let mut summary = RunSummary {
        scenario: config.id.clone(),
        run,
        seed,
        ticks: 0,
        min_gap: world.gap(),
        max_band: None,
        peak_intensity: 0.0,
        collision: world.collided,
        switch_count: 0,
        learner_activations: 0,
        band_histogram: [0; 5],
        gap_fear_spearman: None,
    };

    for _ in 0..config.ticks {
        if world.collided {
            break;
        }
        let sensed = world.sense(limits.d_max);
        let out = step_agent(model, &agent, &sensed, &agent_cfg)?;
        let ssd_feet = ssd(world.bullet.speed, limits.reaction_time, limits.decel_ftps2)?;
        let gap = world.gap();
        logs.push(TickLog {
            tick: world.tick,
            time_ms: world.tick as f64 * config.tick_seconds * 1000.0,
            bullet_position: world.bullet.position,
            bullet_speed: world.bullet.speed,
            target_position: world.target.position,
            target_speed: world.target.speed,
            gap_patches: gap,
            gap_feet: gap * FEET_PER_PATCH,
            ssd_feet,
            ssd_patches: ssd_feet / FEET_PER_PATCH,
            undesirability: out.fear.undesirability,
            likelihood: out.fear.likelihood,
            ig: out.fear.ig,
            potential: out.fear.potential,
            intensity: out.fear.intensity,
            fear_display: out.fear.intensity * 100.0,
            band: out.fear.band,
            command: out.command.kind,
            command_rate: out.command.rate,
            learner_mode: out.state.learner.mode,
            learner_switches: out.state.learner.switches,
            pedestrian_gap: sensed.pedestrian_gap,
        });
        summary.ticks += 1;
        summary.min_gap = summary.min_gap.min(gap);
        summary.max_band = summary.max_band.max(Some(out.fear.band));
        summary.peak_intensity = summary.peak_intensity.max(out.fear.intensity);
        summary.switch_count = summary.switch_count.max(out.state.learner.switches);
        summary.learner_activations = out.state.learner.activations;
        summary.band_histogram[out.fear.band.index()] += 1;

        world = step_world(&world, out.command)?;
        agent = out.state;
        summary.min_gap = summary.min_gap.min(world.gap());
        if let Some(pg) = world.pedestrian_gap() {
            summary.min_gap = summary.min_gap.min(pg);
        }
    }
    summary.collision = world.collided;
    let gaps: Vec<f64> = logs.iter().map(|l| l.gap_patches).collect();
    let fear: Vec<f64> = logs.iter().map(|l| l.intensity).collect();
    summary.gap_fear_spearman = spearman(&gaps, &fear);
    Ok(RunOutput { logs, summary })
}
