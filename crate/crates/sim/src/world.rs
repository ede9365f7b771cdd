use controller::{CommandKind, MotorCommand, SensedState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{LeaderAction, LeaderProfile, ScenarioConfig};
use crate::{SimError, FEET_PER_PATCH, FTPS_PER_MPH};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Bullet,
    Target,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VehicleState {
    /// Patches.
    pub position: f64,
    /// mph.
    pub speed: f64,
    pub min_speed: f64,
    pub max_speed: f64,
    /// mph per tick.
    pub accel: f64,
    pub decel: f64,
    pub role: Role,
}

impl VehicleState {
    fn accelerate(&mut self, rate: f64) {
        self.speed = (self.speed + rate).min(self.max_speed);
    }

    // Deceleration never takes a moving vehicle below its minimum speed;
    // only a brake stops it.
    fn decelerate(&mut self, rate: f64) {
        if self.speed > self.min_speed {
            self.speed = (self.speed - rate).max(self.min_speed);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pedestrian {
    pub position: f64,
    pub appeared_at: u64,
    /// First tick on which the pedestrian is gone.
    pub leaves_at: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct PendingPedestrian {
    tick: u64,
    gap: f64,
    duration: u64,
}

#[derive(Debug, Clone)]
pub struct WorldState {
    pub bullet: VehicleState,
    pub target: VehicleState,
    pub pedestrian: Option<Pedestrian>,
    pending: Option<PendingPedestrian>,
    pub tick: u64,
    pub tick_seconds: f64,
    /// mph per tick; `None` stops at once.
    pub brake_decel: Option<f64>,
    pub seed: u64,
    rng: ChaCha8Rng,
    leader: LeaderProfile,
    pub collided: bool,
}

impl PartialEq for WorldState {
    fn eq(&self, other: &Self) -> bool {
        self.bullet == other.bullet
            && self.target == other.target
            && self.pedestrian == other.pedestrian
            && self.pending == other.pending
            && self.tick == other.tick
            && self.tick_seconds == other.tick_seconds
            && self.brake_decel == other.brake_decel
            && self.seed == other.seed
            && self.rng == other.rng
            && self.collided == other.collided
    }
}

impl WorldState {
    /// Both vehicles start at the minimum velocity, the target `separation`
    /// patches ahead. The config is assumed validated.
    pub fn new(config: &ScenarioConfig, seed: u64) -> Self {
        let k = config.mph_scale();
        let vehicle = |role, position, rates: crate::Rates| VehicleState {
            position,
            speed: config.min_velocity * k,
            min_speed: config.min_velocity * k,
            max_speed: config.max_velocity * k,
            accel: rates.accel * k,
            decel: rates.decel * k,
            role,
        };
        Self {
            bullet: vehicle(Role::Bullet, 0.0, config.bullet),
            target: vehicle(Role::Target, config.separation, config.target),
            pedestrian: None,
            pending: None,
            tick: 0,
            tick_seconds: config.tick_seconds,
            brake_decel: config.brake_decel.map(|b| b * k),
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            leader: config.leader.clone(),
            collided: false,
        }
    }

    pub fn gap(&self) -> f64 {
        self.target.position - self.bullet.position
    }

    pub fn pedestrian_gap(&self) -> Option<f64> {
        self.pedestrian.map(|p| p.position - self.bullet.position)
    }

    /// What the follower's sensors see, with `range` the sensing distance.
    pub fn sense(&self, range: f64) -> SensedState {
        SensedState {
            gap: self.gap().max(0.0),
            own_speed: self.bullet.speed,
            closing_speed: self.bullet.speed - self.target.speed,
            pedestrian_gap: self.pedestrian_gap().filter(|g| *g > 0.0 && *g <= range),
        }
    }

    fn check_collision(&mut self) {
        if self.gap() <= 0.0 || self.pedestrian_gap().is_some_and(|g| g <= 0.0) {
            self.collided = true;
        }
    }

    fn materialize(&mut self) {
        if let Some(p) = self.pending.filter(|p| p.tick == self.tick) {
            self.pedestrian = Some(Pedestrian {
                position: self.bullet.position + p.gap,
                appeared_at: p.tick,
                leaves_at: p.tick + p.duration,
            });
            self.pending = None;
        }
    }

    fn leader_action(&mut self) -> LeaderAction {
        match &self.leader {
            LeaderProfile::Constant => LeaderAction::Hold,
            LeaderProfile::Scripted { steps, cycle } => {
                LeaderProfile::scripted_action(steps, *cycle, self.tick)
            }
            LeaderProfile::SeededRandom {
                p_accel,
                p_decel,
                brake_probability,
            } => {
                let r: f64 = self.rng.gen();
                if r < *brake_probability {
                    LeaderAction::Brake
                } else if r < brake_probability + p_accel {
                    LeaderAction::Accelerate
                } else if r < brake_probability + p_accel + p_decel {
                    LeaderAction::Decelerate
                } else {
                    LeaderAction::Hold
                }
            }
        }
    }
}

/// Advances the world one tick under the follower's command.
pub fn step_world(world: &WorldState, command: MotorCommand) -> Result<WorldState, SimError> {
    if world.collided {
        return Err(SimError::Terminated);
    }
    let mut w = world.clone();
    match w.leader_action() {
        LeaderAction::Accelerate => {
            let r = w.target.accel;
            w.target.accelerate(r)
        }
        LeaderAction::Decelerate => {
            let r = w.target.decel;
            w.target.decelerate(r)
        }
        LeaderAction::Brake => w.target.speed = w.target.min_speed,
        LeaderAction::Hold => {}
    }
    match command.kind {
        CommandKind::Accelerate => w.bullet.accelerate(command.rate),
        CommandKind::Decelerate => w.bullet.decelerate(command.rate),
        CommandKind::Brake => {
            w.bullet.speed = match w.brake_decel {
                Some(b) => (w.bullet.speed - b).max(0.0),
                None => 0.0,
            }
        }
        CommandKind::Hold => {}
    }
    let patches_per_mph = FTPS_PER_MPH * w.tick_seconds / FEET_PER_PATCH;
    w.bullet.position += w.bullet.speed * patches_per_mph;
    w.target.position += w.target.speed * patches_per_mph;
    w.tick += 1;
    if w.pedestrian.is_some_and(|p| w.tick >= p.leaves_at) {
        w.pedestrian = None;
    }
    w.materialize();
    w.check_collision();
    Ok(w)
}

/// Schedules a stationary pedestrian `gap` patches ahead of the follower
/// (measured when it appears), visible for `duration` ticks.
pub fn inject_pedestrian(
    world: &WorldState,
    tick: u64,
    gap: f64,
    duration: u64,
) -> Result<WorldState, SimError> {
    if tick < world.tick {
        return Err(SimError::PastTick {
            tick,
            now: world.tick,
        });
    }
    let mut w = world.clone();
    w.pending = Some(PendingPedestrian { tick, gap, duration });
    w.materialize();
    w.check_collision();
    Ok(w)
}
