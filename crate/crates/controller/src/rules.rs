use std::fmt;

use occ_fear::Band;
use serde::{Deserialize, Serialize};

use crate::LeaderMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CommandKind {
    Accelerate,
    Decelerate,
    Brake,
    Hold,
}

/// A motor command; `rate` is a speed change per tick (0 for Brake/Hold).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MotorCommand {
    pub kind: CommandKind,
    pub rate: f64,
}

impl MotorCommand {
    pub fn accelerate(rate: f64) -> Self {
        Self {
            kind: CommandKind::Accelerate,
            rate,
        }
    }

    pub fn decelerate(rate: f64) -> Self {
        Self {
            kind: CommandKind::Decelerate,
            rate,
        }
    }

    pub const BRAKE: Self = Self {
        kind: CommandKind::Brake,
        rate: 0.0,
    };

    pub const HOLD: Self = Self {
        kind: CommandKind::Hold,
        rate: 0.0,
    };
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CommandKind::Accelerate => "Accelerate",
            CommandKind::Decelerate => "Decelerate",
            CommandKind::Brake => "Brake",
            CommandKind::Hold => "Hold",
        };
        f.write_str(s)
    }
}

/// Acceleration and deceleration rates for the two regimes.
///
/// Rule i pairs `high_accel` with `low_decel`; rule ii pairs `low_accel`
/// with `high_decel`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Regimes {
    pub high_accel: f64,
    pub low_accel: f64,
    pub high_decel: f64,
    pub low_decel: f64,
}

impl Default for Regimes {
    fn default() -> Self {
        Self {
            high_accel: 0.05,
            low_accel: 0.03,
            high_decel: 0.05,
            low_decel: 0.03,
        }
    }
}

impl Regimes {
    pub fn validate(&self) -> Result<(), crate::ControlError> {
        let all = [self.high_accel, self.low_accel, self.high_decel, self.low_decel];
        if all.iter().any(|r| !(r.is_finite() && *r >= 0.0)) {
            return Err(crate::ControlError::Config("rates must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Trend {
    Closing,
    Steady,
    Opening,
}

impl Trend {
    pub fn from_closing_speed(closing: f64) -> Self {
        if closing > 1e-9 {
            Trend::Closing
        } else if closing < -1e-9 {
            Trend::Opening
        } else {
            Trend::Steady
        }
    }
}

/// Kinematic context the rules look at besides the band.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Situation {
    pub trend: Trend,
    /// Proximity input; positive once time-to-collision is inside the window.
    pub proximity: f64,
}

/// Driving rules.
///
/// * High or VeryHigh: brake.
/// * Medium, or any non-braking band once the leader is judged aggressive:
///   decelerate hard, and only creep forward at the low rate while the gap
///   opens.
/// * Otherwise accelerate at the high rate, easing off at the low
///   deceleration rate when Low fear comes with a closing gap inside the
///   time-to-collision window.
pub fn select_driving_rule(band: Band, mode: LeaderMode, situation: Situation, regimes: &Regimes) -> MotorCommand {
    if band.is_high() {
        return MotorCommand::BRAKE;
    }
    let aggressive = mode == LeaderMode::Aggressive;
    if band == Band::Medium || aggressive {
        let relaxed = situation.trend == Trend::Opening
            || (aggressive && band < Band::Medium && situation.trend == Trend::Steady);
        return if relaxed {
            MotorCommand::accelerate(regimes.low_accel)
        } else {
            MotorCommand::decelerate(regimes.high_decel)
        };
    }
    if band == Band::Low && situation.trend == Trend::Closing && situation.proximity > 0.0 {
        return MotorCommand::decelerate(regimes.low_decel);
    }
    MotorCommand::accelerate(regimes.high_accel)
}
