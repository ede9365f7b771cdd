//! Sight-distance formulas and unit conversions.
//!
//! Speeds are mph, distances feet unless stated, and one patch is 100 feet.

use crate::ControlError;

pub const FEET_PER_PATCH: f64 = 100.0;
/// Feet per second in one mph.
pub const FTPS_PER_MPH: f64 = 5280.0 / 3600.0;

pub const DEFAULT_REACTION_S: f64 = 0.45;
pub const DEFAULT_DECEL_FTPS2: f64 = 11.2;

/// Stopping sight distance in feet: `1.47·V·t + 1.075·V²/a`.
pub fn ssd(speed_mph: f64, reaction_time_s: f64, decel_ftps2: f64) -> Result<f64, ControlError> {
    if !(decel_ftps2 > 0.0) {
        return Err(ControlError::Config("deceleration must be positive".into()));
    }
    if !(speed_mph >= 0.0) || !(reaction_time_s >= 0.0) {
        return Err(ControlError::Config("speed and reaction time must be non-negative".into()));
    }
    Ok(1.47 * speed_mph * reaction_time_s + 1.075 * speed_mph * speed_mph / decel_ftps2)
}

/// Overtaking sight distance `Vb·t + 2s + Vb·sqrt(4s/a)`, in whatever
/// consistent units the caller uses.
pub fn osd(v_b: f64, reaction_time_s: f64, spacing: f64, max_accel: f64) -> Result<f64, ControlError> {
    if !(max_accel > 0.0) {
        return Err(ControlError::Config("acceleration must be positive".into()));
    }
    if !(v_b >= 0.0 && reaction_time_s >= 0.0 && spacing >= 0.0) {
        return Err(ControlError::Config("inputs must be non-negative".into()));
    }
    Ok(v_b * reaction_time_s + 2.0 * spacing + v_b * (4.0 * spacing / max_accel).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ToFeet,
    ToPatches,
}

pub fn patches_feet(value: f64, direction: Direction) -> f64 {
    match direction {
        Direction::ToFeet => value * FEET_PER_PATCH,
        Direction::ToPatches => value / FEET_PER_PATCH,
    }
}
