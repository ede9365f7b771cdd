use occ_fear::AppraisalInputs;
use serde::{Deserialize, Serialize};

use crate::sight::{ssd, FEET_PER_PATCH, FTPS_PER_MPH};
use crate::ControlError;

/// Scales that map sensed quantities onto `[0, 1]` appraisal inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Sensing range, patches.
    pub d_max: f64,
    /// Speed that reads as "very high", mph.
    pub v_max: f64,
    /// Time-to-collision at which proximity starts rising, seconds.
    pub ttc_max: f64,
    pub reaction_time: f64,
    pub decel_ftps2: f64,
    /// Required stopping distance as a multiple of the bare SSD.
    pub ssd_factor: f64,
    /// Importance of the goal falls to zero at `margin` required distances.
    pub margin: f64,
    pub sense_of_reality: f64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            d_max: 20.0,
            v_max: 100.0,
            ttc_max: 10.0,
            reaction_time: crate::sight::DEFAULT_REACTION_S,
            decel_ftps2: crate::sight::DEFAULT_DECEL_FTPS2,
            ssd_factor: 2.0,
            margin: 2.0,
            sense_of_reality: 1.0,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<(), ControlError> {
        let positive = [
            ("d_max", self.d_max),
            ("v_max", self.v_max),
            ("ttc_max", self.ttc_max),
            ("reaction_time", self.reaction_time),
            ("decel_ftps2", self.decel_ftps2),
            ("ssd_factor", self.ssd_factor),
            ("margin", self.margin),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ControlError::Config(format!("{name} must be positive")));
            }
        }
        if !(0.0..=1.0).contains(&self.sense_of_reality) {
            return Err(ControlError::Config("sense_of_reality must lie in [0, 1]".into()));
        }
        Ok(())
    }

    /// Distance the controller wants free ahead at `speed`, patches.
    pub fn required_distance(&self, speed_mph: f64) -> Result<f64, ControlError> {
        Ok(ssd(speed_mph.max(0.0), self.reaction_time, self.decel_ftps2)? * self.ssd_factor
            / FEET_PER_PATCH)
    }
}

/// What the sensors report on one tick.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SensedState {
    /// Gap to the leader, patches.
    pub gap: f64,
    pub own_speed: f64,
    /// Own speed minus leader speed, mph; positive while the gap shrinks.
    pub closing_speed: f64,
    /// Gap to a pedestrian inside sensing range, if one is visible.
    pub pedestrian_gap: Option<f64>,
}

impl SensedState {
    /// Gap and closing speed of whichever obstacle is nearer.
    pub fn nearest(&self) -> (f64, f64) {
        match self.pedestrian_gap {
            Some(p) if p < self.gap => (p.max(0.0), self.own_speed),
            _ => (self.gap.max(0.0), self.closing_speed),
        }
    }
}

pub fn derive_appraisal(sensed: &SensedState, limits: &Limits) -> Result<AppraisalInputs, ControlError> {
    limits.validate()?;
    let (gap, closing) = sensed.nearest();
    let required = limits.required_distance(sensed.own_speed)?;
    let (imp_goal, ach_goal) = if required > 0.0 {
        (1.0 - gap / (required * limits.margin), gap / required)
    } else {
        (0.0, 1.0)
    };
    let proximity = if closing > 1e-9 {
        let ttc = gap * FEET_PER_PATCH / (closing * FTPS_PER_MPH);
        1.0 - ttc / limits.ttc_max
    } else {
        0.0
    };
    Ok(AppraisalInputs {
        imp_goal,
        ach_goal,
        distance_norm: gap / limits.d_max,
        speed_norm: sensed.own_speed / limits.v_max,
        sense_of_reality: limits.sense_of_reality,
        proximity,
    }
    .clamped())
}
