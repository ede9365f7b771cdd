use std::collections::VecDeque;

use occ_fear::Band;
use serde::{Deserialize, Serialize};

use crate::ControlError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum LeaderMode {
    #[default]
    Normal,
    Aggressive,
}

impl LeaderMode {
    pub fn name(self) -> &'static str {
        match self {
            LeaderMode::Normal => "Normal",
            LeaderMode::Aggressive => "Aggressive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LearnerConfig {
    pub window_ticks: u64,
    pub switch_threshold: usize,
    pub hold_ticks: u64,
}

impl Default for LearnerConfig {
    fn default() -> Self {
        Self {
            window_ticks: 500,
            switch_threshold: 3,
            hold_ticks: 250,
        }
    }
}

impl LearnerConfig {
    pub fn validate(&self) -> Result<(), ControlError> {
        if self.window_ticks == 0 || self.switch_threshold == 0 {
            return Err(ControlError::Config(
                "learner window and switch threshold must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Recent band history and the current judgement of the leader.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct LearnerState {
    pub history: VecDeque<(u64, Band)>,
    pub mode: LeaderMode,
    pub hold_until: Option<u64>,
    /// Medium↔High switches inside the window after the last update.
    pub switches: usize,
    /// How many times the mode went from Normal to Aggressive.
    pub activations: u32,
}

/// Consecutive entries where one band is Medium and the other High or above.
pub fn count_switches<'a>(bands: impl IntoIterator<Item = &'a Band>) -> usize {
    let mut it = bands.into_iter();
    let Some(mut prev) = it.next() else {
        return 0;
    };
    let mut n = 0;
    for b in it {
        let (lo, hi) = if prev <= b { (prev, b) } else { (b, prev) };
        if *lo == Band::Medium && hi.is_high() {
            n += 1;
        }
        prev = b;
    }
    n
}

pub fn update_learner(state: &LearnerState, band: Band, tick: u64, config: &LearnerConfig) -> LearnerState {
    let mut next = state.clone();
    next.history.push_back((tick, band));
    let horizon = tick.saturating_sub(config.window_ticks);
    while let Some(&(t, _)) = next.history.front() {
        if t > horizon || tick < config.window_ticks {
            break;
        }
        next.history.pop_front();
    }
    next.switches = count_switches(next.history.iter().map(|(_, b)| b));
    if next.switches >= config.switch_threshold {
        if next.mode == LeaderMode::Normal {
            next.activations += 1;
        }
        next.mode = LeaderMode::Aggressive;
        next.hold_until = Some(tick + config.hold_ticks);
    } else if !next.hold_until.is_some_and(|h| tick <= h) {
        next.mode = LeaderMode::Normal;
    }
    next
}
