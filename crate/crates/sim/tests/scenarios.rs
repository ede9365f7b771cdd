use controller::{CommandKind, LeaderMode};
use occ_fear::{Band, FearModel};
use proptest::prelude::*;
use sim::{run_scenario, ScenarioConfig, SpeedUnit};

fn load(name: &str) -> ScenarioConfig {
    let path = format!("{}/../../scenarios/{name}.json", env!("CARGO_MANIFEST_DIR"));
    ScenarioConfig::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn same_seed_same_trace() {
    let model = FearModel::standard();
    let cfg = load("car-following-1");
    let a = run_scenario(&model, &cfg, 3).unwrap();
    let b = run_scenario(&model, &cfg, 3).unwrap();
    assert_eq!(a, b);
    assert_eq!(format!("{:?}", a.logs), format!("{:?}", b.logs));
    let c = run_scenario(&model, &cfg, 4).unwrap();
    assert_ne!(a.logs, c.logs);
}

#[test]
fn zero_ticks_gives_empty_log() {
    let model = FearModel::standard();
    let mut cfg = load("car-following-1");
    cfg.ticks = 0;
    let out = run_scenario(&model, &cfg, 0).unwrap();
    assert!(out.logs.is_empty());
    assert_eq!(out.summary.ticks, 0);
    assert_eq!(out.summary.max_band, None);
    assert_eq!(out.summary.min_gap, cfg.separation);
}

#[test]
fn invalid_config_is_rejected_before_running() {
    let model = FearModel::standard();
    let mut cfg = load("car-following-1");
    cfg.separation = 0.5;
    assert!(run_scenario(&model, &cfg, 0).is_err());
}

#[test]
fn close_following_reaches_high_fear_below_stopping_distance() {
    let model = FearModel::standard();
    let cfg = load("car-following-1");
    for run in 0..10 {
        let out = run_scenario(&model, &cfg, run).unwrap();
        assert!(!out.summary.collision);
        assert!(
            out.logs.iter().any(|l| l.gap_feet < l.ssd_feet && l.band >= Band::High),
            "run {run}"
        );
        assert!(out.summary.gap_fear_spearman.unwrap() <= -0.8);
    }
}

#[test]
fn fear_is_at_least_medium_inside_stopping_distance() {
    let model = FearModel::standard();
    for n in 1..=5 {
        let cfg = load(&format!("car-following-{n}"));
        for run in 0..10 {
            let out = run_scenario(&model, &cfg, run).unwrap();
            for l in out.logs.iter().filter(|l| l.gap_feet < l.ssd_feet) {
                assert!(l.band >= Band::Medium, "experiment {n} run {run} tick {}", l.tick);
            }
        }
    }
}

#[test]
fn limited_brake_cannot_stop_for_a_close_pedestrian() {
    let model = FearModel::standard();
    let mut cfg = load("pedestrian");
    cfg.brake_decel = Some(5.0);
    let out = run_scenario(&model, &cfg, 0).unwrap();
    let k = out.logs.iter().position(|l| l.pedestrian_gap.is_some()).unwrap();
    assert_eq!(out.logs[k].command, CommandKind::Brake);
    // Still doing about 8.6 mph after the first brake tick, which covers
    // more than the 0.15 patch gap in one 2 s tick.
    assert!(out.summary.collision);
    assert_eq!(out.logs.len(), k + 1);
}

#[test]
fn wide_separation_stays_calm() {
    let model = FearModel::standard();
    let cfg = load("car-following-5");
    for run in 0..10 {
        let out = run_scenario(&model, &cfg, run).unwrap();
        assert!(out.summary.max_band.unwrap() <= Band::Low, "run {run}");
    }
}

#[test]
fn pedestrian_triggers_immediate_stop() {
    let model = FearModel::standard();
    let cfg = load("pedestrian");
    let p = cfg.pedestrian.unwrap();
    for run in 0..10 {
        let out = run_scenario(&model, &cfg, run).unwrap();
        assert!(!out.summary.collision);
        let first = out.logs.iter().position(|l| l.pedestrian_gap.is_some()).unwrap();
        assert_eq!(out.logs[first].tick, p.tick);
        assert_eq!(out.logs[first].command, CommandKind::Brake);
        assert!(out.logs[first - 1].band <= Band::Low);
        assert_eq!(out.logs[first].band, Band::VeryHigh);
        assert_eq!(out.logs[first + 1].bullet_speed, 0.0);
    }
}

#[test]
fn aggressive_leader_switches_regime_and_latches() {
    let model = FearModel::standard();
    let cfg = load("leader-aggressive");
    let hold = cfg.controller.learner.hold_ticks as usize;
    let out = run_scenario(&model, &cfg, 0).unwrap();
    assert!(!out.summary.collision);
    assert!(out.summary.switch_count >= 3);
    let on = out
        .logs
        .iter()
        .position(|l| l.learner_mode == LeaderMode::Aggressive)
        .unwrap();
    assert!(out.logs.len() > on + hold);
    for l in &out.logs[on..on + hold] {
        assert_eq!(l.learner_mode, LeaderMode::Aggressive, "tick {}", l.tick);
        match l.command {
            CommandKind::Accelerate => assert_eq!(l.command_rate, 0.03),
            CommandKind::Decelerate => assert_eq!(l.command_rate, 0.05),
            _ => {}
        }
    }
}

#[test]
fn calm_leader_keeps_normal_regime() {
    let model = FearModel::standard();
    let out = run_scenario(&model, &load("leader-calm"), 0).unwrap();
    assert_eq!(out.summary.learner_activations, 0);
    assert!(out.logs.iter().all(|l| l.learner_mode == LeaderMode::Normal));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normalized_units_match_mph(scale in 100.0f64..300.0, seed in 0u64..1000) {
        let model = FearModel::standard();
        let mut mph = load("car-following-2");
        mph.ticks = 40;
        mph.seed = seed;
        let mut norm = mph.clone();
        norm.speed_unit = SpeedUnit::Normalized;
        norm.full_scale_mph = Some(scale);
        norm.min_velocity = mph.min_velocity / scale;
        norm.max_velocity = mph.max_velocity / scale;
        // Rates are capped at 0.1 in config units, so scale them only as far
        // as the cap allows and mirror the result back into mph.
        for (m, n) in [(&mut mph.bullet, &mut norm.bullet), (&mut mph.target, &mut norm.target)] {
            n.accel = (m.accel / scale).min(0.1);
            n.decel = (m.decel / scale).min(0.1);
            m.accel = n.accel * scale;
            m.decel = n.decel * scale;
        }
        norm.controller.low_accel = mph.controller.low_accel / scale;
        norm.controller.low_decel = mph.controller.low_decel / scale;
        let a = run_scenario(&model, &mph, 0).unwrap();
        let b = run_scenario(&model, &norm, 0).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(a.logs.len(), b.logs.len());
        for (x, y) in a.logs.iter().zip(&b.logs) {
            prop_assert!((x.bullet_speed - y.bullet_speed).abs() < 1e-9);
            prop_assert!((x.gap_patches - y.gap_patches).abs() < 1e-9);
            prop_assert_eq!(x.band, y.band);
        }
    }
}
