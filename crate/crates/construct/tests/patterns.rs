//! Block-level checks of the chain walk: per-block x-advance, the
//! direction of the pivot-to-free needle, and the recorded unit pairs.

use std::f64::consts::PI;

use construct::{angle_schedule, apply_pattern_step, build_chain, ChainState, PolygonSpec};
use geom_core::Point2;
use signopt::{block_pattern_result, SignVector};

fn spec_for(n: u32) -> PolygonSpec {
    let result = block_pattern_result(n).unwrap();
    let sol = signopt::solve_delta(n, result.sigma).unwrap();
    PolygonSpec::new(result.best, sol.delta).unwrap()
}

#[test]
fn per_block_x_advance_matches_its_closed_form() {
    for n in [16u32, 32] {
        let spec = spec_for(n);
        let (chain, _) = build_chain(&spec).unwrap();
        let nf = f64::from(n);
        for (k, &c) in spec.c.iter().enumerate() {
            let kf = k as f64;
            let swing = f64::from(c) * spec.delta;
            let advance = chain[2 * k + 2].x - chain[2 * k].x;
            let expected = if c == 1 {
                -(2.0 * kf * PI / nf).sin() + ((2.0 * kf + 1.0) * PI / nf + swing).sin()
            } else {
                -((2.0 * kf + 1.0) * PI / nf + swing).sin() + ((2.0 * kf + 2.0) * PI / nf).sin()
            };
            assert!(
                (advance - expected).abs() < 1e-13,
                "n = {n}, block {k}: {advance} vs {expected}"
            );
        }
    }
}

#[test]
fn needle_direction_rotates_one_step_per_block() {
    let n = 32u32;
    let spec = spec_for(n);
    let nf = f64::from(n);
    let schedule = angle_schedule(&spec);
    let mut state = ChainState::start();
    for k in 0..(n as usize / 4) {
        let c = spec.c[k];
        let first = schedule[2 * k];
        let second = schedule[2 * k + 1];
        let (next, _, _) = apply_pattern_step(&state, c, first, second).unwrap();
        let theta = 2.0 * PI * (k as f64 + 1.0) / nf;
        let needle = Point2::new(next.free.x - next.pivot.x, next.free.y - next.pivot.y);
        assert!((needle.x - theta.sin()).abs() < 1e-12, "block {k}");
        assert!((needle.y - theta.cos()).abs() < 1e-12, "block {k}");
        state = next;
    }
    let final_dir = Point2::new(state.free.x - state.pivot.x, state.free.y - state.pivot.y);
    assert!((final_dir.x - (PI / 2.0).sin()).abs() < 1e-12);
    assert!(final_dir.y.abs() < 1e-12);
}

#[test]
fn recorded_pairs_are_unit_segments_before_hulling() {
    for n in [16u32, 64] {
        let spec = spec_for(n);
        let (chain, pairs) = build_chain(&spec).unwrap();
        assert_eq!(chain.len(), n as usize / 2 + 2);
        assert_eq!(pairs.len(), n as usize / 2 + 1);
        for &(a, b) in &pairs {
            assert!(
                (chain[a].dist(&chain[b]) - 1.0).abs() < 1e-12,
                "n = {n}, pair ({a}, {b})"
            );
        }
    }
}

#[test]
fn flat_schedule_blocks_differ_between_patterns() {
    let n = 16u32;
    let nf = f64::from(n);
    let base = PI / nf;
    let start = ChainState::start();
    let (_, plus_even, plus_odd) = apply_pattern_step(&start, 1, base, base).unwrap();
    let (_, minus_even, minus_odd) = apply_pattern_step(&start, -1, base, base).unwrap();
    assert!(plus_even.dist(&minus_even) > 1e-3);
    assert!(plus_odd.dist(&minus_odd) > 1e-3);
    assert!((plus_even.x - base.sin()).abs() < 1e-15);
    assert!((plus_even.y - base.cos()).abs() < 1e-15);
    assert!((minus_odd.x + base.sin()).abs() < 1e-15);
    assert!((minus_odd.y - (1.0 - base.cos())).abs() < 1e-15);
}

#[test]
fn schedule_entries_sum_to_a_quarter_turn_on_real_builds() {
    for n in [16u32, 32, 64, 128] {
        let spec = spec_for(n);
        let total: f64 = angle_schedule(&spec).iter().sum();
        assert!((total - PI / 2.0).abs() < 1e-13, "n = {n}");
    }
}

#[test]
fn every_canonical_vector_walks_to_a_closed_chain() {
    let n = 16u32;
    for bits in 0..8u32 {
        let entries: Vec<i8> = (0..4)
            .map(|k| if bits >> k & 1 == 1 { -1 } else { 1 })
            .collect();
        let v = SignVector::new(n, entries).unwrap();
        let sigma = 2.0 * (PI / f64::from(n)).sin() * v.signed_sum().abs();
        let sol = signopt::solve_delta(n, sigma).unwrap();
        let spec = PolygonSpec::new(v, sol.delta).unwrap();
        let (chain, _) = build_chain(&spec).unwrap();
        let closing = chain[n as usize / 2];
        assert!((closing.x - 0.5).abs() < 1e-12, "bits = {bits:03b}");
    }
}
