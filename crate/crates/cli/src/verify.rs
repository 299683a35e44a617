//! The invariant suite behind `smallpoly verify`: per size, rebuild the
//! chain polygon and check smallness, convexity, symmetry, closure,
//! the angle schedule, closed-form agreement, engine agreement, the
//! block-expansion recursion, and the minimum bound.

use std::f64::consts::PI;

use construct::{angle_schedule, build_chain, build_dn, build_dn_delta_zero, dn_closed_form};
use geom_core::{is_strictly_convex, reflect_x};
use signopt::{
    block_pattern_result, derive_block_pattern, m_upper_bound, m_upper_bound_closed, search,
    search_exhaustive, search_mitm,
};

pub struct CheckLine {
    pub name: &'static str,
    pub n: u32,
    pub passed: bool,
    pub detail: String,
}

struct Ledger {
    lines: Vec<CheckLine>,
}

impl Ledger {
    fn record(&mut self, name: &'static str, n: u32, passed: bool, detail: String) {
        self.lines.push(CheckLine { name, n, passed, detail });
    }

    fn ok(&mut self, name: &'static str, n: u32) {
        self.record(name, n, true, String::new());
    }
}

pub fn run(ns: &[u32], debug_delta_zero: bool) -> Vec<CheckLine> {
    let mut ledger = Ledger { lines: Vec::new() };
    for &n in ns {
        check_one(&mut ledger, n, debug_delta_zero);
    }
    ledger.lines
}

fn check_one(ledger: &mut Ledger, n: u32, debug_delta_zero: bool) {
    let (poly, spec, metrics) = match build_dn(n) {
        Ok(t) => t,
        Err(e) => {
            ledger.record("construction", n, false, e.to_string());
            return;
        }
    };

    if (metrics.diameter - 1.0).abs() <= 1e-12 {
        ledger.ok("smallness", n);
    } else {
        ledger.record(
            "smallness",
            n,
            false,
            format!("diameter = {}", metrics.diameter),
        );
    }

    if poly.vertices.len() == n as usize && is_strictly_convex(&poly.vertices) {
        ledger.ok("convexity", n);
    } else {
        ledger.record(
            "convexity",
            n,
            false,
            format!("{} hull vertices", poly.vertices.len()),
        );
    }

    let worst_mirror = poly
        .vertices
        .iter()
        .map(|v| {
            let mirrored = reflect_x(*v);
            poly.vertices
                .iter()
                .map(|w| mirrored.dist(w))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0f64, f64::max);
    if worst_mirror <= 1e-12 {
        ledger.ok("symmetry", n);
    } else {
        ledger.record("symmetry", n, false, format!("worst offset {worst_mirror}"));
    }

    if debug_delta_zero {
        match build_dn_delta_zero(n) {
            Err(e) => ledger.record("closure", n, false, e.to_string()),
            Ok(_) => ledger.record(
                "closure",
                n,
                false,
                "zero-angle build unexpectedly passed the closure check".to_string(),
            ),
        }
    } else {
        match build_chain(&spec) {
            Ok((chain, _)) => {
                let err = (chain[n as usize / 2].x - 0.5).abs();
                if err <= 1e-12 {
                    ledger.ok("closure", n);
                } else {
                    ledger.record("closure", n, false, format!("offset {err} at the midpoint"));
                }
            }
            Err(e) => ledger.record("closure", n, false, e.to_string()),
        }
    }

    let sum: f64 = angle_schedule(&spec).iter().sum();
    if (sum - PI / 2.0).abs() <= 1e-13 {
        ledger.ok("schedule-sum", n);
    } else {
        ledger.record("schedule-sum", n, false, format!("sum = {sum}"));
    }

    let result = match block_pattern_result(n) {
        Ok(r) => r,
        Err(e) => {
            ledger.record("closed-form-agreement", n, false, e.to_string());
            return;
        }
    };
    match dn_closed_form(&result) {
        Ok((closed, sol)) => {
            let dl = (metrics.perimeter - closed.perimeter).abs();
            let dw = (metrics.width - closed.width).abs();
            if dl <= 1e-10 && dw <= 1e-10 {
                ledger.ok("closed-form-agreement", n);
            } else {
                ledger.record(
                    "closed-form-agreement",
                    n,
                    false,
                    format!("perimeter off {dl}, width off {dw}"),
                );
            }
            if sol.residual.abs() <= 1e-14 && (0.0..PI / f64::from(n)).contains(&sol.delta) {
                ledger.ok("delta-residual", n);
            } else {
                ledger.record(
                    "delta-residual",
                    n,
                    false,
                    format!("residual {}, delta {}", sol.residual, sol.delta),
                );
            }
        }
        Err(e) => ledger.record("closed-form-agreement", n, false, e.to_string()),
    }

    check_engines(ledger, n);
    check_recursion(ledger, n, &result);
    check_bound(ledger, n, &result);
}

fn check_engines(ledger: &mut Ledger, n: u32) {
    let entries = n / 4;
    if entries <= 20 {
        match (search_exhaustive(n), search_mitm(n)) {
            (Ok(a), Ok(b)) => {
                if a.m_value.to_bits() == b.m_value.to_bits()
                    && a.best.entries() == b.best.entries()
                {
                    ledger.ok("engine-equivalence", n);
                } else {
                    ledger.record(
                        "engine-equivalence",
                        n,
                        false,
                        format!("exhaustive m = {}, midpoint m = {}", a.m_value, b.m_value),
                    );
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                ledger.record("engine-equivalence", n, false, e.to_string())
            }
        }
    } else if entries <= 64 {
        match (search_mitm(n), block_pattern_result(n)) {
            (Ok(exact), Ok(block)) => {
                if exact.m_value <= block.m_value + 1e-15 {
                    ledger.record(
                        "engine-equivalence",
                        n,
                        true,
                        "exact minimum dominates the block vector".to_string(),
                    );
                } else {
                    ledger.record(
                        "engine-equivalence",
                        n,
                        false,
                        format!("exact m = {} above block m = {}", exact.m_value, block.m_value),
                    );
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                ledger.record("engine-equivalence", n, false, e.to_string())
            }
        }
    } else {
        ledger.record(
            "engine-equivalence",
            n,
            block_pattern_result(n).is_ok(),
            "exact engines beyond capacity at this size".to_string(),
        );
    }
}

fn check_recursion(ledger: &mut Ledger, n: u32, block: &signopt::SignSearchResult) {
    let base_n = n / 4;
    let outcome = block_pattern_result(base_n).and_then(|base| {
        let expanded = derive_block_pattern(base_n, &base.best)?;
        Ok((base, expanded))
    });
    match outcome {
        Ok((base, expanded)) => {
            let nf = f64::from(n);
            let factor = 4.0 * (PI / nf).sin() * (2.0 * PI / nf).sin();
            let gap = (block.m_value - factor * base.m_value).abs();
            if gap <= 1e-15 && expanded.entries() == block.best.entries() {
                ledger.ok("block-recursion", n);
            } else {
                ledger.record(
                    "block-recursion",
                    n,
                    false,
                    format!("objective off the recursion product by {gap}"),
                );
            }
        }
        Err(e) => ledger.record("block-recursion", n, false, e.to_string()),
    }
}

fn check_bound(ledger: &mut Ledger, n: u32, block: &signopt::SignSearchResult) {
    let s = n.trailing_zeros();
    let m = if n / 4 <= 40 {
        match search(n) {
            Ok(r) => r.m_value,
            Err(e) => {
                ledger.record("minimum-bound", n, false, e.to_string());
                return;
            }
        }
    } else {
        block.m_value
    };
    match (m_upper_bound(s), m_upper_bound_closed(s)) {
        (Ok(product), Ok(closed)) => {
            if m <= product + 1e-15 && m <= closed + 1e-15 {
                ledger.ok("minimum-bound", n);
            } else {
                ledger.record(
                    "minimum-bound",
                    n,
                    false,
                    format!("m = {m} versus bound {product}"),
                );
            }
        }
        (Err(e), _) | (_, Err(e)) => ledger.record("minimum-bound", n, false, e.to_string()),
    }
}
