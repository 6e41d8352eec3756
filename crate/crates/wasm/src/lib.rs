//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function wraps a plain Rust helper that returns
//! `Result<String, String>`, so the helpers can be tested natively.

use observer_core::ca::{self, FrontierAction};
use observer_core::document::{parse_environment, parse_observer, serialize_observer};
use observer_core::metrics::{adaptation_time, complexity, AdaptationResult};
use observer_core::morphism::minimize;
use observer_core::CoupledSystem;
use wasm_bindgen::prelude::*;

/// Text spacetime diagram (`.`/`#`). `init` is `single` or a row of cells;
/// a non-empty `embed_json` embeds that observer at cell `at`.
pub fn ca_text(
    rule: u32,
    width: usize,
    steps: usize,
    init: &str,
    embed_json: &str,
    at: usize,
    gate: bool,
) -> Result<String, String> {
    let rule = ca::rule_table(rule).map_err(|e| e.to_string())?;
    let row = if init.trim() == "single" {
        ca::single_seed(width)
    } else {
        ca::parse_row(init).map_err(|e| e.to_string())?
    };
    let diagram = if embed_json.trim().is_empty() {
        ca::evolve(&row, &rule, steps).map_err(|e| e.to_string())?
    } else {
        let obs = parse_observer(embed_json.as_bytes()).map_err(|e| e.to_string())?;
        let frontier = if gate { FrontierAction::Gate } else { FrontierAction::Overwrite };
        ca::embed(rule, row, at, obs)
            .map_err(|e| e.to_string())?
            .with_frontier(frontier)
            .run_embedded(steps)
            .diagram
    };
    Ok(ca::to_text(&diagram))
}

/// Complexity report followed by the minimized document.
pub fn analyze_text(observer_json: &str) -> Result<String, String> {
    let obs = parse_observer(observer_json.as_bytes()).map_err(|e| e.to_string())?;
    let rep = complexity(&obs);
    let bits = rep.in_bits();
    let (x, y, z) = rep.sizes;
    let (rx, ry, rz) = rep.reduced_sizes;
    Ok(format!(
        "sizes = {x} {y} {z}\nreduced sizes = {rx} {ry} {rz}\nC = {:.4} nats ({:.4} bits)\nLambda = {:.4} nats ({:.4} bits)\n\nminimized:\n{}",
        rep.complexity,
        bits.complexity,
        rep.lambda,
        bits.lambda,
        serialize_observer(&minimize(&obs).observer)
    ))
}

/// TSV trace of the closed loop from `init` (`X0,S0`) and how it settles.
pub fn simulate_text(observer_json: &str, env_json: &str, init: &str, steps: usize) -> Result<String, String> {
    let obs = parse_observer(observer_json.as_bytes()).map_err(|e| format!("observer: {e}"))?;
    let env = parse_environment(env_json.as_bytes()).map_err(|e| format!("environment: {e}"))?;
    let sys = CoupledSystem::new(obs, env).map_err(|e| e.to_string())?;
    let (x0, s0) = init
        .split_once(',')
        .ok_or_else(|| format!("start must be `STATE,ENV_STATE`, got `{init}`"))?;
    let start = sys.joint(x0.trim(), s0.trim()).map_err(|e| e.to_string())?;
    let mut out = String::from("t\ty\tx\tz\ts\n");
    for r in &sys.run(start, steps).records {
        let o = sys.observer();
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.t,
            o.inputs().label(r.input),
            o.states().label(r.state),
            o.outputs().label(r.output),
            sys.environment().env_states().label(r.env_state)
        ));
    }
    let cap = sys.num_joint_states();
    match adaptation_time(&sys, start, None, cap).map_err(|e| e.to_string())? {
        AdaptationResult::TransientToCycle { steps, transient, period } => out.push_str(&format!(
            "\nsettles: revisit at step {steps}, cycle entered at step {transient}, period {period}\n"
        )),
        other => out.push_str(&format!("\n{}\n", other.kind())),
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn ca_diagram(
    rule: u32,
    width: usize,
    steps: usize,
    init: &str,
    embed_json: &str,
    at: usize,
    gate: bool,
) -> Result<String, JsValue> {
    ca_text(rule, width, steps, init, embed_json, at, gate).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze_observer(observer_json: &str) -> Result<String, JsValue> {
    analyze_text(observer_json).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn simulate_loop(observer_json: &str, env_json: &str, init: &str, steps: usize) -> Result<String, JsValue> {
    simulate_text(observer_json, env_json, init, steps).map_err(|e| JsValue::from_str(&e))
}
