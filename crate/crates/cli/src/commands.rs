use std::error::Error as StdError;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use observer_core::ca::{self, FrontierAction};
use observer_core::document::{
    parse_chain, parse_environment, parse_observer, serialize_chain, serialize_environment,
    serialize_observer,
};
use observer_core::metrics::{adaptation_time, complexity, expected_hitting_time, AdaptationResult};
use observer_core::morphism::{find_isomorphism, minimize};
use observer_core::{CoupledSystem, Environment, Joint, Observer};

use crate::{Command, Frontier, TraceFormat};

type Outcome = Result<ExitCode, Box<dyn StdError>>;

/// Disjunction of conjunctions of `(is_observer_state, index)` terms.
type Goal = Vec<Vec<(bool, usize)>>;

pub fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Simulate { observer, env, init, steps, trace } => {
            simulate(&observer, &env, &init, steps, trace)
        }
        Command::Equiv { a, b, anchors } => equiv(&a, &b, anchors.as_deref()),
        Command::Complexity { file, bits } => complexity_cmd(&file, bits),
        Command::Minimize { file, output } => minimize_cmd(&file, output.as_deref()),
        Command::Adapt { observer, env, init, goal, cap } => {
            adapt(&observer, &env, &init, goal.as_deref(), cap)
        }
        Command::Hit { chain, start, goal } => hit(&chain, start, &goal),
        Command::Ca { rule, width, steps, init, embed, at, frontier, pbm } => {
            ca_cmd(rule, width, steps, &init, embed.as_deref().zip(at), frontier, pbm.as_deref())
        }
        Command::Fmt { file } => fmt(&file),
        Command::Validate { observer, env, init } => validate(&observer, env.as_deref().zip(init.as_deref())),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Box<dyn StdError>> {
    fs::read(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_observer(path: &Path) -> Result<Observer, Box<dyn StdError>> {
    parse_observer(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_environment(path: &Path) -> Result<Environment, Box<dyn StdError>> {
    parse_environment(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn split_pair<'a>(text: &'a str, what: &str) -> Result<(&'a str, &'a str), Box<dyn StdError>> {
    text.split_once(',')
        .ok_or_else(|| format!("{what} must be two comma-separated identifiers, got `{text}`").into())
}

fn coupled(observer: &Path, env: &Path, init: &str) -> Result<(CoupledSystem, Joint), Box<dyn StdError>> {
    let sys = CoupledSystem::new(load_observer(observer)?, load_environment(env)?)?;
    let (x0, s0) = split_pair(init, "--init")?;
    let start = sys.joint(x0, s0)?;
    Ok((sys, start))
}

fn simulate(observer: &Path, env: &Path, init: &str, steps: usize, format: TraceFormat) -> Outcome {
    let (sys, start) = coupled(observer, env, init)?;
    let trace = sys.run(start, steps);
    let obs = sys.observer();
    let out = io::stdout();
    let mut out = out.lock();
    if let TraceFormat::Tsv = format {
        writeln!(out, "t\ty\tx\tz\ts")?;
    }
    for r in &trace.records {
        let (y, x, z) = (
            obs.inputs().label(r.input),
            obs.states().label(r.state),
            obs.outputs().label(r.output),
        );
        let s = sys.environment().env_states().label(r.env_state);
        match format {
            TraceFormat::Tsv => writeln!(out, "{}\t{y}\t{x}\t{z}\t{s}", r.t)?,
            TraceFormat::Jsonl => writeln!(
                out,
                "{}",
                serde_json::json!({"t": r.t, "y": y, "x": x, "z": z, "s": s})
            )?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn equiv(a: &Path, b: &Path, anchors: Option<&str>) -> Outcome {
    let (oa, ob) = (load_observer(a)?, load_observer(b)?);
    let anchors = anchors.map(|s| split_pair(s, "--anchors")).transpose()?;
    match find_isomorphism(&oa, &ob, anchors)? {
        Some(m) => {
            println!("EQUIVALENT");
            let [xs, ys, zs] = m.label_pairs(&oa, &ob);
            for (name, pairs) in [("states", xs), ("inputs", ys), ("outputs", zs)] {
                let body: Vec<String> = pairs.iter().map(|(s, t)| format!("{s} -> {t}")).collect();
                println!("{name}: {}", body.join(", "));
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("NOT-EQUIVALENT");
            Ok(ExitCode::from(1))
        }
    }
}

fn complexity_cmd(file: &Path, bits: bool) -> Outcome {
    let obs = load_observer(file)?;
    let report = complexity(&obs);
    let (report, unit) = if bits { (report.in_bits(), "bits") } else { (report, "nats") };
    let (x, y, z) = report.sizes;
    let (rx, ry, rz) = report.reduced_sizes;
    println!("sizes = {x} {y} {z}");
    println!("reduced sizes = {rx} {ry} {rz}");
    println!("C = {:.4} {unit}", report.complexity);
    println!("Lambda = {:.4} {unit}", report.lambda);
    Ok(ExitCode::SUCCESS)
}

fn minimize_cmd(file: &Path, output: Option<&Path>) -> Outcome {
    let min = minimize(&load_observer(file)?);
    let text = serialize_observer(&min.observer);
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// Parses `x=A&s=B|x=C` against the system's labels.
fn parse_goal(sys: &CoupledSystem, expr: &str) -> Result<Goal, Box<dyn StdError>> {
    expr.split('|')
        .map(|clause| {
            clause
                .split('&')
                .map(|term| {
                    let (key, value) = term
                        .trim()
                        .split_once('=')
                        .ok_or_else(|| format!("goal term `{term}` is not `x=..` or `s=..`"))?;
                    match key.trim() {
                        "x" => Ok((true, sys.observer().states().lookup(value.trim())?)),
                        "s" => Ok((false, sys.environment().env_states().lookup(value.trim())?)),
                        other => Err(format!("goal key `{other}` must be `x` or `s`").into()),
                    }
                })
                .collect()
        })
        .collect()
}

fn adapt(observer: &Path, env: &Path, init: &str, goal: Option<&str>, cap: Option<usize>) -> Outcome {
    let (sys, start) = coupled(observer, env, init)?;
    let cap = cap.unwrap_or_else(|| sys.num_joint_states().max(1));
    let clauses = goal.map(|g| parse_goal(&sys, g)).transpose()?;
    let predicate = clauses.map(|clauses| {
        move |j: Joint| {
            clauses.iter().any(|c| {
                c.iter()
                    .all(|&(is_state, v)| if is_state { j.state == v } else { j.env == v })
            })
        }
    });
    let result = match &predicate {
        Some(p) => adaptation_time(&sys, start, Some(p as &dyn Fn(Joint) -> bool), cap)?,
        None => adaptation_time(&sys, start, None, cap)?,
    };
    println!("result = {}", result.kind());
    match result {
        AdaptationResult::TransientToCycle { steps, transient, period } => {
            println!("steps = {steps}");
            println!("transient = {transient}");
            println!("period = {period}");
        }
        AdaptationResult::GoalReached { steps } => println!("steps = {steps}"),
        AdaptationResult::GoalUnreachable { explored } => {
            println!("explored = {explored}");
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn hit(chain: &Path, start: usize, goal: &[usize]) -> Outcome {
    let matrix = parse_chain(&read(chain)?)?;
    let t = expected_hitting_time(&matrix, start, goal)?;
    if t.is_finite() {
        println!("{t:.6}");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("INF");
        Ok(ExitCode::from(1))
    }
}

fn ca_cmd(
    rule: u32,
    width: usize,
    steps: usize,
    init: &str,
    embed: Option<(&Path, usize)>,
    frontier: Frontier,
    pbm: Option<&Path>,
) -> Outcome {
    let rule = ca::rule_table(rule)?;
    let row = if init == "single" {
        ca::single_seed(width)
    } else {
        let row = ca::parse_row(init)?;
        if row.len() != width {
            return Err(format!("--init has {} cells but --width is {width}", row.len()).into());
        }
        row
    };
    let diagram = match embed {
        Some((path, at)) => {
            let frontier = match frontier {
                Frontier::Overwrite => FrontierAction::Overwrite,
                Frontier::Gate => FrontierAction::Gate,
            };
            ca::embed(rule, row, at, load_observer(path)?)?
                .with_frontier(frontier)
                .run_embedded(steps)
                .diagram
        }
        None => ca::evolve(&row, &rule, steps)?,
    };
    if let Some(path) = pbm {
        fs::write(path, ca::to_pbm(&diagram)).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    print!("{}", ca::to_text(&diagram));
    Ok(ExitCode::SUCCESS)
}

/// Tries the document kinds in turn; reports the observer error if none fit.
fn fmt(file: &Path) -> Outcome {
    let bytes = read(file)?;
    let text = match parse_observer(&bytes) {
        Ok(obs) => serialize_observer(&obs),
        Err(observer_err) => match parse_environment(&bytes) {
            Ok(env) => serialize_environment(&env),
            Err(_) => match parse_chain(&bytes) {
                Ok(m) => serialize_chain(&m),
                Err(_) => return Err(format!("{}: {observer_err}", file.display()).into()),
            },
        },
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn validate(observer: &Path, coupling: Option<(&Path, &str)>) -> Outcome {
    let obs = load_observer(observer)?;
    println!(
        "observer ok: {} states, {} inputs, {} outputs",
        obs.num_states(),
        obs.num_inputs(),
        obs.num_outputs()
    );
    let Some((env, init)) = coupling else {
        return Ok(ExitCode::SUCCESS);
    };
    let (sys, start) = coupled(observer, env, init)?;
    let report = sys.validate_minimal(&[start])?;
    for (name, ok) in report.conditions() {
        println!("{name}: {}", if ok { "pass" } else { "fail" });
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
