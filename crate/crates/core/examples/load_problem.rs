//! Loads a problem file, checks it and writes it back out.
//!
//! Run with `cargo run --example load_problem -- crates/core/fixtures/ex1.json`.

use std::process::ExitCode;

use desguard::io::{load_problem, serialize_problem};
use desguard::observability::{check_observability, Strategy, DEFAULT_DEPTH_CAP};

fn main() -> ExitCode {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/ex1.json").into());
    let problem = match load_problem(&path) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{path}: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!(
        "{path}: {} events, {} plant states, {} spec states, attacks {:?}",
        problem.alphabet.len(),
        problem.plant.num_states(),
        problem.spec.num_states(),
        problem
            .attacks
            .iter()
            .map(|a| a.name.as_str())
            .collect::<Vec<_>>()
    );
    match check_observability(
        &problem.plant,
        &problem.spec,
        &problem.observation,
        &problem.attack_models(),
        Strategy::Auto,
        DEFAULT_DEPTH_CAP,
    ) {
        Ok(v) => println!("observable: {} ({})", v.is_holds(), v.method),
        Err(e) => println!("observability: {e}"),
    }
    print!("{}", serialize_problem(&problem));
    ExitCode::SUCCESS
}
