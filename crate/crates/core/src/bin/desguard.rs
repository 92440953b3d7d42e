use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use desguard::automata::check_controllability;
use desguard::closed_loop::{default_loop_depth, verify_closed_loop};
use desguard::dot::export_dot;
use desguard::io::load_problem;
use desguard::observability::{
    check_observability, default_depth, observability_violations, Strategy, DEFAULT_DEPTH_CAP,
};
use desguard::oracle::run_oracles;
use desguard::report::WitnessReport;
use desguard::supervisor::Supervisor;
use desguard::{Error, Problem};

type Handler = fn(&Problem, &Command) -> Result<u8, Error>;

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const INPUT_ERROR: u8 = 2;
const UNSUPPORTED: u8 = 3;

/// Supervisory control of discrete-event systems under observation attacks.
#[derive(Parser)]
#[command(name = "desguard", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check controllability and observability under the attack set.
    Check {
        problem: PathBuf,
        /// Word-length bound for the brute-force method.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Build one observer per attack and print observers, control tables and DOT.
    Synthesize {
        problem: PathBuf,
        /// Write one DOT file per observer into this directory instead of stdout.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    /// Simulate the closed loop against every attack and compare with the specification.
    Simulate {
        problem: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Cross-check the automata constructions against bounded enumeration.
    Oracle {
        problem: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        /// Longest output word to enumerate.
        #[arg(long, default_value_t = 4)]
        outputs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Product,
    Reduction,
    Brute,
}

impl From<MethodArg> for Strategy {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Strategy::Auto,
            MethodArg::Product => Strategy::Product,
            MethodArg::Reduction => Strategy::Reduction,
            MethodArg::Brute => Strategy::BruteForce,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (path, run): (&PathBuf, Handler) = match &cli.command {
        Command::Check { problem, .. } => (problem, check),
        Command::Synthesize { problem, .. } => (problem, synthesize),
        Command::Simulate { problem, .. } => (problem, simulate),
        Command::Oracle { problem, .. } => (problem, oracle),
    };
    let problem = match load_problem(path) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(INPUT_ERROR);
        }
    };
    match run(&problem, &cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_unsupported() {
                UNSUPPORTED
            } else {
                INPUT_ERROR
            })
        }
    }
}

fn check(problem: &Problem, cmd: &Command) -> Result<u8, Error> {
    let Command::Check { depth, method, .. } = cmd else {
        unreachable!()
    };
    let Problem {
        plant,
        spec,
        observation: p,
        ..
    } = problem;
    let attacks = problem.attack_models();
    if let Some(w) = check_controllability(plant, spec)?.witness {
        print!("{}", WitnessReport::controllability(problem, &w)?);
        return Ok(FAILS);
    }
    println!("controllable: yes");
    let depth = depth.unwrap_or_else(|| default_depth(plant, spec, DEFAULT_DEPTH_CAP));
    let verdict = check_observability(plant, spec, p, &attacks, (*method).into(), depth)?;
    let Some(first) = verdict.witness else {
        println!("observable: yes ({})", verdict.method);
        return Ok(HOLDS);
    };
    println!("observable: no ({})", verdict.method);
    let witnesses = match method {
        MethodArg::Brute => vec![first],
        _ => match observability_violations(plant, spec, p, &attacks) {
            Ok(all) if !all.is_empty() => all,
            _ => vec![first],
        },
    };
    for w in &witnesses {
        println!();
        print!("{}", WitnessReport::observability(problem, w)?);
    }
    Ok(FAILS)
}

fn synthesize(problem: &Problem, cmd: &Command) -> Result<u8, Error> {
    let Command::Synthesize { dot_dir, .. } = cmd else {
        unreachable!()
    };
    let sup = Arc::new(Supervisor::new(
        &problem.spec,
        &problem.observation,
        &problem.attack_models(),
    )?);
    let names = &problem.alphabet;
    let p = &problem.observation;
    for (i, obs) in sup.observers().iter().enumerate() {
        let name = &problem.attacks[i].name;
        println!("observer {name}: {} states", obs.num_states());
        for (k, s) in obs.states().iter().enumerate() {
            let psi: Vec<&str> = sup.psi_of(i, k).iter().map(|e| names.name(*e)).collect();
            println!(
                "  q{k} {} enables {{{}}}",
                s.label(&problem.spec),
                psi.join(",")
            );
        }
        for (s, t, u) in obs.transitions() {
            println!("  q{s} -{}-> q{u}", p.symbol_name(t));
        }
        let dot = export_dot(obs);
        match dot_dir {
            Some(dir) => {
                let path = dir.join(format!("observer-{name}.dot"));
                if let Err(e) =
                    std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, dot))
                {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return Ok(INPUT_ERROR);
                }
                println!("  wrote {}", path.display());
            }
            None => print!("{dot}"),
        }
    }
    Ok(HOLDS)
}

fn simulate(problem: &Problem, cmd: &Command) -> Result<u8, Error> {
    let Command::Simulate { depth, .. } = cmd else {
        unreachable!()
    };
    let depth = depth.unwrap_or_else(|| default_loop_depth(&problem.spec));
    let r = verify_closed_loop(
        &problem.plant,
        &problem.spec,
        &problem.observation,
        &problem.attack_models(),
        depth,
    )?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    println!("depth: {depth}");
    println!("controllable: {}", yes_no(r.controllable));
    match r.observable {
        Some(b) => println!("observable: {}", yes_no(b)),
        None => println!("observable: not checked"),
    }
    println!("|K≤{depth}| = {}", r.spec_words);
    for res in &r.results {
        println!(
            "attack {}: |lmax| = {}, |lmin| = {}",
            problem.attacks[res.attack].name,
            res.lmax.len(),
            res.lmin.len()
        );
    }
    for d in &r.discrepancies {
        println!(
            "discrepancy: attack {} {} `{}`",
            problem.attacks[d.attack].name,
            d.kind,
            problem.alphabet.render(&d.word)
        );
    }
    if !r.consistent() {
        eprintln!("error: closed loop departs from K although K is controllable and observable");
    }
    Ok(if r.equalities_hold() { HOLDS } else { FAILS })
}

fn oracle(problem: &Problem, cmd: &Command) -> Result<u8, Error> {
    let Command::Oracle { depth, outputs, .. } = cmd else {
        unreachable!()
    };
    let report = run_oracles(problem, *depth, *outputs)?;
    for c in &report.checks {
        let status = if c.passed { "ok" } else { "MISMATCH" };
        if c.detail.is_empty() {
            println!("{status:8} {}", c.name);
        } else {
            println!("{status:8} {} ({})", c.name, c.detail);
        }
    }
    Ok(if report.all_passed() { HOLDS } else { FAILS })
}
