//! Controllability and observability verdicts on the running example.
//!
//! Run with `cargo run --example verdicts`.

use desguard::automata::check_controllability;
use desguard::fixtures::example1;
use desguard::observability::{brute_force_observability, check_observability_rr};
use desguard::report::WitnessReport;

fn main() -> desguard::Result<()> {
    let ex = example1();
    let c = check_controllability(&ex.plant, &ex.spec)?;
    println!("K controllable: {}", c.is_holds());

    for set in [&["A1"][..], &["A2"], &["A3"], &["A2", "A3"]] {
        let sub = ex.with_attacks(set);
        let attacks = sub.attack_models();
        let v = check_observability_rr(&ex.plant, &ex.spec, &ex.observation, &attacks)?;
        let brute = brute_force_observability(&ex.plant, &ex.spec, &ex.observation, &attacks, 8)?;
        println!(
            "observable under {set:?}: {} (brute force agrees: {})",
            v.is_holds(),
            v.is_holds() == brute.is_holds()
        );
        if let Some(w) = &v.witness {
            for line in WitnessReport::observability(&sub, w)?.to_string().lines() {
                println!("    {line}");
            }
        }
    }
    Ok(())
}
