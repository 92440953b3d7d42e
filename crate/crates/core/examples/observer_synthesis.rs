//! Builds the observer bank for a set of attacks and drives it online with a
//! corrupted output stream, printing estimates and control decisions.
//!
//! Run with `cargo run --example observer_synthesis`.

use desguard::fixtures::example1;
use desguard::supervisor::{supervisor_decision, supervisor_feed, SupervisorBank};

fn main() -> desguard::Result<()> {
    let ex = example1().with_attacks(&["A2", "A3"]);
    let p = &ex.observation;
    let mut bank = SupervisorBank::new(&ex.spec, p, &ex.attack_models())?;
    for (i, obs) in bank.supervisor().observers().iter().enumerate() {
        let labels: Vec<String> = obs.states().iter().map(|s| s.label(&ex.spec)).collect();
        println!("observer {}: {}", ex.attacks[i].name, labels.join(" "));
    }

    let show = |bank: &SupervisorBank| {
        let enabled: Vec<&str> = supervisor_decision(bank)
            .enabled
            .iter()
            .map(|e| ex.alphabet.name(*e))
            .collect();
        let estimates: Vec<String> = (0..ex.attacks.len())
            .map(|i| match bank.estimate(i) {
                Some(s) => format!("{}={}", ex.attacks[i].name, s.label(&ex.spec)),
                None => format!("{}=dead", ex.attacks[i].name),
            })
            .collect();
        println!(
            "after `{}`: {}  enable {{{}}}",
            p.render(bank.history()),
            estimates.join(" "),
            enabled.join(",")
        );
    };
    show(&bank);
    for t in p.output_word("ababd")?.iter() {
        bank = supervisor_feed(&bank, t);
        show(&bank);
    }
    Ok(())
}
