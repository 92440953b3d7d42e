//! Closed-loop languages `L^max` and `L^min` of the observer-bank supervisor
//! against each attack, compared with the specification.
//!
//! Run with `cargo run --example closed_loop`.

use desguard::closed_loop::verify_closed_loop;
use desguard::fixtures::example1;

fn main() -> desguard::Result<()> {
    let ex = example1();
    for set in [&["A1"][..], &["A2"], &["A3"], &["A2", "A3"]] {
        let sub = ex.with_attacks(set);
        let report = verify_closed_loop(
            &ex.plant,
            &ex.spec,
            &ex.observation,
            &sub.attack_models(),
            7,
        )?;
        println!("attack set {set:?}, |K≤7| = {}", report.spec_words);
        for r in &report.results {
            println!(
                "  actual attack {}: |lmax| = {}, |lmin| = {}",
                sub.attacks[r.attack].name,
                r.lmax.len(),
                r.lmin.len()
            );
        }
        for d in &report.discrepancies {
            println!(
                "  {} under {}: `{}`",
                d.kind,
                sub.attacks[d.attack].name,
                ex.alphabet.render(&d.word)
            );
        }
    }
    Ok(())
}
