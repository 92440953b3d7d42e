//! Insertion-removal attacks: observability by reduction to conventional
//! observability, and state estimation on the attack-free kernel.
//!
//! Run with `cargo run --example insertion_removal`.

use desguard::fixtures::example1_insertion_removal;
use desguard::observability::{check_observability_ir, observability_violations};
use desguard::observation::InsertionRemovalSet;
use desguard::observer::{build_removal_observer, removal_estimate};

fn main() -> desguard::Result<()> {
    let ex = example1_insertion_removal();
    let p = &ex.observation;
    for set in [&["Ad"][..], &["Aa"], &["Ad", "Aa"]] {
        let sub = ex.with_attacks(set);
        let v = check_observability_ir(&ex.plant, &ex.spec, p, &sub.attack_models())?;
        println!("observable under {set:?}: {}", v.is_holds());
    }
    let all = ex.attack_models();
    for w in observability_violations(&ex.plant, &ex.spec, p, &all)? {
        println!(
            "  {} on `{}` vs {} on `{}`, event {}",
            ex.attacks[w.attack].name,
            ex.alphabet.render(&w.w),
            ex.attacks[w.attack_prime].name,
            ex.alphabet.render(&w.w_prime),
            ex.alphabet.name(w.event)
        );
    }

    let alpha = InsertionRemovalSet::from_names(p, &["d"])?;
    let obs = build_removal_observer(&ex.spec, &alpha, p);
    let y = p.output_word("adddbdab")?;
    match removal_estimate(&obs, &alpha, &y) {
        Some(s) => println!(
            "estimate after `{}` with d attacked: {}",
            p.render(&y),
            s.label(&ex.spec)
        ),
        None => println!("`{}` cannot be explained", p.render(&y)),
    }
    Ok(())
}
