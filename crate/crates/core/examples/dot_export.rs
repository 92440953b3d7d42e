//! Graphviz output for the plant, an observer and a test automaton.
//!
//! Run with `cargo run --example dot_export > out.dot`.

use desguard::dot::export_dot;
use desguard::fixtures::example1;
use desguard::observability::build_test_automaton;
use desguard::observer::build_observer;

fn main() -> desguard::Result<()> {
    let ex = example1();
    print!("{}", export_dot(&ex.plant));
    print!(
        "{}",
        export_dot(&build_observer(&ex.spec, ex.attack("A3"), &ex.observation)?)
    );
    let t = build_test_automaton(
        &ex.plant,
        &ex.spec,
        &ex.observation,
        ex.attack("A3"),
        ex.attack("A2"),
    )?;
    print!("{}", export_dot(&t));
    Ok(())
}
