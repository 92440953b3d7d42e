//! Corrupted observations: enumerating `AP(w)`, membership tests, and the
//! common corruption of two insertion-removal attacks.
//!
//! Run with `cargo run --example attack_algebra`.

use desguard::fixtures::{example1, example2};
use desguard::observation::{
    ap_inverse_contains, ap_word, common_corruption_witness, InsertionRemovalSet,
};

fn main() -> desguard::Result<()> {
    let ex = example1();
    let p = &ex.observation;
    for (attack, word) in [("A2", "abcda"), ("A3", "abcdab")] {
        let w = ex.alphabet.word(word)?;
        let outs: Vec<String> = ap_word(ex.attack(attack), p, &w)?
            .iter()
            .map(|y| p.render(y))
            .collect();
        println!("{attack}P({word}) = {{{}}}", outs.join(", "));
    }

    // Insertion-removal of t1: membership depends only on the t1-free kernel.
    let sym = example2();
    let q = &sym.observation;
    let w = sym.alphabet.word("t1 t2")?;
    for y in ["t1 t1 t2 t1", "t2", "t2 t2"] {
        let y_word = q.output_word(y)?;
        println!(
            "`{y}` ∈ A(t1 t2): {}",
            ap_inverse_contains(&sym.attack, q, &w, &y_word)
        );
    }

    // Two attacks whose outputs share a kernel always have a common corruption.
    let a1 = InsertionRemovalSet::from_names(p, &["a"])?;
    let a2 = InsertionRemovalSet::from_names(p, &["d"])?;
    let v = p.output_word("abd")?;
    let v_prime = p.output_word("dba")?;
    let y = common_corruption_witness(&a1, &a2, &v, &v_prime)?;
    println!(
        "common corruption of `abd` (attack on a) and `dba` (attack on d): {}",
        p.render(&y)
    );
    Ok(())
}
