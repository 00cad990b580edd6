//! Single-entry edits to the (3,3) example tables and the axiom each one
//! breaks, with the witness the verifier reports.

use hyperideal::harness::paper_example_spec;
use hyperideal::{check_axioms, Distributivity};

fn main() -> hyperideal::Result<()> {
    // (table, sorted key, new value) in element indices
    let edits: [(char, [usize; 3], &[usize]); 6] = [
        ('f', [0, 0, 2], &[1, 2]),
        ('f', [0, 1, 1], &[0, 1]),
        ('f', [1, 1, 1], &[1, 2]),
        ('g', [1, 2, 2], &[0]),
        ('g', [0, 1, 1], &[1]),
        ('g', [1, 1, 2], &[1]),
    ];
    for (table, key, value) in edits {
        let mut spec = paper_example_spec();
        if table == 'f' {
            spec.f.insert(key.to_vec(), value.to_vec());
        } else {
            spec.g.insert(key.to_vec(), value[0]);
        }
        let report = check_axioms(&spec, Distributivity::Includes)?;
        println!("{table}({}) := {:?}", spec.key_string(&key), value);
        for c in report.failures() {
            match c.status.witness() {
                Some(w) => println!("  {} at ({})", c.axiom.name(), spec.key_string(&w.tuple)),
                None => println!("  {} not checked", c.axiom.name()),
            }
        }
    }
    Ok(())
}
