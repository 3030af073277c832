//! The one-node nonstandard model and the two-node model from the
//! separation arguments: evaluate the forcing relation on the sequents
//! they refute.
//!
//! Run with: cargo run --example kripke_countermodels

use bakit::semantics::{add_root, force_sequent, make_kstar, EvalBound};
use bakit::syntax::{parse_sequent, Lang};

fn main() {
    let b = EvalBound::with_inf(4);
    let kstar = make_kstar();
    for src in [
        "S x = 0 => F",
        "x + z = y + z => x = y",
        "(x < y & u = 0 | x = y + u) & (x < y & v = 0 | x = y + v) => u = v",
    ] {
        let s = parse_sequent(src, Lang::L).unwrap();
        let out = force_sequent(&kstar, 0, &s, b).unwrap();
        println!("one-node model forces [{src}]: {}", out.verdict);
        if let Some(e) = out.evidence {
            let pairs: Vec<String> =
                e.assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("  counterexample at {}: {}", e.node, pairs.join(", "));
        }
    }

    let two = add_root(&kstar, false);
    let s = parse_sequent("T => (E x. x + y = x + z -> y = z)", Lang::L).unwrap();
    let out = force_sequent(&two, 0, &s, b).unwrap();
    println!("\ntwo-node model forces the conditional cancellation: {}", out.verdict);
    if let Some(e) = out.evidence {
        let pairs: Vec<String> =
            e.assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("  refuted at {} with {}", e.node, pairs.join(", "));
    }
}
