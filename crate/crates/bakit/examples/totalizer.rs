//! The totalizer construction: from a positive quantifier-free graph of a
//! function, a Σ₁ formula that provably defines the same function without
//! relying on the cancellation axiom.
//!
//! Run with: cargo run --example totalizer

use bakit::semantics::{assignment, sat_capped, ElementId, StructureSpec};
use bakit::syntax::{classify, parse_formula, Lang};
use bakit::transforms::{sigma1_totalizer, TotalizerInput};

fn main() {
    let input = TotalizerInput {
        graph: parse_formula("((x1 < x2 & y = 0) | x1 = x2 + y) & z = z", Lang::L).unwrap(),
        inputs: vec!["x1".into(), "x2".into()],
        output: "y".into(),
        witnesses: vec!["z".into()],
    };
    let d = sigma1_totalizer(&input).unwrap();
    println!("D(x1, x2, y) = {d}");
    println!("classes: {:?}\n", classify(&d));

    let n = StructureSpec::std_n();
    println!("value table (rows x1, columns x2, entry = the unique y):");
    for a in 0..=6u64 {
        let mut row = String::new();
        for b in 0..=6u64 {
            let val = (0..=12u64)
                .find(|&c| {
                    let asg = assignment(&[
                        ("x1", ElementId::Nat(a)),
                        ("x2", ElementId::Nat(b)),
                        ("y", ElementId::Nat(c)),
                    ]);
                    sat_capped(&n, &d, &asg, 8).unwrap()
                })
                .unwrap();
            row.push_str(&format!("{val:3}"));
        }
        println!("{row}");
    }
}
