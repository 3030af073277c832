//! Cut elimination restricted to a formula class: an arithmetic identity
//! proved through a detour cut on an implication, reduced to a proof in
//! which no implication appears anywhere.
//!
//! Run with: cargo run --example lk_cutelim

use bakit::lk::{check_lk, eliminate_cuts_outside, ClassPredicate};
use bakit::scenarios::fixtures::lk_fixtures;

fn main() {
    let cls = ClassPredicate::PositiveExistential;
    let (_, proof) = lk_fixtures()
        .into_iter()
        .find(|(name, _)| *name == "arith-via-implication-cut")
        .unwrap();
    println!("end-sequent: {}", proof.conclusion);
    println!("cut formulas before:");
    for c in proof.cut_formulas() {
        println!("  {c}   (in class: {})", cls.accepts(&c));
    }
    let out = eliminate_cuts_outside(&proof, cls).unwrap();
    check_lk(&out, cls).unwrap();
    assert_eq!(out.conclusion, proof.conclusion);
    println!("\nafter elimination ({} -> {} nodes):", proof.node_count(), out.node_count());
    for c in out.cut_formulas() {
        println!("  {c}   (in class: {})", cls.accepts(&c));
    }
    let mut clean = true;
    out.for_each_formula(&mut |f| clean &= cls.accepts(f));
    println!("every formula in the result is in the class: {clean}");
}
