//! Proof-level positivization: take the bundled conditional-cancellation
//! derivation (which uses the induction rule and block axioms), and
//! produce checked proofs of its positive and semi-positive parts.
//!
//! Run with: cargo run --example positivize_pipeline

use bakit::ba::{check_proof, positivize_proof, semi_positivize_proof, TheoryPack};
use bakit::scenarios::fixtures::cancellation_open;

fn main() {
    let pack = TheoryPack::ba();
    let proof = cancellation_open("y", "u", "v");
    println!("input:  {}", proof.conclusion);
    println!("        {} nodes, height {}", proof.node_count(), proof.height());

    let positive = positivize_proof(&proof, &pack).unwrap();
    check_proof(&positive, &pack).unwrap();
    println!("positive part:      {}", positive.conclusion);
    println!(
        "        {} nodes, height {} (never taller), block axioms gone: {}",
        positive.node_count(),
        positive.height(),
        !positive.rules_used().iter().any(|r| r.starts_with("bqc-ax8")
            || r.starts_with("bqc-ax9")
            || r == "bqc-r19"
            || r == "ba-ax7")
    );

    let semi = semi_positivize_proof(&proof, &pack).unwrap();
    check_proof(&semi, &pack).unwrap();
    println!("semi-positive part: {}", semi.conclusion);
}
