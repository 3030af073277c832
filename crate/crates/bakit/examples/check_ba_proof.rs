//! Build a derivation with the proof combinators, serialize it to the
//! JSON proof format, read it back, and check it.
//!
//! Run with: cargo run --example check_ba_proof

use bakit::ba::{builder, check_proof, proof_from_json, proof_to_json, TheoryPack};
use bakit::syntax::{Lang, Term};

fn main() {
    // ⊤ ⇒ (S x = S y → x = y): injectivity of successor as an implication
    let proof = builder::lift_imp(builder::ba_ax2(Term::var("x"), Term::var("y")));
    println!("conclusion: {}", proof.conclusion);
    println!("nodes: {}, height: {}", proof.node_count(), proof.height());

    let pack = TheoryPack::ba();
    check_proof(&proof, &pack).expect("checks");
    println!("checker: ok");

    let text = proof_to_json(&proof);
    println!("\nproof file:\n{text}");
    let back = proof_from_json(&text, Lang::L).expect("parses");
    assert_eq!(back, proof);
    check_proof(&back, &pack).expect("still checks");
    println!("round trip: ok");
}
