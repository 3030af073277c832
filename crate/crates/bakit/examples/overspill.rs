//! Overspill for positive formulas: whatever positive property holds of
//! every sampled natural also holds at the nonstandard point.
//!
//! Run with: cargo run --example overspill

use bakit::semantics::{overspill_check, EvalBound};
use bakit::syntax::{parse_formula, Lang};

fn main() {
    let samples = [
        "x = x",
        "(E y. x = y + y) | (E y. x = y + y + S0)",
        "x < S x",
        "E y. x = y + SSS0 | x < SSS0",
        "x < SSSSS0",
    ];
    for src in samples {
        let a = parse_formula(src, Lang::L).unwrap();
        let report = overspill_check(&a, &"x".to_string(), 64, EvalBound::new(160)).unwrap();
        println!("{src}");
        println!("  sampled 0..=64: {:?}", report.outcome);
    }
}
