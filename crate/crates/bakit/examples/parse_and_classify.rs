//! Parse formulas from the concrete grammar, print them back, and show
//! which syntactic classes they land in.
//!
//! Run with: cargo run --example parse_and_classify

use bakit::syntax::{classify, desugar_order, parse_formula, Lang};

fn main() {
    let samples = [
        "S0 = 0",
        "![x](T -> E y. x = y + y)",
        "E x. x < SSS0 & x = y",
        "(x = 0 -> F)",
        "![x](x < y -> E z. z + x = y)",
        "x < y & y < z",
    ];
    for src in samples {
        let f = parse_formula(src, Lang::L).expect("parses");
        println!("{src}");
        println!("  canonical: {f}");
        let classes: Vec<String> = classify(&f).iter().map(|c| format!("{c:?}")).collect();
        println!("  classes:   {}", classes.join(", "));
        println!("  desugared: {}", desugar_order(&f));
        println!();
    }
}
