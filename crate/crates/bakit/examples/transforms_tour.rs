//! Tour of the formula translations: positive and semi-positive parts,
//! the open positivization pair, bounded negation, and elimination of
//! cut-off subtraction.
//!
//! Run with: cargo run --example transforms_tour

use bakit::syntax::{parse_formula, Lang};
use bakit::transforms::*;

fn main() {
    let a = parse_formula("![x](x = 0 -> E y. y = x) & E z. z = 0", Lang::L).unwrap();
    println!("A                  = {a}");
    println!("positive part      = {}", positive_part(&a));
    println!("semi-positive part = {}", semi_positive_part(&a));
    println!();

    let qf = parse_formula("(x = 0 -> y < z)", Lang::L).unwrap();
    println!("quantifier-free    = {qf}");
    println!("positive equiv     = {}", open_positive(&qf).unwrap());
    println!("positive negation  = {}", open_negation(&qf).unwrap());
    println!();

    let d0 = parse_formula("E i. i < SSSS0 & i + i = x", Lang::L).unwrap();
    println!("bounded sentence   = {d0}");
    println!("bounded negation   = {}", bounded_negation(&d0).unwrap());
    println!();

    let lc = parse_formula("(x -. y) -. y = 0", Lang::Lc).unwrap();
    println!("with cut-off       = {lc}");
    println!("translated         = {}", star_translate(&lc));
}
