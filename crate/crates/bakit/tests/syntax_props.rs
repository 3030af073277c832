//! Syntax-level properties: printer/parser round trip, substitution and
//! free variables, the classifier inclusion chain, and order desugaring.

mod common;

use bakit::syntax::*;
use common::{random_formula, random_term, rng};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn parse_print_identity_on_1000_formulas_per_language() {
    let mut r = rng(101);
    for i in 0..1000 {
        let f = random_formula(&mut r, 3);
        let printed = print_formula(&f);
        let back = parse_formula(&printed, Lang::L)
            .unwrap_or_else(|e| panic!("#{i}: {printed}: {e}"));
        assert_eq!(back, f, "#{i}: {printed}");
    }
    // extended language: terms with cut-off subtraction
    let mut r = rng(102);
    for i in 0..1000 {
        let l = random_term(&mut r, 3, &["x", "y"], true);
        let t = random_term(&mut r, 3, &["x", "y"], true);
        let f = if r.gen_bool(0.5) {
            Formula::Eq(l, t)
        } else {
            Formula::Lt(l, t)
        };
        let printed = print_formula(&f);
        let back = parse_formula(&printed, Lang::Lc)
            .unwrap_or_else(|e| panic!("#{i}: {printed}: {e}"));
        assert_eq!(back, f, "#{i}: {printed}");
    }
}

#[test]
fn substitution_free_vars_law() {
    // free_vars(A[x/t]) = (free_vars(A) \ {x}) ∪ free_vars(t) whenever
    // x is free in A and the substitution is capture-free
    let mut r = rng(103);
    let mut checked = 0;
    for _ in 0..4000 {
        let f = random_formula(&mut r, 3);
        let fv = f.free_vars();
        if !fv.contains("x") {
            continue;
        }
        let t = random_term(&mut r, 2, &["y", "z", "w"], false);
        match substitute(&f, &Substitution::single("x", t.clone())) {
            Ok(out) => {
                let mut want = fv.clone();
                want.remove("x");
                want.extend(t.vars());
                assert_eq!(out.free_vars(), want, "{f} [x/{t}]");
                checked += 1;
            }
            Err(SubstError::Capture { .. }) => {}
        }
    }
    assert!(checked > 200, "only {checked} capture-free cases");
}

#[test]
fn classifier_inclusion_chain() {
    use FormulaClass::*;
    let mut r = rng(104);
    for _ in 0..2000 {
        let f = random_formula(&mut r, 3);
        let classes = classify(&f);
        if classes.contains(&Positive) {
            assert!(classes.contains(&ExistsOnePos), "{f}");
        }
        if classes.contains(&ExistsOnePos) {
            assert!(classes.contains(&ExistsOne), "{f}");
        }
        if classes.contains(&ExistsOne) {
            assert!(classes.contains(&SigmaOne), "{f}");
        }
        if classes.contains(&Atomic) {
            assert!(classes.contains(&QuantifierFree), "{f}");
            assert!(classes.contains(&DeltaZero), "{f}");
        }
        if classes.contains(&DeltaZero) {
            assert!(classes.contains(&SigmaOne), "{f}");
        }
    }
}

#[test]
fn desugar_removes_lt_and_preserves_positivity() {
    fn has_lt(f: &Formula) -> bool {
        match f {
            Formula::Lt(_, _) => true,
            Formula::Top | Formula::Bot | Formula::Eq(_, _) => false,
            Formula::And(l, r) | Formula::Or(l, r) => has_lt(l) || has_lt(r),
            Formula::Exists(_, b) => has_lt(b),
            Formula::Block(_, a, c) => has_lt(a) || has_lt(c),
        }
    }
    let mut r = rng(105);
    for _ in 0..1000 {
        let f = random_formula(&mut r, 3);
        let out = desugar_order(&f);
        assert!(!has_lt(&out), "{f} -> {out}");
        assert_eq!(
            is_positive(&f),
            is_positive(&out),
            "positivity must be preserved: {f}"
        );
    }
}

proptest! {
    #[test]
    fn round_trip_from_arbitrary_seeds(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_formula(&mut r, 3);
        let printed = print_formula(&f);
        prop_assert_eq!(parse_formula(&printed, Lang::L).unwrap(), f);
    }

    #[test]
    fn renaming_then_substituting_avoids_capture(seed in any::<u64>()) {
        // after explicitly renaming a clashing binder, the substitution
        // that used to be rejected goes through
        let mut r = rng(seed);
        let f = random_formula(&mut r, 2);
        let sub = Substitution::single("x", Term::succ(Term::var("y")));
        if let Err(SubstError::Capture { captured, .. }) = substitute(&f, &sub) {
            let renamed = rename_bound(&f, &captured, "fresh").unwrap();
            prop_assert!(substitute(&renamed, &sub).is_ok());
        }
    }
}
