//! Semantic validation of the translation passes against the independent
//! naive evaluator over ℕ.

mod common;

use bakit::syntax::is_positive;
use bakit::transforms::*;
use common::{
    naive_eval, naive_eval_lc, random_delta0, random_lc_sentence, random_positive, random_qf,
    rng, Env,
};

/// Assignments with values drawn from 0..=20 over the fixed variable set.
fn sample_envs(seed: u64, count: usize) -> Vec<Env> {
    use rand::Rng;
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let mut env = Env::new();
            for v in ["x", "y", "z"] {
                env.insert(v.to_string(), r.gen_range(0..=20));
            }
            env
        })
        .collect()
}

#[test]
fn open_positivization_matches_truth_and_negation() {
    let mut r = rng(201);
    let envs = sample_envs(202, 12);
    for i in 0..500 {
        let a = random_qf(&mut r, 3, &["x", "y", "z"]);
        let pos = open_positive(&a).unwrap();
        let neg = open_negation(&a).unwrap();
        assert!(is_positive(&pos) && is_positive(&neg), "#{i}");
        for env in &envs {
            let mut env = env.clone();
            let truth = naive_eval(&a, &mut env, 0);
            assert_eq!(
                naive_eval(&pos, &mut env, 0),
                truth,
                "#{i}: {a} vs positive equivalent {pos}"
            );
            assert_eq!(
                naive_eval(&neg, &mut env, 0),
                !truth,
                "#{i}: {a} vs positive negation {neg}"
            );
        }
    }
}

#[test]
fn bounded_negation_matches_classical_negation() {
    let mut r = rng(203);
    for i in 0..500 {
        let a = random_delta0(&mut r, 3, 8, &[]);
        let neg = bounded_negation(&a).unwrap();
        let mut env = Env::new();
        assert_eq!(
            naive_eval(&neg, &mut env, 8),
            !naive_eval(&a, &mut env, 8),
            "#{i}: {a}"
        );
    }
}

#[test]
fn positive_part_monotone_truth() {
    // whenever bounded evaluation confirms a sentence, it confirms the
    // positive part as well
    let mut r = rng(204);
    let mut confirmed = 0;
    for _ in 0..500 {
        let a = random_delta0(&mut r, 3, 8, &[]);
        let mut env = Env::new();
        if naive_eval(&a, &mut env, 8) {
            confirmed += 1;
            assert!(
                naive_eval(&positive_part(&a), &mut env, 8),
                "positive part lost truth of {a}"
            );
        }
    }
    assert!(confirmed > 100, "{confirmed}");
}

#[test]
fn star_translation_preserves_truth() {
    let mut r = rng(205);
    for i in 0..300 {
        let a = random_lc_sentence(&mut r, 10);
        let translated = star_translate(&a);
        assert!(!translated.uses_monus(), "#{i}");
        let mut env = Env::new();
        // introduced witnesses are bounded by the replaced term's value,
        // which stays below the cap on this corpus
        assert_eq!(
            naive_eval_lc(&translated, &mut env, 64),
            naive_eval_lc(&a, &mut env, 64),
            "#{i}: {a} vs {translated}"
        );
    }
}

#[test]
fn star_translation_single_step_table() {
    // B(t ∸ s) against its guard expansion for all small arguments
    let a = bakit::syntax::parse_formula("x -. y = 0", bakit::syntax::Lang::Lc).unwrap();
    let out = star_translate(&a);
    for x in 0..=10u64 {
        for y in 0..=10u64 {
            let mut env = Env::new();
            env.insert("x".into(), x);
            env.insert("y".into(), y);
            assert_eq!(
                naive_eval_lc(&out, &mut env.clone(), 32),
                x.saturating_sub(y) == 0,
                "({x},{y})"
            );
        }
    }
}

fn totalizer_table(graph: &str, inputs: &[&str], expected: impl Fn(&[u64]) -> u64) {
    let input = TotalizerInput {
        graph: bakit::syntax::parse_formula(graph, bakit::syntax::Lang::L).unwrap(),
        inputs: inputs.iter().map(|s| s.to_string()).collect(),
        output: "y".into(),
        witnesses: vec!["z".into()],
    };
    let d = sigma1_totalizer(&input).unwrap();
    let mut args = vec![0u64; inputs.len()];
    let sizes = vec![9u64; inputs.len()];
    let total: u64 = sizes.iter().product();
    for code in 0..total {
        let mut c = code;
        for (slot, _) in args.iter_mut().zip(&sizes) {
            *slot = c % 9;
            c /= 9;
        }
        let want_out = expected(&args);
        for y in 0..=8u64 {
            let mut env = Env::new();
            for (name, value) in inputs.iter().zip(&args) {
                env.insert(name.to_string(), *value);
            }
            env.insert("y".into(), y);
            // the only unbounded quantifier is the padding witness, and
            // the padding conjunct accepts 0
            let got = naive_eval(&d, &mut env, 8);
            assert_eq!(got, want_out == y, "args {args:?}, y={y}");
        }
    }
}

#[test]
fn totalizer_defines_cutoff_subtraction() {
    totalizer_table(
        "((x1 < x2 & y = 0) | x1 = x2 + y) & z = z",
        &["x1", "x2"],
        |a| a[0].saturating_sub(a[1]),
    );
}

#[test]
fn totalizer_defines_identity() {
    totalizer_table("y = x & z = z", &["x"], |a| a[0]);
}

#[test]
fn positive_part_of_semi_positive_collapses() {
    let mut r = rng(206);
    for _ in 0..500 {
        let a = common::random_formula(&mut r, 3);
        assert_eq!(
            positive_part(&semi_positive_part(&a)),
            positive_part(&a),
            "{a}"
        );
        assert_eq!(positive_part(&positive_part(&a)), positive_part(&a));
    }
}

#[test]
fn positive_formulas_spill_to_nonstandard_model() {
    // positive sentences true in ℕ stay true in the extension with the
    // absorbing point
    use bakit::semantics::{assignment, sat, EvalBound, StructureSpec, Truth3};
    let mut r = rng(207);
    let mut used = 0;
    for _ in 0..400 {
        let a = random_positive(&mut r, 3, &["x"]);
        let n = StructureSpec::std_n();
        for val in [0u64, 3, 17] {
            let asg = assignment(&[("x", bakit::semantics::ElementId::Nat(val))]);
            let truth = sat(&n, &a, &asg, EvalBound::new(32)).unwrap();
            if truth == Truth3::True {
                used += 1;
                let star = sat(
                    &StructureSpec::NStar,
                    &a,
                    &asg,
                    EvalBound::with_inf(32),
                )
                .unwrap();
                assert_eq!(star, Truth3::True, "{a} at x={val}");
            }
        }
        if used >= 100 {
            break;
        }
    }
    assert!(used >= 100, "{used}");
}
