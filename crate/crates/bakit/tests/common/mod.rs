//! Shared test support: an independent naive evaluator used as the
//! semantic oracle, and deterministic random generators for terms,
//! formulas, and proofs.
//!
//! The oracle is a plain two-valued recursive evaluator over the naturals
//! with a hard cap on quantifier ranges. It is exact for the corpora the
//! generators produce: every quantifier is either a bounded pattern whose
//! bound value stays below the cap, or a guard-shaped existential whose
//! witness is forced below a term value under the cap.

#![allow(dead_code)]

pub mod proofgen;

use bakit::syntax::{Formula, Ident, Term};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub type Env = BTreeMap<Ident, u64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Runs deeply recursive proof manipulation on a thread with a large
/// stack; eliminated proofs can be very deep.
pub fn with_big_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    std::thread::Builder::new()
        .stack_size(512 * 1024 * 1024)
        .spawn(f)
        .expect("spawn")
        .join()
        .expect("join")
}

/// Term value over ℕ with `∸` as cut-off.
pub fn eval_term_nat(t: &Term, env: &Env) -> u64 {
    match t {
        Term::Var(v) => *env.get(v).unwrap_or_else(|| panic!("unbound {v}")),
        Term::Zero => 0,
        Term::Succ(i) => eval_term_nat(i, env) + 1,
        Term::Add(l, r) => eval_term_nat(l, env) + eval_term_nat(r, env),
        Term::Mul(l, r) => eval_term_nat(l, env) * eval_term_nat(r, env),
        Term::Monus(l, r) => eval_term_nat(l, env).saturating_sub(eval_term_nat(r, env)),
    }
}

/// Naive classical truth over ℕ with every quantifier searched up to
/// `cap` (inclusive). Exact only when the formula's witnesses are known
/// to lie within the cap.
pub fn naive_eval(f: &Formula, env: &mut Env, cap: u64) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Eq(l, r) => eval_term_nat(l, env) == eval_term_nat(r, env),
        Formula::Lt(l, r) => eval_term_nat(l, env) < eval_term_nat(r, env),
        Formula::And(l, r) => naive_eval(l, env, cap) && naive_eval(r, env, cap),
        Formula::Or(l, r) => naive_eval(l, env, cap) || naive_eval(r, env, cap),
        Formula::Exists(x, body) => {
            let old = env.get(x).copied();
            // bounded pattern ∃x(x<s ∧ ...): the range is known exactly
            let hi = pattern_bound(x, body, env).unwrap_or(cap + 1);
            let mut found = false;
            for val in 0..hi {
                env.insert(x.clone(), val);
                if naive_eval(body, env, cap) {
                    found = true;
                    break;
                }
            }
            restore(env, x, old);
            found
        }
        Formula::Block(vars, ante, cons) => {
            if vars.is_empty() {
                return !naive_eval(ante, env, cap) || naive_eval(cons, env, cap);
            }
            if let [x] = vars.as_slice() {
                if let Formula::Lt(Term::Var(v), s) = ante.as_ref() {
                    if v == x && !s.vars().contains(x) {
                        let hi = eval_term_nat(s, env);
                        let old = env.get(x).copied();
                        let mut holds = true;
                        for val in 0..hi {
                            env.insert(x.clone(), val);
                            if !naive_eval(cons, env, cap) {
                                holds = false;
                                break;
                            }
                        }
                        restore(env, x, old);
                        return holds;
                    }
                }
            }
            let olds: Vec<_> = vars.iter().map(|v| env.get(v).copied()).collect();
            let n = vars.len();
            let total = (cap + 1).pow(n as u32);
            let mut holds = true;
            'outer: for code in 0..total {
                let mut c = code;
                for v in vars {
                    env.insert(v.clone(), c % (cap + 1));
                    c /= cap + 1;
                }
                if naive_eval(ante, env, cap) && !naive_eval(cons, env, cap) {
                    holds = false;
                    break 'outer;
                }
            }
            for (v, old) in vars.iter().zip(olds) {
                restore(env, v, old);
            }
            holds
        }
    }
}

fn pattern_bound(x: &str, body: &Formula, env: &Env) -> Option<u64> {
    if let Formula::And(guard, _) = body {
        if let Formula::Lt(Term::Var(v), s) = guard.as_ref() {
            if v == x && !s.vars().contains(x) {
                return Some(eval_term_nat(s, env));
            }
        }
    }
    None
}

fn restore(env: &mut Env, var: &str, old: Option<u64>) {
    match old {
        Some(v) => env.insert(var.to_string(), v),
        None => env.remove(var),
    };
}

// ---- random formula generators ----

const VARS: [&str; 4] = ["x", "y", "z", "u"];

pub fn random_term(r: &mut ChaCha8Rng, depth: usize, vars: &[&str], monus: bool) -> Term {
    if depth == 0 {
        if r.gen_bool(0.5) && !vars.is_empty() {
            Term::var(vars[r.gen_range(0..vars.len())])
        } else {
            Term::num(r.gen_range(0..4))
        }
    } else {
        match r.gen_range(0..if monus { 5 } else { 4 }) {
            0 => Term::succ(random_term(r, depth - 1, vars, monus)),
            1 => Term::add(
                random_term(r, depth - 1, vars, monus),
                random_term(r, depth - 1, vars, monus),
            ),
            2 => Term::mul(
                random_term(r, depth - 1, vars, monus),
                random_term(r, depth - 1, vars, monus),
            ),
            3 => random_term(r, 0, vars, monus),
            _ => Term::monus(
                random_term(r, depth - 1, vars, monus),
                random_term(r, depth - 1, vars, monus),
            ),
        }
    }
}

fn random_atom(r: &mut ChaCha8Rng, vars: &[&str], monus: bool) -> Formula {
    let l = random_term(r, 1, vars, monus);
    let rt = random_term(r, 1, vars, monus);
    match r.gen_range(0..4) {
        0 => Formula::Top,
        1 => Formula::Lt(l, rt),
        _ => Formula::Eq(l, rt),
    }
}

/// Arbitrary formula over the plain language (blocks and existentials
/// unconstrained); for syntax-level properties.
pub fn random_formula(r: &mut ChaCha8Rng, depth: usize) -> Formula {
    let vars: Vec<&str> = VARS.to_vec();
    random_formula_rec(r, depth, &vars)
}

fn random_formula_rec(r: &mut ChaCha8Rng, depth: usize, vars: &[&str]) -> Formula {
    if depth == 0 {
        let mut f = random_atom(r, vars, false);
        if matches!(f, Formula::Top) && r.gen_bool(0.3) {
            f = Formula::Bot;
        }
        return f;
    }
    match r.gen_range(0..6) {
        0 => Formula::and(
            random_formula_rec(r, depth - 1, vars),
            random_formula_rec(r, depth - 1, vars),
        ),
        1 => Formula::or(
            random_formula_rec(r, depth - 1, vars),
            random_formula_rec(r, depth - 1, vars),
        ),
        2 => {
            let v = VARS[r.gen_range(0..VARS.len())];
            Formula::exists(v, random_formula_rec(r, depth - 1, vars))
        }
        3 => {
            let n = r.gen_range(0..3);
            let mut pool: Vec<&str> = VARS.to_vec();
            let mut block_vars = Vec::new();
            for _ in 0..n {
                let i = r.gen_range(0..pool.len());
                block_vars.push(pool.remove(i));
            }
            Formula::block(
                &block_vars,
                random_formula_rec(r, depth - 1, vars),
                random_formula_rec(r, depth - 1, vars),
            )
        }
        _ => random_formula_rec(r, 0, vars),
    }
}

/// Quantifier-free formula (implications allowed) over the given
/// variables; atoms use linear terms so values stay small.
pub fn random_qf(r: &mut ChaCha8Rng, depth: usize, vars: &[&str]) -> Formula {
    if depth == 0 {
        return random_atom(r, vars, false);
    }
    match r.gen_range(0..4) {
        0 => Formula::and(
            random_qf(r, depth - 1, vars),
            random_qf(r, depth - 1, vars),
        ),
        1 => Formula::or(
            random_qf(r, depth - 1, vars),
            random_qf(r, depth - 1, vars),
        ),
        2 => Formula::imp(
            random_qf(r, depth - 1, vars),
            random_qf(r, depth - 1, vars),
        ),
        _ => random_atom(r, vars, false),
    }
}

/// Δ₀ formula whose bounded quantifiers use numeral bounds below
/// `numeral_bound`; with `free_vars` empty the result is a sentence whose
/// naive evaluation at any cap ≥ numeral_bound is exact.
pub fn random_delta0(
    r: &mut ChaCha8Rng,
    depth: usize,
    numeral_bound: u64,
    free_vars: &[&str],
) -> Formula {
    random_delta0_rec(r, depth, numeral_bound, &mut free_vars.to_vec(), 0)
}

fn random_delta0_rec(
    r: &mut ChaCha8Rng,
    depth: usize,
    numeral_bound: u64,
    scope: &mut Vec<&str>,
    binders: usize,
) -> Formula {
    if depth == 0 || binders >= 3 {
        return random_atom(r, scope, false);
    }
    match r.gen_range(0..6) {
        0 => Formula::and(
            random_delta0_rec(r, depth - 1, numeral_bound, scope, binders),
            random_delta0_rec(r, depth - 1, numeral_bound, scope, binders),
        ),
        1 => Formula::or(
            random_delta0_rec(r, depth - 1, numeral_bound, scope, binders),
            random_delta0_rec(r, depth - 1, numeral_bound, scope, binders),
        ),
        2 => Formula::imp(
            random_delta0_rec(r, depth - 1, numeral_bound, scope, binders),
            random_delta0_rec(r, depth - 1, numeral_bound, scope, binders),
        ),
        3 | 4 => {
            // bounded quantifier with a fresh bound variable
            let name: &str = ["i", "j", "k"][binders];
            let bound = Term::num(r.gen_range(1..=numeral_bound));
            scope.push(name);
            let body = random_delta0_rec(r, depth - 1, numeral_bound, scope, binders + 1);
            scope.pop();
            let guard = Formula::Lt(Term::var(name), bound);
            if r.gen_bool(0.5) {
                Formula::Exists(name.to_string(), Box::new(Formula::and(guard, body)))
            } else {
                Formula::Block(vec![name.to_string()], Box::new(guard), Box::new(body))
            }
        }
        _ => random_atom(r, scope, false),
    }
}

/// Positive formula (no blocks) with existentials whose witnesses are
/// bounded: each `∃y` body is `y < numeral ∧ …` or an equation solvable
/// below the cap.
pub fn random_positive(r: &mut ChaCha8Rng, depth: usize, vars: &[&str]) -> Formula {
    if depth == 0 {
        return random_atom(r, vars, false);
    }
    match r.gen_range(0..5) {
        0 => Formula::and(
            random_positive(r, depth - 1, vars),
            random_positive(r, depth - 1, vars),
        ),
        1 => Formula::or(
            random_positive(r, depth - 1, vars),
            random_positive(r, depth - 1, vars),
        ),
        2 | 3 => {
            let name = ["p", "q"][r.gen_range(0..2)];
            let mut inner: Vec<&str> = vars.to_vec();
            inner.push(name);
            // guard keeps the witness search bounded
            let guard = Formula::Lt(Term::var(name), Term::num(r.gen_range(1..8)));
            let body = random_positive(r, depth - 1, &inner);
            Formula::exists(name, Formula::and(guard, body))
        }
        _ => random_atom(r, vars, false),
    }
}

/// Closed extended-language sentence: Δ₀ skeleton over `∸`-terms.
pub fn random_lc_sentence(r: &mut ChaCha8Rng, numeral_bound: u64) -> Formula {
    fn rec(r: &mut ChaCha8Rng, depth: usize, numeral_bound: u64, scope: &mut Vec<&str>, binders: usize) -> Formula {
        if depth == 0 || binders >= 2 {
            let l = random_term(r, 1, scope, true);
            let rt = random_term(r, 1, scope, true);
            return if r.gen_bool(0.5) {
                Formula::Eq(l, rt)
            } else {
                Formula::Lt(l, rt)
            };
        }
        match r.gen_range(0..6) {
            0 => Formula::and(
                rec(r, depth - 1, numeral_bound, scope, binders),
                rec(r, depth - 1, numeral_bound, scope, binders),
            ),
            1 => Formula::or(
                rec(r, depth - 1, numeral_bound, scope, binders),
                rec(r, depth - 1, numeral_bound, scope, binders),
            ),
            2 => Formula::imp(
                rec(r, depth - 1, numeral_bound, scope, binders),
                rec(r, depth - 1, numeral_bound, scope, binders),
            ),
            3 | 4 => {
                let name: &str = ["i", "j"][binders];
                let bound = Term::num(r.gen_range(1..=numeral_bound));
                scope.push(name);
                let body = rec(r, depth - 1, numeral_bound, scope, binders + 1);
                scope.pop();
                let guard = Formula::Lt(Term::var(name), bound);
                if r.gen_bool(0.5) {
                    Formula::Exists(name.to_string(), Box::new(Formula::and(guard, body)))
                } else {
                    Formula::Block(vec![name.to_string()], Box::new(guard), Box::new(body))
                }
            }
            _ => rec(r, 0, numeral_bound, scope, binders),
        }
    }
    rec(r, 3, numeral_bound, &mut Vec::new(), 0)
}

/// Naive evaluation of extended-language sentences: quantifier ranges are
/// capped, sound for the star-translation corpus because introduced
/// witnesses are bounded by the replaced term's value and all original
/// quantifiers are numeral-bounded patterns.
pub fn naive_eval_lc(f: &Formula, env: &mut Env, cap: u64) -> bool {
    naive_eval(f, env, cap)
}
