//! Pretty printer; inverse of the parser up to whitespace.

use super::{Formula, Sequent, Term};

fn term_prec(t: &Term) -> u8 {
    // 3 = atom/S, 2 = *, 1 = +, 0 = -.
    match t {
        Term::Var(_) | Term::Zero | Term::Succ(_) => 3,
        Term::Mul(_, _) => 2,
        Term::Add(_, _) => 1,
        Term::Monus(_, _) => 0,
    }
}

fn push_term(t: &Term, min: u8, out: &mut String) {
    let prec = term_prec(t);
    let parens = prec < min;
    if parens {
        out.push('(');
    }
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Zero => out.push('0'),
        Term::Succ(inner) => {
            out.push('S');
            // S binds tightest; anything compound below it needs parens.
            if term_prec(inner) < 3 {
                out.push('(');
                push_term(inner, 0, out);
                out.push(')');
            } else {
                push_term(inner, 3, out);
            }
        }
        Term::Mul(l, r) => {
            push_term(l, 2, out);
            out.push_str(" * ");
            push_term(r, 3, out);
        }
        Term::Add(l, r) => {
            push_term(l, 1, out);
            out.push_str(" + ");
            push_term(r, 2, out);
        }
        Term::Monus(l, r) => {
            push_term(l, 0, out);
            out.push_str(" -. ");
            push_term(r, 1, out);
        }
    }
    if parens {
        out.push(')');
    }
}

pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    push_term(t, 0, &mut out);
    out
}

fn formula_prec(f: &Formula) -> u8 {
    // 3 = atom/block/parenthesized, 2 = &, 1 = |, 0 = E binder
    match f {
        Formula::Exists(_, _) => 0,
        Formula::Or(_, _) => 1,
        Formula::And(_, _) => 2,
        _ => 3,
    }
}

fn push_formula(f: &Formula, min: u8, out: &mut String) {
    let prec = formula_prec(f);
    let parens = prec < min;
    if parens {
        out.push('(');
    }
    match f {
        Formula::Top => out.push('T'),
        Formula::Bot => out.push('F'),
        Formula::Eq(l, r) => {
            push_term(l, 0, out);
            out.push_str(" = ");
            push_term(r, 0, out);
        }
        Formula::Lt(l, r) => {
            push_term(l, 0, out);
            out.push_str(" < ");
            push_term(r, 0, out);
        }
        Formula::And(l, r) => {
            push_formula(l, 2, out);
            out.push_str(" & ");
            push_formula(r, 3, out);
        }
        Formula::Or(l, r) => {
            push_formula(l, 1, out);
            out.push_str(" | ");
            push_formula(r, 2, out);
        }
        Formula::Exists(v, body) => {
            out.push_str("E ");
            out.push_str(v);
            out.push_str(". ");
            push_formula(body, 0, out);
        }
        Formula::Block(vars, ante, cons) => {
            if vars.is_empty() {
                out.push('(');
            } else {
                out.push_str("![");
                out.push_str(&vars.join(","));
                out.push_str("](");
            }
            push_formula(ante, 0, out);
            out.push_str(" -> ");
            push_formula(cons, 0, out);
            out.push(')');
        }
    }
    if parens {
        out.push(')');
    }
}

pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    push_formula(f, 0, &mut out);
    out
}

pub fn print_sequent(s: &Sequent) -> String {
    format!("{} => {}", print_formula(&s.ante), print_formula(&s.cons))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_term, Lang, Term};

    #[test]
    fn terms_round_trip() {
        for s in [
            "x + y * z -. w",
            "S(x + y)",
            "SSS0",
            "(x -. y) * z",
            "x * (y + z)",
            "x + (y + z)",
            "(x + y) + z",
        ] {
            let t = parse_term(s, Lang::Lc).unwrap();
            assert_eq!(parse_term(&print_term(&t), Lang::Lc).unwrap(), t, "{s}");
        }
    }

    #[test]
    fn formulas_round_trip() {
        for s in [
            "T",
            "(x = 0 -> F)",
            "![x,y](x = y -> y = x)",
            "E x. x = 0 | x = S0",
            "(E x. x = 0) | x = S0",
            "x = 0 & (y = 0 | z = 0)",
            "![x](T -> (x = 0 -> F))",
        ] {
            let f = parse_formula(s, Lang::L).unwrap();
            assert_eq!(
                parse_formula(&print_formula(&f), Lang::L).unwrap(),
                f,
                "{s}"
            );
        }
    }

    #[test]
    fn succ_of_compound_parenthesized() {
        let t = Term::succ(Term::add(Term::var("x"), Term::Zero));
        assert_eq!(print_term(&t), "S(x + 0)");
    }
}
