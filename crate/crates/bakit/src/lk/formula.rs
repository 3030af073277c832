//! Concrete syntax for first-order formulas: the shared term grammar plus
//! `~f` for negation, `V x. f` for universal quantification, and
//! `(f -> f)` for implication. Sequent sides are comma-separated lists,
//! possibly empty: `A, B => C`.

use super::{LkFormula, LkSequent};
use crate::syntax::{parse_term, print_term, Lang, ParseError};

pub fn print_lk_formula(f: &LkFormula) -> String {
    let mut out = String::new();
    push(f, 0, &mut out);
    out
}

// 4 = atom, 3 = ~, 2 = &, 1 = |, 0 = binders
fn prec(f: &LkFormula) -> u8 {
    match f {
        LkFormula::Exists(_, _) | LkFormula::Forall(_, _) => 0,
        LkFormula::Or(_, _) => 1,
        LkFormula::And(_, _) => 2,
        LkFormula::Neg(_) => 3,
        _ => 4,
    }
}

fn push(f: &LkFormula, min: u8, out: &mut String) {
    let parens = prec(f) < min;
    if parens {
        out.push('(');
    }
    match f {
        LkFormula::Top => out.push('T'),
        LkFormula::Bot => out.push('F'),
        LkFormula::Eq(l, r) => {
            out.push_str(&print_term(l));
            out.push_str(" = ");
            out.push_str(&print_term(r));
        }
        LkFormula::Lt(l, r) => {
            out.push_str(&print_term(l));
            out.push_str(" < ");
            out.push_str(&print_term(r));
        }
        LkFormula::And(l, r) => {
            push(l, 2, out);
            out.push_str(" & ");
            push(r, 3, out);
        }
        LkFormula::Or(l, r) => {
            push(l, 1, out);
            out.push_str(" | ");
            push(r, 2, out);
        }
        LkFormula::Neg(inner) => {
            out.push('~');
            push(inner, 3, out);
        }
        LkFormula::Imp(l, r) => {
            out.push('(');
            push(l, 0, out);
            out.push_str(" -> ");
            push(r, 0, out);
            out.push(')');
        }
        LkFormula::Exists(x, body) => {
            out.push_str("E ");
            out.push_str(x);
            out.push_str(". ");
            push(body, 0, out);
        }
        LkFormula::Forall(x, body) => {
            out.push_str("V ");
            out.push_str(x);
            out.push_str(". ");
            push(body, 0, out);
        }
    }
    if parens {
        out.push(')');
    }
}

pub fn print_lk_sequent(s: &LkSequent) -> String {
    let side = |fs: &[LkFormula]| {
        fs.iter()
            .map(print_lk_formula)
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("{} => {}", side(&s.ante), side(&s.cons))
}

struct P<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> P<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .text
            .as_bytes()
            .get(self.pos)
            .map(|b| b.is_ascii_whitespace())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let mut len = 0;
        for (i, c) in rest.char_indices() {
            if i == 0 {
                if !c.is_ascii_lowercase() {
                    break;
                }
            } else if !(c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' || c == '\'') {
                break;
            }
            len = i + c.len_utf8();
        }
        if len == 0 {
            return Err(self.err("expected identifier"));
        }
        let name = rest[..len].to_string();
        self.pos += len;
        Ok(name)
    }

    /// Scans a maximal term slice (no formula-level operators at depth 0)
    /// and hands it to the shared term parser.
    fn term(&mut self) -> Result<crate::syntax::Term, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut depth = 0usize;
        let mut i = self.pos;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                '=' | '<' | '&' | '|' | ',' | '~' if depth == 0 => break,
                // '-.' belongs to terms; '->' does not
                '-' if bytes.get(i + 1) == Some(&b'>') && depth == 0 => break,
                _ => {}
            }
            i += 1;
        }
        let slice = self.text[start..i].trim_end();
        let t = parse_term(slice, Lang::Lc).map_err(|e| ParseError {
            pos: start + e.pos,
            msg: e.msg,
        })?;
        self.pos = start + slice.len();
        Ok(t)
    }

    fn formula(&mut self) -> Result<LkFormula, ParseError> {
        let mut f = self.conj()?;
        while {
            self.skip_ws();
            self.text[self.pos..].starts_with('|')
        } {
            self.pos += 1;
            let r = self.conj()?;
            f = LkFormula::or(f, r);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<LkFormula, ParseError> {
        let mut f = self.unit()?;
        while {
            self.skip_ws();
            self.text[self.pos..].starts_with('&')
        } {
            self.pos += 1;
            let r = self.unit()?;
            f = LkFormula::and(f, r);
        }
        Ok(f)
    }

    fn unit(&mut self) -> Result<LkFormula, ParseError> {
        self.skip_ws();
        if self.eat('~') {
            return Ok(LkFormula::neg(self.unit()?));
        }
        if self.eat_str("E ") || self.eat_str("E\t") {
            let x = self.ident()?;
            if !self.eat('.') {
                return Err(self.err("expected '.' after binder"));
            }
            return Ok(LkFormula::Exists(x, Box::new(self.formula()?)));
        }
        if self.eat_str("V ") || self.eat_str("V\t") {
            let x = self.ident()?;
            if !self.eat('.') {
                return Err(self.err("expected '.' after binder"));
            }
            return Ok(LkFormula::Forall(x, Box::new(self.formula()?)));
        }
        let rest = &self.text[self.pos..];
        if rest.starts_with('T')
            && !rest[1..]
                .chars()
                .next()
                .map(|c| c.is_ascii_alphanumeric())
                .unwrap_or(false)
        {
            self.pos += 1;
            return Ok(LkFormula::Top);
        }
        if rest.starts_with('F')
            && !rest[1..]
                .chars()
                .next()
                .map(|c| c.is_ascii_alphanumeric())
                .unwrap_or(false)
        {
            self.pos += 1;
            return Ok(LkFormula::Bot);
        }
        if self.peek() == Some('(') {
            // formula group, implication, or parenthesized term
            let save = self.pos;
            self.pos += 1;
            let attempt = (|| -> Result<LkFormula, ParseError> {
                let f = self.formula()?;
                if self.eat_str("->") {
                    let r = self.formula()?;
                    if !self.eat(')') {
                        return Err(self.err("expected ')'"));
                    }
                    Ok(LkFormula::imp(f, r))
                } else if self.eat(')') {
                    Ok(f)
                } else {
                    Err(self.err("expected ')'"))
                }
            })();
            match attempt {
                Ok(f) => return Ok(f),
                Err(_) => self.pos = save,
            }
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<LkFormula, ParseError> {
        let l = self.term()?;
        self.skip_ws();
        if self.eat('=') {
            let r = self.term()?;
            Ok(LkFormula::Eq(l, r))
        } else if self.eat('<') {
            let r = self.term()?;
            Ok(LkFormula::Lt(l, r))
        } else {
            Err(self.err("expected '=' or '<'"))
        }
    }
}

pub fn parse_lk_formula(text: &str) -> Result<LkFormula, ParseError> {
    let mut p = P { text, pos: 0 };
    let f = p.formula()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

/// Splits a sequent side on top-level commas (respecting parentheses).
fn split_side(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
        .into_iter()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

pub fn parse_lk_sequent(text: &str) -> Result<LkSequent, ParseError> {
    let idx = text.find("=>").ok_or(ParseError {
        pos: 0,
        msg: "expected '=>'".into(),
    })?;
    let (lhs, rhs) = (&text[..idx], &text[idx + 2..]);
    let parse_side = |side: &str, offset: usize| -> Result<Vec<LkFormula>, ParseError> {
        split_side(side)
            .into_iter()
            .map(|s| {
                parse_lk_formula(s).map_err(|e| ParseError {
                    pos: offset + e.pos,
                    msg: e.msg,
                })
            })
            .collect()
    };
    Ok(LkSequent {
        ante: parse_side(lhs, 0)?,
        cons: parse_side(rhs, idx + 2)?,
    })
}
