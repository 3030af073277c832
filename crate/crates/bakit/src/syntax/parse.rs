//! Parser for the concrete syntax.
//!
//! Terms: `0 | <ident> | S <term> | <term> + <term> | <term> * <term> |
//! <term> -. <term>` with precedence `* > + > -.` and parentheses.
//! Atoms: `T | F | <term> = <term> | <term> < <term>`. Formulas:
//! `<atom> | <f> & <f> | <f> "|" <f> | E x. <f> | ![x,...](<f> -> <f>) |
//! (<f> -> <f>)`, where `&` binds tighter than `|` and an `E` binder
//! extends as far right as possible. Sequents: `<f> => <f>`.
//!
//! Variable identifiers are lowercase (`[a-z][a-z0-9_']*`); the uppercase
//! letters `S`, `T`, `F`, `E` are reserved, so `SS0` lexes as `S (S 0)`.

use super::{Formula, Ident, Lang, Sequent, Term};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Zero,
    Ident(Ident),
    SuccOp,
    Top,
    Bot,
    ExistsKw,
    Bang,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Plus,
    Star,
    MonusOp,
    EqOp,
    LtOp,
    Amp,
    Pipe,
    Arrow,
    SeqArrow,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0' => {
                toks.push((i, Tok::Zero));
                i += 1;
            }
            'S' => {
                toks.push((i, Tok::SuccOp));
                i += 1;
            }
            'T' => {
                toks.push((i, Tok::Top));
                i += 1;
            }
            'F' => {
                toks.push((i, Tok::Bot));
                i += 1;
            }
            'E' => {
                toks.push((i, Tok::ExistsKw));
                i += 1;
            }
            '!' => {
                toks.push((i, Tok::Bang));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '[' => {
                toks.push((i, Tok::LBracket));
                i += 1;
            }
            ']' => {
                toks.push((i, Tok::RBracket));
                i += 1;
            }
            ',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            '.' => {
                toks.push((i, Tok::Dot));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '&' => {
                toks.push((i, Tok::Amp));
                i += 1;
            }
            '|' => {
                toks.push((i, Tok::Pipe));
                i += 1;
            }
            '<' => {
                toks.push((i, Tok::LtOp));
                i += 1;
            }
            '-' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                    toks.push((i, Tok::Arrow));
                    i += 2;
                } else if i + 1 < bytes.len() && bytes[i + 1] == b'.' {
                    toks.push((i, Tok::MonusOp));
                    i += 2;
                } else {
                    return Err(ParseError {
                        pos: i,
                        msg: "expected '->' or '-.' after '-'".into(),
                    });
                }
            }
            '=' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                    toks.push((i, Tok::SeqArrow));
                    i += 2;
                } else {
                    toks.push((i, Tok::EqOp));
                    i += 1;
                }
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | '0'..='9' | '_' | '\'')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(ParseError {
                    pos: i,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    lang: Lang,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn err(&self, msg: String) -> ParseError {
        ParseError {
            pos: self.here(),
            msg,
        }
    }

    fn ident(&mut self) -> Result<Ident, ParseError> {
        match self.bump() {
            Some(Tok::Ident(name)) => Ok(name),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("expected identifier".into()))
            }
        }
    }

    // term := msum ('-.' msum)*
    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.msum()?;
        loop {
            if self.peek() == Some(&Tok::MonusOp) {
                let at = self.here();
                self.pos += 1;
                if self.lang == Lang::L {
                    return Err(ParseError {
                        pos: at,
                        msg: "operator '-.' requires language L_c".into(),
                    });
                }
                let r = self.msum()?;
                t = Term::monus(t, r);
            } else {
                break;
            }
        }
        Ok(t)
    }

    fn msum(&mut self) -> Result<Term, ParseError> {
        let mut t = self.prod()?;
        while self.eat(&Tok::Plus) {
            let r = self.prod()?;
            t = Term::add(t, r);
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut t = self.factor()?;
        while self.eat(&Tok::Star) {
            let r = self.factor()?;
            t = Term::mul(t, r);
        }
        Ok(t)
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(Tok::Zero) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Tok::Ident(_)) => Ok(Term::Var(self.ident()?)),
            Some(Tok::SuccOp) => {
                self.pos += 1;
                Ok(Term::succ(self.factor()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => Err(self.err("expected term".into())),
        }
    }

    // formula := disj ; disj := conj ('|' conj)* ; conj := unit ('&' unit)*
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conj()?;
        while self.eat(&Tok::Pipe) {
            let r = self.conj()?;
            f = Formula::or(f, r);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unit()?;
        while self.eat(&Tok::Amp) {
            let r = self.unit()?;
            f = Formula::and(f, r);
        }
        Ok(f)
    }

    fn unit(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::ExistsKw) => {
                self.pos += 1;
                let v = self.ident()?;
                self.expect(Tok::Dot, "'.' after E binder")?;
                let body = self.formula()?;
                Ok(Formula::Exists(v, Box::new(body)))
            }
            Some(Tok::Top) => {
                // Could be the formula T, never a term.
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(Tok::Bot) => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some(Tok::Bang) => {
                self.pos += 1;
                self.expect(Tok::LBracket, "'[' after '!'")?;
                let mut vars = Vec::new();
                if self.peek() != Some(&Tok::RBracket) {
                    loop {
                        let at = self.here();
                        let v = self.ident()?;
                        if vars.contains(&v) {
                            return Err(ParseError {
                                pos: at,
                                msg: format!("repeated block variable '{v}'"),
                            });
                        }
                        vars.push(v);
                        if !self.eat(&Tok::Comma) {
                            break;
                        }
                    }
                }
                self.expect(Tok::RBracket, "']'")?;
                self.expect(Tok::LParen, "'(' after block variables")?;
                let ante = self.formula()?;
                self.expect(Tok::Arrow, "'->' inside block")?;
                let cons = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Formula::Block(vars, Box::new(ante), Box::new(cons)))
            }
            Some(Tok::LParen) => {
                // Either a parenthesized formula / implication, or a
                // parenthesized term starting an atom. Try the formula
                // reading first and fall back on failure.
                let save = self.pos;
                self.pos += 1;
                let attempt = self.formula().and_then(|f| {
                    if self.eat(&Tok::Arrow) {
                        let cons = self.formula()?;
                        self.expect(Tok::RParen, "')'")?;
                        Ok(Formula::imp(f, cons))
                    } else {
                        self.expect(Tok::RParen, "')'")?;
                        Ok(f)
                    }
                });
                match attempt {
                    Ok(f) => Ok(f),
                    Err(_) => {
                        self.pos = save;
                        self.atom()
                    }
                }
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let l = self.term()?;
        match self.bump() {
            Some(Tok::EqOp) => {
                let r = self.term()?;
                Ok(Formula::Eq(l, r))
            }
            Some(Tok::LtOp) => {
                let r = self.term()?;
                Ok(Formula::Lt(l, r))
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("expected '=' or '<' after term".into()))
            }
        }
    }
}

fn run<T>(
    text: &str,
    lang: Lang,
    f: impl FnOnce(&mut Parser) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        lang,
    };
    let out = f(&mut p)?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input".into()));
    }
    Ok(out)
}

pub fn parse_term(text: &str, lang: Lang) -> Result<Term, ParseError> {
    run(text, lang, Parser::term)
}

pub fn parse_formula(text: &str, lang: Lang) -> Result<Formula, ParseError> {
    run(text, lang, Parser::formula)
}

pub fn parse_sequent(text: &str, lang: Lang) -> Result<Sequent, ParseError> {
    run(text, lang, |p| {
        let ante = p.formula()?;
        p.expect(Tok::SeqArrow, "'=>'")?;
        let cons = p.formula()?;
        Ok(Sequent { ante, cons })
    })
}
