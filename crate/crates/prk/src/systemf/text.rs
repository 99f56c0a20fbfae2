//! Concrete syntax for System F types and terms.
//!
//! Types: `a`, `T -> T`, `forall a. T`, `Pos<T, T>`, `Neg<T, T>`, and the
//! sugar `0`, `1`, `T * T`, `T + T`. Terms: `x`, `fun (x : T) -> t`, `t s`,
//! `tfun a -> t`, `t [T]`, and `triv`.

use std::fmt;

use thiserror::Error;

use super::encode;
use super::fterm::FTerm;
use super::ftype::FType;
use crate::syntax::fresh_name;

enum Sugar<'a> {
    Zero,
    One,
    Times(FType, FType),
    Plus(FType, FType),
    None(&'a FType),
}

/// Recognize an encoded type; components are returned outside the binder.
fn sugar(t: &FType) -> Sugar<'_> {
    let FType::Forall(_, body) = t else { return Sugar::None(t) };
    let r = FType::Bound(0);
    let lower = |a: &FType| (!a.mentions_index(0)).then(|| a.shift(-1, 0));
    match &**body {
        FType::Bound(0) => return Sugar::Zero,
        FType::Arrow(a, b) if **a == r && **b == r => return Sugar::One,
        FType::Arrow(f, res) if **res == r => {
            if let FType::Arrow(a, rest) = &**f {
                if let FType::Arrow(b, r2) = &**rest {
                    if **r2 == r {
                        if let (Some(a), Some(b)) = (lower(a), lower(b)) {
                            return Sugar::Times(a, b);
                        }
                    }
                }
            }
        }
        FType::Arrow(f, rest) => {
            if let (FType::Arrow(a, r1), FType::Arrow(g, r3)) = (&**f, &**rest) {
                if let FType::Arrow(b, r2) = &**g {
                    if **r1 == r && **r2 == r && **r3 == r {
                        if let (Some(a), Some(b)) = (lower(a), lower(b)) {
                            return Sugar::Plus(a, b);
                        }
                    }
                }
            }
        }
        _ => {}
    }
    Sugar::None(t)
}

/// Printer state: names of enclosing type and term binders, innermost last.
struct Names {
    types: Vec<String>,
    terms: Vec<String>,
    free: Vec<String>,
}

impl Names {
    fn taken(&self, n: &str) -> bool {
        self.types.iter().chain(&self.terms).chain(&self.free).any(|m| m == n)
    }

    fn fresh(&self, hint: &str) -> String {
        let base = if hint.is_empty() || hint.starts_with('%') { "v" } else { hint };
        let base: String = base.chars().filter(|c| c.is_alphanumeric() || *c == '_').collect();
        let base =
            if base.is_empty() || !base.starts_with(|c: char| c.is_alphabetic()) { "v".to_string() } else { base };
        fresh_name(&base, &|n| self.taken(n) || is_keyword(n))
    }
}

fn is_keyword(n: &str) -> bool {
    matches!(n, "fun" | "tfun" | "forall" | "triv" | "Pos" | "Neg")
}

fn write_type(f: &mut String, t: &FType, names: &mut Names, prec: u8) {
    // prec: 0 anywhere, 1 left of an arrow, 2 operand of * or +
    match sugar(t) {
        Sugar::Zero => f.push('0'),
        Sugar::One => f.push('1'),
        Sugar::Times(a, b) | Sugar::Plus(a, b) => {
            let op = if matches!(sugar(t), Sugar::Times(..)) { " * " } else { " + " };
            if prec >= 2 {
                f.push('(');
            }
            write_type(f, &a, names, 2);
            f.push_str(op);
            write_type(f, &b, names, 2);
            if prec >= 2 {
                f.push(')');
            }
        }
        Sugar::None(t) => match t {
            FType::Var(x) => f.push_str(x),
            FType::Bound(i) => match names.types.len().checked_sub(i + 1) {
                Some(k) => f.push_str(&names.types[k].clone()),
                None => f.push_str(&format!("#{i}")),
            },
            FType::Pos(a, b) | FType::Neg(a, b) => {
                f.push_str(if matches!(t, FType::Pos(..)) { "Pos<" } else { "Neg<" });
                write_type(f, a, names, 0);
                f.push_str(", ");
                write_type(f, b, names, 0);
                f.push('>');
            }
            FType::Arrow(a, b) => {
                if prec >= 1 {
                    f.push('(');
                }
                write_type(f, a, names, 1);
                f.push_str(" -> ");
                write_type(f, b, names, 0);
                if prec >= 1 {
                    f.push(')');
                }
            }
            FType::Forall(h, body) => {
                if prec >= 1 {
                    f.push('(');
                }
                let x = names.fresh(&h.0);
                f.push_str(&format!("forall {x}. "));
                names.types.push(x);
                write_type(f, body, names, 0);
                names.types.pop();
                if prec >= 1 {
                    f.push(')');
                }
            }
        },
    }
}

fn write_term(f: &mut String, t: &FTerm, names: &mut Names, prec: u8) {
    // prec: 0 anywhere, 1 function position, 2 argument position
    if *t == encode::triv() {
        f.push_str("triv");
        return;
    }
    match t {
        FTerm::Var(x) => f.push_str(x),
        FTerm::Bound(i) => match names.terms.len().checked_sub(i + 1) {
            Some(k) => f.push_str(&names.terms[k].clone()),
            None => f.push_str(&format!("#{i}")),
        },
        FTerm::Lam(h, ty, body) => {
            if prec >= 1 {
                f.push('(');
            }
            let x = names.fresh(&h.0);
            f.push_str(&format!("fun ({x} : "));
            write_type(f, ty, names, 0);
            f.push_str(") -> ");
            names.terms.push(x);
            write_term(f, body, names, 0);
            names.terms.pop();
            if prec >= 1 {
                f.push(')');
            }
        }
        FTerm::TyLam(h, body) => {
            if prec >= 1 {
                f.push('(');
            }
            let a = names.fresh(&h.0);
            f.push_str(&format!("tfun {a} -> "));
            names.types.push(a);
            write_term(f, body, names, 0);
            names.types.pop();
            if prec >= 1 {
                f.push(')');
            }
        }
        FTerm::App(g, a) => {
            if prec >= 2 {
                f.push('(');
            }
            write_term(f, g, names, 1);
            f.push(' ');
            write_term(f, a, names, 2);
            if prec >= 2 {
                f.push(')');
            }
        }
        FTerm::TyApp(g, ty) => {
            if prec >= 2 {
                f.push('(');
            }
            write_term(f, g, names, 1);
            f.push_str(" [");
            write_type(f, ty, names, 0);
            f.push(']');
            if prec >= 2 {
                f.push(')');
            }
        }
    }
}

impl fmt::Display for FType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names =
            Names { types: vec![], terms: vec![], free: self.free_vars().iter().map(|n| n.to_string()).collect() };
        let mut s = String::new();
        write_type(&mut s, self, &mut names, 0);
        f.write_str(&s)
    }
}

impl fmt::Display for FTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free = self.free_vars().iter().chain(self.free_type_vars().iter()).map(|n| n.to_string()).collect();
        let mut names = Names { types: vec![], terms: vec![], free };
        let mut s = String::new();
        write_term(&mut s, self, &mut names, 0);
        f.write_str(&s)
    }
}

impl FType {
    /// A binder-name-free rendering, equal for α-equivalent types.
    pub fn debruijn(&self) -> String {
        match self {
            FType::Var(x) => x.to_string(),
            FType::Bound(i) => format!("#{i}"),
            FType::Pos(a, b) => format!("Pos<{},{}>", a.debruijn(), b.debruijn()),
            FType::Neg(a, b) => format!("Neg<{},{}>", a.debruijn(), b.debruijn()),
            FType::Arrow(a, b) => format!("({}->{})", a.debruijn(), b.debruijn()),
            FType::Forall(_, b) => format!("(forall.{})", b.debruijn()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("System F syntax error at offset {offset}: {message}")]
pub struct FParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(u32),
    Sym(&'static str),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, FParseError> {
    const SYMS: [&str; 11] = ["->", "(", ")", "[", "]", "<", ">", ",", ".", ":", "*"];
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().expect("in bounds");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        if c == '+' {
            out.push((i, Tok::Sym("+")));
            i += 1;
            continue;
        }
        if let Some(s) = SYMS.iter().find(|s| src[i..].starts_with(**s)) {
            out.push((i, Tok::Sym(s)));
            i += s.len();
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse().map_err(|_| FParseError { offset: start, message: "bad number".into() })?;
            out.push((start, Tok::Num(n)));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() {
                let d = src[i..].chars().next().expect("in bounds");
                if d.is_alphanumeric() || d == '_' || d == '\'' {
                    i += d.len_utf8();
                } else {
                    break;
                }
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
            continue;
        }
        return Err(FParseError { offset: i, message: format!("unexpected character `{c}`") });
    }
    Ok(out)
}

struct FParser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl FParser {
    fn new(src: &str) -> Result<FParser, FParseError> {
        Ok(FParser { toks: lex(src)?, pos: 0, end: src.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, FParseError> {
        Err(FParseError { offset: self.offset(), message: message.into() })
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(t)) if *t == s)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(t)) if t == w)
    }

    fn expect(&mut self, s: &str) -> Result<(), FParseError> {
        if self.is_sym(s) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    fn ident(&mut self) -> Result<String, FParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) if !is_keyword(x) => {
                let x = x.clone();
                self.pos += 1;
                Ok(x)
            }
            _ => self.err("expected an identifier"),
        }
    }

    fn ty(&mut self) -> Result<FType, FParseError> {
        if self.is_word("forall") {
            self.pos += 1;
            let a = self.ident()?;
            self.expect(".")?;
            let body = self.ty()?;
            return Ok(FType::forall(&a, body));
        }
        let left = self.sum()?;
        if self.is_sym("->") {
            self.pos += 1;
            let right = self.ty()?;
            return Ok(FType::arrow(left, right));
        }
        Ok(left)
    }

    fn sum(&mut self) -> Result<FType, FParseError> {
        let mut left = self.product()?;
        while self.is_sym("+") {
            self.pos += 1;
            let right = self.product()?;
            left = encode::plus(&left, &right);
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<FType, FParseError> {
        let mut left = self.ty_atom()?;
        while self.is_sym("*") {
            self.pos += 1;
            let right = self.ty_atom()?;
            left = encode::times(&left, &right);
        }
        Ok(left)
    }

    fn ty_atom(&mut self) -> Result<FType, FParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(0)) => {
                self.pos += 1;
                Ok(encode::zero())
            }
            Some(Tok::Num(1)) => {
                self.pos += 1;
                Ok(encode::one())
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let t = self.ty()?;
                self.expect(")")?;
                Ok(t)
            }
            Some(Tok::Ident(w)) if w == "Pos" || w == "Neg" => {
                self.pos += 1;
                self.expect("<")?;
                let a = self.ty()?;
                self.expect(",")?;
                let b = self.ty()?;
                self.expect(">")?;
                Ok(if w == "Pos" { FType::pos(a, b) } else { FType::neg(a, b) })
            }
            Some(Tok::Ident(_)) => Ok(FType::var(&self.ident()?)),
            _ => self.err("expected a type"),
        }
    }

    fn term(&mut self) -> Result<FTerm, FParseError> {
        if self.is_word("fun") {
            self.pos += 1;
            self.expect("(")?;
            let x = self.ident()?;
            self.expect(":")?;
            let ty = self.ty()?;
            self.expect(")")?;
            self.expect("->")?;
            let body = self.term()?;
            return Ok(FTerm::lam(&x, ty, body));
        }
        if self.is_word("tfun") {
            self.pos += 1;
            let a = self.ident()?;
            self.expect("->")?;
            let body = self.term()?;
            return Ok(FTerm::tylam(&a, body));
        }
        let mut head = self.term_atom()?;
        loop {
            if self.is_sym("[") {
                self.pos += 1;
                let ty = self.ty()?;
                self.expect("]")?;
                head = FTerm::tyapp(head, ty);
            } else if self.is_word("fun") || self.is_word("tfun") {
                let arg = self.term()?;
                return Ok(FTerm::app(head, arg));
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym("("))) {
                let arg = self.term_atom()?;
                head = FTerm::app(head, arg);
            } else {
                return Ok(head);
            }
        }
    }

    fn term_atom(&mut self) -> Result<FTerm, FParseError> {
        if self.is_word("triv") {
            self.pos += 1;
            return Ok(encode::triv());
        }
        if self.is_sym("(") {
            self.pos += 1;
            let t = self.term()?;
            self.expect(")")?;
            return Ok(t);
        }
        Ok(FTerm::var(&self.ident()?))
    }

    fn finish<T>(&self, v: T) -> Result<T, FParseError> {
        if self.pos == self.toks.len() {
            Ok(v)
        } else {
            self.err("unexpected trailing input")
        }
    }
}

pub fn parse_ftype(src: &str) -> Result<FType, FParseError> {
    let mut p = FParser::new(src)?;
    let t = p.ty()?;
    p.finish(t)
}

pub fn parse_fterm(src: &str) -> Result<FTerm, FParseError> {
    let mut p = FParser::new(src)?;
    let t = p.term()?;
    p.finish(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sugar_round_trips() {
        for src in ["0", "1", "a * b", "a + b", "(a * b) + c", "Pos<a, a -> 0>", "forall x. x -> a", "(a -> b) -> c"] {
            let t = parse_ftype(src).unwrap();
            assert_eq!(t.to_string(), src);
            assert_eq!(parse_ftype(&t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn terms_round_trip() {
        for src in
            ["fun (x : a) -> x", "tfun b -> fun (x : b) -> f x", "f x [a] y", "f (g x)", "triv", "f (fun (x : 1) -> x)"]
        {
            let t = parse_fterm(src).unwrap();
            assert_eq!(t.to_string(), src);
        }
    }

    #[test]
    fn capture_is_avoided_in_printing() {
        let t = FTerm::lam("x", FType::var("a"), FTerm::app(FTerm::var("x"), FTerm::var("x'")));
        let t = t.substitute("x'", &FTerm::var("x"));
        let s = t.to_string();
        assert_eq!(parse_fterm(&s).unwrap(), t, "{s}");
    }
}
