//! Lexer and recursive-descent parser for propositions, terms, judgments and sequents.

use std::sync::Arc;

use thiserror::Error;

use super::context::Context;
use super::prop::{MProp, Mode, Name, Prop, Sign, Strength};
use super::term::{Binder, Hint, Idx, Term};

/// The falsity variable used by the classical embedding. Not accepted in user input.
pub const RESERVED_FALSITY: &str = "_bot0";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("modes cannot be nested")]
    NestedMode,
    #[error("projection index must be 1 or 2")]
    ProjectionIndex,
    #[error("injection index must be 1 or 2")]
    InjectionIndex,
    #[error("identifier `{0}` is reserved")]
    Reserved(String),
    #[error("variable `{0}` is declared twice")]
    Duplicate(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Colon,
    Dot,
    Amp,
    Bar,
    Tilde,
    Plus,
    Minus,
    Mode(Mode),
    Turnstile,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Mode(m) => format!("mode `{m}`"),
            Tok::Eof => "end of input".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Turnstile => "`|-`".into(),
        }
    }
}

#[derive(Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, kind: ParseErrorKind) -> ParseError {
    ParseError { line: pos.line, column: pos.column, kind }
}

fn lex(src: &str, allow_reserved: bool) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '^' => {
                let strength = match chars.get(i + 1) {
                    Some('s') => Strength::Strong,
                    Some('c') => Strength::Classical,
                    _ => return Err(err(pos, ParseErrorKind::Syntax("expected `s` or `c` after `^`".into()))),
                };
                let sign = match chars.get(i + 2) {
                    Some('+') => Sign::Pos,
                    Some('-') => Sign::Neg,
                    _ => return Err(err(pos, ParseErrorKind::Syntax("expected `+` or `-` in mode".into()))),
                };
                out.push((Tok::Mode(Mode { strength, sign }), pos));
                {
                    i += 3;
                    col += 3;
                };
            }
            '|' if chars.get(i + 1) == Some(&'-') => {
                out.push((Tok::Turnstile, pos));
                {
                    i += 2;
                    col += 2;
                };
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                col += i - start;
                if c == '_' && !(allow_reserved && word == RESERVED_FALSITY) {
                    let kind = if word == RESERVED_FALSITY {
                        ParseErrorKind::Reserved(word)
                    } else {
                        ParseErrorKind::Syntax(format!("identifiers must start with a letter: `{word}`"))
                    };
                    return Err(err(pos, kind));
                }
                out.push((Tok::Ident(word), pos));
            }
            _ => {
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBrack,
                    ']' => Tok::RBrack,
                    ',' => Tok::Comma,
                    ':' => Tok::Colon,
                    '.' => Tok::Dot,
                    '&' => Tok::Amp,
                    '|' => Tok::Bar,
                    '~' => Tok::Tilde,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    other => return Err(err(pos, ParseErrorKind::Syntax(format!("unexpected character `{other}`")))),
                };
                out.push((tok, pos));
                {
                    i += 1;
                    col += 1;
                };
            }
        }
    }
    out.push((Tok::Eof, Pos { line, column: col }));
    Ok(out)
}

/// A parsed judgment file: assumptions, a subject term, and an optional expected type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgment {
    pub context: Context,
    pub term: Term,
    pub expected: Option<MProp>,
}

/// A sequent `P1, ..., Pn |- Q` over moded propositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequent {
    pub hyps: Vec<MProp>,
    pub goal: MProp,
}

/// Parser over a token stream. `allow_reserved` admits the falsity variable.
pub struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    scope: Vec<String>,
}

impl Parser {
    pub fn new(src: &str) -> Result<Parser, ParseError> {
        Parser::with_options(src, false)
    }

    pub fn with_options(src: &str, allow_reserved: bool) -> Result<Parser, ParseError> {
        Ok(Parser { toks: lex(src, allow_reserved)?, at: 0, scope: Vec::new() })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(err(self.pos(), ParseErrorKind::Syntax(msg.into())))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {}, found {}", tok.describe(), self.peek().describe()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => self.fail(format!("expected identifier, found {}", other.describe())),
        }
    }

    pub fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            if let Tok::Mode(_) = self.peek() {
                return Err(err(self.pos(), ParseErrorKind::NestedMode));
            }
            self.fail(format!("unexpected {}", self.peek().describe()))
        }
    }

    pub fn pure(&mut self) -> Result<Prop, ParseError> {
        match self.peek().clone() {
            Tok::Ident(_) => Ok(Prop::Var(Name::from(self.ident()?))),
            Tok::Tilde => {
                self.bump();
                Ok(Prop::neg(self.pure()?))
            }
            Tok::LParen => {
                self.bump();
                let a = self.pure()?;
                let op = self.bump_operator()?;
                let b = self.pure()?;
                if let Tok::Mode(_) = self.peek() {
                    return Err(err(self.pos(), ParseErrorKind::NestedMode));
                }
                self.expect(Tok::RParen)?;
                Ok(if op == Tok::Amp { Prop::and(a, b) } else { Prop::or(a, b) })
            }
            other => self.fail(format!("expected a proposition, found {}", other.describe())),
        }
    }

    fn bump_operator(&mut self) -> Result<Tok, ParseError> {
        match self.peek() {
            Tok::Amp | Tok::Bar => Ok(self.bump()),
            Tok::Mode(_) => Err(err(self.pos(), ParseErrorKind::NestedMode)),
            other => self.fail(format!("expected `&` or `|`, found {}", other.describe())),
        }
    }

    pub fn mprop(&mut self) -> Result<MProp, ParseError> {
        let base = self.pure()?;
        match self.peek().clone() {
            Tok::Mode(m) => {
                self.bump();
                if let Tok::Mode(_) = self.peek() {
                    return Err(err(self.pos(), ParseErrorKind::NestedMode));
                }
                Ok(MProp::new(base, m))
            }
            other => self.fail(format!("expected a mode such as `^s+`, found {}", other.describe())),
        }
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        match self.peek() {
            Tok::Plus => {
                self.bump();
                Ok(Sign::Pos)
            }
            Tok::Minus => {
                self.bump();
                Ok(Sign::Neg)
            }
            other => self.fail(format!("expected `+` or `-`, found {}", other.describe())),
        }
    }

    fn binder_body(&mut self) -> Result<(Binder, Term), ParseError> {
        let x = self.ident()?;
        self.expect(Tok::Colon)?;
        let ty = self.mprop()?;
        self.expect(Tok::Dot)?;
        self.scope.push(x.clone());
        let body = self.term();
        self.scope.pop();
        Ok((Binder { hint: Hint(Name::from(x)), ty }, body?))
    }

    fn args1(&mut self) -> Result<Term, ParseError> {
        self.expect(Tok::LParen)?;
        let t = self.term()?;
        self.expect(Tok::RParen)?;
        Ok(t)
    }

    fn args2(&mut self) -> Result<(Term, Term), ParseError> {
        self.expect(Tok::LParen)?;
        let t = self.term()?;
        self.expect(Tok::Comma)?;
        let s = self.term()?;
        self.expect(Tok::RParen)?;
        Ok((t, s))
    }

    fn indexed(word: &str, prefix: &str) -> Option<Option<Idx>> {
        let digits = word.strip_prefix(prefix)?;
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        Some(digits.parse::<u32>().ok().and_then(Idx::from_number))
    }

    pub fn term(&mut self) -> Result<Term, ParseError> {
        let pos = self.pos();
        let word = self.ident()?;
        let signed = matches!(self.peek(), Tok::Plus | Tok::Minus);
        if word == "abs" && *self.peek() == Tok::LBrack {
            self.bump();
            let q = self.mprop()?;
            self.expect(Tok::RBrack)?;
            let (t, s) = self.args2()?;
            return Ok(Term::abs(q, t, s));
        }
        if !signed {
            return Ok(match self.scope.iter().rposition(|n| *n == word) {
                Some(k) => Term::Bound(self.scope.len() - 1 - k),
                None => Term::Var(Name::from(word)),
            });
        }
        if let Some(idx) = Parser::indexed(&word, "proj") {
            let i = idx.ok_or_else(|| err(pos, ParseErrorKind::ProjectionIndex))?;
            let g = self.sign()?;
            return Ok(Term::proj(g, i, self.args1()?));
        }
        if let Some(idx) = Parser::indexed(&word, "in") {
            let i = idx.ok_or_else(|| err(pos, ParseErrorKind::InjectionIndex))?;
            let g = self.sign()?;
            return Ok(Term::inj(g, i, self.args1()?));
        }
        let g = match word.as_str() {
            "pair" | "case" | "negi" | "nege" | "clam" | "capp" => self.sign()?,
            _ => return Err(err(pos, ParseErrorKind::Syntax(format!("unknown term former `{word}`")))),
        };
        Ok(match word.as_str() {
            "pair" => {
                let (t, s) = self.args2()?;
                Term::pair(g, t, s)
            }
            "capp" => {
                let (t, s) = self.args2()?;
                Term::capp(g, t, s)
            }
            "negi" => Term::negi(g, self.args1()?),
            "nege" => Term::nege(g, self.args1()?),
            "clam" => {
                self.expect(Tok::LParen)?;
                let (b, body) = self.binder_body()?;
                self.expect(Tok::RParen)?;
                Term::CLam(g, b, Arc::new(body))
            }
            _ => {
                self.expect(Tok::LParen)?;
                let t = self.term()?;
                self.expect(Tok::Comma)?;
                let (b1, s1) = self.binder_body()?;
                self.expect(Tok::Comma)?;
                let (b2, s2) = self.binder_body()?;
                self.expect(Tok::RParen)?;
                Term::Case(g, Arc::new(t), b1, Arc::new(s1), b2, Arc::new(s2))
            }
        })
    }

    /// `x : P` lines followed by `|- term`, optionally `: Q`.
    pub fn judgment(&mut self) -> Result<Judgment, ParseError> {
        let mut context = Context::new();
        while matches!(self.peek(), Tok::Ident(_)) && *self.peek_at(1) == Tok::Colon {
            let pos = self.pos();
            let x = self.ident()?;
            self.expect(Tok::Colon)?;
            let p = self.mprop()?;
            context.insert(&x, p).map_err(|_| err(pos, ParseErrorKind::Duplicate(x)))?;
            if *self.peek() == Tok::Comma {
                self.bump();
            }
        }
        self.expect(Tok::Turnstile)?;
        let term = self.term()?;
        let expected = if *self.peek() == Tok::Colon {
            self.bump();
            Some(self.mprop()?)
        } else {
            None
        };
        self.finish()?;
        Ok(Judgment { context, term, expected })
    }

    /// `P1, ..., Pn |- Q`.
    pub fn sequent(&mut self) -> Result<Sequent, ParseError> {
        let mut hyps = Vec::new();
        if *self.peek() != Tok::Turnstile {
            hyps.push(self.mprop()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                hyps.push(self.mprop()?);
            }
        }
        self.expect(Tok::Turnstile)?;
        let goal = self.mprop()?;
        self.finish()?;
        Ok(Sequent { hyps, goal })
    }

    /// Comma-separated pure propositions, possibly empty.
    pub fn pure_list(&mut self) -> Result<Vec<Prop>, ParseError> {
        let mut out = Vec::new();
        if matches!(self.peek(), Tok::Ident(_) | Tok::Tilde | Tok::LParen) {
            out.push(self.pure()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                out.push(self.pure()?);
            }
        }
        Ok(out)
    }

    pub fn at_end(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub fn eat_turnstile(&mut self) -> Result<(), ParseError> {
        self.expect(Tok::Turnstile)
    }

    pub fn eat(&mut self, c: char) -> Result<(), ParseError> {
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '.' => Tok::Dot,
            _ => return self.fail(format!("internal: unsupported token `{c}`")),
        };
        self.expect(tok)
    }

    pub fn peek_is(&self, c: char) -> bool {
        matches!(
            (c, self.peek()),
            ('(', Tok::LParen) | (')', Tok::RParen) | ('[', Tok::LBrack) | (']', Tok::RBrack) | (',', Tok::Comma)
        )
    }

    pub fn next_ident(&mut self) -> Result<String, ParseError> {
        self.ident()
    }

    pub fn error_here(&self, msg: impl Into<String>) -> ParseError {
        err(self.pos(), ParseErrorKind::Syntax(msg.into()))
    }
}

pub fn parse_mprop(src: &str) -> Result<MProp, ParseError> {
    let mut p = Parser::new(src)?;
    let m = p.mprop()?;
    p.finish()?;
    Ok(m)
}

pub fn parse_pure(src: &str) -> Result<Prop, ParseError> {
    let mut p = Parser::new(src)?;
    let a = p.pure()?;
    p.finish()?;
    Ok(a)
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parse a term that may mention the reserved falsity variable.
pub fn parse_term_internal(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::with_options(src, true)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_judgment(src: &str) -> Result<Judgment, ParseError> {
    Parser::new(src)?.judgment()
}

pub fn parse_sequent(src: &str) -> Result<Sequent, ParseError> {
    Parser::new(src)?.sequent()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let p = parse_mprop("(a & b)^s+").unwrap();
        assert_eq!(p, Prop::and(Prop::var("a"), Prop::var("b")).with_mode(Mode::STRONG_POS));
        let q = parse_mprop("~a^c-").unwrap();
        assert_eq!(q, Prop::neg(Prop::var("a")).with_mode(Mode::CLASSICAL_NEG));
        assert_eq!(parse_term("pair+(x, y)").unwrap(), Term::pair(Sign::Pos, Term::var("x"), Term::var("y")));
        assert_eq!(
            parse_term("clam+(k : a^c-. x)").unwrap(),
            Term::clam(Sign::Pos, "k", Prop::var("a").with_mode(Mode::CLASSICAL_NEG), Term::var("x"))
        );
    }

    #[test]
    fn rejects_nested_modes() {
        for src in ["(a^s+)^c+", "a^s+^c+", "(a^s+ & b)^c+"] {
            assert_eq!(parse_mprop(src).unwrap_err().kind, ParseErrorKind::NestedMode, "{src}");
        }
    }

    #[test]
    fn rejects_bad_projection_index() {
        assert_eq!(parse_term("proj3+(x)").unwrap_err().kind, ParseErrorKind::ProjectionIndex);
        assert_eq!(parse_term("in0-(x)").unwrap_err().kind, ParseErrorKind::InjectionIndex);
    }

    #[test]
    fn reserved_identifier_only_internally() {
        assert!(matches!(parse_term("_bot0").unwrap_err().kind, ParseErrorKind::Reserved(_)));
        assert_eq!(parse_term_internal("_bot0").unwrap(), Term::var("_bot0"));
    }

    #[test]
    fn reports_positions() {
        let e = parse_term("pair+(x,\n  )").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }

    #[test]
    fn binders_resolve_to_indices() {
        let t = parse_term("case+(z, x : a^c+. x, y : b^c+. pair+(x, y))").unwrap();
        match t {
            Term::Case(_, _, _, s, _, u) => {
                assert_eq!(*s, Term::Bound(0));
                assert_eq!(*u, Term::pair(Sign::Pos, Term::var("x"), Term::Bound(0)));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn judgment_with_context() {
        let j = parse_judgment("# comment\nx : a^c+\ny : b^c+\n|- pair+(x, y) : (a & b)^s+").unwrap();
        assert_eq!(j.context.len(), 2);
        assert!(j.expected.is_some());
    }

    #[test]
    fn sequents() {
        let s = parse_sequent("a^s+, b^c- |- (a | ~a)^s+").unwrap();
        assert_eq!(s.hyps.len(), 2);
        assert_eq!(parse_sequent("|- a^c+").unwrap().hyps.len(), 0);
    }
}
