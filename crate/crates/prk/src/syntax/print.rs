//! Concrete syntax printing. The output is accepted back by the parser.

use std::collections::BTreeSet;
use std::fmt;

use super::parse::Judgment;
use super::prop::{MProp, Name, Prop};
use super::term::{fresh_name, Binder, Term};

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prop::Var(x) => write!(f, "{x}"),
            Prop::And(a, b) => write!(f, "({a} & {b})"),
            Prop::Or(a, b) => write!(f, "({a} | {b})"),
            Prop::Neg(a) => write!(f, "~{a}"),
        }
    }
}

impl fmt::Display for MProp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, self.mode)
    }
}

/// One assumption per line, then `|- term`, then `: Q` when present.
impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, p) in self.context.iter() {
            writeln!(f, "{x} : {p}")?;
        }
        write!(f, "|- {}", self.term)?;
        if let Some(q) = &self.expected {
            write!(f, " : {q}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free = self.free_vars();
        let mut p = Printer { free: &free, scope: Vec::new() };
        let mut out = String::new();
        p.term(self, &mut out);
        f.write_str(&out)
    }
}

struct Printer<'a> {
    free: &'a BTreeSet<Name>,
    scope: Vec<String>,
}

impl Printer<'_> {
    fn pick(&self, b: &Binder) -> String {
        let hint = b.name();
        let base = if hint.is_empty() || !hint.starts_with(|c: char| c.is_ascii_alphabetic()) { "v" } else { hint };
        fresh_name(base, &|n| self.free.contains(n) || self.scope.iter().any(|s| s == n))
    }

    fn under(&mut self, b: &Binder, body: &Term, out: &mut String) {
        let name = self.pick(b);
        out.push_str(&format!("{name} : {}. ", b.ty));
        self.scope.push(name);
        self.term(body, out);
        self.scope.pop();
    }

    fn term(&mut self, t: &Term, out: &mut String) {
        match t {
            Term::Var(x) => out.push_str(x),
            Term::Bound(i) => match self.scope.len().checked_sub(i + 1) {
                Some(k) => out.push_str(&self.scope[k]),
                None => out.push_str(&format!("#{i}")),
            },
            Term::Abs(q, a, b) => {
                out.push_str(&format!("abs[{q}]("));
                self.term(a, out);
                out.push_str(", ");
                self.term(b, out);
                out.push(')');
            }
            Term::Pair(g, a, b) | Term::CApp(g, a, b) => {
                let kw = if matches!(t, Term::Pair(..)) { "pair" } else { "capp" };
                out.push_str(&format!("{kw}{}(", g.symbol()));
                self.term(a, out);
                out.push_str(", ");
                self.term(b, out);
                out.push(')');
            }
            Term::Proj(g, i, a) => {
                out.push_str(&format!("proj{}{}(", i.number(), g.symbol()));
                self.term(a, out);
                out.push(')');
            }
            Term::Inj(g, i, a) => {
                out.push_str(&format!("in{}{}(", i.number(), g.symbol()));
                self.term(a, out);
                out.push(')');
            }
            Term::NegI(g, a) | Term::NegE(g, a) => {
                let kw = if matches!(t, Term::NegI(..)) { "negi" } else { "nege" };
                out.push_str(&format!("{kw}{}(", g.symbol()));
                self.term(a, out);
                out.push(')');
            }
            Term::CLam(g, b, body) => {
                out.push_str(&format!("clam{}(", g.symbol()));
                self.under(b, body, out);
                out.push(')');
            }
            Term::Case(g, s, b1, u1, b2, u2) => {
                out.push_str(&format!("case{}(", g.symbol()));
                self.term(s, out);
                out.push_str(", ");
                self.under(b1, u1, out);
                out.push_str(", ");
                self.under(b2, u2, out);
                out.push(')');
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::prop::{Mode, Sign};

    #[test]
    fn prints_props() {
        let p = Prop::or(Prop::var("a"), Prop::neg(Prop::var("a"))).with_mode(Mode::CLASSICAL_POS);
        assert_eq!(p.to_string(), "(a | ~a)^c+");
    }

    #[test]
    fn renames_binder_clashing_with_free_variable() {
        let t = Term::clam(Sign::Pos, "y", Prop::var("a").with_mode(Mode::CLASSICAL_NEG), Term::var("x"))
            .substitute("x", &Term::var("y"));
        assert_eq!(t.to_string(), "clam+(y0 : a^c-. y)");
    }

    #[test]
    fn judgment_round_trip() {
        let src = "x : a^c+\ny : (a & b)^s-\n|- capp+(x, clam-(k : a^c+. proj1-(y))) : a^s+";
        let j = crate::syntax::parse_judgment(src).unwrap();
        assert_eq!(j.to_string(), src);
        assert_eq!(crate::syntax::parse_judgment(&j.to_string()).unwrap(), j);
    }
}
