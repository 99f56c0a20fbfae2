//! Classical natural deduction: proof trees, a textual format, a random
//! proof generator, and the embedding into classical-affirmation terms.
//!
//! Falsity is the fixed formula `_bot0 & ~_bot0` and `A => B` is `~A | B`.
//! Every node records its hypothesis list; rules that discharge an
//! assumption extend the list of their premise at the end.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::gen::random_prop;
use crate::syntax::parse::Parser;
use crate::syntax::{Context, Idx, MProp, Mode, ParseError, Prop, Term};

use super::combinators::{appc, casec, explosion, falsity, implies, inic, lamc, lemc, negapc, neglamc, pairc, projic};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NKRule {
    /// One-based position in the hypothesis list.
    Hyp(usize),
    AndI,
    AndE(Idx),
    OrI(Idx),
    OrE,
    NegI,
    NegE,
    Explosion,
    Lem(Prop),
    ImpI,
    ImpE,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NKProof {
    pub rule: NKRule,
    pub hyps: Vec<Prop>,
    pub conclusion: Prop,
    pub premises: Vec<NKProof>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid natural-deduction step `{rule}`: {reason}")]
pub struct NKError {
    pub rule: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NKParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] NKError),
}

fn bad<T>(rule: &str, reason: impl Into<String>) -> Result<T, NKError> {
    Err(NKError { rule: rule.into(), reason: reason.into() })
}

fn extended(hyps: &[Prop], a: &Prop) -> Vec<Prop> {
    let mut out = hyps.to_vec();
    out.push(a.clone());
    out
}

fn same_hyps(rule: &str, expected: &[Prop], p: &NKProof) -> Result<(), NKError> {
    if p.hyps == expected {
        Ok(())
    } else {
        bad(rule, "premise has a different hypothesis list")
    }
}

impl NKProof {
    fn node(rule: NKRule, hyps: Vec<Prop>, conclusion: Prop, premises: Vec<NKProof>) -> NKProof {
        NKProof { rule, hyps, conclusion, premises }
    }

    pub fn hyp(hyps: Vec<Prop>, i: usize) -> Result<NKProof, NKError> {
        match i.checked_sub(1).and_then(|k| hyps.get(k)) {
            Some(a) => Ok(NKProof::node(NKRule::Hyp(i), hyps.clone(), a.clone(), vec![])),
            None => bad("hyp", format!("no hypothesis {i} among {}", hyps.len())),
        }
    }

    pub fn and_i(p: NKProof, q: NKProof) -> Result<NKProof, NKError> {
        same_hyps("andi", &p.hyps, &q)?;
        let c = Prop::and(p.conclusion.clone(), q.conclusion.clone());
        Ok(NKProof::node(NKRule::AndI, p.hyps.clone(), c, vec![p, q]))
    }

    pub fn and_e(i: Idx, p: NKProof) -> Result<NKProof, NKError> {
        let Prop::And(a, b) = &p.conclusion else {
            return bad("ande", format!("`{}` is not a conjunction", p.conclusion));
        };
        let c = i.pick(a, b).as_ref().clone();
        Ok(NKProof::node(NKRule::AndE(i), p.hyps.clone(), c, vec![p]))
    }

    /// Inject `p` as disjunct `i`; `other` is the remaining disjunct.
    pub fn or_i(i: Idx, other: Prop, p: NKProof) -> Result<NKProof, NKError> {
        let c = match i {
            Idx::One => Prop::or(p.conclusion.clone(), other),
            Idx::Two => Prop::or(other, p.conclusion.clone()),
        };
        Ok(NKProof::node(NKRule::OrI(i), p.hyps.clone(), c, vec![p]))
    }

    pub fn or_e(p: NKProof, q: NKProof, r: NKProof) -> Result<NKProof, NKError> {
        let Prop::Or(a, b) = &p.conclusion else {
            return bad("ore", format!("`{}` is not a disjunction", p.conclusion));
        };
        same_hyps("ore", &extended(&p.hyps, a), &q)?;
        same_hyps("ore", &extended(&p.hyps, b), &r)?;
        if q.conclusion != r.conclusion {
            return bad("ore", format!("branches conclude `{}` and `{}`", q.conclusion, r.conclusion));
        }
        let c = q.conclusion.clone();
        Ok(NKProof::node(NKRule::OrE, p.hyps.clone(), c, vec![p, q, r]))
    }

    /// Discharge the last hypothesis `a` of `p`, which proves falsity.
    pub fn neg_i(a: Prop, p: NKProof) -> Result<NKProof, NKError> {
        if p.hyps.last() != Some(&a) {
            return bad("negi", format!("premise does not assume `{a}` last"));
        }
        if p.conclusion != falsity() {
            return bad("negi", format!("premise concludes `{}` instead of falsity", p.conclusion));
        }
        let hyps = p.hyps[..p.hyps.len() - 1].to_vec();
        Ok(NKProof::node(NKRule::NegI, hyps, Prop::neg(a), vec![p]))
    }

    pub fn neg_e(p: NKProof, q: NKProof) -> Result<NKProof, NKError> {
        same_hyps("nege", &p.hyps, &q)?;
        match &p.conclusion {
            Prop::Neg(a) if **a == q.conclusion => {
                Ok(NKProof::node(NKRule::NegE, p.hyps.clone(), falsity(), vec![p, q]))
            }
            _ => bad("nege", format!("`{}` does not refute `{}`", p.conclusion, q.conclusion)),
        }
    }

    pub fn explosion(c: Prop, p: NKProof) -> Result<NKProof, NKError> {
        if p.conclusion != falsity() {
            return bad("explode", format!("premise concludes `{}` instead of falsity", p.conclusion));
        }
        Ok(NKProof::node(NKRule::Explosion, p.hyps.clone(), c, vec![p]))
    }

    pub fn lem(hyps: Vec<Prop>, a: Prop) -> NKProof {
        let c = Prop::or(a.clone(), Prop::neg(a.clone()));
        NKProof::node(NKRule::Lem(a), hyps, c, vec![])
    }

    /// Discharge the last hypothesis `a` of `p`.
    pub fn imp_i(a: Prop, p: NKProof) -> Result<NKProof, NKError> {
        if p.hyps.last() != Some(&a) {
            return bad("impi", format!("premise does not assume `{a}` last"));
        }
        let hyps = p.hyps[..p.hyps.len() - 1].to_vec();
        let c = implies(&a, &p.conclusion);
        Ok(NKProof::node(NKRule::ImpI, hyps, c, vec![p]))
    }

    pub fn imp_e(p: NKProof, q: NKProof) -> Result<NKProof, NKError> {
        same_hyps("impe", &p.hyps, &q)?;
        match &p.conclusion {
            Prop::Or(na, b) if **na == Prop::neg(q.conclusion.clone()) => {
                let c = b.as_ref().clone();
                Ok(NKProof::node(NKRule::ImpE, p.hyps.clone(), c, vec![p, q]))
            }
            _ => bad("impe", format!("`{}` is not an implication from `{}`", p.conclusion, q.conclusion)),
        }
    }

    /// Re-derive every node from its premises.
    pub fn check(&self) -> Result<(), NKError> {
        for p in &self.premises {
            p.check()?;
        }
        let ps = &self.premises;
        let arity = match self.rule {
            NKRule::Hyp(_) | NKRule::Lem(_) => 0,
            NKRule::AndI | NKRule::NegE | NKRule::ImpE => 2,
            NKRule::OrE => 3,
            _ => 1,
        };
        if ps.len() != arity {
            return bad(self.rule.tag(), format!("expected {arity} premises, found {}", ps.len()));
        }
        let rebuilt = match &self.rule {
            NKRule::Hyp(i) => NKProof::hyp(self.hyps.clone(), *i)?,
            NKRule::AndI => NKProof::and_i(ps[0].clone(), ps[1].clone())?,
            NKRule::AndE(i) => NKProof::and_e(*i, ps[0].clone())?,
            NKRule::OrI(i) => {
                let other = match (&self.conclusion, i) {
                    (Prop::Or(_, b), Idx::One) | (Prop::Or(b, _), Idx::Two) => b.as_ref().clone(),
                    _ => return bad("ori", format!("`{}` is not a disjunction", self.conclusion)),
                };
                NKProof::or_i(*i, other, ps[0].clone())?
            }
            NKRule::OrE => NKProof::or_e(ps[0].clone(), ps[1].clone(), ps[2].clone())?,
            NKRule::NegI => match &self.conclusion {
                Prop::Neg(a) => NKProof::neg_i(a.as_ref().clone(), ps[0].clone())?,
                _ => return bad("negi", format!("`{}` is not a negation", self.conclusion)),
            },
            NKRule::NegE => NKProof::neg_e(ps[0].clone(), ps[1].clone())?,
            NKRule::Explosion => NKProof::explosion(self.conclusion.clone(), ps[0].clone())?,
            NKRule::Lem(a) => NKProof::lem(self.hyps.clone(), a.clone()),
            NKRule::ImpI => match ps[0].hyps.last() {
                Some(a) => NKProof::imp_i(a.clone(), ps[0].clone())?,
                None => return bad("impi", "premise has no hypothesis to discharge"),
            },
            NKRule::ImpE => NKProof::imp_e(ps[0].clone(), ps[1].clone())?,
        };
        if rebuilt.hyps != self.hyps || rebuilt.conclusion != self.conclusion {
            return bad(self.rule.tag(), format!("recorded conclusion `{}` does not follow", self.conclusion));
        }
        Ok(())
    }

    /// Height of the tree; leaves have height 0.
    pub fn height(&self) -> usize {
        self.premises.iter().map(|p| p.height() + 1).max().unwrap_or(0)
    }

    /// Insert hypothesis `a` at zero-based position `at` everywhere in the tree.
    pub fn weaken_at(&self, at: usize, a: &Prop) -> NKProof {
        let mut hyps = self.hyps.clone();
        hyps.insert(at, a.clone());
        let rule = match self.rule {
            NKRule::Hyp(i) if i > at => NKRule::Hyp(i + 1),
            ref r => r.clone(),
        };
        let premises = self.premises.iter().map(|p| p.weaken_at(at, a)).collect();
        NKProof { rule, hyps, conclusion: self.conclusion.clone(), premises }
    }

    /// Append hypothesis `a` after the current ones.
    pub fn weaken(&self, a: &Prop) -> NKProof {
        self.weaken_at(self.hyps.len(), a)
    }
}

impl NKRule {
    fn tag(&self) -> &'static str {
        match self {
            NKRule::Hyp(_) => "hyp",
            NKRule::AndI => "andi",
            NKRule::AndE(_) => "ande",
            NKRule::OrI(_) => "ori",
            NKRule::OrE => "ore",
            NKRule::NegI => "negi",
            NKRule::NegE => "nege",
            NKRule::Explosion => "explode",
            NKRule::Lem(_) => "lem",
            NKRule::ImpI => "impi",
            NKRule::ImpE => "impe",
        }
    }
}

/// The proof expression in the textual format, without the hypothesis line.
impl fmt::Display for NKProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            NKRule::Hyp(i) => return write!(f, "hyp{i}"),
            NKRule::Lem(a) => return write!(f, "lem[{a}]"),
            NKRule::AndE(i) => write!(f, "ande{}", i.number())?,
            NKRule::OrI(i) => {
                let Prop::Or(a, b) = &self.conclusion else { unreachable!("ori concludes a disjunction") };
                write!(f, "ori{}[{}]", i.number(), i.pick(b, a))?
            }
            NKRule::NegI => {
                let Prop::Neg(a) = &self.conclusion else { unreachable!("negi concludes a negation") };
                write!(f, "negi[{a}]")?
            }
            NKRule::ImpI => write!(f, "impi[{}]", self.premises[0].hyps.last().expect("discharged hypothesis"))?,
            NKRule::Explosion => write!(f, "explode[{}]", self.conclusion)?,
            r => f.write_str(r.tag())?,
        }
        f.write_str("(")?;
        for (k, p) in self.premises.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Untyped proof expression, elaborated against a hypothesis list.
struct Expr {
    tag: String,
    annotation: Option<Prop>,
    args: Vec<Expr>,
}

fn parse_expr(p: &mut Parser) -> Result<Expr, ParseError> {
    let tag = p.next_ident()?;
    let annotation = if p.peek_is('[') {
        p.eat('[')?;
        let a = p.pure()?;
        p.eat(']')?;
        Some(a)
    } else {
        None
    };
    let mut args = Vec::new();
    if p.peek_is('(') {
        p.eat('(')?;
        args.push(parse_expr(p)?);
        while p.peek_is(',') {
            p.eat(',')?;
            args.push(parse_expr(p)?);
        }
        p.eat(')')?;
    }
    Ok(Expr { tag, annotation, args })
}

fn elaborate(hyps: &[Prop], e: &Expr) -> Result<NKProof, NKError> {
    let tag = e.tag.as_str();
    let want = |n: usize, ann: bool| -> Result<(), NKError> {
        if e.args.len() != n {
            return bad(tag, format!("expected {n} premises, found {}", e.args.len()));
        }
        if e.annotation.is_some() != ann {
            let what = if ann { "needs a `[formula]` annotation" } else { "takes no annotation" };
            return bad(tag, what);
        }
        Ok(())
    };
    let ann = || e.annotation.clone().expect("checked by want");
    let sub = |k: usize| elaborate(hyps, &e.args[k]);
    if let Some(n) = tag.strip_prefix("hyp") {
        want(0, false)?;
        let i = n.parse::<usize>().map_err(|_| NKError { rule: tag.into(), reason: "expected `hypN`".into() })?;
        return NKProof::hyp(hyps.to_vec(), i);
    }
    match tag {
        "andi" => {
            want(2, false)?;
            NKProof::and_i(sub(0)?, sub(1)?)
        }
        "ande1" | "ande2" => {
            want(1, false)?;
            NKProof::and_e(if tag == "ande1" { Idx::One } else { Idx::Two }, sub(0)?)
        }
        "ori1" | "ori2" => {
            want(1, true)?;
            NKProof::or_i(if tag == "ori1" { Idx::One } else { Idx::Two }, ann(), sub(0)?)
        }
        "ore" => {
            want(3, false)?;
            let p = sub(0)?;
            let Prop::Or(a, b) = &p.conclusion else {
                return bad("ore", format!("`{}` is not a disjunction", p.conclusion));
            };
            let q = elaborate(&extended(hyps, a), &e.args[1])?;
            let r = elaborate(&extended(hyps, b), &e.args[2])?;
            NKProof::or_e(p, q, r)
        }
        "negi" | "impi" => {
            want(1, true)?;
            let a = ann();
            let body = elaborate(&extended(hyps, &a), &e.args[0])?;
            if tag == "negi" {
                NKProof::neg_i(a, body)
            } else {
                NKProof::imp_i(a, body)
            }
        }
        "nege" => {
            want(2, false)?;
            NKProof::neg_e(sub(0)?, sub(1)?)
        }
        "impe" => {
            want(2, false)?;
            NKProof::imp_e(sub(0)?, sub(1)?)
        }
        "explode" => {
            want(1, true)?;
            NKProof::explosion(ann(), sub(0)?)
        }
        "lem" => {
            want(0, true)?;
            Ok(NKProof::lem(hyps.to_vec(), ann()))
        }
        _ => bad(tag, "unknown rule"),
    }
}

/// Parse `A1, ..., An |- proof`, where the proof is a nested rule expression
/// such as `andi(hyp1, ande2(hyp2))`.
pub fn parse_nk(src: &str) -> Result<NKProof, NKParseError> {
    let mut p = Parser::new(src)?;
    let hyps = p.pure_list()?;
    p.eat_turnstile()?;
    let e = parse_expr(&mut p)?;
    p.finish()?;
    Ok(elaborate(&hyps, &e)?)
}

fn hyp_name(i: usize) -> String {
    format!("h{i}")
}

/// `h1 : A1^c+, ..., hn : An^c+`.
pub fn nk_context(hyps: &[Prop]) -> Context {
    let entries = hyps.iter().enumerate().map(|(i, a)| (hyp_name(i + 1), MProp::new(a.clone(), Mode::CLASSICAL_POS)));
    Context::from_entries(entries).expect("distinct generated names")
}

/// Compile a checked proof of `A1, ..., An |- B` into a term of `B^c+` under [`nk_context`].
pub fn embed_nk(p: &NKProof) -> Result<Term, NKError> {
    p.check()?;
    Ok(embed(p))
}

fn embed(p: &NKProof) -> Term {
    let e = |k: usize| embed(&p.premises[k]);
    let concl = |k: usize| &p.premises[k].conclusion;
    let fresh = hyp_name(p.hyps.len() + 1);
    let split = |c: &Prop| match c {
        Prop::And(a, b) | Prop::Or(a, b) => (a.as_ref().clone(), b.as_ref().clone()),
        _ => unreachable!("checked proof"),
    };
    match &p.rule {
        NKRule::Hyp(i) => Term::var(&hyp_name(*i)),
        NKRule::AndI => pairc(concl(0), concl(1), e(0), e(1)),
        NKRule::AndE(i) => {
            let (a, b) = split(concl(0));
            projic(*i, &a, &b, e(0))
        }
        NKRule::OrI(i) => {
            let (a, b) = split(&p.conclusion);
            inic(*i, &a, &b, e(0))
        }
        NKRule::OrE => {
            let (a, b) = split(concl(0));
            casec(&a, &b, &p.conclusion, e(0), &fresh, e(1), e(2))
        }
        NKRule::NegI => {
            let a = p.premises[0].hyps.last().expect("checked proof");
            neglamc(a, &fresh, e(0))
        }
        NKRule::NegE => negapc(concl(1), e(0), e(1)),
        NKRule::Explosion => explosion(MProp::new(p.conclusion.clone(), Mode::CLASSICAL_POS), e(0)),
        NKRule::Lem(a) => lemc(a),
        NKRule::ImpI => {
            let a = p.premises[0].hyps.last().expect("checked proof");
            lamc(a, concl(0), &fresh, e(0))
        }
        NKRule::ImpE => {
            let (_, b) = split(concl(0));
            appc(concl(1), &b, e(0), e(1))
        }
    }
}

/// Falsity of height 2 from an extra hypothesis `y & ~y`.
fn contradiction(hyps: &[Prop], y: Prop) -> (Prop, NKProof) {
    let a = Prop::and(y.clone(), Prop::neg(y));
    let ctx = extended(hyps, &a);
    let hp = NKProof::hyp(ctx, hyps.len() + 1).expect("just added");
    let refute = NKProof::and_e(Idx::Two, hp.clone()).expect("conjunction");
    let affirm = NKProof::and_e(Idx::One, hp).expect("conjunction");
    (a, NKProof::neg_e(refute, affirm).expect("matching negation"))
}

/// A random valid proof of height at most `height` under `hyps`.
pub fn random_nk_proof<R: Rng>(rng: &mut R, atoms: &[&str], hyps: &[Prop], height: usize) -> NKProof {
    let small = |rng: &mut R| {
        let d = rng.gen_range(0..=1);
        random_prop(rng, atoms, d)
    };
    let leaf = |rng: &mut R| {
        if !hyps.is_empty() && rng.gen_bool(0.7) {
            NKProof::hyp(hyps.to_vec(), rng.gen_range(1..=hyps.len())).expect("index in range")
        } else {
            NKProof::lem(hyps.to_vec(), small(rng))
        }
    };
    if height == 0 {
        return leaf(rng);
    }
    let h = height - 1;
    let n = hyps.len();
    let built = match rng.gen_range(0..10) {
        0 => NKProof::and_i(random_nk_proof(rng, atoms, hyps, h), random_nk_proof(rng, atoms, hyps, h)),
        1 => {
            let i = if rng.gen_bool(0.5) { Idx::One } else { Idx::Two };
            let p = random_nk_proof(rng, atoms, hyps, h);
            if matches!(p.conclusion, Prop::And(..)) {
                NKProof::and_e(i, p)
            } else if h >= 1 {
                let p = random_nk_proof(rng, atoms, hyps, h - 1);
                let q = random_nk_proof(rng, atoms, hyps, h - 1);
                NKProof::and_i(p, q).and_then(|pq| NKProof::and_e(i, pq))
            } else {
                Ok(p)
            }
        }
        2 => {
            let i = if rng.gen_bool(0.5) { Idx::One } else { Idx::Two };
            NKProof::or_i(i, small(rng), random_nk_proof(rng, atoms, hyps, h))
        }
        3 => {
            let mut p = random_nk_proof(rng, atoms, hyps, h);
            if !matches!(p.conclusion, Prop::Or(..)) {
                p = NKProof::lem(hyps.to_vec(), small(rng));
            }
            let Prop::Or(a, b) = p.conclusion.clone() else { unreachable!() };
            let q = random_nk_proof(rng, atoms, &extended(hyps, &a), h);
            let r = random_nk_proof(rng, atoms, &extended(hyps, &b), h);
            if q.conclusion == r.conclusion {
                NKProof::or_e(p, q, r)
            } else if h >= 1 {
                let q = random_nk_proof(rng, atoms, &extended(hyps, &a), h - 1);
                let r = random_nk_proof(rng, atoms, &extended(hyps, &b), h - 1);
                let (qc, rc) = (q.conclusion.clone(), r.conclusion.clone());
                NKProof::or_i(Idx::One, rc, q)
                    .and_then(|q| NKProof::or_i(Idx::Two, qc, r).and_then(|r| NKProof::or_e(p, q, r)))
            } else {
                Ok(p)
            }
        }
        4 if h >= 2 => {
            let (a, bot) = contradiction(hyps, small(rng));
            NKProof::neg_i(a, bot)
        }
        4 | 5 if h >= 1 => {
            // a hypothesis of the form ~Z refuted by a proof of Z
            let z = random_nk_proof(rng, atoms, hyps, h - 1);
            let a = Prop::neg(z.conclusion.clone());
            let body = NKProof::hyp(extended(hyps, &a), n + 1).and_then(|hp| NKProof::neg_e(hp, z.weaken(&a)));
            body.and_then(|b| NKProof::neg_i(a, b))
        }
        6 if h >= 3 => {
            // ex falso under a contradictory antecedent
            let (a, bot) = contradiction(hyps, small(rng));
            NKProof::explosion(small(rng), bot).and_then(|b| NKProof::imp_i(a, b))
        }
        7 => {
            let a = small(rng);
            let body = random_nk_proof(rng, atoms, &extended(hyps, &a), h);
            NKProof::imp_i(a, body)
        }
        8 if h >= 1 => {
            let q = random_nk_proof(rng, atoms, hyps, h - 1);
            let body = random_nk_proof(rng, atoms, &extended(hyps, &q.conclusion), h - 1);
            NKProof::imp_i(q.conclusion.clone(), body).and_then(|p| NKProof::imp_e(p, q))
        }
        _ => Ok(leaf(rng)),
    };
    built.expect("generator only applies rules to fitting premises")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::rng;
    use crate::syntax::parse_pure;
    use crate::typing::check_type;

    fn cplus(a: &Prop) -> MProp {
        MProp::new(a.clone(), Mode::CLASSICAL_POS)
    }

    fn embeds(p: &NKProof) {
        let t = embed_nk(p).unwrap();
        check_type(&nk_context(&p.hyps), &t, &cplus(&p.conclusion)).unwrap_or_else(|e| panic!("{p}: {e}"));
    }

    #[test]
    fn parse_and_embed() {
        let p = parse_nk("(a & b), c |- andi(ande2(hyp1), hyp2)").unwrap();
        assert_eq!(p.conclusion, parse_pure("(b & c)").unwrap());
        embeds(&p);
        let p = parse_nk("|- lem[a]").unwrap();
        assert_eq!(embed_nk(&p).unwrap(), lemc(&Prop::var("a")));
        let p = parse_nk("(a | b) |- ore(hyp1, ori2[b](hyp2), ori1[a](hyp2))").unwrap();
        assert_eq!(p.conclusion, parse_pure("(b | a)").unwrap());
        embeds(&p);
        let p = parse_nk("a |- negi[~a](nege(hyp2, hyp1))").unwrap();
        embeds(&p);
        let p = parse_nk("(~a | b), a |- impe(hyp1, hyp2)").unwrap();
        embeds(&p);
        let p = parse_nk("|- impi[(a & ~a)](explode[c](nege(ande2(hyp1), ande1(hyp1))))").unwrap();
        embeds(&p);
    }

    #[test]
    fn rejects_bad_proofs() {
        assert!(matches!(parse_nk("a |- hyp2"), Err(NKParseError::Invalid(_))));
        assert!(matches!(parse_nk("a |- ande1(hyp1)"), Err(NKParseError::Invalid(_))));
        assert!(matches!(parse_nk("a |- negi[a](hyp1)"), Err(NKParseError::Invalid(_))));
        assert!(matches!(parse_nk("(a | b) |- ore(hyp1, hyp2, hyp1)"), Err(NKParseError::Invalid(_))));
        assert!(matches!(parse_nk("a |- andi(hyp1"), Err(NKParseError::Syntax(_))));
        let mut p = parse_nk("a |- hyp1").unwrap();
        p.conclusion = Prop::var("b");
        assert!(embed_nk(&p).is_err());
    }

    #[test]
    fn display_round_trips() {
        let src = "(a | b), c |- ore(hyp1, ori2[b](hyp3), impe(impi[c](ori1[a](hyp3)), hyp2))";
        let p = parse_nk(src).unwrap();
        let hyps: Vec<String> = p.hyps.iter().map(|h| h.to_string()).collect();
        let again = parse_nk(&format!("{} |- {p}", hyps.join(", "))).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn weakening_shifts_inner_hypotheses() {
        let p = parse_nk("(a | b) |- ore(hyp1, hyp2, hyp2)").unwrap_err();
        assert!(matches!(p, NKParseError::Invalid(_)));
        let p = parse_nk("(a | a) |- ore(hyp1, hyp2, hyp2)").unwrap();
        let w = p.weaken_at(0, &Prop::var("q"));
        w.check().unwrap();
        assert_eq!(w.premises[1].rule, NKRule::Hyp(3));
    }

    #[test]
    fn random_proofs_embed() {
        let mut r = rng(11);
        let hyps = [parse_pure("(a | b)").unwrap(), parse_pure("~c").unwrap()];
        for k in 0..60 {
            let h = if k % 2 == 0 { &hyps[..] } else { &[] };
            let p = random_nk_proof(&mut r, &["a", "b", "c"], h, 4);
            assert!(p.height() <= 4);
            p.check().unwrap();
            embeds(&p);
        }
    }
}
