//! Translation of moded propositions and typed proof terms into System F
//! with Pos/Neg constraints, and the simulation check for single steps.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use super::encode;
use super::fterm::FTerm;
use super::ftype::FType;
use super::infer::FContext;
use crate::syntax::{Context, Hint, Idx, MProp, Mode, Name, Prop, Sign, Strength, Term};
use crate::typing::{check_type, Derivation, Rule, TypeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("invalid derivation: {0}")]
    InvalidDerivation(String),
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// The type interpreting a moded proposition.
pub fn translate_prop(p: &MProp) -> FType {
    let cl = |a: &Prop, s: Sign| translate_prop(&MProp::new(a.clone(), Mode::classical(s)));
    match (p.mode.strength, p.sign(), &p.base) {
        (Strength::Classical, g, a) => {
            let plus = translate_prop(&MProp::new(a.clone(), Mode::STRONG_POS));
            let minus = translate_prop(&MProp::new(a.clone(), Mode::STRONG_NEG));
            if g == Sign::Pos {
                FType::pos(plus, minus)
            } else {
                FType::neg(plus, minus)
            }
        }
        (_, Sign::Pos, Prop::Var(x)) => FType::Var(x.clone()),
        (_, Sign::Neg, Prop::Var(x)) => encode::not(&FType::Var(x.clone())),
        (_, Sign::Pos, Prop::And(a, b)) => encode::times(&cl(a, Sign::Pos), &cl(b, Sign::Pos)),
        (_, Sign::Pos, Prop::Or(a, b)) => encode::plus(&cl(a, Sign::Pos), &cl(b, Sign::Pos)),
        (_, Sign::Neg, Prop::And(a, b)) => encode::plus(&cl(a, Sign::Neg), &cl(b, Sign::Neg)),
        (_, Sign::Neg, Prop::Or(a, b)) => encode::times(&cl(a, Sign::Neg), &cl(b, Sign::Neg)),
        (_, g, Prop::Neg(a)) => FType::arrow(encode::one(), cl(a, g.flip())),
    }
}

pub fn translate_context(ctx: &Context) -> FContext {
    let mut out = FContext::new();
    for (x, p) in ctx.iter() {
        out.push(x, translate_prop(p));
    }
    out
}

/// Translator state: the `funabs` terms built so far, one per proposition pair.
#[derive(Default)]
pub struct Translator {
    funabs: HashMap<(MProp, MProp), FTerm>,
}

impl Translator {
    pub fn new() -> Translator {
        Translator::default()
    }

    /// `funabs(P, Q) : [P] -> [P~] -> [Q]`, by recursion on the measure of `P`.
    pub fn funabs(&mut self, p: &MProp, q: &MProp) -> FTerm {
        let key = (p.clone(), q.clone());
        if let Some(t) = self.funabs.get(&key) {
            return t.clone();
        }
        let t = self.build_funabs(p, q);
        self.funabs.insert(key, t.clone());
        t
    }

    fn build_funabs(&mut self, p: &MProp, q: &MProp) -> FTerm {
        let fq = translate_prop(q);
        let (tp, tn) = (translate_prop(p), translate_prop(&p.opposite()));
        let lam2 = |body: FTerm| FTerm::lam("x", tp.clone(), FTerm::lam("y", tn.clone(), body));
        let (x, y, z) = (FTerm::var("x"), FTerm::var("y"), FTerm::var("z"));
        let cl = |a: &Prop, s: Sign| MProp::new(a.clone(), Mode::classical(s));
        if p.is_classical() {
            let strong = p.strengthen();
            let inner = self.funabs(&strong, q);
            let body = FTerm::apps(inner, [FTerm::app(x.clone(), y.clone()), FTerm::app(y, x)]);
            return lam2(body);
        }
        match (p.sign(), &p.base) {
            (Sign::Pos, Prop::Var(_)) => lam2(encode::abort(&fq, FTerm::app(y, x))),
            (Sign::Neg, Prop::Var(_)) => lam2(encode::abort(&fq, FTerm::app(x, y))),
            (g, Prop::Neg(a)) => {
                let inner = self.funabs(&cl(a, g.flip()), q);
                let t = encode::triv;
                lam2(FTerm::apps(inner, [FTerm::app(x, t()), FTerm::app(y, t())]))
            }
            (g, Prop::And(a, b)) | (g, Prop::Or(a, b)) => {
                let conj = matches!(p.base, Prop::And(..));
                let (pa, pb) = (cl(a, Sign::Pos), cl(b, Sign::Pos));
                let (na, nb) = (cl(a, Sign::Neg), cl(b, Sign::Neg));
                let ty = |m: &MProp| translate_prop(m);
                let body = match (g, conj) {
                    // x : A+ * B+, y : A- + B-
                    (Sign::Pos, true) => {
                        let (fa, fb) = (self.funabs(&pa, q), self.funabs(&pb, q));
                        let l = FTerm::apps(fa, [encode::proj(Idx::One, &ty(&pa), &ty(&pb), x.clone()), z.clone()]);
                        let r = FTerm::apps(fb, [encode::proj(Idx::Two, &ty(&pa), &ty(&pb), x), z]);
                        encode::case(y, &fq, "z", &ty(&na), l, "z", &ty(&nb), r)
                    }
                    // x : A- + B-, y : A+ * B+
                    (Sign::Neg, true) => {
                        let (fa, fb) = (self.funabs(&na, q), self.funabs(&nb, q));
                        let l = FTerm::apps(fa, [z.clone(), encode::proj(Idx::One, &ty(&pa), &ty(&pb), y.clone())]);
                        let r = FTerm::apps(fb, [z, encode::proj(Idx::Two, &ty(&pa), &ty(&pb), y)]);
                        encode::case(x, &fq, "z", &ty(&na), l, "z", &ty(&nb), r)
                    }
                    // x : A+ + B+, y : A- * B-
                    (Sign::Pos, false) => {
                        let (fa, fb) = (self.funabs(&pa, q), self.funabs(&pb, q));
                        let l = FTerm::apps(fa, [z.clone(), encode::proj(Idx::One, &ty(&na), &ty(&nb), y.clone())]);
                        let r = FTerm::apps(fb, [z, encode::proj(Idx::Two, &ty(&na), &ty(&nb), y)]);
                        encode::case(x, &fq, "z", &ty(&pa), l, "z", &ty(&pb), r)
                    }
                    // x : A- * B-, y : A+ + B+
                    (Sign::Neg, false) => {
                        let (fa, fb) = (self.funabs(&na, q), self.funabs(&nb, q));
                        let l = FTerm::apps(fa, [encode::proj(Idx::One, &ty(&na), &ty(&nb), x.clone()), z.clone()]);
                        let r = FTerm::apps(fb, [encode::proj(Idx::Two, &ty(&na), &ty(&nb), x), z]);
                        encode::case(y, &fq, "z", &ty(&pa), l, "z", &ty(&pb), r)
                    }
                };
                lam2(body)
            }
        }
    }

    /// Translate the subject of a derivation.
    pub fn translate(&mut self, d: &Derivation) -> Result<FTerm, TranslateError> {
        d.validate().map_err(TranslateError::InvalidDerivation)?;
        Ok(self.go(d))
    }

    fn go(&mut self, d: &Derivation) -> FTerm {
        let prem = |i: usize| &d.premises[i];
        let parts = |m: &MProp| -> (FType, FType) {
            let (a, b) = match &m.base {
                Prop::And(a, b) | Prop::Or(a, b) => ((**a).clone(), (**b).clone()),
                _ => unreachable!("validated binary connective"),
            };
            let g = m.sign();
            (translate_prop(&MProp::new(a, Mode::classical(g))), translate_prop(&MProp::new(b, Mode::classical(g))))
        };
        match (&d.subject, d.rule) {
            (Term::Var(x), _) => FTerm::Var(x.clone()),
            (Term::Abs(q, ..), _) => {
                let f = self.funabs(&prem(0).conclusion, q);
                let (t, s) = (self.go(prem(0)), self.go(prem(1)));
                FTerm::apps(f, [t, s])
            }
            (Term::Pair(..), _) => {
                let (a, b) = parts(&d.conclusion);
                let (t, s) = (self.go(prem(0)), self.go(prem(1)));
                encode::pair(&a, &b, &t, &s)
            }
            (Term::Proj(_, i, _), _) => {
                let (a, b) = parts(&prem(0).conclusion);
                let t = self.go(prem(0));
                encode::proj(*i, &a, &b, t)
            }
            (Term::Inj(_, i, _), _) => {
                let (a, b) = parts(&d.conclusion);
                let t = self.go(prem(0));
                encode::inj(*i, &a, &b, &t)
            }
            (Term::Case(_, _, b1, _, b2, _), _) => {
                let t = self.go(prem(0));
                let (x, y) = (opened_name(prem(1)), opened_name(prem(2)));
                let (s1, s2) = (self.go(prem(1)), self.go(prem(2)));
                let result = translate_prop(&d.conclusion);
                encode::case(t, &result, &x, &translate_prop(&b1.ty), s1, &y, &translate_prop(&b2.ty), s2)
            }
            (Term::NegI(..), _) => {
                let t = self.go(prem(0));
                FTerm::Lam(Hint(Name::from("u")), encode::one(), Arc::new(t.shift(1, 0)))
            }
            (Term::NegE(..), _) => FTerm::app(self.go(prem(0)), encode::triv()),
            (Term::CLam(_, b, _), _) => {
                let x = opened_name(prem(0));
                let t = self.go(prem(0));
                FTerm::lam(&x, translate_prop(&b.ty), t)
            }
            (Term::CApp(..), Rule::ClassElimPos | Rule::ClassElimNeg) => {
                let (t, s) = (self.go(prem(0)), self.go(prem(1)));
                FTerm::app(t, s)
            }
            (Term::CApp(..), _) | (Term::Bound(_), _) => unreachable!("validated derivation"),
        }
    }
}

fn opened_name(premise: &Derivation) -> String {
    premise.context.iter().last().map(|(x, _)| x.to_string()).expect("binder premise extends the context")
}

/// Translate a typed term with a fresh `funabs` table.
pub fn translate_term(d: &Derivation) -> Result<FTerm, TranslateError> {
    Translator::new().translate(d)
}

/// Outcome of a bounded search for an F reduction sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simulation {
    /// Length of the reduction sequence found, if any.
    pub steps: Option<usize>,
    pub depth: usize,
    /// Distinct terms visited.
    pub explored: usize,
}

impl Simulation {
    pub fn holds(&self) -> bool {
        self.steps.is_some_and(|n| n >= 1)
    }
}

/// Limit on distinct terms visited by the search.
pub const SIMULATION_STATE_LIMIT: usize = 200_000;

/// Search for `[t] ->+ [s]` within `depth` F steps, where `t -> s` in one step
/// and `d` types `t`.
pub fn check_simulation(t: &Term, s: &Term, d: &Derivation, depth: usize) -> Result<Simulation, TranslateError> {
    if d.subject != *t {
        return Err(TranslateError::InvalidDerivation(format!("derivation types `{}`, not `{t}`", d.subject)));
    }
    let ds = check_type(&d.context, s, &d.conclusion)?;
    let mut tr = Translator::new();
    let (ft, fs) = (tr.translate(d)?, tr.translate(&ds)?);
    Ok(search(&ft, &fs, depth))
}

/// Path to the smallest pair of corresponding subterms outside of which the terms agree.
fn differing_path(a: &FTerm, b: &FTerm, path: &mut Vec<usize>) {
    match (a, b) {
        (FTerm::Lam(_, t1, x), FTerm::Lam(_, t2, y)) if t1 == t2 => {
            path.push(0);
            differing_path(x, y, path)
        }
        (FTerm::TyLam(_, x), FTerm::TyLam(_, y)) => {
            path.push(0);
            differing_path(x, y, path)
        }
        (FTerm::TyApp(x, t1), FTerm::TyApp(y, t2)) if t1 == t2 => {
            path.push(0);
            differing_path(x, y, path)
        }
        (FTerm::App(f1, a1), FTerm::App(f2, a2)) if f1 == f2 && a1 != a2 => {
            path.push(1);
            differing_path(a1, a2, path)
        }
        (FTerm::App(f1, a1), FTerm::App(f2, a2)) if a1 == a2 && f1 != f2 => {
            path.push(0);
            differing_path(f1, f2, path)
        }
        _ => {}
    }
}

/// Abstractions occurring in `t`.
fn abstractions(t: &FTerm, out: &mut HashSet<FTerm>) {
    if matches!(t, FTerm::Lam(..) | FTerm::TyLam(..)) {
        out.insert(t.clone());
    }
    match t {
        FTerm::Var(_) | FTerm::Bound(_) => {}
        FTerm::Lam(_, _, b) | FTerm::TyLam(_, b) | FTerm::TyApp(b, _) => abstractions(b, out),
        FTerm::App(f, a) => {
            abstractions(f, out);
            abstractions(a, out);
        }
    }
}

/// How much of the reduct space a search stage explores.
#[derive(Clone, Copy)]
enum Pruning<'k> {
    /// Redexes inside the region where `cur` and `to` differ, or on the path
    /// to it; optionally skipping redexes whose abstraction occurs in `to`.
    Region(Option<&'k HashSet<FTerm>>),
    /// Every redex.
    Full,
}

/// One-step reducts of `cur` worth exploring on the way to `to`.
///
/// Both region heuristics can miss a reduction: an ancestor contraction may
/// copy an agreeing subterm somewhere it must be reduced, and an abstraction
/// of `to` may occur twice. The final search stage therefore prunes nothing.
fn relevant_reducts(cur: &FTerm, to: &FTerm, pruning: Pruning<'_>) -> Vec<FTerm> {
    let kept = match pruning {
        Pruning::Full => return cur.redexes().into_iter().map(|p| cur.step_at(&p).expect("redex position")).collect(),
        Pruning::Region(kept) => kept,
    };
    let mut path = Vec::new();
    differing_path(cur, to, &mut path);
    let sub = cur.at(&path).expect("path from differing_path");
    let ancestors = (0..path.len()).map(|k| path[..k].to_vec()).filter(|p| cur.at(p).is_some_and(FTerm::is_redex));
    let inside = sub.redexes().into_iter().map(|p| [path.clone(), p].concat());
    ancestors
        .chain(inside)
        .filter(|p| {
            let head = match cur.at(p) {
                Some(FTerm::App(f, _)) | Some(FTerm::TyApp(f, _)) => f,
                _ => return false,
            };
            kept.is_none_or(|k| !k.contains(&**head))
        })
        .map(|p| cur.step_at(&p).expect("redex position"))
        .collect()
}

fn bfs(from: &FTerm, to: &FTerm, depth: usize, pruning: Pruning<'_>, explored: &mut usize) -> Option<usize> {
    let mut seen: HashSet<FTerm> = HashSet::from([from.clone()]);
    let mut queue = VecDeque::from([(from.clone(), 0usize)]);
    let found = 'outer: {
        while let Some((cur, n)) = queue.pop_front() {
            if n == depth {
                continue;
            }
            for next in relevant_reducts(&cur, to, pruning) {
                if next == *to {
                    break 'outer Some(n + 1);
                }
                if seen.len() < SIMULATION_STATE_LIMIT && seen.insert(next.clone()) {
                    queue.push_back((next, n + 1));
                }
            }
        }
        None
    };
    *explored += seen.len();
    found
}

/// Search for a reduction sequence of length at least one.
///
/// A greedy leftmost-outermost walk under the strictest pruning comes first,
/// then breadth-first searches under progressively weaker pruning. Every
/// sequence reported is a genuine reduction; only the last stage is
/// exhaustive up to the depth and state limits.
fn search(from: &FTerm, to: &FTerm, depth: usize) -> Simulation {
    let mut kept = HashSet::new();
    abstractions(to, &mut kept);
    let strict = Pruning::Region(Some(&kept));
    let mut cur = from.clone();
    for n in 1..=depth {
        let Some(next) = relevant_reducts(&cur, to, strict).into_iter().next() else { break };
        if next == *to {
            return Simulation { steps: Some(n), depth, explored: n };
        }
        cur = next;
    }
    let mut explored = 0;
    let steps =
        [strict, Pruning::Region(None), Pruning::Full].into_iter().find_map(|p| bfs(from, to, depth, p, &mut explored));
    Simulation { steps, depth, explored }
}
