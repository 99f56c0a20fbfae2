//! One-step reduction, normalization and traces.

mod shape;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::syntax::{Mode, Term};
use crate::typing::abs_general;

pub use shape::{classify, is_neutral, is_normal, Canonicity, ClassicalShape, ShapeError, ShapeReport, StrongShape};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RuleName {
    Proj,
    Case,
    Neg,
    Beta,
    AbsPairInj,
    AbsInjPair,
    AbsNeg,
    Eta,
}

impl RuleName {
    pub fn name(self) -> &'static str {
        match self {
            RuleName::Proj => "proj",
            RuleName::Case => "case",
            RuleName::Neg => "neg",
            RuleName::Beta => "beta",
            RuleName::AbsPairInj => "absPairInj",
            RuleName::AbsInjPair => "absInjPair",
            RuleName::AbsNeg => "absNeg",
            RuleName::Eta => "eta",
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which calculus to rewrite in: the base rules, or the base rules plus eta.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Calculus {
    #[default]
    Plain,
    Eta,
}

/// One contraction: where, by which rule, and the local redex and reduct.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub position: Vec<usize>,
    pub rule: RuleName,
    pub redex: Term,
    pub reduct: Term,
}

impl Step {
    pub fn position_label(&self) -> String {
        if self.position.is_empty() {
            "root".to_string()
        } else {
            self.position.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
        }
    }

    /// Apply this contraction to `t`.
    pub fn apply(&self, t: &Term) -> Term {
        t.replace_at(&self.position, self.reduct.clone())
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} ==> {}", self.position_label(), self.rule, self.redex, self.reduct)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trace {
    pub start: Term,
    pub steps: Vec<Step>,
}

impl Trace {
    /// Re-apply every step from the start term.
    pub fn replay(&self) -> Term {
        self.steps.iter().fold(self.start.clone(), |t, s| s.apply(&t))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("fuel exhausted after {steps} steps")]
    FuelExhausted { steps: usize, last: Term },
}

/// Contract `t` at its root, if it is a redex.
pub fn contract(t: &Term, calc: Calculus) -> Option<(RuleName, Term)> {
    use crate::syntax::Term::*;
    match t {
        Proj(g, i, u) => match &**u {
            Pair(h, a, b) if g == h => Some((RuleName::Proj, i.pick(a, b).as_ref().clone())),
            _ => None,
        },
        Case(g, u, _, s1, _, s2) => match &**u {
            Inj(h, i, a) if g == h => Some((RuleName::Case, i.pick(s1, s2).instantiate(a))),
            _ => None,
        },
        NegE(g, u) => match &**u {
            NegI(h, a) if g == h => Some((RuleName::Neg, (**a).clone())),
            _ => None,
        },
        CApp(g, u, s) => match &**u {
            CLam(h, _, body) if g == h => Some((RuleName::Beta, body.instantiate(s))),
            _ => None,
        },
        Abs(q, l, r) => match (&**l, &**r) {
            (Pair(g, a, b), Inj(h, i, s)) if *h == g.flip() => {
                let ti = i.pick(a, b).as_ref().clone();
                Some((RuleName::AbsPairInj, abs_general(q.clone(), Mode::classical(*g), ti, (**s).clone())))
            }
            (Inj(g, i, a), Pair(h, s1, s2)) if *h == g.flip() => {
                let si = i.pick(s1, s2).as_ref().clone();
                Some((RuleName::AbsInjPair, abs_general(q.clone(), Mode::classical(*g), (**a).clone(), si)))
            }
            (NegI(g, a), NegI(h, s)) if *h == g.flip() => Some((
                RuleName::AbsNeg,
                abs_general(q.clone(), Mode::classical(g.flip()), (**a).clone(), (**s).clone()),
            )),
            _ => None,
        },
        CLam(g, _, body) if calc == Calculus::Eta => match &**body {
            CApp(h, f, x) if g == h && **x == Bound(0) && !f.mentions_index(0) => Some((RuleName::Eta, f.shift(-1, 0))),
            _ => None,
        },
        _ => None,
    }
}

/// Every redex of `t`, in leftmost-outermost order.
pub fn redexes(t: &Term, calc: Calculus) -> Vec<Step> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    collect(t, calc, &mut path, &mut out);
    out
}

fn collect(t: &Term, calc: Calculus, path: &mut Vec<usize>, out: &mut Vec<Step>) {
    if let Some((rule, reduct)) = contract(t, calc) {
        out.push(Step { position: path.clone(), rule, redex: t.clone(), reduct });
    }
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        collect(c, calc, path, out);
        path.pop();
    }
}

/// Reduction strategy for `normalize_with`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    LeftmostOutermost,
    RightmostInnermost,
}

fn find_outermost(t: &Term, calc: Calculus, path: &mut Vec<usize>) -> Option<Step> {
    if let Some((rule, reduct)) = contract(t, calc) {
        return Some(Step { position: path.clone(), rule, redex: t.clone(), reduct });
    }
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        if let Some(s) = find_outermost(c, calc, path) {
            return Some(s);
        }
        path.pop();
    }
    None
}

fn find_innermost(t: &Term, calc: Calculus, path: &mut Vec<usize>) -> Option<Step> {
    let children = t.children();
    for i in (0..children.len()).rev() {
        path.push(i);
        if let Some(s) = find_innermost(children[i], calc, path) {
            return Some(s);
        }
        path.pop();
    }
    contract(t, calc).map(|(rule, reduct)| Step { position: path.clone(), rule, redex: t.clone(), reduct })
}

/// The leftmost-outermost contraction, or `None` on a normal form.
pub fn step(t: &Term, calc: Calculus) -> Option<(Step, Term)> {
    step_with(t, calc, Strategy::LeftmostOutermost)
}

pub fn step_with(t: &Term, calc: Calculus, strategy: Strategy) -> Option<(Step, Term)> {
    let mut path = Vec::new();
    let s = match strategy {
        Strategy::LeftmostOutermost => find_outermost(t, calc, &mut path),
        Strategy::RightmostInnermost => find_innermost(t, calc, &mut path),
    }?;
    let next = s.apply(t);
    Some((s, next))
}

pub fn normalize(t: &Term, calc: Calculus, fuel: usize) -> Result<(Term, Trace), RewriteError> {
    normalize_with(t, calc, fuel, Strategy::LeftmostOutermost)
}

pub fn normalize_with(
    t: &Term,
    calc: Calculus,
    fuel: usize,
    strategy: Strategy,
) -> Result<(Term, Trace), RewriteError> {
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while let Some((s, next)) = step_with(&cur, calc, strategy) {
        if steps.len() >= fuel {
            return Err(RewriteError::FuelExhausted { steps: steps.len(), last: cur });
        }
        steps.push(s);
        cur = next;
    }
    Ok((cur, Trace { start: t.clone(), steps }))
}

/// Breadth-first search for `target` from `start` using only steps accepted by `allow`.
/// Returns the length of a shortest path of at least `min_steps` steps.
pub fn reachable(
    start: &Term,
    target: &Term,
    calc: Calculus,
    max_depth: usize,
    min_steps: usize,
    allow: impl Fn(RuleName) -> bool,
) -> Option<usize> {
    if min_steps == 0 && start == target {
        return Some(0);
    }
    let mut seen: HashSet<(Term, bool)> = HashSet::new();
    let mut queue = VecDeque::from([(start.clone(), 0usize)]);
    seen.insert((start.clone(), min_steps == 0));
    while let Some((t, d)) = queue.pop_front() {
        if d == max_depth {
            continue;
        }
        for s in redexes(&t, calc).into_iter().filter(|s| allow(s.rule)) {
            let next = s.apply(&t);
            let nd = d + 1;
            if nd >= min_steps && next == *target {
                return Some(nd);
            }
            if seen.insert((next.clone(), nd >= min_steps)) {
                queue.push_back((next, nd));
            }
        }
    }
    None
}

/// Witness for postponing an eta step: `t ->r+ middle ->eta* u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Postponement {
    pub middle: Term,
    pub r_steps: usize,
    pub eta_steps: usize,
}

/// Given `t ->eta s ->rule u`, search for `t ->rule+ s' ->eta* u`, exploring
/// at most `max_r` steps of `rule` and `max_eta` eta steps.
pub fn postpone_eta(t: &Term, u: &Term, rule: RuleName, max_r: usize, max_eta: usize) -> Option<Postponement> {
    let mut seen: HashSet<Term> = HashSet::from([t.clone()]);
    let mut frontier = vec![t.clone()];
    for depth in 1..=max_r {
        let mut next = Vec::new();
        for s in &frontier {
            for st in redexes(s, Calculus::Eta).into_iter().filter(|st| st.rule == rule) {
                let m = st.apply(s);
                if !seen.insert(m.clone()) {
                    continue;
                }
                if let Some(k) = reachable(&m, u, Calculus::Eta, max_eta, 0, |r| r == RuleName::Eta) {
                    return Some(Postponement { middle: m, r_steps: depth, eta_steps: k });
                }
                next.push(m);
            }
        }
        frontier = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_mprop, parse_term, Sign};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn projection_at_root() {
        let (s, next) = step(&t("proj1+(pair+(x, y))"), Calculus::Plain).unwrap();
        assert_eq!((s.rule, s.position.len(), next), (RuleName::Proj, 0, t("x")));
    }

    #[test]
    fn negation_at_root() {
        let (s, next) = step(&t("nege+(negi+(q))"), Calculus::Plain).unwrap();
        assert_eq!((s.rule, next), (RuleName::Neg, t("q")));
    }

    #[test]
    fn signs_must_agree() {
        assert!(step(&t("proj1+(pair-(x, y))"), Calculus::Plain).is_none());
        assert!(step(&t("nege+(negi-(q))"), Calculus::Plain).is_none());
    }

    #[test]
    fn abs_neg_then_two_betas() {
        let src = "abs[c^s+](negi-(clam+(x : a^c-. pair+(x, x))), negi+(clam-(y : a^c+. pair-(y, y))))";
        let (out, trace) = normalize(&t(src), Calculus::Plain, 100).unwrap();
        let rules: Vec<_> = trace.steps.iter().map(|s| s.rule).collect();
        assert_eq!(rules, vec![RuleName::AbsNeg, RuleName::Beta, RuleName::Beta]);
        let expected = t("abs[c^s+](pair+(clam-(y : a^c+. pair-(y, y)), clam-(y : a^c+. pair-(y, y))), \
                          pair-(clam+(x : a^c-. pair+(x, x)), clam+(x : a^c-. pair+(x, x))))");
        assert_eq!(out, expected);
        assert_eq!(trace.replay(), out);
    }

    #[test]
    fn beta_and_eta() {
        let (out, tr) = normalize(&t("capp+(clam+(x : a^c-. x), s)"), Calculus::Plain, 10).unwrap();
        assert_eq!((out, tr.len()), (t("s"), 1));
        let eta = t("clam+(x : a^c-. capp+(f, x))");
        assert_eq!(normalize(&eta, Calculus::Eta, 10).unwrap().0, t("f"));
        assert_eq!(normalize(&eta, Calculus::Plain, 10).unwrap().0, eta);
        let blocked = t("clam+(x : a^c-. capp+(capp+(x, x), x))");
        assert!(step(&blocked, Calculus::Eta).is_none());
    }

    #[test]
    fn normal_input_has_empty_trace() {
        let (out, tr) = normalize(&t("pair+(x, y)"), Calculus::Eta, 10).unwrap();
        assert_eq!(out, t("pair+(x, y)"));
        assert!(tr.is_empty());
    }

    #[test]
    fn abs_pair_inj_expands_generalized_absurdity() {
        let q = parse_mprop("c^s+").unwrap();
        let r = contract(&t("abs[c^s+](pair+(a1, a2), in2-(s))"), Calculus::Plain).unwrap();
        let expected = Term::abs(q, Term::capp(Sign::Pos, t("a2"), t("s")), Term::capp(Sign::Neg, t("s"), t("a2")));
        assert_eq!(r, (RuleName::AbsPairInj, expected));
    }

    #[test]
    fn reduction_under_binders_keeps_indices() {
        let src = "clam+(z : a^c-. capp+(clam+(x : a^c-. pair+(x, z)), z))";
        let (out, _) = normalize(&t(src), Calculus::Plain, 10).unwrap();
        assert_eq!(out, t("clam+(z : a^c-. pair+(z, z))"));
    }

    #[test]
    fn fuel() {
        let e = normalize(&t("proj1+(pair+(proj1+(pair+(x, y)), y))"), Calculus::Plain, 1).unwrap_err();
        assert!(matches!(e, RewriteError::FuelExhausted { steps: 1, .. }));
    }

    #[test]
    fn strategies_agree() {
        let src = "capp+(clam+(x : a^c-. proj1+(pair+(x, nege+(negi+(x))))), proj2-(pair-(p, q)))";
        let a = normalize_with(&t(src), Calculus::Plain, 100, Strategy::LeftmostOutermost).unwrap().0;
        let b = normalize_with(&t(src), Calculus::Plain, 100, Strategy::RightmostInnermost).unwrap().0;
        assert_eq!(a, b);
        assert_eq!(a, t("q"));
    }
}
