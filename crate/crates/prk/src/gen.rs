//! Seeded generators and exhaustive enumerators for propositions and typed terms.
//!
//! Used by the property suites. Every random source derives from `PRK_SEED`
//! when set, so failing runs can be reproduced.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Context, Idx, MProp, Mode, Prop, Sign, Strength, Term};
use crate::typing::clam_vacuous;

pub const DEFAULT_SEED: u64 = 0x5052_4b5f_7365_6564;

/// The seed from `PRK_SEED`, or a fixed default.
pub fn seed_from_env() -> u64 {
    std::env::var("PRK_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

/// A deterministic generator for `stream`, derived from the environment seed.
pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed_from_env());
    r.set_stream(stream);
    r
}

/// A random pure proposition of depth at most `depth` (a variable has depth 1).
pub fn random_prop(rng: &mut impl Rng, atoms: &[&str], depth: usize) -> Prop {
    if depth <= 1 || rng.gen_bool(0.3) {
        return Prop::var(atoms.choose(rng).expect("at least one atom"));
    }
    match rng.gen_range(0..3) {
        0 => Prop::neg(random_prop(rng, atoms, depth - 1)),
        1 => Prop::and(random_prop(rng, atoms, depth - 1), random_prop(rng, atoms, depth - 1)),
        _ => Prop::or(random_prop(rng, atoms, depth - 1), random_prop(rng, atoms, depth - 1)),
    }
}

pub fn random_mode(rng: &mut impl Rng) -> Mode {
    Mode::ALL[rng.gen_range(0..4)]
}

pub fn random_mprop(rng: &mut impl Rng, atoms: &[&str], depth: usize) -> MProp {
    MProp::new(random_prop(rng, atoms, depth), random_mode(rng))
}

/// Every pure proposition over `atoms` of depth at most `depth`.
pub fn props_up_to_depth(atoms: &[&str], depth: usize) -> Vec<Prop> {
    let mut levels: Vec<Prop> = Vec::new();
    if depth == 0 {
        return levels;
    }
    levels.extend(atoms.iter().map(|a| Prop::var(a)));
    for _ in 1..depth {
        let prev = levels.clone();
        let mut next: Vec<Prop> = atoms.iter().map(|a| Prop::var(a)).collect();
        for a in &prev {
            next.push(Prop::neg(a.clone()));
        }
        for a in &prev {
            for b in &prev {
                next.push(Prop::and(a.clone(), b.clone()));
                next.push(Prop::or(a.clone(), b.clone()));
            }
        }
        levels = next;
    }
    levels
}

/// Top-down generator of well-typed terms.
pub struct TermGen<'r, R: Rng> {
    rng: &'r mut R,
    atoms: Vec<String>,
    budget: usize,
    counter: usize,
    /// Chance of taking a matching variable when one is available.
    pub var_bias: f64,
    /// Chance of building an introduction immediately eliminated, a redex.
    pub detour_bias: f64,
}

impl<'r, R: Rng> TermGen<'r, R> {
    pub fn new(rng: &'r mut R, atoms: &[&str]) -> Self {
        TermGen {
            rng,
            atoms: atoms.iter().map(|s| s.to_string()).collect(),
            budget: 0,
            counter: 0,
            var_bias: 0.35,
            detour_bias: 0.2,
        }
    }

    fn small_prop(&mut self) -> Prop {
        let atoms: Vec<&str> = self.atoms.iter().map(String::as_str).collect();
        random_prop(self.rng, &atoms, 2)
    }

    fn fresh(&mut self) -> String {
        self.counter += 1;
        format!("g{}", self.counter)
    }

    /// A term of type `goal` under `ctx`, built with at most `depth` nested formers.
    pub fn term(&mut self, ctx: &Context, goal: &MProp, depth: usize) -> Option<Term> {
        self.budget = 400;
        self.go(ctx, goal, depth)
    }

    fn go(&mut self, ctx: &Context, goal: &MProp, depth: usize) -> Option<Term> {
        if self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        let vars: Vec<String> = ctx.iter().filter(|(_, p)| *p == goal).map(|(x, _)| x.to_string()).collect();
        if !vars.is_empty() && (depth == 0 || self.rng.gen_bool(self.var_bias)) {
            return Some(Term::var(vars.choose(self.rng)?));
        }
        if depth == 0 {
            return None;
        }
        if self.rng.gen_bool(self.detour_bias) {
            if let Some(t) = self.detour(ctx, goal, depth - 1) {
                return Some(t);
            }
        }
        let mut moves: Vec<u8> = (0..10).collect();
        moves.shuffle(self.rng);
        for m in moves {
            if let Some(t) = self.production(m, ctx, goal, depth - 1) {
                return Some(t);
            }
            if self.budget == 0 {
                return None;
            }
        }
        if !vars.is_empty() {
            return Some(Term::var(&vars[0]));
        }
        None
    }

    fn production(&mut self, m: u8, ctx: &Context, goal: &MProp, d: usize) -> Option<Term> {
        let g = goal.sign();
        let cl = |p: &Prop, s: Sign| MProp::new(p.clone(), Mode::classical(s));
        let st = |p: Prop, s: Sign| MProp::new(p, Mode::strong(s));
        match (m, goal.mode.strength, &goal.base) {
            // introductions
            (0, Strength::Classical, a) => {
                let x = self.fresh();
                let inner = ctx.extended(&x, cl(a, g.flip())).ok()?;
                let body = self.go(&inner, &st(a.clone(), g), d)?;
                Some(Term::clam(g, &x, cl(a, g.flip()), body))
            }
            (0, Strength::Strong, Prop::And(a, b)) if g == Sign::Pos => {
                Some(Term::pair(g, self.go(ctx, &cl(a, g), d)?, self.go(ctx, &cl(b, g), d)?))
            }
            (0, Strength::Strong, Prop::Or(a, b)) if g == Sign::Neg => {
                Some(Term::pair(g, self.go(ctx, &cl(a, g), d)?, self.go(ctx, &cl(b, g), d)?))
            }
            (0, Strength::Strong, Prop::Or(a, b)) | (0, Strength::Strong, Prop::And(a, b)) => {
                let i = if self.rng.gen_bool(0.5) { Idx::One } else { Idx::Two };
                let part = i.pick(a, b);
                Some(Term::inj(g, i, self.go(ctx, &cl(part, g), d)?))
            }
            (0, Strength::Strong, Prop::Neg(a)) => Some(Term::negi(g, self.go(ctx, &cl(a, g.flip()), d)?)),
            // eliminations producing classical conclusions
            (1, Strength::Classical, a) => {
                let other = self.small_prop();
                let i = if self.rng.gen_bool(0.5) { Idx::One } else { Idx::Two };
                let (l, r) = i.pick((a.clone(), other.clone()), (other, a.clone()));
                let whole = if g == Sign::Pos { Prop::and(l, r) } else { Prop::or(l, r) };
                Some(Term::proj(g, i, self.go(ctx, &st(whole, g), d)?))
            }
            (2, Strength::Classical, a) => {
                Some(Term::nege(g.flip(), self.go(ctx, &st(Prop::neg(a.clone()), g.flip()), d)?))
            }
            (3, Strength::Strong, a) => {
                let t = self.go(ctx, &cl(a, g), d)?;
                let s = self.go(ctx, &cl(a, g.flip()), d)?;
                Some(Term::capp(g, t, s))
            }
            (4, _, _) => {
                let h = if self.rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                let (a, b) = (self.small_prop(), self.small_prop());
                let whole =
                    if h == Sign::Pos { Prop::or(a.clone(), b.clone()) } else { Prop::and(a.clone(), b.clone()) };
                self.case_on(ctx, goal, d, h, st(whole, h), &a, &b, None)
            }
            (5, _, _) => {
                let r = st(self.small_prop(), if self.rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg });
                let t = self.go(ctx, &r, d)?;
                let s = self.go(ctx, &r.opposite(), d)?;
                Some(Term::abs(goal.clone(), t, s))
            }
            // eliminations driven by an assumption
            (6..=9, _, _) => self.eliminate_assumption(ctx, goal, d),
            _ => None,
        }
    }

    /// A redex of type `goal`: an introduction placed under the matching elimination.
    fn detour(&mut self, ctx: &Context, goal: &MProp, d: usize) -> Option<Term> {
        let g = goal.sign();
        let cl = |p: &Prop, s: Sign| MProp::new(p.clone(), Mode::classical(s));
        let a = goal.base.clone();
        let i = if self.rng.gen_bool(0.5) { Idx::One } else { Idx::Two };
        match (self.rng.gen_range(0..5), goal.is_classical()) {
            (0, true) => {
                // proj(pair(t1, t2))
                let other = self.small_prop();
                let (l, r) = i.pick((a.clone(), other.clone()), (other, a.clone()));
                let (t1, t2) = (self.go(ctx, &cl(&l, g), d)?, self.go(ctx, &cl(&r, g), d)?);
                Some(Term::proj(g, i, Term::pair(g, t1, t2)))
            }
            (1, true) => {
                // nege(negi(t))
                Some(Term::nege(g.flip(), Term::negi(g.flip(), self.go(ctx, goal, d)?)))
            }
            (2, false) => {
                // capp(clam(x. body), s)
                let x = self.fresh();
                let inner = ctx.extended(&x, cl(&a, g.flip())).ok()?;
                let body = self.go(&inner, goal, d)?;
                let s = self.go(ctx, &cl(&a, g.flip()), d)?;
                Some(Term::capp(g, Term::clam(g, &x, cl(&a, g.flip()), body), s))
            }
            (3, _) => {
                // case(inj(t), x. s1, y. s2)
                let h = if self.rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                let (l, r) = (self.small_prop(), self.small_prop());
                let t = self.go(ctx, &cl(i.pick(&l, &r), h), d)?;
                let whole =
                    if h == Sign::Pos { Prop::or(l.clone(), r.clone()) } else { Prop::and(l.clone(), r.clone()) };
                let scrut = Term::inj(h, i, t);
                self.case_on(ctx, goal, d, h, MProp::new(whole, Mode::strong(h)), &l, &r, Some(scrut))
            }
            (4, false) => {
                // abs over two opposite introductions
                let b = self.small_prop();
                match self.rng.gen_range(0..3) {
                    0 => {
                        let c = self.small_prop();
                        let (t1, t2) = (self.go(ctx, &cl(&b, Sign::Pos), d)?, self.go(ctx, &cl(&c, Sign::Pos), d)?);
                        let u = self.go(ctx, &cl(i.pick(&b, &c), Sign::Neg), d)?;
                        Some(Term::abs(goal.clone(), Term::pair(Sign::Pos, t1, t2), Term::inj(Sign::Neg, i, u)))
                    }
                    1 => {
                        let c = self.small_prop();
                        let u = self.go(ctx, &cl(i.pick(&b, &c), Sign::Pos), d)?;
                        let (t1, t2) = (self.go(ctx, &cl(&b, Sign::Neg), d)?, self.go(ctx, &cl(&c, Sign::Neg), d)?);
                        Some(Term::abs(goal.clone(), Term::inj(Sign::Pos, i, u), Term::pair(Sign::Neg, t1, t2)))
                    }
                    _ => {
                        let t = self.go(ctx, &cl(&b, Sign::Neg), d)?;
                        let s = self.go(ctx, &cl(&b, Sign::Pos), d)?;
                        Some(Term::abs(goal.clone(), Term::negi(Sign::Pos, t), Term::negi(Sign::Neg, s)))
                    }
                }
            }
            _ => None,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn case_on(
        &mut self,
        ctx: &Context,
        goal: &MProp,
        d: usize,
        h: Sign,
        scrut_ty: MProp,
        a: &Prop,
        b: &Prop,
        scrut: Option<Term>,
    ) -> Option<Term> {
        let scrut = match scrut {
            Some(s) => s,
            None => self.go(ctx, &scrut_ty, d)?,
        };
        let (ta, tb) = (MProp::new(a.clone(), Mode::classical(h)), MProp::new(b.clone(), Mode::classical(h)));
        let x = self.fresh();
        let y = self.fresh();
        let s1 = self.go(&ctx.extended(&x, ta.clone()).ok()?, goal, d)?;
        let s2 = self.go(&ctx.extended(&y, tb.clone()).ok()?, goal, d)?;
        Some(Term::case(h, scrut, &x, ta, s1, &y, tb, s2))
    }

    fn eliminate_assumption(&mut self, ctx: &Context, goal: &MProp, d: usize) -> Option<Term> {
        let mut entries: Vec<(String, MProp)> = ctx.iter().map(|(x, p)| (x.to_string(), p.clone())).collect();
        entries.shuffle(self.rng);
        let g = goal.sign();
        for (x, p) in entries {
            let v = Term::var(&x);
            let h = p.sign();
            match (p.mode.strength, &p.base) {
                (Strength::Strong, Prop::And(a, b)) | (Strength::Strong, Prop::Or(a, b))
                    if goal.is_classical() && h == g && matches!(p.base, Prop::And(..)) == (h == Sign::Pos) =>
                {
                    if **a == goal.base {
                        return Some(Term::proj(h, Idx::One, v));
                    }
                    if **b == goal.base {
                        return Some(Term::proj(h, Idx::Two, v));
                    }
                }
                _ => {}
            }
            match (p.mode.strength, &p.base) {
                (Strength::Strong, Prop::Neg(a)) if goal.is_classical() && **a == goal.base && g == h.flip() => {
                    return Some(Term::nege(h, v));
                }
                (Strength::Classical, a) if goal.is_strong() && *a == goal.base && g == h => {
                    let s = self.go(ctx, &p.opposite(), d)?;
                    return Some(Term::capp(h, v, s));
                }
                (Strength::Strong, Prop::Or(a, b)) if h == Sign::Pos => {
                    let (a, b) = ((**a).clone(), (**b).clone());
                    return self.case_on(ctx, goal, d, h, p.clone(), &a, &b, Some(v));
                }
                (Strength::Strong, Prop::And(a, b)) if h == Sign::Neg => {
                    let (a, b) = ((**a).clone(), (**b).clone());
                    return self.case_on(ctx, goal, d, h, p.clone(), &a, &b, Some(v));
                }
                (Strength::Strong, _) if self.rng.gen_bool(0.3) => {
                    let s = self.go(ctx, &p.opposite(), d)?;
                    return Some(Term::abs(goal.clone(), v, s));
                }
                _ => {}
            }
        }
        None
    }
}

/// A random context of `n` assumptions named `x0..`.
pub fn random_context(rng: &mut impl Rng, atoms: &[&str], n: usize, depth: usize) -> Context {
    let mut ctx = Context::new();
    for i in 0..n {
        ctx.insert(&format!("x{i}"), random_mprop(rng, atoms, depth)).expect("distinct names");
    }
    ctx
}

/// A random classical context.
pub fn random_classical_context(rng: &mut impl Rng, atoms: &[&str], n: usize, depth: usize) -> Context {
    let mut ctx = Context::new();
    for i in 0..n {
        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
        ctx.insert(&format!("x{i}"), MProp::new(random_prop(rng, atoms, depth), Mode::classical(sign)))
            .expect("distinct names");
    }
    ctx
}

/// A typed corpus entry.
#[derive(Clone, Debug)]
pub struct Typed {
    pub context: Context,
    pub term: Term,
    pub ty: MProp,
}

/// Generate `count` distinct typed terms of size at most `max_size`.
pub fn typed_corpus(rng: &mut impl Rng, count: usize, max_size: usize, classical_only: bool) -> Vec<Typed> {
    let atoms = ["a", "b"];
    let mut out: Vec<Typed> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let n = rng.gen_range(1..=3);
        let ctx = if classical_only {
            random_classical_context(rng, &atoms, n, 2)
        } else {
            random_context(rng, &atoms, n, 2)
        };
        let goal = random_mprop(rng, &atoms, 2);
        let depth = rng.gen_range(2..=5);
        let mut g = TermGen::new(rng, &atoms);
        let Some(term) = g.term(&ctx, &goal, depth) else { continue };
        if term.size() > max_size || !seen.insert(term.clone()) {
            continue;
        }
        out.push(Typed { context: ctx, term, ty: goal });
    }
    out
}

/// Closed typed terms.
///
/// Terms are grown forwards from excluded-middle and non-contradiction
/// assumptions, then the closed witnesses are substituted for them.
pub fn closed_corpus(rng: &mut impl Rng, count: usize, max_size: usize) -> Vec<Typed> {
    let atoms = ["a", "b"];
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 {
        attempts += 1;
        let mut witnesses = Vec::new();
        let mut pool: Vec<(Term, MProp)> = Vec::new();
        for i in 0..rng.gen_range(1..=2) {
            let a = random_prop(rng, &atoms, 1);
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            let na = Prop::neg(a.clone());
            let base = if sign == Sign::Pos { Prop::or(a.clone(), na) } else { Prop::and(a.clone(), na) };
            let x = format!("h{i}");
            pool.push((Term::var(&x), MProp::new(base, Mode::classical(sign))));
            witnesses.push((x, crate::typing::mk_lem(&a, sign)));
        }
        for _ in 0..rng.gen_range(1..=6) {
            if let Some(next) = forward_step(rng, &pool) {
                pool.push(next);
            }
        }
        let (open, ty) = pool.last().cloned().expect("pool is never empty");
        let term = witnesses.iter().fold(open, |t, (x, w)| t.substitute(x, w));
        if term.size() > max_size || !term.free_vars().is_empty() || !seen.insert(term.clone()) {
            continue;
        }
        out.push(Typed { context: Context::new(), term, ty });
    }
    out
}

/// Apply one random former to members of `pool`, all closed over the `h` assumptions.
fn forward_step(rng: &mut impl Rng, pool: &[(Term, MProp)]) -> Option<(Term, MProp)> {
    let (t, p) = pool.choose(rng)?.clone();
    let g = p.sign();
    let cl = |p: &Prop, s: Sign| MProp::new(p.clone(), Mode::classical(s));
    let st = |p: Prop, s: Sign| MProp::new(p, Mode::strong(s));
    match (p.mode.strength, &p.base) {
        (Strength::Classical, a) => match rng.gen_range(0..4) {
            0 => Some((Term::negi(g.flip(), t), st(Prop::neg(a.clone()), g.flip()))),
            1 => {
                let (u, q) = pool.choose(rng)?.clone();
                if q.is_classical() && q.sign() == g {
                    let join = if g == Sign::Pos { Prop::and } else { Prop::or };
                    Some((Term::pair(g, t, u), st(join(a.clone(), q.base.clone()), g)))
                } else {
                    None
                }
            }
            2 => {
                let other = random_prop(rng, &["a", "b"], 2);
                let join = if g == Sign::Pos { Prop::or } else { Prop::and };
                if rng.gen_bool(0.5) {
                    Some((Term::inj(g, Idx::One, t), st(join(a.clone(), other), g)))
                } else {
                    Some((Term::inj(g, Idx::Two, t), st(join(other, a.clone()), g)))
                }
            }
            _ => {
                // a classical lambda whose body uses its binder
                let x = "k";
                let body = Term::capp(g, t.clone(), Term::var(x));
                let lam = Term::clam(g, x, p.opposite(), body);
                Some((lam, p.clone()))
            }
        },
        (Strength::Strong, Prop::And(a, b)) if g == Sign::Pos && rng.gen_bool(0.6) => {
            let i = if rng.gen_bool(0.5) { Idx::One } else { Idx::Two };
            Some((Term::proj(g, i, t), cl(i.pick(a, b), g)))
        }
        (Strength::Strong, Prop::Or(a, b)) if g == Sign::Neg && rng.gen_bool(0.6) => {
            let i = if rng.gen_bool(0.5) { Idx::One } else { Idx::Two };
            Some((Term::proj(g, i, t), cl(i.pick(a, b), g)))
        }
        (Strength::Strong, Prop::Or(a, b)) | (Strength::Strong, Prop::And(a, b))
            if (g == Sign::Pos) == matches!(p.base, Prop::Or(..)) && rng.gen_bool(0.6) =>
        {
            // branches reuse the injected component or a pool member
            let (u, q) = pool.choose(rng)?.clone();
            let (ta, tb) = (cl(a, g), cl(b, g));
            let (left, right) = if rng.gen_bool(0.5) { (u.clone(), u) } else { (Term::var("y"), Term::var("z")) };
            let q = if left == Term::var("y") {
                if ta != tb {
                    return None;
                }
                ta.clone()
            } else {
                q
            };
            Some((Term::case(g, t, "y", ta, left, "z", tb, right), q))
        }
        (Strength::Strong, Prop::Neg(a)) if rng.gen_bool(0.6) => Some((Term::nege(g, t), cl(a, g.flip()))),
        (Strength::Strong, _) => Some((clam_vacuous(g, p.truncate().opposite(), t), p.truncate())),
    }
}

/// Exhaustive enumeration of well-typed terms by size.
///
type Memo = HashMap<(Vec<MProp>, usize), Vec<(Term, MProp)>>;

/// Binder and injection annotations range over `universe`; `abs` annotations over `abs_targets`.
pub struct Enumerator {
    base: Context,
    universe: Vec<Prop>,
    abs_targets: Vec<MProp>,
    memo: Memo,
}

impl Enumerator {
    pub fn new(base: Context, universe: Vec<Prop>, abs_targets: Vec<MProp>) -> Self {
        Enumerator { base, universe, abs_targets, memo: HashMap::new() }
    }

    /// All typed terms of size exactly `n` under the base context.
    pub fn of_size(&mut self, n: usize) -> Vec<(Term, MProp)> {
        self.enumerate(&[], n)
    }

    fn binder_name(depth: usize) -> String {
        format!("v{depth}")
    }

    fn enumerate(&mut self, stack: &[MProp], n: usize) -> Vec<(Term, MProp)> {
        let key = (stack.to_vec(), n);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let out = self.compute(stack, n);
        self.memo.insert(key, out.clone());
        out
    }

    fn under(&mut self, stack: &[MProp], ty: &MProp, n: usize) -> Vec<(Term, MProp)> {
        let mut s = stack.to_vec();
        s.push(ty.clone());
        self.enumerate(&s, n)
    }

    fn compute(&mut self, stack: &[MProp], n: usize) -> Vec<(Term, MProp)> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        if n == 1 {
            for (x, p) in self.base.iter() {
                out.push((Term::Var(x.clone()), p.clone()));
            }
            for (i, p) in stack.iter().enumerate() {
                out.push((Term::var(&Enumerator::binder_name(i)), p.clone()));
            }
            return out;
        }
        let cl = |p: &Prop, s: Sign| MProp::new(p.clone(), Mode::classical(s));
        let st = |p: Prop, s: Sign| MProp::new(p, Mode::strong(s));
        let universe = self.universe.clone();
        // unary formers
        for (t, p) in self.enumerate(stack, n - 1) {
            let g = p.sign();
            match (p.mode.strength, &p.base) {
                (Strength::Strong, Prop::And(a, b)) if g == Sign::Pos => {
                    out.push((Term::proj(g, Idx::One, t.clone()), cl(a, g)));
                    out.push((Term::proj(g, Idx::Two, t.clone()), cl(b, g)));
                }
                (Strength::Strong, Prop::Or(a, b)) if g == Sign::Neg => {
                    out.push((Term::proj(g, Idx::One, t.clone()), cl(a, g)));
                    out.push((Term::proj(g, Idx::Two, t.clone()), cl(b, g)));
                }
                (Strength::Strong, Prop::Neg(a)) => out.push((Term::nege(g, t.clone()), cl(a, g.flip()))),
                (Strength::Classical, a) => {
                    out.push((Term::negi(g.flip(), t.clone()), st(Prop::neg(a.clone()), g.flip())));
                    for other in &universe {
                        let join = |l: Prop, r: Prop| if g == Sign::Pos { Prop::or(l, r) } else { Prop::and(l, r) };
                        out.push((Term::inj(g, Idx::One, t.clone()), st(join(a.clone(), other.clone()), g)));
                        out.push((Term::inj(g, Idx::Two, t.clone()), st(join(other.clone(), a.clone()), g)));
                    }
                }
                _ => {}
            }
        }
        // classical lambdas
        let depth = stack.len();
        for a in &universe {
            for g in [Sign::Pos, Sign::Neg] {
                let ty = cl(a, g.flip());
                let name = Enumerator::binder_name(depth);
                for (body, q) in self.under(stack, &ty, n - 1) {
                    if q == st(a.clone(), g) {
                        out.push((Term::clam(g, &name, ty.clone(), body), ty.opposite()));
                    }
                }
            }
        }
        // binary formers
        for k in 1..n - 1 {
            let left = self.enumerate(stack, k);
            let right = self.enumerate(stack, n - 1 - k);
            for (t, p) in &left {
                for (s, r) in &right {
                    if p.is_classical() && r.is_classical() && p.sign() == r.sign() {
                        let g = p.sign();
                        let base = if g == Sign::Pos {
                            Prop::and(p.base.clone(), r.base.clone())
                        } else {
                            Prop::or(p.base.clone(), r.base.clone())
                        };
                        out.push((Term::pair(g, t.clone(), s.clone()), st(base, g)));
                    }
                    if p.is_classical() && *r == p.opposite() {
                        out.push((Term::capp(p.sign(), t.clone(), s.clone()), p.strengthen()));
                    }
                    if p.is_strong() && *r == p.opposite() {
                        for q in &self.abs_targets {
                            out.push((Term::abs(q.clone(), t.clone(), s.clone()), q.clone()));
                        }
                    }
                }
            }
        }
        // case analysis
        for k1 in 1..n - 1 {
            for (t, p) in self.enumerate(stack, k1) {
                let g = p.sign();
                let parts = match (&p.mode.strength, &p.base) {
                    (Strength::Strong, Prop::Or(a, b)) if g == Sign::Pos => Some((a.clone(), b.clone())),
                    (Strength::Strong, Prop::And(a, b)) if g == Sign::Neg => Some((a.clone(), b.clone())),
                    _ => None,
                };
                let Some((a, b)) = parts else { continue };
                let (ta, tb) = (cl(&a, g), cl(&b, g));
                let name = Enumerator::binder_name(depth);
                for k2 in 1..n - 1 - k1 {
                    let k3 = n - 1 - k1 - k2;
                    let lefts = self.under(stack, &ta, k2);
                    let rights = self.under(stack, &tb, k3);
                    for (s1, q1) in &lefts {
                        for (s2, q2) in &rights {
                            if q1 == q2 {
                                let term = Term::case(
                                    g,
                                    t.clone(),
                                    &name,
                                    ta.clone(),
                                    s1.clone(),
                                    &name,
                                    tb.clone(),
                                    s2.clone(),
                                );
                                out.push((term, q1.clone()));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Vacuous classical lambda, exposed for generators of closed witnesses.
pub fn vacuous_clam(sign: Sign, ty: MProp, body: Term) -> Term {
    clam_vacuous(sign, ty, body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typing::check_type;

    #[test]
    fn generated_terms_typecheck() {
        let mut r = rng(1);
        let corpus = typed_corpus(&mut r, 100, 40, false);
        assert!(corpus.len() >= 90, "only {} terms", corpus.len());
        for e in &corpus {
            check_type(&e.context, &e.term, &e.ty).unwrap();
        }
    }

    #[test]
    fn closed_terms_are_closed_and_typed() {
        let mut r = rng(2);
        let corpus = closed_corpus(&mut r, 20, 120);
        assert!(corpus.len() >= 10, "only {} terms", corpus.len());
        for e in &corpus {
            assert!(e.term.free_vars().is_empty());
            check_type(&e.context, &e.term, &e.ty).unwrap();
        }
    }

    #[test]
    fn prop_enumeration_counts() {
        assert_eq!(props_up_to_depth(&["a"], 1).len(), 1);
        assert_eq!(props_up_to_depth(&["a"], 2).len(), 4);
        assert_eq!(props_up_to_depth(&["a"], 3).len(), 1 + 4 + 32);
    }

    #[test]
    fn enumerated_terms_typecheck() {
        let base = Context::from_entries([
            ("x", MProp::new(Prop::var("a"), Mode::CLASSICAL_POS)),
            ("y", MProp::new(Prop::var("a"), Mode::CLASSICAL_NEG)),
        ])
        .unwrap();
        let mut e =
            Enumerator::new(base.clone(), vec![Prop::var("a")], vec![MProp::new(Prop::var("a"), Mode::STRONG_POS)]);
        for n in 1..=5 {
            for (t, p) in e.of_size(n) {
                assert_eq!(t.size(), n);
                check_type(&base, &t, &p).unwrap();
            }
        }
    }
}
