//! Seeded properties of propositions, terms and typing.

use std::collections::BTreeSet;

use rand::seq::IteratorRandom;

use prk::gen::{random_mprop, random_prop, rng, typed_corpus, TermGen};
use prk::syntax::{parse_mprop, parse_term, MProp, Mode, Name, Prop, Term};
use prk::typing::{check_type, infer_type};

fn occurrences(t: &Term, out: &mut BTreeSet<Name>) {
    if let Term::Var(x) = t {
        out.insert(x.clone());
    }
    for c in t.children() {
        occurrences(c, out);
    }
}

#[test]
fn opposite_and_truncation_laws() {
    let mut r = rng(201);
    for _ in 0..500 {
        let p = random_mprop(&mut r, &["a", "b", "c"], 4);
        assert_eq!(p.opposite().opposite(), p);
        assert_eq!(p.truncate().truncate(), p.truncate());
        assert_eq!(p.opposite().truncate(), p.truncate().opposite());
        assert_eq!(p.dual().dual(), p);
        if p.is_classical() {
            assert_eq!(p.measure(), p.opposite().measure());
        }
    }
}

#[test]
fn measure_decreases_into_premises() {
    let mut r = rng(202);
    for _ in 0..500 {
        let a = random_prop(&mut r, &["a", "b"], 3);
        let b = random_prop(&mut r, &["a", "b"], 3);
        for m in Mode::ALL {
            let whole_s = |p: Prop| MProp::new(p, Mode::strong(m.sign)).measure();
            let part = MProp::new(a.clone(), m).measure();
            assert!(part < whole_s(Prop::and(a.clone(), b.clone())));
            assert!(part < whole_s(Prop::or(b.clone(), a.clone())));
            assert!(part < whole_s(Prop::neg(a.clone())));
        }
        let strong = MProp::new(a.clone(), Mode::STRONG_POS);
        assert!(strong.measure() < strong.truncate().measure());
    }
}

#[test]
fn printing_then_parsing_is_identity() {
    let mut r = rng(203);
    for _ in 0..1000 {
        let p = random_mprop(&mut r, &["a", "b", "c"], 4);
        assert_eq!(parse_mprop(&p.to_string()).unwrap(), p);
    }
    for e in typed_corpus(&mut r, 1000, 40, false) {
        assert_eq!(parse_term(&e.term.to_string()).unwrap(), e.term, "{}", e.term);
    }
}

#[test]
fn free_variables_after_substitution() {
    let mut r = rng(204);
    let corpus = typed_corpus(&mut r, 300, 30, false);
    for w in corpus.windows(2) {
        let (t, s) = (&w[0].term, &w[1].term);
        let fv = t.free_vars();
        let Some(x) = fv.iter().choose(&mut r).cloned() else { continue };
        let out = t.substitute(&x, s);
        let mut scanned = BTreeSet::new();
        occurrences(&out, &mut scanned);
        assert_eq!(out.free_vars(), scanned, "{out}");
        let mut want: BTreeSet<Name> = fv.into_iter().filter(|y| *y != x).collect();
        want.extend(s.free_vars());
        assert_eq!(scanned, want);
    }
}

#[test]
fn weakening() {
    let mut r = rng(205);
    for e in typed_corpus(&mut r, 300, 40, false) {
        let q = random_mprop(&mut r, &["a", "b", "c"], 3);
        let wider = e.context.extended("fresh_w", q).unwrap();
        // checking mode: terms like injections only check against a given type
        let d = check_type(&wider, &e.term, &e.ty).unwrap();
        d.validate().unwrap();
        if let Ok(narrow) = infer_type(&e.context, &e.term) {
            assert_eq!(infer_type(&wider, &e.term).unwrap().conclusion, narrow.conclusion);
        }
    }
}

#[test]
fn cut() {
    let mut r = rng(206);
    let corpus = typed_corpus(&mut r, 1000, 40, false);
    let mut cuts = 0;
    for e in &corpus {
        let Some((x, p)) = e.context.iter().filter(|(x, _)| e.term.free_vars().contains(*x)).choose(&mut r) else {
            continue;
        };
        let (x, p) = (x.to_string(), p.clone());
        let rest = e.context.without(&x);
        let Some(s) = (1..=4).find_map(|depth| TermGen::new(&mut r, &["a", "b"]).term(&rest, &p, depth)) else {
            continue;
        };
        let cut = e.term.substitute(&x, &s);
        check_type(&rest, &cut, &e.ty).unwrap_or_else(|err| panic!("{} [{x} := {s}]: {err}", e.term));
        cuts += 1;
    }
    assert!(cuts >= 100, "only {cuts} cuts");
}

#[test]
fn duality() {
    let mut r = rng(207);
    for e in typed_corpus(&mut r, 500, 40, false) {
        let d = check_type(&e.context.dual(), &e.term.dual(), &e.ty.dual()).unwrap();
        d.validate().unwrap();
        assert_eq!(e.term.dual().dual(), e.term);
    }
    // and ill-typed terms stay ill-typed
    let ctx = prk::syntax::Context::from_entries([("x", parse_mprop("a^s+").unwrap())]).unwrap();
    let t = Term::var("x");
    assert!(check_type(&ctx, &t, &parse_mprop("a^s-").unwrap()).is_err());
    assert!(check_type(&ctx.dual(), &t.dual(), &parse_mprop("a^s+").unwrap()).is_err());
}

#[test]
fn derivations_validate() {
    let mut r = rng(208);
    for e in typed_corpus(&mut r, 500, 40, false) {
        let d = check_type(&e.context, &e.term, &e.ty).unwrap();
        d.validate().unwrap_or_else(|err| panic!("{}: {err}", e.term));
    }
}
