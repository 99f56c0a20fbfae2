//! Classical embedding: soundness on random proofs, conservativity of the
//! provable library, and the combinator computation rules on closed pieces.

use rand::seq::SliceRandom;
use rand::Rng;

use prk::classical::{classem, embed_nk, nk_context, random_nk_proof, run_classical_rule, tt_valid, ClassicalRule};
use prk::gen::{closed_corpus, random_prop, rng, TermGen};
use prk::library::provable_library;
use prk::rewrite::{normalize, Calculus};
use prk::syntax::{Context, Idx, MProp, Mode, Prop, Term};
use prk::typing::check_type;

fn cplus(a: &Prop) -> MProp {
    MProp::new(a.clone(), Mode::CLASSICAL_POS)
}

#[test]
fn embedding_of_random_proofs_is_well_typed() {
    let mut r = rng(401);
    let atoms = ["a", "b", "c"];
    let mut heights = [0usize; 5];
    for _ in 0..50 {
        let n = r.gen_range(0..=2);
        let hyps: Vec<Prop> = (0..n).map(|_| random_prop(&mut r, &atoms, 2)).collect();
        let height = r.gen_range(1..=4);
        let proof = random_nk_proof(&mut r, &atoms, &hyps, height);
        proof.check().unwrap();
        assert!(proof.height() <= 4 + 1);
        heights[proof.height().min(4)] += 1;
        assert!(tt_valid(&proof.hyps, &proof.conclusion), "{proof}");
        let term = embed_nk(&proof).unwrap();
        check_type(&nk_context(&proof.hyps), &term, &cplus(&proof.conclusion))
            .unwrap_or_else(|e| panic!("{proof}: {e}"));
    }
    assert!(heights[3] + heights[4] > 0, "no deep proofs sampled: {heights:?}");
}

#[test]
fn provable_library_is_classically_valid() {
    let lib = provable_library().unwrap();
    assert_eq!(lib.len(), 20);
    for e in &lib {
        check_type(&e.context, &e.term, &e.conclusion).unwrap();
        let hyps: Vec<Prop> = e.context.iter().map(|(_, p)| classem(p)).collect();
        assert!(tt_valid(&hyps, &classem(&e.conclusion)), "{}", e.name);
    }
}

/// Normalizing the redex side and the stated reduct must meet.
fn joins(rule: &ClassicalRule) {
    let out = run_classical_rule(rule).unwrap_or_else(|e| panic!("{}: {e}", rule.redex));
    let (nf, _) = normalize(&rule.reduct, Calculus::Eta, 100_000).unwrap();
    assert_eq!(out.normal_form, nf, "{} vs {}", rule.redex, rule.reduct);
}

fn piece(r: &mut impl Rng, ctx: &Context, ty: &MProp) -> Option<Term> {
    (2..=5).find_map(|k| TermGen::new(r, &["a", "b"]).term(ctx, ty, k))
}

#[test]
fn computation_rules_with_closed_pieces() {
    let mut r = rng(402);
    let pool: Vec<(Term, Prop)> = closed_corpus(&mut r, 200, 150)
        .into_iter()
        .filter(|e| e.ty.mode == Mode::CLASSICAL_POS)
        .map(|e| (e.term, e.ty.base))
        .collect();
    assert!(pool.len() >= 20, "only {} closed classical affirmations", pool.len());
    let empty = Context::new();
    let mut counts = [0usize; 3];
    let mut dependent = 0;
    for round in 0..3000 {
        if counts.iter().all(|&c| c >= 20) {
            break;
        }
        let (t1, a) = pool.choose(&mut r).cloned().expect("non-empty");
        let (t2, b) = pool.choose(&mut r).cloned().expect("non-empty");
        let (tc, c) = pool.choose(&mut r).cloned().expect("non-empty");
        let with_x = |p: &Prop| empty.extended("xv", cplus(p)).unwrap();
        match round % 3 {
            0 => {
                for i in [Idx::One, Idx::Two] {
                    joins(&ClassicalRule::proj(i, empty.clone(), &a, &b, t1.clone(), t2.clone()));
                }
                counts[0] += 1;
            }
            1 => {
                // a branch that ignores its variable is the closed proof of c
                let s1 = piece(&mut r, &with_x(&a), &cplus(&c)).unwrap_or_else(|| tc.clone());
                let s2 = piece(&mut r, &with_x(&b), &cplus(&c)).unwrap_or(tc);
                dependent += usize::from(s1.has_free("xv") || s2.has_free("xv"));
                joins(&ClassicalRule::case(
                    Idx::One,
                    empty.clone(),
                    &a,
                    &b,
                    &c,
                    t1.clone(),
                    "xv",
                    s1.clone(),
                    s2.clone(),
                ));
                joins(&ClassicalRule::case(Idx::Two, empty.clone(), &a, &b, &c, t2, "xv", s1, s2));
                counts[1] += 1;
            }
            _ => {
                let Some(t) = piece(&mut r, &with_x(&a), &cplus(&b)) else { continue };
                joins(&ClassicalRule::app(empty.clone(), &a, &b, "xv", t, t1));
                counts[2] += 1;
            }
        }
    }
    assert!(counts.iter().all(|&c| c >= 20), "instances per rule: {counts:?}");
    assert!(dependent > 0, "no case branch used its variable");
}
