//! Properties of the System F translation and of recursive-type conversion.

use rand::seq::SliceRandom;
use rand::Rng;

use prk::gen::{random_mprop, rng, typed_corpus, TermGen};
use prk::systemf::{
    compl, f_infer, ftype_equiv, negvars, translate_context, translate_prop, translate_term, FType, VarKey,
};
use prk::typing::check_type;

fn random_ftype(r: &mut impl Rng, depth: usize) -> FType {
    if depth <= 1 {
        return FType::var(["a", "b", "c"].choose(r).expect("non-empty"));
    }
    match r.gen_range(0..5) {
        0 => FType::var("a"),
        1 => FType::arrow(random_ftype(r, depth - 1), random_ftype(r, depth - 1)),
        2 => FType::pos(random_ftype(r, depth - 1), random_ftype(r, depth - 1)),
        3 => FType::neg(random_ftype(r, depth - 1), random_ftype(r, depth - 1)),
        _ => FType::forall("z", FType::arrow(FType::var("z"), random_ftype(r, depth - 1))),
    }
}

#[test]
fn translation_is_typed_at_translated_conclusion() {
    let mut r = rng(301);
    for e in typed_corpus(&mut r, 300, 40, false) {
        let d = check_type(&e.context, &e.term, &e.ty).unwrap();
        let ft = translate_term(&d).unwrap();
        let got = f_infer(&translate_context(&e.context), &ft).unwrap_or_else(|err| panic!("{}: {err}", e.term));
        assert!(ftype_equiv(&got, &translate_prop(&e.ty)), "{}", e.term);
    }
}

#[test]
fn free_variables_are_preserved() {
    let mut r = rng(302);
    for e in typed_corpus(&mut r, 300, 40, false) {
        let d = check_type(&e.context, &e.term, &e.ty).unwrap();
        let ft = translate_term(&d).unwrap();
        let fv: Vec<String> = ft.free_vars().iter().map(|x| x.to_string()).collect();
        let want: Vec<String> = e.term.free_vars().iter().map(|x| x.to_string()).collect();
        assert_eq!(fv, want, "{}", e.term);
    }
}

#[test]
fn translation_commutes_with_substitution() {
    let mut r = rng(303);
    let corpus = typed_corpus(&mut r, 800, 30, false);
    let mut done = 0;
    for e in &corpus {
        let fv = e.term.free_vars();
        let Some((x, p)) =
            e.context.iter().filter(|(x, _)| fv.contains(*x)).collect::<Vec<_>>().choose(&mut r).cloned()
        else {
            continue;
        };
        let (x, p) = (x.to_string(), p.clone());
        let rest = e.context.without(&x);
        let Some(s) = (1..=4).find_map(|k| TermGen::new(&mut r, &["a", "b"]).term(&rest, &p, k)) else { continue };
        let dt = check_type(&e.context, &e.term, &e.ty).unwrap();
        let ds = check_type(&rest, &s, &p).unwrap();
        let dcut = check_type(&rest, &e.term.substitute(&x, &s), &e.ty).unwrap();
        let lhs = translate_term(&dcut).unwrap();
        let rhs = translate_term(&dt).unwrap().substitute(&x, &translate_term(&ds).unwrap());
        assert_eq!(lhs, rhs, "{} [{x} := {s}]", e.term);
        done += 1;
    }
    assert!(done >= 100, "only {done} substitutions");
}

/// Each recursive variable occurs only positively in the unfoldings of its own definition.
///
/// The dual variable does occur negatively: `Pos<A,B>` unfolds to
/// `Neg<A,B> -> A`, so only the self-occurrence is excluded.
#[test]
fn positivity_of_recursive_variables() {
    let mut r = rng(304);
    for _ in 0..100 {
        let a = random_ftype(&mut r, 3);
        let b = random_ftype(&mut r, 3);
        for (me, other) in [
            (FType::pos(a.clone(), b.clone()), FType::neg(a.clone(), b.clone())),
            (FType::neg(a.clone(), b.clone()), FType::pos(a.clone(), b.clone())),
        ] {
            let me_key = VarKey::of(&me).unwrap();
            for u in me.unfoldings(3) {
                assert!(!negvars(&u).contains(&me_key), "{me} occurs negatively in {u}");
                assert!(ftype_equiv(&u, &me), "{u} is not convertible to {me}");
            }
            let rhs = me.unfold().unwrap();
            assert!(compl(&a) < compl(&me) && compl(&b) < compl(&me));
            if let FType::Arrow(l, _) = &rhs {
                assert_eq!(**l, other);
            }
        }
    }
    let p = FType::pos(FType::var("a"), FType::var("b"));
    let n = VarKey::of(&FType::neg(FType::var("a"), FType::var("b"))).unwrap();
    assert!(negvars(&p.unfold().unwrap()).contains(&n));
}

#[test]
fn conversion_is_an_equivalence_and_a_congruence() {
    let mut r = rng(305);
    let mut pool: Vec<FType> = Vec::new();
    for _ in 0..40 {
        let t = translate_prop(&random_mprop(&mut r, &["a", "b"], 2));
        pool.extend(t.unfoldings(2).into_iter().take(4));
        pool.push(t);
        pool.push(random_ftype(&mut r, 3));
    }
    let eq = |x: &FType, y: &FType| ftype_equiv(x, y);
    for x in &pool {
        assert!(eq(x, x));
    }
    for _ in 0..3000 {
        let (x, y, z) = (pool.choose(&mut r).unwrap(), pool.choose(&mut r).unwrap(), pool.choose(&mut r).unwrap());
        assert_eq!(eq(x, y), eq(y, x), "{x} / {y}");
        if eq(x, y) && eq(y, z) {
            assert!(eq(x, z), "{x} / {y} / {z}");
        }
        if eq(x, y) {
            assert!(eq(&FType::arrow(x.clone(), z.clone()), &FType::arrow(y.clone(), z.clone())));
            assert!(eq(&FType::arrow(z.clone(), x.clone()), &FType::arrow(z.clone(), y.clone())));
            let under = |t: &FType| FType::forall("q", FType::arrow(FType::var("q"), t.clone()));
            assert!(eq(&under(x), &under(y)));
            assert!(eq(&FType::pos(x.clone(), z.clone()), &FType::pos(y.clone(), z.clone())));
        } else {
            assert!(!eq(&FType::arrow(x.clone(), z.clone()), &FType::arrow(y.clone(), z.clone())));
        }
    }
}
