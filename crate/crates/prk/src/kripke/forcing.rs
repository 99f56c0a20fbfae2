//! The forcing relation, computed world-wise and memoized per proposition.

use std::collections::HashMap;
use std::rc::Rc;

use super::model::{KripkeError, KripkeModel};
use crate::syntax::{MProp, Mode, Prop, Sign, Strength};

/// Forcing evaluator for one model. Each proposition is evaluated at all
/// worlds at once and cached.
pub struct Forcing<'m> {
    model: &'m KripkeModel,
    memo: HashMap<MProp, Rc<Vec<bool>>>,
}

impl<'m> Forcing<'m> {
    pub fn new(model: &'m KripkeModel) -> Forcing<'m> {
        Forcing { model, memo: HashMap::new() }
    }

    pub fn model(&self) -> &'m KripkeModel {
        self.model
    }

    /// Forcing of `p` at every world, indexed like [`KripkeModel::worlds`].
    pub fn truth(&mut self, p: &MProp) -> Result<Rc<Vec<bool>>, KripkeError> {
        if let Some(v) = p.vars().into_iter().find(|v| !self.model.alphabet().contains(v)) {
            return Err(KripkeError::UnknownVariable(v.to_string()));
        }
        Ok(self.eval(p))
    }

    pub fn forces(&mut self, w: usize, p: &MProp) -> Result<bool, KripkeError> {
        Ok(self.truth(p)?[w])
    }

    fn eval(&mut self, p: &MProp) -> Rc<Vec<bool>> {
        if let Some(v) = self.memo.get(p) {
            return v.clone();
        }
        let out = Rc::new(self.compute(p));
        self.memo.insert(p.clone(), out.clone());
        out
    }

    fn compute(&mut self, p: &MProp) -> Vec<bool> {
        let m = self.model;
        let n = m.worlds().len();
        let cl = |a: &Prop, s: Sign| MProp::new(a.clone(), Mode::classical(s));
        let g = p.sign();
        match (p.mode.strength, &p.base) {
            (Strength::Classical, a) => {
                let strong_opposite = self.eval(&MProp::new(a.clone(), Mode::strong(g.flip())));
                (0..n).map(|w| m.successors(w).all(|v| !strong_opposite[v])).collect()
            }
            (_, Prop::Var(x)) => {
                let table = |w| if g == Sign::Pos { m.vplus(w) } else { m.vminus(w) };
                (0..n).map(|w| table(w).contains(x)).collect()
            }
            (_, Prop::Neg(a)) => (*self.eval(&cl(a, g.flip()))).clone(),
            (_, Prop::And(a, b)) | (_, Prop::Or(a, b)) => {
                let both = matches!(p.base, Prop::And(..)) == (g == Sign::Pos);
                let (l, r) = (self.eval(&cl(a, g)), self.eval(&cl(b, g)));
                (0..n).map(|w| if both { l[w] && r[w] } else { l[w] || r[w] }).collect()
            }
        }
    }
}

/// Does world `w` force `p`?
pub fn forces(m: &KripkeModel, w: &str, p: &MProp) -> Result<bool, KripkeError> {
    let i = m.world_index(w)?;
    Forcing::new(m).forces(i, p)
}

/// Every world forcing all of `gamma` forces `p`.
pub fn entails_in_model(m: &KripkeModel, gamma: &[MProp], p: &MProp) -> Result<bool, KripkeError> {
    let mut f = Forcing::new(m);
    let goal = f.truth(p)?;
    let hyps = gamma.iter().map(|q| f.truth(q)).collect::<Result<Vec<_>, _>>()?;
    Ok((0..m.worlds().len()).all(|w| !hyps.iter().all(|h| h[w]) || goal[w]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_mprop;

    fn lem_model() -> KripkeModel {
        KripkeModel::new(
            ["a"],
            ["w0", "w1", "w2"],
            [("w0", "w1"), ("w0", "w2")],
            [("w1", vec!["a"])],
            [("w2", vec!["a"])],
        )
        .unwrap()
    }

    fn mp(s: &str) -> MProp {
        parse_mprop(s).unwrap()
    }

    #[test]
    fn excluded_middle_example() {
        let m = lem_model();
        assert!(!forces(&m, "w0", &mp("(a | ~a)^s+")).unwrap());
        assert!(forces(&m, "w0", &mp("(a | ~a)^c+")).unwrap());
        assert!(forces(&m, "w1", &mp("a^s+")).unwrap());
    }

    #[test]
    fn entailment_examples() {
        let m = lem_model();
        assert!(entails_in_model(&m, &[mp("(a & ~a)^c-")], &mp("(a & ~a)^c-")).unwrap());
        assert!(!entails_in_model(&m, &[], &mp("(a | ~a)^s+")).unwrap());
        assert!(entails_in_model(&m, &[mp("a^s+")], &mp("a^c+")).unwrap());
    }

    #[test]
    fn errors() {
        let m = lem_model();
        assert!(matches!(forces(&m, "w9", &mp("a^s+")), Err(KripkeError::UnknownWorld(_))));
        assert!(matches!(forces(&m, "w0", &mp("b^s+")), Err(KripkeError::UnknownVariable(_))));
    }
}
