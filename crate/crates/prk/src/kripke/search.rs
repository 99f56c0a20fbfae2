//! Enumeration of small models up to isomorphism and counter-model search.

use std::collections::{BTreeSet, HashSet};

use super::forcing::Forcing;
use super::model::KripkeModel;
use crate::syntax::{MProp, Name};

/// A finite partial order on `0..n`, as its `≤` matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Covering pairs, enough to generate the order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.leq[i][j] {
                    let between = (0..self.n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]);
                    if !between {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    fn permuted(&self, perm: &[usize]) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                m[perm[i]][perm[j]] = self.leq[i][j];
            }
        }
        m
    }

    /// Permutations mapping the order onto itself.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        permutations(self.n).into_iter().filter(|p| self.permuted(p) == self.leq).collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// All partial orders on `n` points up to isomorphism, labelled so that
/// `i ≤ j` implies `i ≤ j` numerically.
pub fn posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen: HashSet<Vec<Vec<bool>>> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                leq[i][j] = true;
            }
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][k] && leq[k][j]) || leq[i][j])));
        if !transitive {
            continue;
        }
        let p = Poset { n, leq };
        let canon = perms.iter().map(|q| p.permuted(q)).min().expect("at least one permutation");
        if seen.insert(canon) {
            out.push(p);
        }
    }
    out
}

/// The state of one variable at one world: in `vplus`, in `vminus`.
type Cell = (bool, bool);

const CELLS: [Cell; 4] = [(false, false), (true, false), (false, true), (true, true)];

/// Every valid model over `alphabet` on the poset, one per isomorphism class.
pub fn models_on(poset: &Poset, alphabet: &[Name]) -> Vec<KripkeModel> {
    let n = poset.n;
    let k = alphabet.len();
    let slots = n * k;
    let autos = poset.automorphisms();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    let total = 4usize.pow(slots as u32);
    'val: for code in 0..total {
        // digit (w * k + v) gives the cell of variable v at world w
        let mut digits = vec![0u8; slots];
        let mut c = code;
        for d in digits.iter_mut() {
            *d = (c % 4) as u8;
            c /= 4;
        }
        let cell = |w: usize, v: usize| CELLS[digits[w * k + v] as usize];
        for i in 0..n {
            for j in 0..n {
                if poset.leq[i][j] {
                    for v in 0..k {
                        let (a, b) = (cell(i, v), cell(j, v));
                        if (a.0 && !b.0) || (a.1 && !b.1) {
                            continue 'val;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for v in 0..k {
                if !(0..n).any(|j| poset.leq[i][j] && cell(j, v).0 != cell(j, v).1) {
                    continue 'val;
                }
            }
        }
        let canon = autos
            .iter()
            .map(|p| {
                let mut d = vec![0u8; slots];
                for w in 0..n {
                    for v in 0..k {
                        d[p[w] * k + v] = digits[w * k + v];
                    }
                }
                d
            })
            .min()
            .expect("identity automorphism");
        if !seen.insert(canon) {
            continue;
        }
        let worlds: Vec<Name> = (0..n).map(|w| Name::from(format!("w{w}").as_str())).collect();
        let table = |sel: fn(Cell) -> bool| -> Vec<BTreeSet<Name>> {
            (0..n).map(|w| (0..k).filter(|&v| sel(cell(w, v))).map(|v| alphabet[v].clone()).collect()).collect()
        };
        out.push(KripkeModel::from_parts(
            alphabet.iter().cloned().collect(),
            worlds,
            poset.covers(),
            table(|c| c.0),
            table(|c| c.1),
        ));
    }
    out
}

/// Every valid model over `alphabet` with `1..=max_worlds` worlds, up to isomorphism.
pub fn enumerate_models(alphabet: &[Name], max_worlds: usize) -> Vec<KripkeModel> {
    (1..=max_worlds).flat_map(posets).flat_map(|p| models_on(&p, alphabet)).collect()
}

/// Search for a model and world forcing all of `gamma` but not `p`.
///
/// The alphabet is the set of variables of the judgment. Absence within the
/// bound says nothing about larger models.
pub fn countermodel_search(gamma: &[MProp], p: &MProp, max_worlds: usize) -> Option<(KripkeModel, String)> {
    let mut vars: BTreeSet<Name> = p.vars();
    for q in gamma {
        vars.extend(q.vars());
    }
    let alphabet: Vec<Name> = vars.into_iter().collect();
    for n in 1..=max_worlds {
        for poset in posets(n) {
            for m in models_on(&poset, &alphabet) {
                let mut f = Forcing::new(&m);
                let goal = f.truth(p).expect("alphabet covers the judgment");
                let hyps: Vec<_> = gamma.iter().map(|q| f.truth(q).expect("alphabet covers the judgment")).collect();
                let found = (0..n).find(|&w| hyps.iter().all(|h| h[w]) && !goal[w]);
                if let Some(w) = found {
                    let name = m.worlds()[w].to_string();
                    return Some((m, name));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_mprop;

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16]);
    }

    #[test]
    fn enumerated_models_are_valid() {
        let models = enumerate_models(&[Name::from("a")], 3);
        assert!(!models.is_empty());
        assert!(models.iter().all(|m| m.validate().is_valid()));
    }

    #[test]
    fn search_examples() {
        let p = |s: &str| parse_mprop(s).unwrap();
        let (m, w) = countermodel_search(&[], &p("(a | ~a)^s+"), 3).expect("a counter-model exists");
        assert!(m.validate().is_valid());
        assert!(!crate::kripke::forces(&m, &w, &p("(a | ~a)^s+")).unwrap());
        assert!(countermodel_search(&[], &p("(a | ~a)^c+"), 3).is_none());
        assert!(countermodel_search(&[p("a^s+")], &p("a^s+"), 3).is_none());
    }
}
