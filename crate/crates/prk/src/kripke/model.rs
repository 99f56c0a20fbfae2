//! Finite Kripke models: construction, validation and the model file format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::Name;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("variable `{0}` is not in the model alphabet")]
    UnknownVariable(String),
    #[error("world `{0}` is declared twice")]
    DuplicateWorld(String),
    #[error("malformed model file: {0}")]
    Format(String),
}

/// A finite Kripke model over a declared alphabet.
///
/// `leq` is stored as its reflexive-transitive closure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KripkeModel {
    alphabet: BTreeSet<Name>,
    worlds: Vec<Name>,
    generators: Vec<(usize, usize)>,
    above: Vec<Vec<bool>>,
    vplus: Vec<BTreeSet<Name>>,
    vminus: Vec<BTreeSet<Name>>,
}

/// A violated model condition, with its witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Two distinct worlds below each other.
    NotAntisymmetric { first: Name, second: Name },
    /// A valuation shrinks along `lower ≤ upper`.
    Monotonicity { lower: Name, upper: Name, variable: Name, positive: bool },
    /// No world above `world` decides `variable` one way only.
    Stabilization { world: Name, variable: Name },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotAntisymmetric { first, second } => {
                write!(f, "antisymmetry: {first} <= {second} and {second} <= {first}")
            }
            Violation::Monotonicity { lower, upper, variable, positive } => {
                let v = if *positive { "vplus" } else { "vminus" };
                write!(
                    f,
                    "monotonicity: {variable} in {v}({lower}) but not in {v}({upper}) although {lower} <= {upper}"
                )
            }
            Violation::Stabilization { world, variable } => {
                write!(f, "stabilization: no world above {world} has {variable} in exactly one of vplus, vminus")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl KripkeModel {
    /// Build a model from world names, order generators and valuations.
    pub fn new<S: AsRef<str>>(
        alphabet: impl IntoIterator<Item = S>,
        worlds: impl IntoIterator<Item = S>,
        leq: impl IntoIterator<Item = (S, S)>,
        vplus: impl IntoIterator<Item = (S, Vec<S>)>,
        vminus: impl IntoIterator<Item = (S, Vec<S>)>,
    ) -> Result<KripkeModel, KripkeError> {
        let alphabet: BTreeSet<Name> = alphabet.into_iter().map(|a| Name::from(a.as_ref())).collect();
        let mut names: Vec<Name> = Vec::new();
        for w in worlds {
            let w = Name::from(w.as_ref());
            if names.contains(&w) {
                return Err(KripkeError::DuplicateWorld(w.to_string()));
            }
            names.push(w);
        }
        let index = |w: &str| names.iter().position(|n| &**n == w).ok_or_else(|| KripkeError::UnknownWorld(w.into()));
        let mut generators = Vec::new();
        for (a, b) in leq {
            generators.push((index(a.as_ref())?, index(b.as_ref())?));
        }
        let n = names.len();
        let val = |table: Vec<(S, Vec<S>)>| -> Result<Vec<BTreeSet<Name>>, KripkeError> {
            let mut out = vec![BTreeSet::new(); n];
            for (w, vars) in table {
                let i = index(w.as_ref())?;
                for v in vars {
                    let v = v.as_ref();
                    if !alphabet.contains(v) {
                        return Err(KripkeError::UnknownVariable(v.into()));
                    }
                    out[i].insert(Name::from(v));
                }
            }
            Ok(out)
        };
        let vplus = val(vplus.into_iter().collect())?;
        let vminus = val(vminus.into_iter().collect())?;
        Ok(KripkeModel::from_parts(alphabet, names, generators, vplus, vminus))
    }

    pub(crate) fn from_parts(
        alphabet: BTreeSet<Name>,
        worlds: Vec<Name>,
        generators: Vec<(usize, usize)>,
        vplus: Vec<BTreeSet<Name>>,
        vminus: Vec<BTreeSet<Name>>,
    ) -> KripkeModel {
        let n = worlds.len();
        let mut above = vec![vec![false; n]; n];
        for (i, row) in above.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &generators {
            above[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if above[i][k] {
                    let via = above[k].clone();
                    for (cell, reach) in above[i].iter_mut().zip(via) {
                        *cell |= reach;
                    }
                }
            }
        }
        KripkeModel { alphabet, worlds, generators, above, vplus, vminus }
    }

    pub fn alphabet(&self) -> &BTreeSet<Name> {
        &self.alphabet
    }

    pub fn worlds(&self) -> &[Name] {
        &self.worlds
    }

    pub fn world_index(&self, w: &str) -> Result<usize, KripkeError> {
        self.worlds.iter().position(|n| &**n == w).ok_or_else(|| KripkeError::UnknownWorld(w.into()))
    }

    /// `i ≤ j` in the closed order.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.above[i][j]
    }

    /// Worlds above `i`, including `i`.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.worlds.len()).filter(move |&j| self.above[i][j])
    }

    pub fn vplus(&self, i: usize) -> &BTreeSet<Name> {
        &self.vplus[i]
    }

    pub fn vminus(&self, i: usize) -> &BTreeSet<Name> {
        &self.vminus[i]
    }

    /// Check the partial-order, monotonicity and stabilization conditions.
    pub fn validate(&self) -> ValidationReport {
        let n = self.worlds.len();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.above[i][j] && self.above[j][i] {
                    violations.push(Violation::NotAntisymmetric {
                        first: self.worlds[i].clone(),
                        second: self.worlds[j].clone(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in self.successors(i) {
                for (positive, table) in [(true, &self.vplus), (false, &self.vminus)] {
                    for v in table[i].difference(&table[j]) {
                        violations.push(Violation::Monotonicity {
                            lower: self.worlds[i].clone(),
                            upper: self.worlds[j].clone(),
                            variable: v.clone(),
                            positive,
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for v in &self.alphabet {
                let decided = self.successors(i).any(|j| self.vplus[j].contains(v) != self.vminus[j].contains(v));
                if !decided {
                    violations.push(Violation::Stabilization { world: self.worlds[i].clone(), variable: v.clone() });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Parse a model file.
    pub fn from_toml(src: &str) -> Result<KripkeModel, KripkeError> {
        let file: ModelFile = toml::from_str(src).map_err(|e| KripkeError::Format(e.message().to_string()))?;
        KripkeModel::new(file.alphabet, file.worlds, file.leq.into_iter().map(|[a, b]| (a, b)), file.vplus, file.vminus)
    }

    /// Render in the model file format.
    pub fn to_toml(&self) -> String {
        let names = |set: &BTreeSet<Name>| set.iter().map(|v| v.to_string()).collect::<Vec<_>>();
        let table = |t: &[BTreeSet<Name>]| -> BTreeMap<String, Vec<String>> {
            self.worlds.iter().zip(t).filter(|(_, s)| !s.is_empty()).map(|(w, s)| (w.to_string(), names(s))).collect()
        };
        let file = ModelFile {
            alphabet: names(&self.alphabet),
            worlds: self.worlds.iter().map(|w| w.to_string()).collect(),
            leq: self
                .generators
                .iter()
                .map(|&(a, b)| [self.worlds[a].to_string(), self.worlds[b].to_string()])
                .collect(),
            vplus: table(&self.vplus),
            vminus: table(&self.vminus),
        };
        toml::to_string(&file).expect("model files always serialize")
    }
}

/// On-disk shape of a model.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    alphabet: Vec<String>,
    worlds: Vec<String>,
    #[serde(default)]
    leq: Vec<[String; 2]>,
    #[serde(default)]
    vplus: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    vminus: BTreeMap<String, Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn lem_model() -> KripkeModel {
        KripkeModel::new(
            ["a"],
            ["w0", "w1", "w2"],
            [("w0", "w1"), ("w0", "w2")],
            [("w1", vec!["a"])],
            [("w2", vec!["a"])],
        )
        .unwrap()
    }

    #[test]
    fn example_model_is_valid() {
        assert!(lem_model().validate().is_valid());
    }

    #[test]
    fn stabilization_violation() {
        let m = KripkeModel::new(["a"], ["w"], [], [], []).unwrap();
        let r = m.validate();
        assert_eq!(r.violations, vec![Violation::Stabilization { world: "w".into(), variable: "a".into() }]);
    }

    #[test]
    fn monotonicity_violation() {
        let m = KripkeModel::new(["a"], ["w", "v"], [("w", "v")], [("w", vec!["a"])], []).unwrap();
        assert!(m.validate().violations.iter().any(|v| matches!(v, Violation::Monotonicity { positive: true, .. })));
    }

    #[test]
    fn antisymmetry_violation() {
        let m = KripkeModel::new(["a"], ["w", "v"], [("w", "v"), ("v", "w")], [("w", vec!["a"]), ("v", vec!["a"])], [])
            .unwrap();
        assert!(m.validate().violations.iter().any(|v| matches!(v, Violation::NotAntisymmetric { .. })));
    }

    #[test]
    fn file_round_trip() {
        let m = lem_model();
        let text = m.to_toml();
        assert_eq!(KripkeModel::from_toml(&text).unwrap(), m);
        assert!(matches!(
            KripkeModel::from_toml("alphabet = [\"a\"]\nworlds = [\"w\"]\n[vplus]\nw = [\"b\"]\n"),
            Err(KripkeError::UnknownVariable(_))
        ));
        assert!(matches!(KripkeModel::from_toml("worlds = 3"), Err(KripkeError::Format(_))));
    }
}
