use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, PolyJson, Scalar};

/// The weight `(d_1, …, d_N)` of a slice of `V^{⊗n}` and its index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    big_n: usize,
    d: Vec<usize>,
    delta: Vec<usize>,
    index_set: Vec<Vec<usize>>,
}

impl WeightProfile {
    pub fn new(d: &[usize]) -> Result<Self> {
        let big_n = d.len();
        if big_n < 2 {
            return Err(Error::InvalidSubdivision("need N >= 2".into()));
        }
        if d.contains(&0) {
            return Err(Error::InvalidSubdivision("every d_j must be positive".into()));
        }
        let mut delta = Vec::new();
        for (j, &dj) in d.iter().enumerate() {
            delta.extend(std::iter::repeat_n(j + 1, dj));
        }
        let index_set = rearrangements(&delta);
        Ok(WeightProfile {
            big_n,
            d: d.to_vec(),
            delta,
            index_set,
        })
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn n(&self) -> usize {
        self.delta.len()
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    /// `δ = (1^{d_1}, …, N^{d_N})`.
    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    /// All rearrangements of δ in lexicographic order.
    pub fn index_set(&self) -> &[Vec<usize>] {
        &self.index_set
    }

    pub fn contains(&self, eps: &[usize]) -> bool {
        self.index_set.binary_search_by(|e| e.as_slice().cmp(eps)).is_ok()
    }
}

/// Distinct permutations of a sorted word, in lexicographic order.
fn rearrangements(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    // Standard next-permutation iteration.
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// `Σ_ε F_ε v_{ε_1} ⊗ ⋯ ⊗ v_{ε_n}` restricted to one weight slice.
/// Absent components are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly<C: Scalar> {
    pub profile: WeightProfile,
    pub components: BTreeMap<Vec<usize>, MultiPoly<C>>,
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    eps: Vec<usize>,
    poly: PolyJson,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    #[serde(rename = "N")]
    big_n: usize,
    d: Vec<usize>,
    components: Vec<ComponentJson>,
}

impl<C: Scalar> TensorPoly<C> {
    pub fn zero(profile: WeightProfile) -> Self {
        TensorPoly {
            profile,
            components: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.profile.n()
    }

    /// The component at `ε` (zero when absent).
    pub fn component(&self, eps: &[usize]) -> MultiPoly<C> {
        self.components
            .get(eps)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.n()))
    }

    pub fn set(&mut self, eps: Vec<usize>, f: MultiPoly<C>) -> Result<()> {
        if !self.profile.contains(&eps) {
            return Err(Error::InvalidParams(format!("{eps:?} is not in the index set")));
        }
        if f.nvars() != self.n() {
            return Err(Error::ArityMismatch {
                expected: self.n(),
                found: f.nvars(),
            });
        }
        if f.is_zero() {
            self.components.remove(&eps);
        } else {
            self.components.insert(eps, f);
        }
        Ok(())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let j = TensorJson {
            big_n: self.profile.big_n(),
            d: self.profile.d().to_vec(),
            components: self
                .components
                .iter()
                .map(|(eps, f)| ComponentJson {
                    eps: eps.clone(),
                    poly: PolyJson::from_poly(f),
                })
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: TensorJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let profile = WeightProfile::new(&j.d)?;
        if profile.big_n() != j.big_n {
            return Err(Error::Parse(format!("N = {} does not match d", j.big_n)));
        }
        let mut t = TensorPoly::zero(profile);
        for c in j.components {
            t.set(c.eps, c.poly.to_poly()?)?;
        }
        Ok(t)
    }
}
