use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::global_cmp;

use super::permutation::Permutation;

/// An n-tuple of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u16>);

impl Composition {
    pub fn new(parts: Vec<u16>) -> Self {
        Composition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `s_i λ` for the 1-based adjacent transposition `s_i`.
    pub fn swap_adjacent(&self, i: usize) -> Composition {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Composition(p)
    }

    /// Parses `a,b,c`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad composition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }

    pub fn global_cmp(&self, other: &Self) -> Ordering {
        global_cmp(&self.0, &other.0)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl From<&[u16]> for Composition {
    fn from(v: &[u16]) -> Self {
        Composition(v.to_vec())
    }
}

/// `λ ≤ μ` in the dominance order: every prefix sum of `λ` is at most the
/// corresponding prefix sum of `μ`.
pub fn dominance_leq(lambda: &Composition, mu: &Composition) -> Result<bool> {
    if lambda.len() != mu.len() {
        return Err(Error::ArityMismatch {
            expected: lambda.len(),
            found: mu.len(),
        });
    }
    let (mut a, mut b) = (0usize, 0usize);
    for (&x, &y) in lambda.parts().iter().zip(mu.parts()) {
        a += x as usize;
        b += y as usize;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dominant rearrangement `λ⁺` and the shortest `w` with `w λ⁺ = λ`,
/// where `(σλ)_i = λ_{σ⁻¹(i)}`.
///
/// Equal parts keep their relative order (stable sort), which gives the
/// minimal-length coset representative.
pub fn dominant_rep(lambda: &Composition) -> (Composition, Permutation) {
    let n = lambda.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| lambda.0[b].cmp(&lambda.0[a]));
    // order[k] is the position in λ holding λ⁺_k, so w⁻¹(order[k]) = k.
    let plus = Composition(order.iter().map(|&i| lambda.0[i]).collect());
    let mut w = vec![0usize; n];
    for (k, &i) in order.iter().enumerate() {
        w[k] = i + 1;
    }
    (plus, Permutation::from_one_line(w).expect("valid permutation"))
}

/// All compositions of length `n` with weight at most `max_weight`, in the
/// global order.
pub fn enumerate_compositions(n: usize, max_weight: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        out.extend(compositions_of_weight(n, w));
    }
    out.sort_by(|a, b| a.global_cmp(b));
    out
}

/// All compositions of length `n` and weight exactly `weight`, in the global
/// order.
pub fn compositions_of_weight(n: usize, weight: usize) -> Vec<Composition> {
    fn rec(n: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Composition>) {
        if cur.len() == n - 1 {
            cur.push(left as u16);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in 0..=left {
            cur.push(p as u16);
            rec(n, left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if weight == 0 {
            out.push(Composition(vec![]));
        }
        return out;
    }
    rec(n, weight, &mut Vec::with_capacity(n), &mut out);
    out.sort_by(|a, b| a.global_cmp(b));
    out
}
