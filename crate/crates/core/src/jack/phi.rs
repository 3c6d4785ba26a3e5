//! The isomorphism Φ: 𝔽[x] → 𝔽[z], `f ↦ ψ(f(û_1, …, û_n)) 1`, and its
//! inverse (leading homogeneous part).

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::daha::DahaOps;
use crate::error::{Error, Result};
use crate::exactalg::{KPoly, Monomial};
use crate::exec::Execution;

/// Cache of `Φ(x^ν)` keyed by exponent vector (the length fixes `n`).
///
/// Every entry has coefficients in ℤ[κ], since ψ(û_i) involves no division.
#[derive(Default)]
pub struct PhiTable {
    map: RwLock<HashMap<Monomial, Arc<KPoly>>>,
}

impl PhiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table.
    pub fn global() -> &'static PhiTable {
        static TABLE: OnceLock<PhiTable> = OnceLock::new();
        TABLE.get_or_init(PhiTable::new)
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, m: &Monomial) -> Option<Arc<KPoly>> {
        self.map.read().unwrap().get(m).cloned()
    }

    /// `Φ(x^ν)` for every requested monomial, filling the cache layer by
    /// layer in degree so each new entry is one ψ(û_j) away from a cached one.
    pub fn ensure(&self, wanted: &[Monomial], exec: Execution) {
        let mut by_degree: Vec<BTreeSet<Monomial>> = Vec::new();
        let mut stack: Vec<Monomial> = wanted.to_vec();
        let mut seen: BTreeSet<Monomial> = BTreeSet::new();
        {
            let map = self.map.read().unwrap();
            while let Some(m) = stack.pop() {
                if map.contains_key(&m) || !seen.insert(m.clone()) {
                    continue;
                }
                let d = m.degree();
                if by_degree.len() <= d {
                    by_degree.resize(d + 1, BTreeSet::new());
                }
                by_degree[d].insert(m.clone());
                if let Some((parent, _)) = peel(&m) {
                    stack.push(parent);
                }
            }
        }
        let ops = DahaOps::generic();
        for layer in by_degree {
            let layer: Vec<Monomial> = layer.into_iter().collect();
            let values = exec.map(&layer, |m| match peel(m) {
                None => KPoly::one(m.nvars()),
                Some((parent, j)) => {
                    let base = self.get(&parent).expect("parent layer computed");
                    ops.psi_uhat(j, &base).expect("index in range")
                }
            });
            let mut map = self.map.write().unwrap();
            for (m, v) in layer.into_iter().zip(values) {
                map.entry(m).or_insert_with(|| Arc::new(v));
            }
        }
    }

    /// `Φ(x^ν)`.
    pub fn phi_monomial(&self, m: &Monomial, exec: Execution) -> Arc<KPoly> {
        if let Some(v) = self.get(m) {
            return v;
        }
        self.ensure(std::slice::from_ref(m), exec);
        self.get(m).expect("just computed")
    }

    pub fn phi_map(&self, f: &KPoly, exec: Execution) -> KPoly {
        let wanted: Vec<Monomial> = f.terms().map(|(m, _)| m.clone()).collect();
        self.ensure(&wanted, exec);
        let map = self.map.read().unwrap();
        let mut out = KPoly::zero(f.nvars());
        for (m, c) in f.terms() {
            out.add_scaled(&map[m], c);
        }
        out
    }
}

/// Removes one factor of the last variable present: `x^ν = x_j · x^{ν−e_j}`.
/// Peeling high indices keeps `Σ_{k>j} T_jk` short.
fn peel(m: &Monomial) -> Option<(Monomial, usize)> {
    let j = m.exps().iter().rposition(|&e| e > 0)?;
    let mut parent = m.clone();
    parent.exps_mut()[j] -= 1;
    Some((parent, j + 1))
}

/// Φ over ℚ(κ), using the global table.
pub fn phi_map(f: &KPoly) -> KPoly {
    PhiTable::global().phi_map(f, Execution::default())
}

/// Φ⁻¹ on the image: the top-degree homogeneous part with `z` renamed `x`.
pub fn phi_inverse(g: &KPoly) -> Result<KPoly> {
    let d = g.total_degree().ok_or(Error::ZeroInput)?;
    Ok(g.homogeneous_part(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{KappaScalar, Scalar};

    #[test]
    fn phi_examples() {
        assert_eq!(phi_map(&KPoly::one(3)), KPoly::one(3));
        assert_eq!(phi_map(&KPoly::var(2, 2)), KPoly::var(2, 2));
        let inv = KappaScalar::linear(1, 1).inv().unwrap();
        let xi = KPoly::var(2, 1).add(&KPoly::var(2, 2).scale(&inv));
        let e = KPoly::var(2, 1).sub(&KPoly::one(2)).add(&KPoly::var(2, 2).scale(&inv));
        assert_eq!(phi_map(&xi), e);
        assert_eq!(phi_inverse(&e).unwrap(), xi);
        assert_eq!(phi_inverse(&KPoly::one(2)).unwrap(), KPoly::one(2));
        assert_eq!(phi_inverse(&KPoly::zero(2)), Err(Error::ZeroInput));
    }

    #[test]
    fn table_entries_are_integral_in_kappa() {
        let t = PhiTable::new();
        let g = t.phi_monomial(&Monomial::from_exps(&[1, 2, 1]), Execution::Sequential);
        assert!(g.terms().all(|(_, c)| c.is_polynomial()));
        assert!(t.len() >= 5);
        let par = PhiTable::new().phi_monomial(&Monomial::from_exps(&[1, 2, 1]), Execution::Parallel);
        assert_eq!(*g, *par);
    }
}
