//! E_λ from its vanishing conditions alone, independent of Φ and of the
//! difference operators.
//!
//! Degree by degree: each monomial `z^ν` of degree `D` is first reduced by
//! the already known `E_μ`, `|μ| < D` (Newton style), so that it vanishes at
//! every `c(μ)` of lower weight. The remaining conditions at weight `D` form
//! a small square system.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::combinat::{compositions_of_weight, spectral_vector, Composition};
use crate::error::{Error, Result};
use crate::exactalg::{global_cmp, solve_linear, KPoly, KappaScalar, Scalar};
use crate::exec::Execution;

#[derive(Default)]
pub struct InterpTable {
    shifted: RwLock<HashMap<Composition, Arc<KPoly>>>,
    /// `E_μ(c(μ))`.
    norm: RwLock<HashMap<Composition, KappaScalar>>,
    /// `z^ν` reduced against all lower-weight `E_μ`.
    reduced: RwLock<HashMap<Composition, Arc<KPoly>>>,
    /// Reduced monomial `ν` evaluated at `c(μ)`, keyed `(μ, ν)`.
    values: RwLock<HashMap<(Composition, Composition), KappaScalar>>,
}

fn point(mu: &Composition) -> Vec<KappaScalar> {
    spectral_vector(mu).entries
}

impl InterpTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static InterpTable {
        static TABLE: OnceLock<InterpTable> = OnceLock::new();
        TABLE.get_or_init(InterpTable::new)
    }

    pub fn shifted_jack(&self, lambda: &Composition, exec: Execution) -> Result<Arc<KPoly>> {
        if let Some(e) = self.shifted.read().unwrap().get(lambda) {
            return Ok(e.clone());
        }
        let n = lambda.len();
        for d in 0..lambda.weight() {
            self.ensure_weight(n, d, exec)?;
        }
        let e = Arc::new(self.compute(lambda)?);
        self.insert(lambda, e.clone())?;
        Ok(e)
    }

    fn insert(&self, lambda: &Composition, e: Arc<KPoly>) -> Result<()> {
        let norm = e.eval(&point(lambda))?;
        if norm.is_zero() {
            return Err(Error::InterpolationSingular(format!("E_{lambda} vanishes at its own spectral point")));
        }
        self.norm.write().unwrap().entry(lambda.clone()).or_insert(norm);
        self.shifted.write().unwrap().entry(lambda.clone()).or_insert(e);
        Ok(())
    }

    fn ensure_weight(&self, n: usize, d: usize, exec: Execution) -> Result<()> {
        let missing: Vec<Composition> = {
            let map = self.shifted.read().unwrap();
            compositions_of_weight(n, d)
                .into_iter()
                .filter(|mu| !map.contains_key(mu))
                .collect()
        };
        let computed = exec.map(&missing, |mu| self.compute(mu));
        for (mu, e) in missing.iter().zip(computed) {
            self.insert(mu, Arc::new(e?))?;
        }
        Ok(())
    }

    /// Assumes every `E_μ` with `|μ| < |ν|` is present.
    fn reduced(&self, nu: &Composition) -> Arc<KPoly> {
        if let Some(p) = self.reduced.read().unwrap().get(nu) {
            return p.clone();
        }
        let n = nu.len();
        let mut p = KPoly::monomial(nu.parts(), KappaScalar::one());
        {
            let shifted = self.shifted.read().unwrap();
            let norm = self.norm.read().unwrap();
            for d in 0..nu.weight() {
                for mu in compositions_of_weight(n, d) {
                    let v = p.eval(&point(&mu)).expect("arity");
                    if v.is_zero() {
                        continue;
                    }
                    let f = v.div(&norm[&mu]).expect("nonzero norm");
                    p.add_scaled(&shifted[&mu], &f.neg());
                }
            }
        }
        let p = Arc::new(p);
        self.reduced.write().unwrap().entry(nu.clone()).or_insert(p).clone()
    }

    fn value(&self, mu: &Composition, nu: &Composition) -> KappaScalar {
        let key = (mu.clone(), nu.clone());
        if let Some(v) = self.values.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.reduced(nu).eval(&point(mu)).expect("arity");
        self.values.write().unwrap().entry(key).or_insert(v).clone()
    }

    fn compute(&self, lambda: &Composition) -> Result<KPoly> {
        let n = lambda.len();
        let same: Vec<Composition> = compositions_of_weight(n, lambda.weight());
        let below: Vec<&Composition> = same
            .iter()
            .filter(|nu| global_cmp(nu.parts(), lambda.parts()) == Ordering::Less)
            .collect();
        let others: Vec<&Composition> = same.iter().filter(|mu| *mu != lambda).collect();
        let solve = |rows: &[&Composition]| {
            let a = rows
                .iter()
                .map(|mu| below.iter().map(|nu| self.value(mu, nu)).collect())
                .collect();
            let b = rows.iter().map(|mu| self.value(mu, lambda).neg()).collect();
            solve_linear(a, b)
        };
        // The top-degree part lives on {ν ≤ λ}; try the matching square
        // system first and fall back to all conditions.
        let coeffs = solve(&below)
            .or_else(|| solve(&others))
            .ok_or_else(|| Error::InterpolationSingular(format!("vanishing system for {lambda}")))?;
        let mut e = (*self.reduced(lambda)).clone();
        for (nu, a) in below.iter().zip(&coeffs) {
            e.add_scaled(&self.reduced(nu), a);
        }
        Ok(e)
    }
}
