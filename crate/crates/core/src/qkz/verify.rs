use serde::{Deserialize, Serialize};

use crate::daha::{DahaOps, Status};
use crate::error::{check_index, Result};
use crate::exactalg::{BigRat, QPoly, Scalar};
use crate::exec::Execution;

use super::tensor::TensorPoly;

/// Fixed parameters of one qKZ system: the step κ₀ and the twists `p_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QkzParams {
    pub kappa0: BigRat,
    pub p: Vec<BigRat>,
}

impl QkzParams {
    pub fn new(kappa0: BigRat, p: Vec<BigRat>) -> Result<Self> {
        if kappa0.is_zero() {
            return Err(crate::Error::InvalidParams("kappa must be nonzero".into()));
        }
        if p.iter().any(|x| x.is_zero()) {
            return Err(crate::Error::InvalidParams("every p_j must be nonzero".into()));
        }
        Ok(QkzParams { kappa0, p })
    }

    /// `p = (1, …, 1)`.
    pub fn trivial(kappa0: BigRat, big_n: usize) -> Result<Self> {
        Self::new(kappa0, vec![BigRat::one(); big_n])
    }

    /// The level `−(N + κ₀)`.
    pub fn level(&self) -> BigRat {
        (BigRat::from_integer((self.p.len() as i64).into()) + &self.kappa0).neg()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Eigen,
    Exchange,
    Cyclic,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QkzReport {
    pub check: CheckKind,
    pub status: Status,
    pub failures: Vec<String>,
    pub max_residual: Option<f64>,
}

impl QkzReport {
    pub(crate) fn exact(check: CheckKind, failures: Vec<String>) -> Self {
        QkzReport {
            check,
            status: if failures.is_empty() { Status::Pass } else { Status::Fail },
            failures,
            max_residual: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `Y_i F_δ = F_δ` for all `i`, and `T_i F_δ = −F_δ` whenever `δ_i = δ_{i+1}`.
pub fn verify_eigenproblem(f_delta: &QPoly, delta: &[usize], kappa0: &BigRat) -> QkzReport {
    let n = f_delta.nvars();
    let ops = DahaOps::new(kappa0.clone());
    let mut failures = Vec::new();
    if delta.len() != n {
        failures.push(format!("delta has length {}, expected {n}", delta.len()));
        return QkzReport::exact(CheckKind::Eigen, failures);
    }
    for i in 1..=n {
        if &ops.y_op(i, f_delta).expect("index in range") != f_delta {
            failures.push(format!("Y{i}"));
        }
    }
    for i in 1..n {
        if delta[i - 1] == delta[i] && ops.demazure_lusztig(i, f_delta).expect("index in range") != f_delta.neg() {
            failures.push(format!("T{i}"));
        }
    }
    QkzReport::exact(CheckKind::Eigen, failures)
}

fn eps_str(eps: &[usize]) -> String {
    let parts: Vec<String> = eps.iter().map(usize::to_string).collect();
    parts.join(",")
}

/// Checks, component by component, the cleared exchange relation
/// `P(z_i − z_{i+1} + P) F = (z_{i+1} − z_i + 1) F|_{z_i ↔ z_{i+1}}`.
pub fn verify_exchange(f: &TensorPoly<BigRat>) -> QkzReport {
    verify_exchange_with(f, Execution::default())
}

pub fn verify_exchange_with(f: &TensorPoly<BigRat>, exec: Execution) -> QkzReport {
    let n = f.n();
    let jobs: Vec<(usize, &Vec<usize>)> = (1..n)
        .flat_map(|i| f.profile.index_set().iter().map(move |eps| (i, eps)))
        .collect();
    let bad = exec.map(&jobs, |&(i, eps)| {
        let u = QPoly::var(n, i).sub(&QPoly::var(n, i + 1));
        let mut swapped = eps.clone();
        swapped.swap(i - 1, i);
        // [P(u + P)F]_ε = u F_{s_i ε} + F_ε
        let lhs = u.mul(&f.component(&swapped)).add(&f.component(eps));
        let rhs = QPoly::one(n)
            .sub(&u)
            .mul(&f.component(eps).transpose_vars(i, i + 1).expect("index in range"));
        lhs != rhs
    });
    let failures = jobs
        .iter()
        .zip(bad)
        .filter(|(_, b)| *b)
        .map(|((i, eps), _)| format!("i={i} eps={}", eps_str(eps)))
        .collect();
    QkzReport::exact(CheckKind::Exchange, failures)
}

/// Checks `P_{n−1,n} ⋯ P_{1,2} F(z_n − κ, z_1, …) = (−1)^{n−1} (∏ p_j^{h_j})_n F`:
/// at component `η`, `ω F_{(η_n, η_1, …, η_{n−1})} = (−1)^{n−1} p_{η_n} F_η`.
pub fn verify_cyclic(f: &TensorPoly<BigRat>, params: &QkzParams) -> QkzReport {
    verify_cyclic_with(f, params, Execution::default())
}

pub fn verify_cyclic_with(f: &TensorPoly<BigRat>, params: &QkzParams, exec: Execution) -> QkzReport {
    let n = f.n();
    if params.p.len() != f.profile.big_n() {
        return QkzReport::exact(
            CheckKind::Cyclic,
            vec![format!("expected {} twists p_j, got {}", f.profile.big_n(), params.p.len())],
        );
    }
    let ops = DahaOps::new(params.kappa0.clone());
    let sign = if n % 2 == 1 { BigRat::one() } else { BigRat::one().neg() };
    let bad = exec.map(f.profile.index_set(), |eta| {
        let mut rotated = Vec::with_capacity(n);
        rotated.push(eta[n - 1]);
        rotated.extend_from_slice(&eta[..n - 1]);
        let lhs = ops.omega(&f.component(&rotated));
        let rhs = f.component(eta).scale(&sign.mul(&params.p[eta[n - 1] - 1]));
        lhs != rhs
    });
    let failures = f
        .profile
        .index_set()
        .iter()
        .zip(bad)
        .filter(|(_, b)| *b)
        .map(|(eta, _)| format!("eps={}", eps_str(eta)))
        .collect();
    QkzReport::exact(CheckKind::Cyclic, failures)
}

/// Numerator and denominator of `K(…, z_m − κ₀, …)/K(…, z_m, …)`:
/// `∏_{j<m} (z_j − z_m + κ₀ + 1)/(z_j − z_m + κ₀ − 1) · ∏_{j>m} (z_m − z_j − 1)/(z_m − z_j + 1)`.
pub fn k_multiplier(m: usize, n: usize, kappa0: &BigRat) -> Result<(QPoly, QPoly)> {
    check_index(m, n)?;
    let z = |i| QPoly::var(n, i);
    let c = |v: BigRat| QPoly::constant(n, v);
    let one = BigRat::one();
    let mut num = QPoly::one(n);
    let mut den = QPoly::one(n);
    for j in 1..m {
        let diff = z(j).sub(&z(m));
        num = num.mul(&diff.add(&c(kappa0 + &one)));
        den = den.mul(&diff.add(&c(kappa0 - &one)));
    }
    for j in m + 1..=n {
        let diff = z(m).sub(&z(j));
        num = num.mul(&diff.sub(&c(one.clone())));
        den = den.mul(&diff.add(&c(one.clone())));
    }
    Ok((num, den))
}
