//! Floating-point cross-check of `G = K F` against the qKZ system, with the
//! Γ-product choice of `K`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::gamma;

use crate::daha::Status;
use crate::error::{Error, Result};
use crate::exactalg::{rat, rat_to_f64, BigRat};

use super::tensor::TensorPoly;
use super::verify::{CheckKind, QkzParams, QkzReport};

/// Distance below which a point counts as hitting a pole.
const POLE_GUARD: f64 = 1e-3;
const RETRIES: usize = 1000;

fn near_nonpositive_integer(x: f64) -> bool {
    let r = x.round();
    r <= 0.0 && (x - r).abs() < POLE_GUARD
}

/// `K(z) = ∏_{i<j} Γ(−(z_i − z_j − 1)/κ) / Γ(−(z_i − z_j + 1)/κ)`, or `None`
/// near a pole or zero.
fn k_gamma(z: &[f64], kappa: f64) -> Option<f64> {
    let mut k = 1.0;
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            let a = -(z[i] - z[j] - 1.0) / kappa;
            let b = -(z[i] - z[j] + 1.0) / kappa;
            if near_nonpositive_integer(a) || near_nonpositive_integer(b) {
                return None;
            }
            k *= gamma(a) / gamma(b);
        }
    }
    k.is_finite().then_some(k)
}

fn eval_all(f: &TensorPoly<BigRat>, z: &[BigRat]) -> Vec<f64> {
    f.profile
        .index_set()
        .iter()
        .map(|eps| rat_to_f64(&f.component(eps).eval(z).expect("arity")))
        .collect()
}

/// `R_{a,b}(u)` on a vector indexed by the profile's index set.
fn apply_r(f: &TensorPoly<BigRat>, v: &[f64], a: usize, b: usize, u: f64) -> Vec<f64> {
    let set = f.profile.index_set();
    set.iter()
        .enumerate()
        .map(|(k, eps)| {
            let mut s = eps.clone();
            s.swap(a, b);
            let other = set.binary_search(&s).expect("swap stays in the slice");
            (u * v[k] + v[other]) / (u + 1.0)
        })
        .collect()
}

/// Samples random rational points, evaluates both sides of every equation of
/// the qKZ system for `G = K F` and reports the largest relative residual.
pub fn verify_qkz_numeric(
    f: &TensorPoly<BigRat>,
    params: &QkzParams,
    samples: usize,
    tol: f64,
    seed: u64,
) -> Result<QkzReport> {
    let n = f.n();
    if params.p.len() != f.profile.big_n() {
        return Err(Error::InvalidParams("one twist p_j per letter is required".into()));
    }
    let kappa = rat_to_f64(&params.kappa0);
    let p: Vec<f64> = params.p.iter().map(rat_to_f64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_residual: f64 = 0.0;
    let mut failures = Vec::new();
    for sample in 0..samples {
        let mut tries = 0;
        let (z, zf, k0) = loop {
            tries += 1;
            if tries > RETRIES {
                return Err(Error::SampleAtPole(RETRIES));
            }
            let z: Vec<BigRat> = (0..n).map(|_| rat(rng.random_range(-2000..=2000), 1000)).collect();
            let zf: Vec<f64> = z.iter().map(rat_to_f64).collect();
            let Some(k0) = k_gamma(&zf, kappa) else { continue };
            let shifted_ok = (0..n).all(|m| {
                let mut s = zf.clone();
                s[m] -= kappa;
                k_gamma(&s, kappa).is_some()
            });
            let r_ok = (0..n).all(|m| {
                (0..n).all(|j| {
                    let u = if j < m { zf[m] - zf[j] - kappa } else { zf[m] - zf[j] };
                    j == m || (u + 1.0).abs() > POLE_GUARD
                })
            });
            if shifted_ok && r_ok {
                break (z, zf, k0);
            }
        };
        let g: Vec<f64> = eval_all(f, &z).into_iter().map(|x| k0 * x).collect();
        for m in 0..n {
            let mut w = g.clone();
            for j in m + 1..n {
                w = apply_r(f, &w, m, j, zf[m] - zf[j]);
            }
            for (k, eps) in f.profile.index_set().iter().enumerate() {
                w[k] *= p[eps[m] - 1];
            }
            for j in 0..m {
                w = apply_r(f, &w, m, j, zf[m] - zf[j] - kappa);
            }
            let mut zs = z.clone();
            zs[m] = &zs[m] - &params.kappa0;
            let mut zsf = zf.clone();
            zsf[m] -= kappa;
            let ks = k_gamma(&zsf, kappa).expect("checked above");
            let lhs: Vec<f64> = eval_all(f, &zs).into_iter().map(|x| ks * x).collect();
            let scale = lhs.iter().chain(&w).fold(0.0f64, |a, x| a.max(x.abs())).max(f64::MIN_POSITIVE);
            let err = lhs.iter().zip(&w).fold(0.0f64, |a, (x, y)| a.max((x - y).abs()));
            let residual = err / scale;
            max_residual = max_residual.max(residual);
            if residual >= tol {
                failures.push(format!("sample {sample}, m={}: residual {residual:.3e}", m + 1));
            }
        }
    }
    Ok(QkzReport {
        check: CheckKind::Numeric,
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        failures,
        max_residual: Some(max_residual),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::qkz::verify::k_multiplier;

    /// The Γ-product satisfies the exact multiplier identity numerically.
    #[test]
    fn gamma_product_matches_multiplier() {
        let kappa0 = int(-3);
        let z = [0.37, -0.81, 1.13, 0.05];
        let n = z.len();
        let k0 = k_gamma(&z, -3.0).unwrap();
        for m in 1..=n {
            let (num, den) = k_multiplier(m, n, &kappa0).unwrap();
            let zq: Vec<BigRat> = z.iter().map(|&x| BigRat::from_float(x).unwrap()).collect();
            let ratio = rat_to_f64(&num.eval(&zq).unwrap()) / rat_to_f64(&den.eval(&zq).unwrap());
            let mut s = z;
            s[m - 1] += 3.0;
            let k1 = k_gamma(&s, -3.0).unwrap();
            assert!((k1 / k0 - ratio).abs() < 1e-10 * ratio.abs().max(1.0), "m={m}");
        }
    }
}
