use crate::combinat::{sort_word, Permutation, SingularParams};
use crate::daha::DahaOps;
use crate::error::Error;
use crate::exactalg::{int, BigRat, QPoly};

use super::*;

fn params(k: u32, r: u32, s: u32, m: u32, l: u32) -> SingularParams {
    SingularParams::new(k, r, s, m, l).unwrap()
}

fn flip(f: &TensorPoly<BigRat>, eps: &[usize]) -> TensorPoly<BigRat> {
    let mut g = f.clone();
    g.set(eps.to_vec(), f.component(eps).neg()).unwrap();
    g
}

#[test]
fn two_site_solution() {
    let f = build_solution(&params(2, 2, 0, 1, 0), &[1, 1]).unwrap();
    assert_eq!(f.component(&[1, 2]), QPoly::one(2));
    assert_eq!(f.component(&[2, 1]), QPoly::one(2).neg());
    assert!(verify_exchange(&f).passed());
    let triv = QkzParams::trivial(int(-2), 2).unwrap();
    assert!(verify_cyclic(&f, &triv).passed());

    let bad = flip(&f, &[2, 1]);
    let r = verify_exchange(&bad);
    assert!(!r.passed());
    assert!(r.failures.iter().any(|s| s.contains("eps=")));
    let num = verify_qkz_numeric(&f, &triv, 10, 1e-9, 7).unwrap();
    assert!(num.passed(), "{num:?}");
}

#[test]
fn four_site_solution() {
    let p = params(2, 2, 0, 2, 0);
    let f = build_solution(&p, &[2, 2]).unwrap();
    let z = |i| QPoly::var(4, i);
    let one = QPoly::one(4);
    let f_delta = z(1).sub(&z(2)).sub(&one).mul(&z(3).sub(&z(4)).sub(&one));
    assert_eq!(f.component(&[1, 1, 2, 2]), f_delta);
    assert!(verify_eigenproblem(&f_delta, &[1, 1, 2, 2], &int(-3)).passed());
    assert!(verify_exchange(&f).passed());
    let triv = QkzParams::trivial(int(-3), 2).unwrap();
    assert!(verify_cyclic(&f, &triv).passed());
    let twisted = QkzParams::new(int(-3), vec![int(2), int(1)]).unwrap();
    assert!(!verify_cyclic(&f, &twisted).passed());
    let bad = flip(&f, &[2, 1, 1, 2]);
    assert!(!verify_cyclic(&bad, &triv).passed());
    let num = verify_qkz_numeric(&bad, &triv, 5, 1e-9, 1).unwrap();
    assert!(num.max_residual.unwrap() > 1e-3);
}

#[test]
fn eigenproblem_examples() {
    assert!(verify_eigenproblem(&QPoly::one(2), &[1, 2], &int(5)).passed());
    let r = verify_eigenproblem(&QPoly::var(2, 1), &[1, 2], &int(5));
    assert_eq!(r.failures, vec!["Y1".to_string(), "Y2".to_string()]);
}

#[test]
fn k_multiplier_examples() {
    assert_eq!(k_multiplier(1, 1, &int(-2)).unwrap(), (QPoly::one(1), QPoly::one(1)));
    let z = |i| QPoly::var(2, i);
    let (num, den) = k_multiplier(2, 2, &int(-2)).unwrap();
    assert_eq!(num, z(1).sub(&z(2)).sub(&QPoly::one(2)));
    assert_eq!(den, z(1).sub(&z(2)).sub(&QPoly::constant(2, int(3))));
    let (num, den) = k_multiplier(1, 2, &int(-2)).unwrap();
    assert_eq!(num, z(1).sub(&z(2)).sub(&QPoly::one(2)));
    assert_eq!(den, z(1).sub(&z(2)).add(&QPoly::one(2)));
    assert!(matches!(k_multiplier(3, 2, &int(-2)), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn subdivisions_are_validated() {
    let p = params(2, 2, 0, 2, 1);
    assert!(validate_subdivision(&p, &[2, 3]).is_ok());
    assert!(validate_subdivision(&p, &[2, 1, 2]).is_ok());
    assert!(matches!(validate_subdivision(&p, &[3, 2]), Err(Error::InvalidSubdivision(_))));
    assert!(validate_subdivision(&p, &[1, 1, 1, 1, 1]).is_ok());
    assert!(validate_subdivision(&p, &[2, 2]).is_err());
}

/// All reduced words of the permutation sending ε to δ.
fn reduced_words(eps: &[usize], delta: &[usize]) -> Vec<Vec<usize>> {
    if eps == delta {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // The last letter to act on ε is any descent position.
    for j in 1..eps.len() {
        if eps[j - 1] > eps[j] {
            let mut e = eps.to_vec();
            e.swap(j - 1, j);
            for mut w in reduced_words(&e, delta) {
                w.push(j);
                out.push(w);
            }
        }
    }
    out
}

#[test]
fn components_do_not_depend_on_the_reduced_word() {
    for (p, d) in [(params(2, 2, 0, 2, 0), vec![2, 2]), (params(3, 2, 0, 1, 1), vec![1, 1, 2])] {
        let f = build_solution(&p, &d).unwrap();
        let delta = f.profile.delta().to_vec();
        let ops = DahaOps::new(p.kappa0());
        let f_delta = f.component(&delta);
        for eps in f.profile.index_set() {
            let words = reduced_words(eps, &delta);
            let len = sort_word(eps, &delta).unwrap().len();
            for w in &words {
                assert_eq!(w.len(), len);
                // Rightmost letter acts first on ε.
                let perm = Permutation::from_word(eps.len(), w).unwrap();
                assert_eq!(perm.act(eps), delta);
                assert_eq!(component_from_word(&ops, &f_delta, w), f.component(eps), "{eps:?} {w:?}");
            }
            for i in 1..eps.len() {
                let mut s = eps.clone();
                s.swap(i - 1, i);
                let t = ops.demazure_lusztig(i, &f.component(eps)).unwrap();
                assert_eq!(t, f.component(&s).neg());
            }
        }
    }
}
