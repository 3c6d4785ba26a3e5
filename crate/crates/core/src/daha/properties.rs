use std::cmp::Ordering;

use crate::combinat::enumerate_compositions;
use crate::exactalg::{global_cmp, KPoly, KappaScalar, Scalar};

use super::ops::DahaOps;

fn monomials(n: usize, d: usize) -> Vec<KPoly> {
    enumerate_compositions(n, d)
        .into_iter()
        .map(|c| KPoly::monomial(c.parts(), KappaScalar::one()))
        .collect()
}

#[test]
fn y_minus_identity_lowers_degree_by_dunkl() {
    let ops = DahaOps::generic();
    for n in 2..=3 {
        for f in monomials(n, 4) {
            let d = f.total_degree().unwrap();
            for i in 1..=n {
                let diff = f.sub(&ops.y_op(i, &f).unwrap());
                assert!(diff.total_degree().is_none_or(|e| e < d), "Y{i} on {f:?}");
                if d > 0 {
                    assert_eq!(diff.homogeneous_part(d - 1), ops.dunkl(i, &f).unwrap());
                }
            }
        }
    }
}

#[test]
fn psi_v_and_phi_u_are_triangular() {
    let ops = DahaOps::generic();
    for n in 2..=3 {
        for f in monomials(n, 4) {
            let (lead, _) = f.leading_term().unwrap();
            for i in 1..=n {
                for g in [ops.psi_v(i, &f).unwrap(), ops.cherednik_u(i, &f).unwrap()] {
                    for (m, _) in g.terms() {
                        assert_ne!(global_cmp(m.exps(), lead.exps()), Ordering::Greater, "{i} on {f:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn cherednik_operators_commute() {
    let ops = DahaOps::generic();
    let n = 3;
    for f in monomials(n, 3) {
        for i in 1..=n {
            for j in i + 1..=n {
                let a = ops.cherednik_u(i, &ops.cherednik_u(j, &f).unwrap()).unwrap();
                let b = ops.cherednik_u(j, &ops.cherednik_u(i, &f).unwrap()).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
