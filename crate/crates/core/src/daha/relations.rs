//! Checks the defining relations of the degenerate DAHA in both polynomial
//! representations by applying both sides to every monomial up to a degree.

use serde::{Deserialize, Serialize};

use crate::combinat::enumerate_compositions;
use crate::exactalg::{KPoly, KappaScalar, Scalar};
use crate::exec::Execution;

use super::expr::OperatorExpr;
use super::ops::DahaOps;

type Expr = OperatorExpr<KappaScalar>;

/// One relation `lhs = rhs` between operators on polynomials.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation: String,
    pub n: usize,
    pub degree_bound: usize,
    pub status: Status,
    /// The first monomial (in the global order) on which the sides differ.
    pub counterexample: Option<Vec<u16>>,
}

/// Images of the generators in one representation.
struct Rep {
    tag: &'static str,
    n: usize,
    x: fn(usize, usize) -> Expr,
    s: fn(usize) -> Expr,
    u: fn(usize, usize) -> Expr,
    s_ik: fn(usize, usize) -> Expr,
}

impl Rep {
    fn psi(n: usize) -> Self {
        Rep {
            tag: "psi",
            n,
            x: Expr::y,
            s: Expr::t,
            u: |_, i| Expr::MulVar(i),
            s_ik: Expr::t_ik,
        }
    }

    fn phi(n: usize) -> Self {
        Rep {
            tag: "phi",
            n,
            x: |_, i| Expr::MulVar(i),
            s: |i| Expr::Transpose(i, i + 1),
            u: Expr::cherednik_u,
            s_ik: Expr::phi_s_ik,
        }
    }

    fn x(&self, i: usize) -> Expr {
        (self.x)(self.n, i)
    }
    fn u(&self, i: usize) -> Expr {
        (self.u)(self.n, i)
    }
    fn s(&self, i: usize) -> Expr {
        (self.s)(i)
    }
    /// `s_ij` for `i ≠ j` in either order.
    fn s_pair(&self, i: usize, j: usize) -> Expr {
        (self.s_ik)(i.min(j), i.max(j))
    }
}

fn rel(out: &mut Vec<Relation>, tag: &str, name: String, lhs: Expr, rhs: Expr) {
    out.push(Relation {
        name: format!("{tag}: {name}"),
        lhs,
        rhs,
    });
}

/// The relations of the subalgebra generated by `x_i`, `s_i`, `u_i` (no
/// inverses) in the representation `rep`.
fn presentation(rep: &Rep, out: &mut Vec<Relation>) {
    let n = rep.n;
    let t = rep.tag;
    let compose = |v: Vec<Expr>| Expr::Compose(v);
    for i in 1..n {
        rel(out, t, format!("s{i}^2 = 1"), compose(vec![rep.s(i), rep.s(i)]), Expr::Identity);
        if i + 1 < n {
            rel(
                out,
                t,
                format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1),
                compose(vec![rep.s(i), rep.s(i + 1), rep.s(i)]),
                compose(vec![rep.s(i + 1), rep.s(i), rep.s(i + 1)]),
            );
        }
        for j in i + 2..n {
            rel(
                out,
                t,
                format!("s{i} s{j} = s{j} s{i}"),
                compose(vec![rep.s(i), rep.s(j)]),
                compose(vec![rep.s(j), rep.s(i)]),
            );
        }
        rel(
            out,
            t,
            format!("s{i} x{i} s{i} = x{}", i + 1),
            compose(vec![rep.s(i), rep.x(i), rep.s(i)]),
            rep.x(i + 1),
        );
        rel(
            out,
            t,
            format!("s{i} u{i} = u{} s{i} + 1", i + 1),
            compose(vec![rep.s(i), rep.u(i)]),
            compose(vec![rep.u(i + 1), rep.s(i)]).plus(Expr::Identity),
        );
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            rel(
                out,
                t,
                format!("s{i} x{j} = x{j} s{i}"),
                compose(vec![rep.s(i), rep.x(j)]),
                compose(vec![rep.x(j), rep.s(i)]),
            );
            rel(
                out,
                t,
                format!("s{i} u{j} = u{j} s{i}"),
                compose(vec![rep.s(i), rep.u(j)]),
                compose(vec![rep.u(j), rep.s(i)]),
            );
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            rel(out, t, format!("[x{i}, x{j}] = 0"), Expr::commutator(rep.x(i), rep.x(j)), zero());
            rel(out, t, format!("[u{i}, u{j}] = 0"), Expr::commutator(rep.u(i), rep.u(j)), zero());
        }
    }
    let kappa = Expr::Scalar(KappaScalar::kappa());
    for i in 1..=n {
        for j in 1..=n {
            let rhs = if j < i {
                neg(compose(vec![rep.x(i), rep.s_pair(j, i)]))
            } else if j > i {
                neg(compose(vec![rep.x(j), rep.s_pair(i, j)]))
            } else {
                let mut parts = vec![compose(vec![kappa.clone(), rep.x(j)])];
                parts.extend((1..j).map(|k| compose(vec![rep.x(j), rep.s_pair(k, j)])));
                parts.extend((j + 1..=n).map(|k| compose(vec![rep.s_pair(j, k), rep.x(j)])));
                Expr::Sum(parts)
            };
            rel(out, t, format!("[u{i}, x{j}]"), Expr::commutator(rep.u(i), rep.x(j)), rhs);
        }
    }
}

fn zero() -> Expr {
    Expr::Scalar(KappaScalar::zero())
}

fn neg(e: Expr) -> Expr {
    Expr::Compose(vec![Expr::Scalar(KappaScalar::from(-1)), e])
}

/// Relations specific to the difference representation: the rotation
/// relation and those of the commuting family `v_i` and of `û_i`.
fn psi_extras(n: usize, out: &mut Vec<Relation>) {
    let t = "psi";
    for i in 2..n {
        rel(
            out,
            t,
            format!("omega T{i} = T{} omega", i - 1),
            Expr::omega().compose(Expr::t(i)),
            Expr::t(i - 1).compose(Expr::omega()),
        );
    }
    let v = |i| Expr::psi_v(n, i);
    let uh = |i| Expr::psi_uhat(n, i);
    for i in 1..=n {
        for j in i + 1..=n {
            rel(out, t, format!("[v{i}, v{j}] = 0"), Expr::commutator(v(i), v(j)), zero());
            rel(out, t, format!("[uhat{i}, uhat{j}] = 0"), Expr::commutator(uh(i), uh(j)), zero());
            let rhs = neg(uh(j).compose(Expr::t_ik(i, j)));
            rel(out, t, format!("[v{j}, uhat{i}] = -uhat{j} T{i}{j}"), Expr::commutator(v(j), uh(i)), rhs.clone());
            rel(out, t, format!("[v{i}, uhat{j}] = -uhat{j} T{i}{j}"), Expr::commutator(v(i), uh(j)), rhs);
        }
    }
    for i in 1..n {
        rel(
            out,
            t,
            format!("T{i} v{i} = v{} T{i} + 1", i + 1),
            Expr::t(i).compose(v(i)),
            v(i + 1).compose(Expr::t(i)).plus(Expr::Identity),
        );
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            rel(
                out,
                t,
                format!("T{i} v{j} = v{j} T{i}"),
                Expr::t(i).compose(v(j)),
                v(j).compose(Expr::t(i)),
            );
        }
    }
}

/// Every relation checked for `n` variables: first under ψ, then under φ.
pub fn daha_relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    presentation(&Rep::psi(n), &mut out);
    psi_extras(n, &mut out);
    presentation(&Rep::phi(n), &mut out);
    out
}

/// Applies both sides of every relation to every monomial of degree at most
/// `degree_bound`, in parallel by default.
pub fn check_daha_relations(n: usize, degree_bound: usize) -> Vec<RelationReport> {
    check_daha_relations_with(n, degree_bound, Execution::default())
}

pub fn check_daha_relations_with(n: usize, degree_bound: usize, exec: Execution) -> Vec<RelationReport> {
    check_relations(&daha_relations(n), n, degree_bound, exec)
}

/// Checks an explicit list of relations.
pub fn check_relations(relations: &[Relation], n: usize, degree_bound: usize, exec: Execution) -> Vec<RelationReport> {
    let ops = DahaOps::generic();
    let basis = enumerate_compositions(n, degree_bound);
    let jobs: Vec<(usize, usize)> = (0..relations.len())
        .flat_map(|r| (0..basis.len()).map(move |b| (r, b)))
        .collect();
    let ok = exec.map(&jobs, |&(r, b)| {
        let f = KPoly::monomial(basis[b].parts(), KappaScalar::one());
        let rel = &relations[r];
        match (rel.lhs.apply(&ops, &f), rel.rhs.apply(&ops, &f)) {
            (Ok(l), Ok(r)) => l == r,
            _ => false,
        }
    });
    relations
        .iter()
        .enumerate()
        .map(|(r, rel)| {
            let first_bad = (0..basis.len()).find(|&b| !ok[r * basis.len() + b]);
            RelationReport {
                relation: rel.name.clone(),
                n,
                degree_bound,
                status: if first_bad.is_some() { Status::Fail } else { Status::Pass },
                counterexample: first_bad.map(|b| basis[b].parts().to_vec()),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(reports: &'a [RelationReport], name: &str) -> &'a RelationReport {
        reports.iter().find(|r| r.relation == name).unwrap_or_else(|| panic!("{name} missing"))
    }

    #[test]
    fn all_relations_hold_for_two_variables() {
        let reports = check_daha_relations(2, 3);
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
        assert!(reports.iter().any(|r| r.relation == "psi: [v1, v2] = 0"));
    }

    #[test]
    fn spec_examples_for_three_variables() {
        let reports = check_daha_relations_with(3, 2, Execution::Sequential);
        assert_eq!(find(&reports, "psi: s1 s2 s1 = s2 s1 s2").status, Status::Pass);
        assert_eq!(find(&reports, "psi: omega T2 = T1 omega").status, Status::Pass);
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn broken_relation_yields_counterexample() {
        let bad = vec![Relation {
            name: "T1 = 1".into(),
            lhs: Expr::t(1),
            rhs: Expr::Identity,
        }];
        let r = &check_relations(&bad, 2, 2, Execution::Sequential)[0];
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexample, Some(vec![0, 1]));
        let json = serde_json::to_value(r).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["counterexample"], serde_json::json!([0, 1]));
    }
}
