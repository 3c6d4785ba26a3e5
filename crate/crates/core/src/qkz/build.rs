use crate::combinat::{lambda_family, sort_word, SingularParams};
use crate::daha::DahaOps;
use crate::error::{Error, Result};
use crate::exactalg::{BigRat, QPoly};
use crate::exec::Execution;
use crate::jack::{shifted_jack_with, specialize, Method};

use super::tensor::{TensorPoly, WeightProfile};

/// Checks that `d` fits the family: `d_i = 1` for `i ≤ (k+1)s` and the rest
/// splits into consecutive blocks summing to `m` (`k − l` times) then `m + 1`
/// (`l` times).
pub fn validate_subdivision(p: &SingularParams, d: &[usize]) -> Result<()> {
    p.validate()?;
    let bad = |msg: String| Err(Error::InvalidSubdivision(msg));
    if d.iter().sum::<usize>() != p.n() {
        return bad(format!("sum of {d:?} is not n = {}", p.n()));
    }
    let ones = ((p.k + 1) * p.s) as usize;
    if d.len() < ones || d[..ones].iter().any(|&x| x != 1) {
        return bad(format!("the first {ones} parts must equal 1"));
    }
    let targets = std::iter::repeat_n(p.m as usize, (p.k - p.l) as usize)
        .chain(std::iter::repeat_n(p.m as usize + 1, p.l as usize));
    let mut rest = d[ones..].iter();
    for target in targets {
        let mut acc = 0;
        while acc < target {
            match rest.next() {
                Some(&x) if x > 0 => acc += x,
                _ => return bad(format!("{d:?} does not subdivide the blocks")),
            }
        }
        if acc != target {
            return bad(format!("{d:?} does not subdivide the blocks"));
        }
    }
    if rest.next().is_some() {
        return bad(format!("{d:?} has parts left over"));
    }
    Ok(())
}

/// `F_ε = ±T_{w_ε} F_δ`, taking the reduced word `[i_1, …, i_l]` with
/// `s_{i_1}(⋯(s_{i_l} ε)) = δ`. The letter `i_1` acts first: extending the
/// word by `s_j` on the right multiplies `F` by `−T_j` on the left, which
/// is the exchange relation `T_j F_ε = −F_{s_j ε}`.
pub fn component_from_word(ops: &DahaOps<BigRat>, f_delta: &QPoly, word: &[usize]) -> QPoly {
    let mut f = f_delta.clone();
    for &i in word {
        f = ops.demazure_lusztig(i, &f).expect("letter in range").neg();
    }
    f
}

/// Assembles `F` from `F_δ = E_λ|_{κ₀}` for `λ = λ(k,s,m,l,r)`.
pub fn build_solution(p: &SingularParams, d: &[usize]) -> Result<TensorPoly<BigRat>> {
    build_solution_with(p, d, Execution::default())
}

pub fn build_solution_with(p: &SingularParams, d: &[usize], exec: Execution) -> Result<TensorPoly<BigRat>> {
    validate_subdivision(p, d)?;
    let profile = WeightProfile::new(d)?;
    let kappa0 = p.kappa0();
    let lambda = lambda_family(p)?;
    let e = shifted_jack_with(&lambda, Method::ViaPhi, exec)?;
    let f_delta = specialize(&e.poly, &kappa0)?;
    let ops = DahaOps::new(kappa0);
    let comps = exec.map(profile.index_set(), |eps| {
        let w = sort_word(eps, profile.delta()).expect("same letters");
        component_from_word(&ops, &f_delta, &w.word)
    });
    let mut t = TensorPoly::zero(profile.clone());
    for (eps, f) in profile.index_set().iter().zip(comps) {
        t.set(eps.clone(), f)?;
    }
    Ok(t)
}
