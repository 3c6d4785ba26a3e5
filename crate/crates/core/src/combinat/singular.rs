use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{rat, BigRat};

use super::composition::Composition;

/// Parameters `(k, r, s, m, l)` of the singular family `λ(k,s,m,l,r)` at
/// `κ₀ = -(k+1)/(r-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularParams {
    pub k: u32,
    pub r: u32,
    pub s: u32,
    pub m: u32,
    pub l: u32,
}

impl SingularParams {
    pub fn new(k: u32, r: u32, s: u32, m: u32, l: u32) -> Result<Self> {
        let p = SingularParams { k, r, s, m, l };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParams(format!("{self:?}: {msg}")));
        if self.k == 0 {
            return bad("k must be positive");
        }
        if self.r < 2 {
            return bad("r must be at least 2");
        }
        if self.m == 0 {
            return bad("m must be at least 1");
        }
        if self.l >= self.k {
            return bad("l must satisfy 0 <= l < k");
        }
        if (self.r - 1).gcd(&(self.k + 1)) != 1 {
            return bad("gcd(r-1, k+1) must be 1");
        }
        Ok(())
    }

    /// `n = (s+m)k + s + l`.
    pub fn n(&self) -> usize {
        ((self.s + self.m) * self.k + self.s + self.l) as usize
    }

    /// `κ₀ = -(k+1)/(r-1)`.
    pub fn kappa0(&self) -> BigRat {
        rat(-(self.k as i64 + 1), self.r as i64 - 1)
    }
}

/// `λ[r,s,a] = ((r-1)(s+a), …, (r-1)(s+1), 0)` for `a ≥ 1`, and `(0)` for `a = 0`.
fn block(r: u32, s: u32, a: u32) -> Vec<u16> {
    let mut v: Vec<u16> = (1..=a).rev().map(|t| ((r - 1) * (s + t)) as u16).collect();
    v.push(0);
    v
}

/// `λ(k,s,m,l,r) = (0^{(k+1)s}, λ[r,s,m-1]^{k-l}, λ[r,s,m]^{l})`.
pub fn lambda_family(p: &SingularParams) -> Result<Composition> {
    p.validate()?;
    let mut parts = vec![0u16; ((p.k + 1) * p.s) as usize];
    for _ in 0..p.k - p.l {
        parts.extend(block(p.r, p.s, p.m - 1));
    }
    for _ in 0..p.l {
        parts.extend(block(p.r, p.s, p.m));
    }
    debug_assert_eq!(parts.len(), p.n());
    Ok(Composition::new(parts))
}

/// The values `-l/m` with `2 ≤ l ≤ n`, `1 ≤ m ≤ bound`, `m ∉ lℤ`, sorted
/// ascending and deduplicated.
pub fn singular_values(n: usize, bound: usize) -> Vec<BigRat> {
    let mut out = Vec::new();
    for l in 2..=n {
        for m in 1..=bound {
            if m % l != 0 {
                out.push(rat(-(l as i64), m as i64));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_family_examples() {
        let c = |v: &[u16]| Composition::new(v.to_vec());
        assert_eq!(lambda_family(&SingularParams::new(2, 2, 0, 2, 0).unwrap()).unwrap(), c(&[1, 0, 1, 0]));
        assert_eq!(
            lambda_family(&SingularParams::new(2, 2, 0, 2, 1).unwrap()).unwrap(),
            c(&[1, 0, 2, 1, 0])
        );
        for k in 1..5 {
            let p = SingularParams::new(k, 2, 0, 1, 0).unwrap();
            assert_eq!(lambda_family(&p).unwrap(), Composition::zero(k as usize));
        }
        assert!(SingularParams::new(2, 4, 0, 1, 0).is_err()); // gcd(3, 3) = 3
        assert!(SingularParams::new(2, 2, 0, 1, 2).is_err());
    }

    #[test]
    fn singular_value_examples() {
        assert_eq!(singular_values(2, 3), vec![rat(-2, 1), rat(-2, 3)]);
        assert_eq!(singular_values(2, 1), vec![rat(-2, 1)]);
        assert_eq!(singular_values(3, 2), vec![rat(-3, 1), rat(-2, 1), rat(-3, 2)]);
    }
}
