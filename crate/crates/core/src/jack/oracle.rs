use crate::error::{Error, Result};
use crate::exactalg::QPoly;

/// The closed forms at `κ = −(N+1)` for the family with `(k, r, s) = (N, 2, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizedOracle {
    /// `∏_{i<j, δ_i = δ_j} (x_i − x_j)`.
    pub xi: QPoly,
    /// `∏_{i<j, δ_i = δ_j} (z_i − z_j − 1)`.
    pub e: QPoly,
    /// `δ = (1^m, …, (N−l)^m, (N−l+1)^{m+1}, …, N^{m+1})`.
    pub delta: Vec<usize>,
}

/// Builds both products and the word δ directly from `(N, m, l)`.
pub fn factorized_oracle(big_n: usize, m: usize, l: usize) -> Result<FactorizedOracle> {
    if big_n < 2 || m < 1 || l >= big_n {
        return Err(Error::InvalidParams(format!(
            "need N >= 2, m >= 1, 0 <= l < N; got N={big_n}, m={m}, l={l}"
        )));
    }
    let mut delta = Vec::with_capacity(big_n * m + l);
    for a in 1..=big_n {
        let len = if a <= big_n - l { m } else { m + 1 };
        delta.extend(std::iter::repeat_n(a, len));
    }
    let n = delta.len();
    let mut xi = QPoly::one(n);
    let mut e = QPoly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if delta[i - 1] == delta[j - 1] {
                let diff = QPoly::var(n, i).sub(&QPoly::var(n, j));
                xi = xi.mul(&diff);
                e = e.mul(&diff.sub(&QPoly::one(n)));
            }
        }
    }
    Ok(FactorizedOracle { xi, e, delta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> QPoly {
        QPoly::var(n, i)
    }

    #[test]
    fn oracle_examples() {
        let o = factorized_oracle(2, 2, 0).unwrap();
        assert_eq!(o.delta, vec![1, 1, 2, 2]);
        assert_eq!(o.xi, x(4, 1).sub(&x(4, 2)).mul(&x(4, 3).sub(&x(4, 4))));
        let one = QPoly::one(4);
        assert_eq!(o.e, x(4, 1).sub(&x(4, 2)).sub(&one).mul(&x(4, 3).sub(&x(4, 4)).sub(&one)));

        let o = factorized_oracle(2, 1, 0).unwrap();
        assert_eq!(o.delta, vec![1, 2]);
        assert_eq!((o.xi, o.e), (QPoly::one(2), QPoly::one(2)));

        let o = factorized_oracle(3, 1, 1).unwrap();
        assert_eq!(o.delta, vec![1, 2, 3, 3]);
        assert_eq!(o.xi, x(4, 3).sub(&x(4, 4)));
        assert_eq!(o.e, x(4, 3).sub(&x(4, 4)).sub(&QPoly::one(4)));

        assert!(factorized_oracle(1, 1, 0).is_err());
        assert!(factorized_oracle(2, 0, 0).is_err());
        assert!(factorized_oracle(2, 1, 2).is_err());
    }
}
