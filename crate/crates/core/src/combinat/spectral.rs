use crate::exactalg::{KappaScalar, Scalar};

use super::composition::{dominant_rep, Composition};

/// `c(λ) = κλ + w_λ⁺ ρ` with `ρ = (n-1, …, 1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralVector {
    pub entries: Vec<KappaScalar>,
}

impl SpectralVector {
    pub fn get(&self, i: usize) -> &KappaScalar {
        &self.entries[i - 1]
    }
}

/// Entry `i` is `κ λ_i + ρ_{w⁻¹(i)}` where `w = w_λ⁺`.
pub fn spectral_vector(lambda: &Composition) -> SpectralVector {
    let n = lambda.len();
    let (_, w) = dominant_rep(lambda);
    let winv = w.inverse();
    let entries = (1..=n)
        .map(|i| {
            let rho = (n - winv.apply(i)) as i64;
            KappaScalar::linear(lambda.parts()[i - 1] as i64, rho)
        })
        .collect();
    SpectralVector { entries }
}

/// Integer pair `(a, b)` with `c_i(λ) = aκ + b`, useful for cheap comparisons.
pub fn spectral_coords(lambda: &Composition) -> Vec<(i64, i64)> {
    let n = lambda.len();
    let (_, w) = dominant_rep(lambda);
    let winv = w.inverse();
    (1..=n)
        .map(|i| (lambda.parts()[i - 1] as i64, (n - winv.apply(i)) as i64))
        .collect()
}

impl SpectralVector {
    pub fn is_zero_at(&self, i: usize) -> bool {
        self.entries[i - 1].is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectral_examples() {
        let v = spectral_vector(&Composition::zero(4));
        let expect: Vec<_> = [3, 2, 1, 0].iter().map(|&b| KappaScalar::linear(0, b)).collect();
        assert_eq!(v.entries, expect);
        let v = spectral_vector(&Composition::new(vec![1, 0]));
        assert_eq!(v.entries, vec![KappaScalar::linear(1, 1), KappaScalar::linear(0, 0)]);
        let v = spectral_vector(&Composition::new(vec![0, 2, 1]));
        assert_eq!(
            v.entries,
            vec![KappaScalar::linear(0, 0), KappaScalar::linear(2, 2), KappaScalar::linear(1, 1)]
        );
    }
}
