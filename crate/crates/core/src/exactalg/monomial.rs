use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector `x₁^{e₁}⋯x_n^{e_n}`.
///
/// The derived `Ord` is plain lexicographic and is only used as a storage
/// key; presentation and triangular solves use [`global_cmp`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// Unit vector for the 0-based variable `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn exps_mut(&mut self) -> &mut [u16] {
        &mut self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn to_u32_vec(&self) -> Vec<u32> {
        self.0.iter().map(|&e| e as u32).collect()
    }

    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut m = self.clone();
        m.0.swap(i, j);
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// The global order on compositions/monomials: total degree first, then the
/// sorted (partition) part compared lexicographically by partial sums, then
/// the composition itself compared lexicographically by partial sums.
///
/// This is a total order refining the dominance order within each orbit and
/// the dominance order of the sorted parts across orbits, which is the order
/// in which the Cherednik–Dunkl operators are triangular.
pub fn global_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: usize = a.iter().map(|&e| e as usize).sum();
    let db: usize = b.iter().map(|&e| e as usize).sum();
    da.cmp(&db)
        .then_with(|| {
            let mut sa: SmallVec<[u16; 8]> = SmallVec::from_slice(a);
            let mut sb: SmallVec<[u16; 8]> = SmallVec::from_slice(b);
            sa.sort_unstable_by(|x, y| y.cmp(x));
            sb.sort_unstable_by(|x, y| y.cmp(x));
            partial_sum_cmp(&sa, &sb)
        })
        .then_with(|| partial_sum_cmp(a, b))
}

fn partial_sum_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let (mut pa, mut pb) = (0usize, 0usize);
    for (&x, &y) in a.iter().zip(b) {
        pa += x as usize;
        pb += y as usize;
        match pa.cmp(&pb) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_order_is_graded_then_partition_then_composition() {
        assert_eq!(global_cmp(&[0, 1], &[1, 0]), Ordering::Less);
        assert_eq!(global_cmp(&[3, 0], &[0, 0]), Ordering::Greater);
        // (1,1) has a smaller sorted part than (0,2) even though its partial
        // sums dominate.
        assert_eq!(global_cmp(&[1, 1], &[0, 2]), Ordering::Less);
        assert_eq!(global_cmp(&[1, 1, 0], &[2, 0, 0]), Ordering::Less);
    }
}
