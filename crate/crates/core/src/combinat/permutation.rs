use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidParams(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The product `s_{i₁} ⋯ s_{i_l}` of 1-based adjacent transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
            }
            p = p.compose(&Permutation::simple(n, i));
        }
        Ok(p)
    }

    /// The adjacent transposition `s_i` (1-based).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Acts on a word by `(wε)_i = ε_{w⁻¹(i)}`.
    pub fn act<T: Clone>(&self, word: &[T]) -> Vec<T> {
        let mut out = word.to_vec();
        for (k, &v) in self.images.iter().enumerate() {
            out[v - 1] = word[k].clone();
        }
        out
    }
}

/// A permutation together with one reduced word `s_{i₁} ⋯ s_{i_l}` for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub perm: Permutation,
    /// `[i₁, …, i_l]`; acting on a word, `s_{i_l}` is applied first.
    pub word: Vec<usize>,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// The shortest `w` with `w ε = δ`, with a reduced word obtained by stable
/// adjacent-transposition sorting of `ε` into `δ`.
pub fn sort_word<T: Ord + Clone>(eps: &[T], delta: &[T]) -> Result<ReducedWord> {
    let n = eps.len();
    if delta.len() != n {
        return Err(Error::NotSameMultiset);
    }
    let mut a = eps.to_vec();
    let mut b = delta.to_vec();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::NotSameMultiset);
    }
    // Target position of each letter of ε: equal letters keep their order.
    let mut target = vec![0usize; n];
    let mut used = vec![false; n];
    for (k, letter) in eps.iter().enumerate() {
        let pos = (0..n)
            .find(|&j| !used[j] && &delta[j] == letter)
            .expect("same multiset");
        used[pos] = true;
        target[k] = pos;
    }
    // Bubble sort the targets; each swap of adjacent positions (j, j+1) is s_{j+1}.
    let mut swaps = Vec::new();
    let mut t = target.clone();
    loop {
        let mut changed = false;
        for j in 0..n.saturating_sub(1) {
            if t[j] > t[j + 1] {
                t.swap(j, j + 1);
                swaps.push(j + 1);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // Sequential swaps s_{j₁}, then s_{j₂}, … give w = s_{j_last} ⋯ s_{j₁}.
    swaps.reverse();
    let perm = Permutation::from_word(n, &swaps)?;
    Ok(ReducedWord { perm, word: swaps })
}

/// Applies a reduced word to a word, rightmost letter first.
pub fn apply_word<T: Clone>(word: &[usize], eps: &[T]) -> Vec<T> {
    let mut out = eps.to_vec();
    for &i in word.iter().rev() {
        out.swap(i - 1, i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sort_word_examples() {
        let r = sort_word(&[1, 2], &[1, 2]).unwrap();
        assert!(r.perm.is_identity() && r.word.is_empty());
        let r = sort_word(&[2, 1], &[1, 2]).unwrap();
        assert_eq!(r.word, vec![1]);
        let r = sort_word(&[2, 1, 2, 1], &[1, 1, 2, 2]).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.perm.length(), 3);
        assert_eq!(apply_word(&r.word, &[2, 1, 2, 1]), vec![1, 1, 2, 2]);
        assert_eq!(r.perm.act(&[2, 1, 2, 1]), vec![1, 1, 2, 2]);
        assert!(matches!(sort_word(&[1, 1], &[1, 2]), Err(Error::NotSameMultiset)));
    }

    #[test]
    fn word_product_matches_action() {
        let p = Permutation::from_word(3, &[1, 2]).unwrap();
        assert_eq!(p.act(&['a', 'b', 'c']), apply_word(&[1, 2], &['a', 'b', 'c']));
        assert_eq!(p.length(), 2);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
    }
}
