//! Dense univariate polynomials over ℚ in the indeterminate κ.

use std::fmt;

use num_traits::{One, Zero};

use super::rational::BigRat;

/// Ascending coefficient list with no trailing zeros; the zero polynomial is
/// the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<BigRat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// The polynomial `κ`.
    pub fn x() -> Self {
        UPoly::from_coeffs(vec![BigRat::zero(), BigRat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigRat {
        self.coeffs.first().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn add(&self, rhs: &UPoly) -> UPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        UPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k);
            let b = rhs.coeffs.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRat) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dlead = divisor.leading().expect("division by zero polynomial");
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= ddeg {
            return (UPoly::zero(), self.clone());
        }
        let inv = dlead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn div_exact(&self, divisor: &UPoly) -> UPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Scales so that the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &UPoly) -> UPoly {
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            if b.is_constant() {
                return UPoly::one();
            }
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, at: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRat::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", super::rational::format_rat(&abs))?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}κ", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}κ^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::int;
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // (κ+1)(κ-2) and (κ+1)(κ+3)
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[1, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[2]).gcd(&p(&[0, 1])), UPoly::one());
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[5, -3, 0, 2]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "κ^2 - 1");
        assert_eq!(p(&[1, 2]).to_string(), "2*κ + 1");
    }
}
