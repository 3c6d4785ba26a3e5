//! The coefficient-field abstraction shared by generic (ℚ(κ)) and
//! specialized (ℚ) computations.

use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rat, parse_rat, BigRat};
use crate::error::{Error, Result};

/// An exact field element usable as a polynomial coefficient.
///
/// The arithmetic methods take references and allocate a fresh value; every
/// implementation keeps values in a canonical form so that `==` is equality
/// in the field.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &BigRat) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_rat(&BigRat::from_integer(v.into()))
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// Ascending κ-coefficients of numerator and denominator.
    fn to_parts(&self) -> (Vec<BigRat>, Vec<BigRat>);

    fn from_parts(num: &[BigRat], den: &[BigRat]) -> Result<Self>;

    fn to_json_parts(&self) -> (Vec<String>, Vec<String>) {
        let (n, d) = self.to_parts();
        let render = |v: Vec<BigRat>| {
            if v.is_empty() {
                vec!["0".to_string()]
            } else {
                v.iter().map(format_rat).collect()
            }
        };
        (render(n), render(d))
    }

    fn from_json_parts(num: &[String], den: &[String]) -> Result<Self> {
        let n = num.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        let d = den.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        Self::from_parts(&n, &d)
    }

    /// Plain-text rendering used inside polynomial output; wraps in
    /// parentheses when the value is not a single rational.
    fn render_text(&self) -> String {
        self.to_string()
    }

    fn render_latex(&self) -> String;

    /// True when the value is a rational constant, returning it.
    fn as_rational(&self) -> Option<BigRat>;
}

impl Scalar for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_parts(&self) -> (Vec<BigRat>, Vec<BigRat>) {
        let n = if Zero::is_zero(self) { vec![] } else { vec![self.clone()] };
        (n, vec![One::one()])
    }
    fn from_parts(num: &[BigRat], den: &[BigRat]) -> Result<Self> {
        let non_const = |v: &[BigRat]| v.iter().skip(1).any(|c| !Zero::is_zero(c));
        if non_const(num) || non_const(den) {
            return Err(Error::Parse("coefficient depends on kappa; expected a rational".into()));
        }
        let n = num.first().cloned().unwrap_or_else(Zero::zero);
        let d = den.first().cloned().unwrap_or_else(Zero::zero);
        if Zero::is_zero(&d) {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(n / d)
    }
    fn render_latex(&self) -> String {
        let neg = self < &Zero::zero();
        let a = if neg { -self } else { self.clone() };
        let body = if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
    fn as_rational(&self) -> Option<BigRat> {
        Some(self.clone())
    }
}
