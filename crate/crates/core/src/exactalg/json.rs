//! JSON interchange format for scalars and polynomials.

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::poly::MultiPoly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

impl ScalarJson {
    pub fn from_scalar<C: Scalar>(c: &C) -> Self {
        let (num, den) = c.to_json_parts();
        ScalarJson { num, den }
    }

    pub fn to_scalar<C: Scalar>(&self) -> Result<C> {
        C::from_json_parts(&self.num, &self.den)
    }
}

impl PolyJson {
    /// Terms are emitted highest-first in the global order.
    pub fn from_poly<C: Scalar>(f: &MultiPoly<C>) -> Self {
        let terms = f
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let (num, den) = c.to_json_parts();
                TermJson {
                    exp: m.to_u32_vec(),
                    num,
                    den,
                }
            })
            .collect();
        PolyJson {
            nvars: f.nvars(),
            terms,
        }
    }

    pub fn to_poly<C: Scalar>(&self) -> Result<MultiPoly<C>> {
        let mut f = MultiPoly::zero(self.nvars);
        for t in &self.terms {
            if t.exp.len() != self.nvars {
                return Err(Error::ArityMismatch {
                    expected: self.nvars,
                    found: t.exp.len(),
                });
            }
            let exps = t
                .exp
                .iter()
                .map(|&e| u16::try_from(e).map_err(|_| Error::Parse(format!("exponent {e} too large"))))
                .collect::<Result<Vec<u16>>>()?;
            f.add_term(Monomial::from_exps(&exps), C::from_json_parts(&t.num, &t.den)?);
        }
        Ok(f)
    }
}

impl<C: Scalar> MultiPoly<C> {
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson::from_poly(self)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.to_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::super::kappa::KappaScalar;
    use super::super::rational::{rat, BigRat};
    use super::*;

    #[test]
    fn emits_documented_shape() {
        let f = MultiPoly::<KappaScalar>::var(2, 2).scale(&KappaScalar::linear(1, 1).inv().unwrap());
        let v: serde_json::Value = serde_json::from_str(&f.to_json_string()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"nvars": 2, "terms": [{"exp": [0, 1], "num": ["1"], "den": ["1", "1"]}]})
        );
        let g = MultiPoly::<BigRat>::constant(1, rat(-3, 4));
        assert_eq!(g.to_json_string(), r#"{"nvars":1,"terms":[{"exp":[0],"num":["-3/4"],"den":["1"]}]}"#);
    }

    #[test]
    fn rejects_kappa_dependent_coefficient_for_rationals() {
        let f = MultiPoly::<KappaScalar>::constant(1, KappaScalar::kappa());
        assert!(MultiPoly::<BigRat>::from_json_str(&f.to_json_string()).is_err());
    }
}
