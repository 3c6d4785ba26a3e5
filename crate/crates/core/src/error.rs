use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient has a pole at the requested value of κ. The offending
    /// monomial is recorded when the failure happened inside a polynomial.
    #[error("pole at kappa = {kappa}{}", monomial_suffix(.monomial))]
    PoleAtKappa {
        kappa: String,
        monomial: Option<Vec<u32>>,
    },
    #[error("numerator and denominator both vanish at kappa = {0}")]
    IndeterminateAtKappa(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),
    #[error("words are not rearrangements of each other")]
    NotSameMultiset,
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("genericity failure: {0}")]
    GenericityFailure(String),
    #[error("interpolation system is singular: {0}")]
    InterpolationSingular(String),
    #[error("sample point hit a pole after {0} retries")]
    SampleAtPole(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

fn monomial_suffix(m: &Option<Vec<u32>>) -> String {
    match m {
        Some(exps) => format!(" in coefficient of monomial {exps:?}"),
        None => String::new(),
    }
}

pub(crate) fn check_index(index: usize, max: usize) -> Result<()> {
    if index == 0 || index > max {
        Err(Error::IndexOutOfRange { index, max })
    } else {
        Ok(())
    }
}
