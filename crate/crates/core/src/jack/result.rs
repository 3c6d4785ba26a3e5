use serde::{Deserialize, Serialize};

use crate::combinat::{spectral_vector, Composition, SpectralVector};
use crate::error::{Error, Result};
use crate::exactalg::{render_latex, render_text, KPoly, PolyJson, ScalarJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JackKind {
    Nonsymmetric,
    Shifted,
}

/// How a shifted polynomial is obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Image of ξ_λ under Φ.
    #[default]
    ViaPhi,
    /// Solve the vanishing conditions directly.
    ViaInterpolation,
}

/// ξ_λ (in `x`) or E_λ (in `z`) over ℚ(κ), monic at the monomial `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackResult {
    pub label: Composition,
    pub poly: KPoly,
    pub spectral: SpectralVector,
    pub kind: JackKind,
}

#[derive(Serialize, Deserialize)]
struct JackJson {
    lambda: Vec<u16>,
    kind: JackKind,
    spectral: Vec<ScalarJson>,
    #[serde(flatten)]
    poly: PolyJson,
}

impl JackResult {
    pub fn new(label: Composition, poly: KPoly, kind: JackKind) -> Self {
        let spectral = spectral_vector(&label);
        JackResult {
            label,
            poly,
            spectral,
            kind,
        }
    }

    pub fn variable(&self) -> char {
        match self.kind {
            JackKind::Nonsymmetric => 'x',
            JackKind::Shifted => 'z',
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let j = JackJson {
            lambda: self.label.parts().to_vec(),
            kind: self.kind,
            spectral: self.spectral.entries.iter().map(ScalarJson::from_scalar).collect(),
            poly: PolyJson::from_poly(&self.poly),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: JackJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let poly = j.poly.to_poly()?;
        Ok(JackResult::new(Composition::new(j.lambda), poly, j.kind))
    }

    pub fn render_text(&self) -> String {
        render_text(&self.poly, self.variable())
    }

    pub fn render_latex(&self) -> String {
        render_latex(&self.poly, self.variable())
    }
}
