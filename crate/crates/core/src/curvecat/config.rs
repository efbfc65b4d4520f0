use serde::Deserialize;

use super::{CurveError, PlaneCurveModel, Term};
use crate::galois::make_field;

/// A custom curve read from TOML:
///
/// ```toml
/// name = "y2y-x5"
/// p = 2
/// n = 4
/// genus = 2                                  # optional
/// monomials = [[0, 2, 1], [0, 1, 1], [5, 0, 1]]  # [a, b, coeff]: coeff * x^a * y^b
/// ```
///
/// Coefficients are canonical element indices of `GF(p^n)`.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CustomCurveConfig {
    pub name: String,
    pub p: u32,
    pub n: u32,
    pub genus: Option<u64>,
    pub monomials: Vec<[u32; 3]>,
}

impl CustomCurveConfig {
    pub fn parse(text: &str) -> Result<CustomCurveConfig, CurveError> {
        toml::from_str(text).map_err(|e| CurveError::Config(e.to_string()))
    }

    pub fn build(&self) -> Result<PlaneCurveModel, CurveError> {
        let field = make_field(self.p, self.n)?;
        let terms = self.monomials.iter().map(|&[a, b, coeff]| Term { a, b, coeff }).collect();
        PlaneCurveModel::custom(&self.name, field, terms, self.genus)
    }
}
