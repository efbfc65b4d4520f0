use serde::Serialize;

use super::{CurveError, PlaneCurveModel};
use crate::ffun::FunctionElement;
use crate::numsg::SemigroupDescriptor;

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub pole_order: u64,
    /// Exponents of the generator functions, in generator order.
    pub exponents: Vec<u32>,
    pub function: FunctionElement,
}

/// Basis of `L(m P_inf)` by increasing pole order.
#[derive(Clone, Debug)]
pub struct RrBasis {
    pub m: u64,
    pub generator_names: Vec<&'static str>,
    pub generator_orders: Vec<u64>,
    pub elements: Vec<BasisElement>,
}

impl RrBasis {
    pub fn functions(&self) -> Vec<FunctionElement> {
        self.elements.iter().map(|e| e.function.clone()).collect()
    }

    pub fn pole_orders(&self) -> Vec<u64> {
        self.elements.iter().map(|e| e.pole_order).collect()
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    /// Readable names such as `x^2*y`.
    pub fn labels(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|e| {
                let parts: Vec<String> = e
                    .exponents
                    .iter()
                    .zip(&self.generator_names)
                    .filter(|(&k, _)| k > 0)
                    .map(|(&k, n)| if k == 1 { n.to_string() } else { format!("{n}^{k}") })
                    .collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuzukiAuxiliaries {
    #[serde(skip)]
    pub z: FunctionElement,
    #[serde(skip)]
    pub w: FunctionElement,
    pub z_pole: i64,
    pub w_pole: i64,
}

/// `z = x^(2q0+1) + y^(2q0)` and `w = x y^(2q0) + z^(2q0)`, with their pole
/// orders checked against `q + 2q0` and `q + 2q0 + 1` through norms.
pub fn suzuki_auxiliaries(curve: &PlaneCurveModel) -> Result<SuzukiAuxiliaries, CurveError> {
    let (_, q0, q) = curve.suzuki_params().ok_or_else(|| CurveError::Unsupported("a Suzuki model".into()))?;
    let ff = curve.function_field()?;
    let x = ff.x();
    let y = ff.y();
    let y2q0 = y.pow(2 * q0);
    let z = x.pow(2 * q0 + 1).add(&y2q0);
    let w = x.mul(&y2q0).add(&z.pow(2 * q0));
    let z_pole = z.pole_order()?;
    let w_pole = w.pole_order()?;
    for (what, expected, found) in [("z", q + 2 * q0, z_pole), ("w", q + 2 * q0 + 1, w_pole)] {
        if found != expected as i64 {
            return Err(CurveError::PoleOrder { what: what.into(), expected: expected as i64, found });
        }
    }
    Ok(SuzukiAuxiliaries { z, w, z_pole, w_pole })
}

/// Lexicographically greatest exponent vector with `sum e_i w_i = h`.
fn representation(h: u64, weights: &[u64]) -> Option<Vec<u32>> {
    let Some((&w0, rest)) = weights.split_first() else {
        return (h == 0).then(Vec::new);
    };
    for e in (0..=h / w0).rev() {
        if let Some(mut tail) = representation(h - e * w0, rest) {
            tail.insert(0, e as u32);
            return Some(tail);
        }
    }
    None
}

/// Basis of `L(m P_inf)`: one product of generator functions for each
/// non-gap `h <= m`. Generators are `x, y` (and `z, w` on Suzuki models).
pub fn rr_basis(curve: &PlaneCurveModel, m: u64) -> Result<RrBasis, CurveError> {
    let ff = curve.function_field()?;
    let (m_x, m_y) = curve.pole_orders().ok_or_else(|| CurveError::Unsupported("a declared place at infinity".into()))?;
    let genus = curve.genus().ok_or_else(|| CurveError::Unsupported("a known genus".into()))?;
    let (names, orders, gens): (Vec<&'static str>, Vec<u64>, Vec<FunctionElement>) = if curve.suzuki_params().is_some() {
        let aux = suzuki_auxiliaries(curve)?;
        (
            vec!["x", "y", "z", "w"],
            vec![m_x, m_y, aux.z_pole as u64, aux.w_pole as u64],
            vec![ff.x(), ff.y(), aux.z, aux.w],
        )
    } else {
        (vec!["x", "y"], vec![m_x, m_y], vec![ff.x(), ff.y()])
    };
    let sg = SemigroupDescriptor::new(&orders)?;
    if sg.genus() != genus {
        return Err(CurveError::RiemannRoch { m, expected: m + 1 - genus.min(m + 1), found: m + 1 - sg.genus().min(m + 1) });
    }
    let mut elements: Vec<BasisElement> = Vec::new();
    for h in sg.members_up_to(m) {
        let exponents = representation(h, &orders).expect("member has a representation");
        let function = exponents
            .iter()
            .zip(&gens)
            .filter(|(&e, _)| e > 0)
            .fold(ff.one(), |acc, (&e, g)| acc.mul(&g.pow(e as u64)));
        if elements.last().is_some_and(|l| l.pole_order == h) {
            return Err(CurveError::PoleCollision(h));
        }
        elements.push(BasisElement { pole_order: h, exponents, function });
    }
    if m + 1 >= 2 * genus {
        let expected = m + 1 - genus;
        if elements.len() as u64 != expected {
            return Err(CurveError::RiemannRoch { m, expected, found: elements.len() as u64 });
        }
    }
    Ok(RrBasis { m, generator_names: names, generator_orders: orders, elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suzuki_basis() {
        let s = PlaneCurveModel::suzuki(1).unwrap();
        let aux = suzuki_auxiliaries(&s).unwrap();
        assert_eq!((aux.z_pole, aux.w_pole), (12, 13));
        let b = rr_basis(&s, 13).unwrap();
        assert_eq!(b.pole_orders(), vec![0, 8, 10, 12, 13]);
        assert_eq!(b.labels(), vec!["1", "x", "y", "z", "w"]);
        for e in &b.elements {
            assert_eq!(e.function.pole_order().unwrap(), e.pole_order as i64);
        }
        let big = rr_basis(&s, 40).unwrap();
        assert_eq!(big.dimension() as u64, 40 - 14 + 1);
        for e in big.elements.iter().step_by(5) {
            assert_eq!(e.function.pole_order().unwrap(), e.pole_order as i64);
        }
    }

    #[test]
    fn hermitian_basis() {
        let h = PlaneCurveModel::hermitian(2).unwrap();
        let b = rr_basis(&h, 3).unwrap();
        assert_eq!(b.labels(), vec!["1", "x", "y"]);
        assert_eq!(rr_basis(&h, 0).unwrap().labels(), vec!["1"]);
        let h = PlaneCurveModel::hermitian(4).unwrap();
        let b = rr_basis(&h, 20).unwrap();
        assert_eq!(b.dimension(), 20 - 6 + 1);
        // every element is x^a y^b with b < l
        assert!(b.elements.iter().all(|e| e.exponents[1] < 4));
    }
}
