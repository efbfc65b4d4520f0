use serde::Serialize;

use super::{ramification_degree, vp_bounds, OrderError};
use crate::curvecat::{enumerate_points, PlaneCurveModel};
use crate::exec::{map_collect, ExecMode};
use crate::ffun::{expand_at, FunctionElement};
use crate::galois::{Elem, Embedding};
use crate::linalg::row_reduce;

/// Orders `{v_P(f) : f in span(basis)}` at the affine point `(a, b)` of
/// the curve over `emb.big()`, read off as pivot columns of the reduced
/// coefficient matrix. `t = x - a` must be a local parameter.
pub fn local_jorders(basis: &[FunctionElement], emb: &Embedding, a: Elem, b: Elem, d: u64) -> Result<Vec<u64>, OrderError> {
    let Some(first) = basis.first() else {
        return Err(OrderError::EmptyBasis);
    };
    let ff = first.function_field();
    let k = emb.big();
    let max = 8 * (d as usize).max(1) + 8;
    let mut n = d as usize + 2;
    loop {
        let exp = expand_at(ff, emb, a, b, n)?;
        let mut rows = Vec::with_capacity(basis.len());
        let mut ok = true;
        for f in basis {
            let v = exp.eval(f);
            if v.precision < n as i64 {
                ok = false;
                break;
            }
            let mut row = vec![Elem::ZERO; n];
            if let Some(o) = v.order {
                if o < 0 {
                    return Err(OrderError::CrossCheck(format!("basis element has a pole at ({}, {})", a.0, b.0)));
                }
                for (i, &c) in v.coeffs.iter().enumerate() {
                    if o as usize + i < n {
                        row[o as usize + i] = c;
                    }
                }
            }
            rows.push(row);
        }
        if ok {
            let piv = row_reduce(&mut rows, k);
            if piv.len() == basis.len() {
                return Ok(piv.into_iter().map(|c| c as u64).collect());
            }
        }
        if n >= max {
            return Err(OrderError::PrecisionExhausted { point: format!("({}, {})", a.0, b.0), max });
        }
        n = (2 * n).min(max);
    }
}

/// `j_i = d - m_(r-i)` at the point at infinity from the pole orders of a
/// basis of `L(d P_inf)`.
pub fn local_jorders_at_infinity(pole_orders: &[u64], d: u64) -> Vec<u64> {
    let mut j: Vec<u64> = pole_orders.iter().map(|&m| d - m).collect();
    j.sort_unstable();
    j
}

/// Vanishing order of `w` at an affine point, raising precision as needed.
pub(crate) fn order_at(w: &FunctionElement, emb: &Embedding, a: Elem, b: Elem, max: usize) -> Result<i64, OrderError> {
    let mut n = 16usize;
    loop {
        let exp = expand_at(w.function_field(), emb, a, b, n)?;
        if let Some(o) = exp.order(w) {
            return Ok(o);
        }
        if n >= max {
            return Err(OrderError::PrecisionExhausted { point: format!("({}, {})", a.0, b.0), max });
        }
        n = (2 * n).min(max);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusPoint {
    /// Smallest `k` with the point defined over `F_(q^k)`.
    pub level: u32,
    pub point: String,
    pub j: Vec<u64>,
    pub v_r: i64,
    pub v_r_lower: i64,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeierstrassCensus {
    pub k_max: u32,
    pub deg_r: i64,
    /// Points scanned at each level, new at that level only.
    pub scanned: Vec<(u32, usize)>,
    /// Points with `v_P(R) > 0`.
    pub support: Vec<CensusPoint>,
    pub total: i64,
    /// `deg R` minus the affine contributions found.
    pub infinity_inferred: i64,
    /// `total = deg R` with the value at infinity certified locally.
    pub fully_accounted: bool,
}

/// Scans the points over `F_(q^k)`, `k <= k_max`, for the support of `R`.
/// At affine points `v_P(R) = v_P(W)` since `x - a` is a local parameter
/// and the basis has no affine poles; at `P_inf` the value is
/// `sum (j_i - eps_i)` when the p-adic criterion makes that exact.
pub fn weierstrass_census(
    curve: &PlaneCurveModel,
    basis: &[FunctionElement],
    pole_orders: &[u64],
    eps: &[u64],
    w: &FunctionElement,
    d: u64,
    k_max: u32,
    mode: ExecMode,
) -> Result<WeierstrassCensus, OrderError> {
    let g = curve.genus().ok_or_else(|| OrderError::CrossCheck("genus unknown".into()))?;
    let r = basis.len() as u64 - 1;
    let deg_r = ramification_degree(eps, g, r, d);
    let p = curve.field().characteristic();
    let base_deg = curve.field().degree();
    let max = 8 * deg_r.max(1) as usize + 16;
    let mut support = Vec::new();
    let mut scanned = Vec::new();
    let mut affine_total = 0i64;
    for level in 1..=k_max {
        let en = enumerate_points(curve, level, mode)?;
        let k = en.extension.big();
        let new: Vec<(Elem, Elem)> = en
            .affine()
            .filter(|&(a, b)| {
                (1..level).filter(|m| level % m == 0).all(|m| !(k.in_subfield(a, base_deg * m) && k.in_subfield(b, base_deg * m)))
            })
            .collect();
        scanned.push((level, new.len()));
        let vals = map_collect(mode, &new, |&(a, b)| order_at(w, &en.extension, a, b, max));
        for (&(a, b), v) in new.iter().zip(vals) {
            let v = v?;
            affine_total += v;
            if v > 0 {
                let j = local_jorders(basis, &en.extension, a, b, d)?;
                let bounds = vp_bounds(&j, eps, None, p);
                support.push(CensusPoint {
                    level,
                    point: format!("({}, {})", a.0, b.0),
                    j,
                    v_r: v,
                    v_r_lower: bounds.v_r_lower,
                    exact: bounds.exact,
                });
            }
        }
    }
    let infinity_inferred = deg_r - affine_total;
    let mut total = affine_total;
    let mut inf_exact = false;
    if curve.pole_orders().is_some() {
        let j = local_jorders_at_infinity(pole_orders, d);
        let bounds = vp_bounds(&j, eps, None, p);
        inf_exact = bounds.exact;
        total += bounds.v_r_lower;
        if bounds.v_r_lower > 0 {
            support.push(CensusPoint {
                level: 1,
                point: "P_inf".into(),
                j,
                v_r: bounds.v_r_lower,
                v_r_lower: bounds.v_r_lower,
                exact: bounds.exact,
            });
        }
    }
    Ok(WeierstrassCensus {
        k_max,
        deg_r,
        scanned,
        support,
        total,
        infinity_inferred,
        fully_accounted: inf_exact && total == deg_r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_ladder() {
        assert_eq!(local_jorders_at_infinity(&[0, 8, 10, 12, 13], 13), vec![0, 1, 3, 5, 13]);
        assert_eq!(local_jorders_at_infinity(&[0, 3, 4], 4), vec![0, 1, 4]);
    }
}
