use serde::Serialize;

use super::rank::{a_det, integral_row, row_scale, Echelon};
use super::OrderError;
use crate::ffun::{FunctionElement, HasseTable};
use crate::poly::Poly;

/// Orders found by the greedy rank search, with the derivative rows used.
#[derive(Clone, Debug)]
pub struct EpsilonOrders {
    pub eps: Vec<u64>,
    /// `derivs[k][j] = D^(j) f_k` for `j <= depth`.
    pub derivs: Vec<Vec<FunctionElement>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NuOrders {
    pub nu: Vec<u64>,
    /// `nu_i = eps_i` for `i < index`, `nu_i = eps_(i+1)` after.
    pub index: usize,
    /// `r - index`, the offset counted from the top of the sequence.
    pub j_index: usize,
}

fn derivative_table(basis: &[FunctionElement], table: &HasseTable) -> Result<Vec<Vec<FunctionElement>>, OrderError> {
    basis
        .iter()
        .map(|f| table.derivatives(f, table.depth()).map_err(OrderError::from))
        .collect()
}

fn row(derivs: &[Vec<FunctionElement>], j: usize) -> Vec<FunctionElement> {
    derivs.iter().map(|d| d[j].clone()).collect()
}

/// Lexicographically least `j_0 < ... < j_r` with `det(D^(j_i) f_k) != 0`:
/// each `j = 0, 1, ...` is kept when its row raises the rank over the
/// function field, which yields the least sequence because independent rows
/// form a matroid.
pub fn epsilon_orders(basis: &[FunctionElement], table: &HasseTable) -> Result<EpsilonOrders, OrderError> {
    if basis.is_empty() {
        return Err(OrderError::EmptyBasis);
    }
    let ff = table.function_field();
    let derivs = derivative_table(basis, table)?;
    let mut ech = Echelon::new(ff);
    let mut eps = Vec::new();
    for j in 0..=table.depth() {
        if ech.insert(integral_row(ff, &row(&derivs, j))) {
            eps.push(j as u64);
            if eps.len() == basis.len() {
                return Ok(EpsilonOrders { eps, derivs });
            }
        }
    }
    Err(OrderError::DepthExhausted { depth: table.depth(), found: eps.len() })
}

/// Frobenius orders: as [`epsilon_orders`] with the row `(f_k^q)` placed
/// first. The deleted index is also found independently as the least `I`
/// with the Frobenius row in the span of the rows for `eps_0..=eps_I`.
pub fn nu_orders(basis: &[FunctionElement], eps: &EpsilonOrders, table: &HasseTable, q: u64) -> Result<NuOrders, OrderError> {
    let ff = table.function_field();
    let r = basis.len() - 1;
    let frob: Vec<FunctionElement> = basis.iter().map(|f| f.frobenius_power(q)).collect();
    let frob_row = integral_row(ff, &frob);
    let mut ech = Echelon::new(ff);
    if !ech.insert(frob_row.clone()) {
        return Err(OrderError::DependentBasis);
    }
    let mut nu = Vec::new();
    for j in 0..=table.depth() {
        if ech.insert(integral_row(ff, &row(&eps.derivs, j))) {
            nu.push(j as u64);
            if nu.len() == r {
                break;
            }
        }
    }
    if nu.len() < r {
        return Err(OrderError::DepthExhausted { depth: table.depth(), found: nu.len() + 1 });
    }
    let deleted: Vec<usize> = (0..=r).filter(|&i| !nu.contains(&eps.eps[i])).collect();
    if deleted.len() != 1 || nu.iter().any(|n| !eps.eps.contains(n)) {
        return Err(OrderError::CrossCheck(format!("nu {nu:?} is not eps {:?} with one entry removed", eps.eps)));
    }
    let index = deleted[0];
    let mut span = Echelon::new(ff);
    let mut first_in_span = None;
    for (i, &e) in eps.eps.iter().enumerate() {
        span.insert(integral_row(ff, &row(&eps.derivs, e as usize)));
        if !span.is_independent(frob_row.clone()) {
            first_in_span = Some(i);
            break;
        }
    }
    if first_in_span != Some(index) {
        return Err(OrderError::CrossCheck(format!(
            "deleted index {index} but the Frobenius row enters the span at {first_in_span:?}"
        )));
    }
    Ok(NuOrders { nu, index, j_index: r - index })
}

/// `det(D^(eps_i) f_k)`.
pub fn wronskian(eps: &EpsilonOrders) -> Result<FunctionElement, OrderError> {
    let ff = eps.derivs[0][0].function_field();
    let f = ff.field();
    let mut rows = Vec::new();
    let mut den = Poly::one();
    for &e in &eps.eps {
        let r = row(&eps.derivs, e as usize);
        den = den.mul(&row_scale(ff, &r), f);
        rows.push(integral_row(ff, &r));
    }
    Ok(FunctionElement::from_parts(ff, a_det(ff, &rows), den)?)
}
