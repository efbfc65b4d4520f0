use serde::Serialize;

use super::local::{local_jorders, local_jorders_at_infinity, weierstrass_census, WeierstrassCensus};
use super::orders::{epsilon_orders, nu_orders, wronskian};
use super::{frobenius_degree, ramification_degree, vp_bounds, OrderError};
use crate::curvecat::{enumerate_points, rr_basis, PlaneCurveModel, PointKind};
use crate::exec::{map_collect, ExecMode};
use crate::ffun::HasseTable;
use crate::galois::Elem;

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    /// Degree of `D = d P_inf`; defaults to the largest semigroup generator.
    pub d: Option<u64>,
    /// Census depth; 0 skips the census.
    pub census_k: u32,
    pub mode: ExecMode,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointRecord {
    pub point: String,
    pub j: Vec<u64>,
    pub v_r_lower: i64,
    pub exact: bool,
    pub v_s_lower: i64,
    /// `d - j_(r-1)`, the first nonzero non-gap at the point when `D = d P`.
    pub m1: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderChecks {
    /// `nu` is `eps` with exactly one entry removed.
    pub nu_deletes_one: bool,
    /// `j_i(P) >= eps_i` at every rational point.
    pub j_dominates_eps: bool,
    /// `nu_i <= j_(i+1)(P) - j_1(P)` at every rational point.
    pub nu_below_gaps: bool,
    /// `nu_(r-1) = eps_r`.
    pub top_orders_agree: bool,
    /// Sum of the `v_P(S)` lower bounds over rational points.
    pub v_s_total: i64,
    pub v_r_total: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderReport {
    pub schema: u32,
    pub curve: String,
    pub d: u64,
    pub r: u64,
    pub basis: Vec<String>,
    pub eps: Vec<u64>,
    pub nu: Vec<u64>,
    pub index_i: usize,
    pub index_j: usize,
    pub deg_r: i64,
    pub deg_s: i64,
    pub points: Vec<PointRecord>,
    pub checks: OrderChecks,
    pub census: Option<WeierstrassCensus>,
}

/// Full order data of `|d P_inf|` on a catalog curve.
pub fn order_report(curve: &PlaneCurveModel, opts: &ReportOptions) -> Result<OrderReport, OrderError> {
    let gens = curve.semigroup_generators().ok_or_else(|| OrderError::CrossCheck("no single place at infinity".into()))?;
    let d = opts.d.unwrap_or_else(|| gens.iter().copied().max().unwrap_or(0));
    let g = curve.genus().ok_or_else(|| OrderError::CrossCheck("genus unknown".into()))?;
    let q = curve.q();
    let p = curve.field().characteristic();
    let ff = curve.function_field()?;
    let rr = rr_basis(curve, d)?;
    let basis = rr.functions();
    let pole_orders = rr.pole_orders();
    let r = basis.len() as u64 - 1;
    let table = HasseTable::new(ff, d.max(1) as usize)?;
    let eps = epsilon_orders(&basis, &table)?;
    let nu = nu_orders(&basis, &eps, &table, q)?;
    let deg_r = ramification_degree(&eps.eps, g, r, d);
    let deg_s = frobenius_degree(&nu.nu, g, r, d, q);

    let en = enumerate_points(curve, 1, opts.mode)?;
    let affine: Vec<(Elem, Elem)> = en.affine().collect();
    let js = map_collect(opts.mode, &affine, |&(a, b)| local_jorders(&basis, &en.extension, a, b, d));
    let mut labelled: Vec<(String, Vec<u64>)> = Vec::new();
    for (&(a, b), j) in affine.iter().zip(js) {
        labelled.push((format!("({}, {})", a.0, b.0), j?));
    }
    if en.points.iter().any(|pt| matches!(pt.kind, PointKind::AtInfinity { .. })) {
        labelled.push(("P_inf".into(), local_jorders_at_infinity(&pole_orders, d)));
    }
    let points: Vec<PointRecord> = labelled
        .into_iter()
        .map(|(point, j)| {
            let b = vp_bounds(&j, &eps.eps, Some(&nu.nu), p);
            let m1 = if r >= 1 { d - j[r as usize - 1] } else { d };
            PointRecord { point, v_r_lower: b.v_r_lower, exact: b.exact, v_s_lower: b.v_s_lower.unwrap_or(0), m1, j }
        })
        .collect();

    let ru = r as usize;
    let checks = OrderChecks {
        nu_deletes_one: nu.nu.len() == ru && (0..=ru).any(|i| {
            let mut e = eps.eps.clone();
            e.remove(i);
            e == nu.nu
        }),
        j_dominates_eps: points.iter().all(|pt| pt.j.iter().zip(&eps.eps).all(|(a, b)| a >= b)),
        nu_below_gaps: points.iter().all(|pt| (0..ru).all(|i| nu.nu[i] <= pt.j[i + 1] - pt.j[1])),
        top_orders_agree: ru >= 1 && nu.nu[ru - 1] == eps.eps[ru],
        v_s_total: points.iter().map(|pt| pt.v_s_lower).sum(),
        v_r_total: points.iter().map(|pt| pt.v_r_lower).sum(),
    };

    let census = if opts.census_k > 0 {
        let w = wronskian(&eps)?;
        Some(weierstrass_census(curve, &basis, &pole_orders, &eps.eps, &w, d, opts.census_k, opts.mode)?)
    } else {
        None
    };

    Ok(OrderReport {
        schema: 1,
        curve: curve.id().to_string(),
        d,
        r,
        basis: rr.labels(),
        eps: eps.eps,
        nu: nu.nu,
        index_i: nu.index,
        index_j: nu.j_index,
        deg_r,
        deg_s,
        points,
        checks,
        census,
    })
}
