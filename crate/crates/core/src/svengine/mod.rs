//! Order sequences of a linear system on a curve, its Frobenius orders,
//! local orders at points, and the degrees of the ramification divisor `R`
//! and the Frobenius divisor `S`.

mod local;
mod orders;
mod rank;
mod report;

pub use local::{local_jorders, local_jorders_at_infinity, weierstrass_census, CensusPoint, WeierstrassCensus};
pub use orders::{epsilon_orders, nu_orders, wronskian, EpsilonOrders, NuOrders};
pub use report::{order_report, OrderReport, PointRecord, ReportOptions};

use serde::Serialize;
use thiserror::Error;

use crate::curvecat::CurveError;
use crate::ffun::FfunError;
use crate::galois::binom_mod_p;
use crate::linalg::det_mod_p;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error(transparent)]
    Function(#[from] FfunError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("basis is empty")]
    EmptyBasis,
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("derivatives up to order {depth} give only {found} independent rows")]
    DepthExhausted { depth: usize, found: usize },
    #[error("orders at {point} not certified below precision {max}")]
    PrecisionExhausted { point: String, max: usize },
    #[error("consistency check failed: {0}")]
    CrossCheck(String),
}

/// `deg R = sum eps_i (2g - 2) + (r + 1) d`
pub fn ramification_degree(eps: &[u64], g: u64, r: u64, d: u64) -> i64 {
    let s: i64 = eps.iter().map(|&e| e as i64).sum();
    s * (2 * g as i64 - 2) + (r as i64 + 1) * d as i64
}

/// `deg S = (sum nu_i)(2g - 2) + (q + r) d`
pub fn frobenius_degree(nu: &[u64], g: u64, r: u64, d: u64, q: u64) -> i64 {
    let s: i64 = nu.iter().map(|&e| e as i64).sum();
    s * (2 * g as i64 - 2) + (q as i64 + r as i64) * d as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationBounds {
    /// `sum (j_i - eps_i)`, a lower bound for `v_P(R)`.
    pub v_r_lower: i64,
    /// `det(binom(j_i, eps_k)) != 0 mod p`, in which case the bound is exact.
    pub exact: bool,
    /// `sum_{i<r} (j_{i+1} - nu_i)`, a lower bound for `v_P(S)` at rational `P`.
    pub v_s_lower: Option<i64>,
}

/// Local bounds from the orders at a point.
pub fn vp_bounds(j: &[u64], eps: &[u64], nu: Option<&[u64]>, p: u32) -> ValuationBounds {
    let v_r_lower = j.iter().zip(eps).map(|(&a, &b)| a as i64 - b as i64).sum();
    let m: Vec<Vec<u64>> = j.iter().map(|&ji| eps.iter().map(|&ek| binom_mod_p(ji, ek, p) as u64).collect()).collect();
    let exact = det_mod_p(&m, p as u64) != 0;
    let v_s_lower = nu.map(|nu| nu.iter().enumerate().map(|(i, &n)| j[i + 1] as i64 - n as i64).sum());
    ValuationBounds { v_r_lower, exact, v_s_lower }
}
