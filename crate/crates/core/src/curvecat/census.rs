use serde::Serialize;

use super::{CurveError, PlaneCurveModel};
use crate::galois::{Elem, Field};
use crate::poly::Poly;

/// Which coordinate function the census runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coordinate {
    X,
    Y,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub alpha: u32,
    /// Distinct affine points over the algebraic closure.
    pub size: u64,
    /// Of those, the ones rational over the base field.
    pub rational: u64,
    pub all_rational: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberCensus {
    pub curve: String,
    pub coordinate: Coordinate,
    /// Degree of the coordinate function, the largest possible fiber.
    pub degree: u64,
    pub l: u64,
    pub genus: u64,
    pub fibers: Vec<FiberReport>,
    /// Fibers with `degree` points, all rational.
    pub full_rational_fibers: u64,
    pub all_full_and_rational: bool,
    /// `l^2 + 2 l g`
    pub identity_lhs: u64,
    /// `l^2 * degree`
    pub identity_rhs: u64,
    pub identity_holds: bool,
}

/// Polynomial in the free coordinate after fixing the designated one.
fn fiber_poly(curve: &PlaneCurveModel, coord: Coordinate, alpha: Elem) -> Poly {
    let f = curve.field();
    let mut coeffs: Vec<Elem> = Vec::new();
    for t in curve.terms() {
        let (fixed, free) = match coord {
            Coordinate::X => (t.a, t.b),
            Coordinate::Y => (t.b, t.a),
        };
        let free = free as usize;
        if coeffs.len() <= free {
            coeffs.resize(free + 1, Elem::ZERO);
        }
        coeffs[free] = f.add(coeffs[free], f.mul(Elem(t.coeff), f.pow(alpha, fixed as u64)));
    }
    Poly::from_coeffs(coeffs)
}

fn pth_root(h: &Poly, f: &Field) -> Poly {
    let p = f.characteristic() as usize;
    let e = (f.cardinality() / f.characteristic()) as u64;
    let coeffs = h.coeffs().iter().step_by(p).map(|&c| f.pow(c, e)).collect();
    Poly::from_coeffs(coeffs)
}

/// Product of the distinct irreducible factors of `h` (monic).
pub(crate) fn radical(h: &Poly, f: &Field) -> Poly {
    if h.degree().unwrap_or(0) == 0 {
        return Poly::one();
    }
    let dh = h.hasse(1, f);
    if dh.is_zero() {
        return radical(&pth_root(h, f), f);
    }
    let g = h.gcd(&dh, f);
    let w = h.div_exact(&g, f).monic(f);
    let mut rest = g;
    loop {
        let c = rest.gcd(&w, f);
        if c.is_one() {
            break;
        }
        rest = rest.div_exact(&c, f);
    }
    if rest.degree().unwrap_or(0) == 0 {
        return w;
    }
    w.mul(&radical(&pth_root(&rest, f), f), f)
}

/// Per-value fiber sizes of a coordinate function over the base field
/// `F_(l^2)`, plus the genus identity `l^2 + 2 l g = l^2 m` that follows
/// when every fiber has `m` rational points.
pub fn fiber_census(curve: &PlaneCurveModel, coord: Coordinate) -> Result<FiberCensus, CurveError> {
    let f = curve.field();
    let l = curve.sqrt_q().ok_or_else(|| CurveError::Unsupported("a base field of square order".into()))?;
    let genus = curve.genus().ok_or_else(|| CurveError::Unsupported("a known genus".into()))?;
    let degree = curve
        .terms()
        .iter()
        .map(|t| match coord {
            Coordinate::X => t.b,
            Coordinate::Y => t.a,
        })
        .max()
        .unwrap_or(0) as u64;
    let fibers: Vec<FiberReport> = f
        .elements()
        .map(|alpha| {
            let h = fiber_poly(curve, coord, alpha);
            let size = radical(&h, f).degree().unwrap_or(0) as u64;
            let rational = f.elements().filter(|&t| h.eval(t, f).is_zero()).count() as u64;
            FiberReport { alpha: alpha.0, size, rational, all_rational: rational == size }
        })
        .collect();
    let full = fibers.iter().filter(|r| r.size == degree && r.all_rational).count() as u64;
    let lhs = l * l + 2 * l * genus;
    let rhs = l * l * degree;
    Ok(FiberCensus {
        curve: curve.id().to_string(),
        coordinate: coord,
        degree,
        l,
        genus,
        all_full_and_rational: full == fibers.len() as u64,
        full_rational_fibers: full,
        fibers,
        identity_lhs: lhs,
        identity_rhs: rhs,
        identity_holds: lhs == rhs,
    })
}
