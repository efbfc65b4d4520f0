use serde::Serialize;

use super::{CurveError, Infinity, PlaneCurveModel};
use crate::exec::{map_range, ExecMode};
use crate::galois::{Elem, Embedding, Field};
use crate::linalg::AdditiveSolver;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointKind {
    Affine { x: u32, y: u32 },
    /// `place` names the point: `"P_inf"` or the projective coordinates.
    AtInfinity { place: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalPoint {
    /// The point is defined over `F_(q^m)`.
    pub m: u32,
    pub kind: PointKind,
}

impl RationalPoint {
    pub fn affine(&self) -> Option<(Elem, Elem)> {
        match self.kind {
            PointKind::Affine { x, y } => Some((Elem(x), Elem(y))),
            PointKind::AtInfinity { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PointEnumeration {
    pub m: u32,
    pub extension: Embedding,
    /// Affine points sorted by `(x, y)` in canonical order, then points at infinity.
    pub points: Vec<RationalPoint>,
    pub count: u64,
    /// Affine points where both partial derivatives vanish.
    pub singular: Vec<(Elem, Elem)>,
    /// No places at infinity were declared, so `count` is affine only.
    pub affine_only: bool,
}

impl PointEnumeration {
    pub fn affine(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.points.iter().filter_map(RationalPoint::affine)
    }
}

/// How fibers of `x` are found.
enum Strategy {
    /// `y^qp + c y = v` is additive in `y`.
    Additive { solver: AdditiveSolver, kernel: Vec<Elem> },
    /// `x^k + y^k = 1`: bucket the `k`-th powers.
    PowerTable { k: u64, buckets: Vec<Vec<Elem>> },
    Scan,
}

fn span(kernel_basis: &[Elem], k: &Field) -> Vec<Elem> {
    let p = k.characteristic();
    let mut out = vec![Elem::ZERO];
    for &v in kernel_basis {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for &u in &out {
            let mut cur = u;
            for _ in 0..p {
                next.push(cur);
                cur = k.add(cur, v);
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}

fn strategy(curve: &PlaneCurveModel, emb: &Embedding) -> Strategy {
    let k = emb.big();
    if let Some(a) = curve.as_form() {
        let c = emb.map(a.c);
        let qp = a.qp;
        let solver = AdditiveSolver::new(k, |u| k.add(k.pow(u, qp), k.mul(c, u)));
        let kernel = span(solver.kernel(), k);
        return Strategy::Additive { solver, kernel };
    }
    if let Infinity::FermatPoints { k: kk } = curve.infinity() {
        let mut buckets = vec![Vec::new(); k.cardinality() as usize];
        for y in k.elements() {
            buckets[k.pow(y, *kk).0 as usize].push(y);
        }
        return Strategy::PowerTable { k: *kk, buckets };
    }
    Strategy::Scan
}

/// The right-hand side `f(x)` pushed into the extension.
fn mapped_rhs(curve: &PlaneCurveModel, emb: &Embedding) -> Option<Poly> {
    curve.as_form().map(|a| a.f.map_coeffs(|c| emb.map(c)))
}

fn fiber(curve: &PlaneCurveModel, emb: &Embedding, strat: &Strategy, rhs: &Option<Poly>, a: Elem) -> Vec<Elem> {
    let k = emb.big();
    match strat {
        Strategy::Additive { solver, kernel } => {
            let v = rhs.as_ref().unwrap().eval(a, k);
            match solver.solve(v) {
                Some(u0) => {
                    let mut ys: Vec<Elem> = kernel.iter().map(|&t| k.add(u0, t)).collect();
                    ys.sort_unstable();
                    ys
                }
                None => Vec::new(),
            }
        }
        Strategy::PowerTable { k: kk, buckets } => {
            let v = k.sub(Elem::ONE, k.pow(a, *kk));
            buckets[v.0 as usize].clone()
        }
        Strategy::Scan => k.elements().filter(|&b| curve.eval(emb, a, b).is_zero()).collect(),
    }
}

fn infinite_points(curve: &PlaneCurveModel, emb: &Embedding, m: u32) -> Vec<RationalPoint> {
    let k = emb.big();
    match curve.infinity() {
        Infinity::SinglePlace { .. } => vec![RationalPoint { m, kind: PointKind::AtInfinity { place: "P_inf".into() } }],
        Infinity::FermatPoints { k: kk } => {
            let minus_one = k.neg(Elem::ONE);
            k.elements()
                .filter(|&z| k.pow(z, *kk) == minus_one)
                .map(|z| RationalPoint { m, kind: PointKind::AtInfinity { place: format!("(1:{}:0)", z.0) } })
                .collect()
        }
        Infinity::Undeclared => Vec::new(),
    }
}

/// All `F_(q^m)`-rational points, parallel over `x` when `mode` allows.
pub fn enumerate_points(curve: &PlaneCurveModel, m: u32, mode: ExecMode) -> Result<PointEnumeration, CurveError> {
    let emb = curve.extension(m)?;
    let k = emb.big().clone();
    let strat = strategy(curve, &emb);
    let rhs = mapped_rhs(curve, &emb);
    let check_singular = matches!(strat, Strategy::Scan);
    let per_x = map_range(mode, k.cardinality() as usize, |i| {
        let a = Elem(i as u32);
        let ys = fiber(curve, &emb, &strat, &rhs, a);
        let sing: Vec<(Elem, Elem)> = if check_singular {
            ys.iter()
                .filter(|&&b| {
                    let (gx, gy) = curve.gradient(&emb, a, b);
                    gx.is_zero() && gy.is_zero()
                })
                .map(|&b| (a, b))
                .collect()
        } else {
            Vec::new()
        };
        (ys, sing)
    });
    let mut points = Vec::new();
    let mut singular = Vec::new();
    for (i, (ys, sing)) in per_x.into_iter().enumerate() {
        points.extend(ys.into_iter().map(|b| RationalPoint { m, kind: PointKind::Affine { x: i as u32, y: b.0 } }));
        singular.extend(sing);
    }
    points.extend(infinite_points(curve, &emb, m));
    Ok(PointEnumeration {
        m,
        count: points.len() as u64,
        points,
        singular,
        affine_only: matches!(curve.infinity(), Infinity::Undeclared),
        extension: emb,
    })
}

/// `N_m`. Artin–Schreier curves use the trace criterion: with
/// `lambda^(qp-1) = -c`, `y^qp + c y = v` has `qp` solutions when
/// `Tr(v / lambda^qp)` down to `F_qp` vanishes, none otherwise.
pub fn count_points(curve: &PlaneCurveModel, m: u32, mode: ExecMode) -> Result<u64, CurveError> {
    let emb = curve.extension(m)?;
    let k = emb.big();
    let fast = curve.as_form().and_then(|a| {
        let neg_c = curve.field().neg(a.c);
        let lambda = curve.field().elements().find(|&l| curve.field().pow(l, a.qp - 1) == neg_c)?;
        let scale = k.inv(k.pow(emb.map(lambda), a.qp))?;
        k.relative_trace(Elem::ZERO, a.qp).ok()?;
        Some((a.qp, scale, a.f.map_coeffs(|c| emb.map(c))))
    });
    let Some((qp, scale, rhs)) = fast else {
        return Ok(enumerate_points(curve, m, mode)?.count);
    };
    let hits = map_range(mode, k.cardinality() as usize, |i| {
        let v = k.mul(rhs.eval(Elem(i as u32), k), scale);
        k.relative_trace(v, qp).unwrap().is_zero() as u64
    });
    let affine: u64 = hits.iter().sum::<u64>() * qp;
    Ok(affine + infinite_points(curve, &emb, m).len() as u64)
}
