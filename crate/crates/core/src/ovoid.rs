//! The Suzuki–Tits ovoid in `P^4(F_q)` and the image of the rational points
//! of the Suzuki curve under `P -> (1 : x : y : z : w)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::curvecat::{enumerate_points, suzuki_auxiliaries, CurveError, PlaneCurveModel, PointKind};
use crate::exec::{map_range, ExecMode};
use crate::galois::{Elem, Embedding, Field};
use crate::linalg::rank;

/// Homogeneous coordinates scaled so the first nonzero entry is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjectivePoint5(pub [u32; 5]);

impl ProjectivePoint5 {
    pub fn normalized(v: [Elem; 5], f: &Field) -> Option<ProjectivePoint5> {
        let lead = *v.iter().find(|c| !c.is_zero())?;
        let inv = f.inv(lead)?;
        Some(ProjectivePoint5(v.map(|c| f.mul(c, inv).0)))
    }

    pub fn coords(&self) -> [Elem; 5] {
        self.0.map(Elem)
    }
}

/// The distinguished point `(0:0:0:0:1)`.
pub const POINT_AT_INFINITY: ProjectivePoint5 = ProjectivePoint5([0, 0, 0, 0, 1]);

fn field_for(s: u32) -> Result<(PlaneCurveModel, u64, u64), CurveError> {
    let curve = PlaneCurveModel::suzuki(s)?;
    let (_, q0, q) = curve.suzuki_params().unwrap();
    Ok((curve, q0, q))
}

/// `f(a, b) = a^(2q0+1) + b^(2q0)`.
pub fn ovoid_form(f: &Field, q0: u64, a: Elem, b: Elem) -> Elem {
    f.add(f.pow(a, 2 * q0 + 1), f.pow(b, 2 * q0))
}

/// `{(1 : a : b : f : a f + b^2)} ∪ {(0:0:0:0:1)}`.
pub fn ovoid_points(s: u32, mode: ExecMode) -> Result<BTreeSet<ProjectivePoint5>, CurveError> {
    let (curve, q0, q) = field_for(s)?;
    let f = curve.field();
    let rows = map_range(mode, q as usize, |i| {
        let a = Elem(i as u32);
        f.elements()
            .map(|b| {
                let v = ovoid_form(f, q0, a, b);
                ProjectivePoint5::normalized([Elem::ONE, a, b, v, f.add(f.mul(a, v), f.mul(b, b))], f).unwrap()
            })
            .collect::<Vec<_>>()
    });
    let mut set: BTreeSet<ProjectivePoint5> = rows.into_iter().flatten().collect();
    set.insert(POINT_AT_INFINITY);
    if set.len() as u64 != q * q + 1 {
        return Err(CurveError::BadParameter(format!("ovoid has {} distinct points, expected {}", set.len(), q * q + 1)));
    }
    Ok(set)
}

/// Image of the rational points of the curve, with the number of points
/// mapped (equal to the image size exactly when the map is injective).
pub fn embedded_curve_points(s: u32, mode: ExecMode) -> Result<(BTreeSet<ProjectivePoint5>, usize), CurveError> {
    let (curve, _, _) = field_for(s)?;
    let aux = suzuki_auxiliaries(&curve)?;
    let en = enumerate_points(&curve, 1, mode)?;
    let f = curve.field();
    let id = Embedding::identity(f);
    let affine: Vec<(Elem, Elem)> = en.affine().collect();
    let images = map_range(mode, affine.len(), |i| {
        let (a, b) = affine[i];
        let z = aux.z.eval(&id, a, b)?;
        let w = aux.w.eval(&id, a, b)?;
        ProjectivePoint5::normalized([Elem::ONE, a, b, z, w], f)
    });
    let mut set = BTreeSet::new();
    for (i, p) in images.into_iter().enumerate() {
        let p = p.ok_or_else(|| CurveError::BadParameter(format!("z or w undefined at {:?}", affine[i])))?;
        set.insert(p);
    }
    let mapped = affine.len() + en.points.iter().filter(|p| matches!(p.kind, PointKind::AtInfinity { .. })).count();
    set.insert(POINT_AT_INFINITY);
    Ok((set, mapped))
}

/// Whether some three points of `pts` lie on a line.
pub fn has_collinear_triple(pts: &[ProjectivePoint5], f: &Field, mode: ExecMode) -> bool {
    let n = pts.len();
    let hits = map_range(mode, n, |i| {
        for j in i + 1..n {
            for k in j + 1..n {
                let m: Vec<Vec<Elem>> = [pts[i], pts[j], pts[k]].iter().map(|p| p.coords().to_vec()).collect();
                if rank(&m, f) < 3 {
                    return true;
                }
            }
        }
        false
    });
    hits.into_iter().any(|h| h)
}

#[derive(Clone, Debug, Serialize)]
pub struct OvoidReport {
    pub schema: u32,
    pub s: u32,
    pub q: u64,
    pub size: usize,
    pub embedded_size: usize,
    pub equal: bool,
    pub injective: bool,
    /// `w(a, b) = a f(a, b) + b^2` at every affine rational point.
    pub w_identity: bool,
    pub collinearity_checked: bool,
    pub no_three_collinear: Option<bool>,
    pub notes: Vec<String>,
}

/// Compares the two sets; the triple scan runs only when `check_collinear`.
pub fn ovoid_report(s: u32, check_collinear: bool, mode: ExecMode) -> Result<OvoidReport, CurveError> {
    let (curve, q0, q) = field_for(s)?;
    let f = curve.field();
    let ovoid = ovoid_points(s, mode)?;
    let (image, mapped) = embedded_curve_points(s, mode)?;
    let w_identity = image.iter().filter(|p| p.0[0] == 1).all(|p| {
        let [_, a, b, z, w] = p.coords();
        z == ovoid_form(f, q0, a, b) && w == f.add(f.mul(a, z), f.mul(b, b))
    });
    let no_three_collinear = check_collinear.then(|| {
        let pts: Vec<ProjectivePoint5> = ovoid.iter().copied().collect();
        !has_collinear_triple(&pts, f, mode)
    });
    Ok(OvoidReport {
        schema: 1,
        s,
        q,
        size: ovoid.len(),
        embedded_size: image.len(),
        equal: ovoid == image,
        injective: image.len() == mapped,
        w_identity,
        collinearity_checked: check_collinear,
        no_three_collinear,
        notes: vec![
            "the point at infinity is taken as (0:0:0:0:1) in P^4; a six-coordinate form of it is not a point of P^4".into(),
            "the collinearity scan is exploratory".into(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let f = crate::galois::make_field(2, 3).unwrap();
        let p = ProjectivePoint5::normalized([Elem(1), Elem(1), Elem(0), ovoid_form(&f, 2, Elem(1), Elem(0)), Elem(1)], &f).unwrap();
        assert_eq!(p, ProjectivePoint5([1, 1, 0, 1, 1]));
        assert!(ProjectivePoint5::normalized([Elem(0); 5], &f).is_none());
        let scaled = ProjectivePoint5::normalized([Elem(0), Elem(3), Elem(3), Elem(0), Elem(6)], &f).unwrap();
        assert_eq!(scaled.0[..3], [0, 1, 1]);
    }

    #[test]
    fn s1_sets_agree() {
        let o = ovoid_points(1, ExecMode::Parallel).unwrap();
        assert_eq!(o.len(), 65);
        assert!(o.contains(&ProjectivePoint5([1, 0, 0, 0, 0])));
        assert!(o.contains(&ProjectivePoint5([1, 1, 0, 1, 1])));
        let (e, mapped) = embedded_curve_points(1, ExecMode::Sequential).unwrap();
        assert_eq!((e.len(), mapped), (65, 65));
        assert_eq!(o, e);
    }

    #[test]
    fn collinear_detection() {
        let f = crate::galois::make_field(2, 1).unwrap();
        let line = [ProjectivePoint5([1, 0, 0, 0, 0]), ProjectivePoint5([0, 1, 0, 0, 0]), ProjectivePoint5([1, 1, 0, 0, 0])];
        assert!(has_collinear_triple(&line, &f, ExecMode::Sequential));
        let free = [ProjectivePoint5([1, 0, 0, 0, 0]), ProjectivePoint5([0, 1, 0, 0, 0]), ProjectivePoint5([0, 0, 1, 0, 0])];
        assert!(!has_collinear_triple(&free, &f, ExecMode::Sequential));
    }
}
