//! The function field `F_q(x)[y]/(F)` of a plane curve, Hasse derivatives
//! with respect to `x`, and local expansions at affine points.

pub(crate) mod element;
mod hasse;
mod series;

pub use element::FunctionElement;
pub use hasse::HasseTable;
pub use series::{expand_at, LocalExpansion, Series, SeriesValue};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::galois::{Elem, Field};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfunError {
    #[error("defining polynomial must have a nonzero constant leading coefficient in y")]
    NotMonicInY,
    #[error("defining polynomial has y-degree 0")]
    ConstantInY,
    #[error("Hasse table has depth {depth}, order {needed} requested")]
    DepthExceeded { needed: usize, depth: usize },
    #[error("symbolic derivatives need an Artin-Schreier model y^q' + c y = f(x)")]
    NotArtinSchreier,
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("point is ramified over x (dF/dy vanishes there)")]
    Ramified,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("pole order needs a single place over x = infinity")]
    SeveralPlacesAtInfinity,
    #[error("pole order is only defined for nonzero elements")]
    ZeroElement,
    #[error("operands belong to different function fields")]
    FieldMismatch,
}

/// Artin–Schreier shape `y^qp + c y = f(x)` with `qp` a power of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinSchreier {
    pub qp: u64,
    pub c: Elem,
    pub f: Poly,
}

pub(crate) struct Inner {
    field: Field,
    /// `F = sum_b eq[b] y^b`, normalized monic in `y`.
    eq: Vec<Poly>,
    /// `y^d = sum_{b<d} red[b] y^b`.
    red: Vec<Poly>,
    artin_schreier: Option<ArtinSchreier>,
    single_place_at_infinity: bool,
}

/// Shared handle on a function field.
#[derive(Clone)]
pub struct FunctionField(Arc<Inner>);

impl PartialEq for FunctionField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.field == other.0.field && self.0.eq == other.0.eq)
    }
}

impl fmt::Debug for FunctionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FunctionField(deg_y {}, over {})", self.degree(), self.0.field)
    }
}

impl FunctionField {
    /// `eq[b]` is the coefficient of `y^b`. The top coefficient must be a
    /// nonzero constant; it is scaled to one.
    ///
    /// `single_place_at_infinity` declares that `x` has exactly one pole,
    /// which makes pole orders computable from norms.
    pub fn new(field: &Field, eq: Vec<Poly>, single_place_at_infinity: bool) -> Result<FunctionField, FfunError> {
        let mut eq = eq;
        while eq.last().is_some_and(|p| p.is_zero()) {
            eq.pop();
        }
        if eq.len() < 2 {
            return Err(FfunError::ConstantInY);
        }
        let top = eq.last().unwrap();
        if top.degree() != Some(0) {
            return Err(FfunError::NotMonicInY);
        }
        let inv = field.inv(top.lead()).unwrap();
        let eq: Vec<Poly> = eq.iter().map(|p| p.scale(inv, field)).collect();
        let d = eq.len() - 1;
        let red = eq[..d].iter().map(|p| p.neg(field)).collect();
        let artin_schreier = detect_artin_schreier(field, &eq);
        Ok(FunctionField(Arc::new(Inner {
            field: field.clone(),
            eq,
            red,
            artin_schreier,
            single_place_at_infinity,
        })))
    }

    /// `y^qp + c y = f(x)`.
    pub fn artin_schreier(field: &Field, qp: u64, c: Elem, f: &Poly) -> Result<FunctionField, FfunError> {
        let mut eq = vec![Poly::zero(); qp as usize + 1];
        eq[0] = f.neg(field);
        eq[1] = eq[1].add(&Poly::constant(c), field);
        eq[qp as usize] = eq[qp as usize].add(&Poly::one(), field);
        FunctionField::new(field, eq, true)
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    /// `deg_y F`
    pub fn degree(&self) -> usize {
        self.0.eq.len() - 1
    }

    pub fn equation(&self) -> &[Poly] {
        &self.0.eq
    }

    pub fn as_form(&self) -> Option<&ArtinSchreier> {
        self.0.artin_schreier.as_ref()
    }

    pub fn single_place_at_infinity(&self) -> bool {
        self.0.single_place_at_infinity
    }

    pub(crate) fn reduction(&self) -> &[Poly] {
        &self.0.red
    }

    pub fn zero(&self) -> FunctionElement {
        FunctionElement::from_poly(self, Poly::zero())
    }

    pub fn one(&self) -> FunctionElement {
        FunctionElement::from_poly(self, Poly::one())
    }

    pub fn x(&self) -> FunctionElement {
        FunctionElement::from_poly(self, Poly::x())
    }

    pub fn y(&self) -> FunctionElement {
        let mut num = vec![Poly::zero(); self.degree()];
        if self.degree() == 1 {
            return FunctionElement::from_poly(self, self.0.red[0].clone());
        }
        num[1] = Poly::one();
        FunctionElement::from_parts(self, num, Poly::one()).unwrap()
    }

    pub fn constant(&self, c: Elem) -> FunctionElement {
        FunctionElement::from_poly(self, Poly::constant(c))
    }

    /// `F(x, y)` with coefficients pushed through `map`, evaluated at `(a, b)`
    /// in the target field.
    pub fn eval_equation(&self, target: &Field, map: &dyn Fn(Elem) -> Elem, a: Elem, b: Elem) -> Elem {
        self.0.eq.iter().rev().fold(Elem::ZERO, |acc, p| {
            target.add(target.mul(acc, b), p.map_coeffs(map).eval(a, target))
        })
    }

    /// `dF/dy` at `(a, b)`.
    pub fn eval_dy(&self, target: &Field, map: &dyn Fn(Elem) -> Elem, a: Elem, b: Elem) -> Elem {
        let p = target.characteristic() as i64;
        let mut val = Elem::ZERO;
        let mut bpow = Elem::ONE;
        for (k, c) in self.0.eq.iter().enumerate().skip(1) {
            let term = target.mul(target.from_int(k as i64 % p), c.map_coeffs(map).eval(a, target));
            val = target.add(val, target.mul(term, bpow));
            bpow = target.mul(bpow, b);
        }
        val
    }

    /// `dF/dx` at `(a, b)`.
    pub fn eval_dx(&self, target: &Field, map: &dyn Fn(Elem) -> Elem, a: Elem, b: Elem) -> Elem {
        let f = &self.0.field;
        self.0.eq.iter().rev().fold(Elem::ZERO, |acc, c| {
            target.add(target.mul(acc, b), c.hasse(1, f).map_coeffs(map).eval(a, target))
        })
    }
}

fn detect_artin_schreier(field: &Field, eq: &[Poly]) -> Option<ArtinSchreier> {
    let d = eq.len() - 1;
    let p = field.characteristic() as u64;
    let mut qp = d as u64;
    while qp % p == 0 {
        qp /= p;
    }
    if qp != 1 || d < 2 {
        return None;
    }
    let c = &eq[1];
    if c.degree() != Some(0) || eq[2..d].iter().any(|q| !q.is_zero()) {
        return None;
    }
    Some(ArtinSchreier { qp: d as u64, c: c.lead(), f: eq[0].neg(field) })
}
