use std::fmt;

use super::{FfunError, FunctionField};
use crate::galois::{Elem, Embedding, Field};
use crate::linalg::bareiss_det;
use crate::poly::Poly;

/// `sum_b num[b] y^b / den` with `b < deg_y F`, `den` monic and coprime to
/// the numerator content, so equal elements have equal representations.
#[derive(Clone, PartialEq)]
pub struct FunctionElement {
    ff: FunctionField,
    num: Vec<Poly>,
    den: Poly,
}

impl fmt::Debug for FunctionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(b, p)| format!("{:?}*y^{b}", p.coeffs().iter().map(|c| c.0).collect::<Vec<_>>()))
            .collect();
        write!(f, "({}) / {:?}", terms.join(" + "), self.den.coeffs().iter().map(|c| c.0).collect::<Vec<_>>())
    }
}

/// Multiplication in `A = F_q[x][y]/(F)`, operands of length `d`.
pub(crate) fn a_mul(ff: &FunctionField, u: &[Poly], v: &[Poly]) -> Vec<Poly> {
    let f = ff.field();
    let d = ff.degree();
    let mut prod = vec![Poly::zero(); 2 * d - 1];
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if !b.is_zero() {
                prod[i + j] = prod[i + j].add(&a.mul(b, f), f);
            }
        }
    }
    reduce(ff, prod)
}

/// Reduces a y-polynomial of any length modulo `F`.
pub(crate) fn reduce(ff: &FunctionField, mut prod: Vec<Poly>) -> Vec<Poly> {
    let f = ff.field();
    let d = ff.degree();
    let red = ff.reduction();
    for k in (d..prod.len()).rev() {
        let c = std::mem::take(&mut prod[k]);
        if c.is_zero() {
            continue;
        }
        for (b, r) in red.iter().enumerate() {
            if !r.is_zero() {
                prod[k - d + b] = prod[k - d + b].add(&c.mul(r, f), f);
            }
        }
    }
    prod.resize(d, Poly::zero());
    prod
}

/// `u * y` in `A`.
pub(crate) fn a_mul_y(ff: &FunctionField, u: &[Poly]) -> Vec<Poly> {
    let mut v = Vec::with_capacity(u.len() + 1);
    v.push(Poly::zero());
    v.extend_from_slice(u);
    reduce(ff, v)
}

pub(crate) fn a_add(ff: &FunctionField, u: &[Poly], v: &[Poly]) -> Vec<Poly> {
    u.iter().zip(v).map(|(a, b)| a.add(b, ff.field())).collect()
}

pub(crate) fn a_sub(ff: &FunctionField, u: &[Poly], v: &[Poly]) -> Vec<Poly> {
    u.iter().zip(v).map(|(a, b)| a.sub(b, ff.field())).collect()
}

pub(crate) fn a_scale(ff: &FunctionField, u: &[Poly], p: &Poly) -> Vec<Poly> {
    u.iter().map(|a| a.mul(p, ff.field())).collect()
}

pub(crate) fn a_is_zero(u: &[Poly]) -> bool {
    u.iter().all(Poly::is_zero)
}

/// Gcd of all coefficients (monic), zero for the zero vector.
pub(crate) fn a_content(f: &Field, u: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for a in u {
        if g.is_one() {
            break;
        }
        g = g.gcd(a, f);
    }
    g
}

impl FunctionElement {
    pub fn from_poly(ff: &FunctionField, p: Poly) -> FunctionElement {
        let mut num = vec![Poly::zero(); ff.degree()];
        num[0] = p;
        FunctionElement { ff: ff.clone(), num, den: Poly::one() }
    }

    /// `sum_b num[b] y^b / den`; `num` may have any length and is reduced.
    pub fn from_parts(ff: &FunctionField, num: Vec<Poly>, den: Poly) -> Result<FunctionElement, FfunError> {
        if den.is_zero() {
            return Err(FfunError::DivisionByZero);
        }
        let mut num = num;
        if num.len() < ff.degree() {
            num.resize(ff.degree(), Poly::zero());
        }
        let num = reduce(ff, num);
        Ok(FunctionElement { ff: ff.clone(), num, den }.normalized())
    }

    pub(crate) fn from_a(ff: &FunctionField, num: Vec<Poly>) -> FunctionElement {
        FunctionElement { ff: ff.clone(), num, den: Poly::one() }
    }

    fn normalized(mut self) -> FunctionElement {
        let f = self.ff.field().clone();
        if a_is_zero(&self.num) {
            self.den = Poly::one();
            return self;
        }
        let mut g = self.den.monic(&f);
        for a in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(a, &f);
        }
        if !g.is_one() {
            self.num = self.num.iter().map(|a| a.div_exact(&g, &f)).collect();
            self.den = self.den.div_exact(&g, &f);
        }
        let lead = self.den.lead();
        if lead != Elem::ONE {
            let inv = f.inv(lead).unwrap();
            self.num = self.num.iter().map(|a| a.scale(inv, &f)).collect();
            self.den = self.den.scale(inv, &f);
        }
        self
    }

    pub fn function_field(&self) -> &FunctionField {
        &self.ff
    }

    /// Coefficients of `1, y, ..., y^(d-1)` in the numerator.
    pub fn numerator(&self) -> &[Poly] {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        a_is_zero(&self.num)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && a_is_zero(&self.num[1..])
    }

    /// No denominator: the element lies in `F_q[x, y]/(F)`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Highest power of `y` with a nonzero coefficient.
    pub fn y_degree(&self) -> Option<usize> {
        self.num.iter().rposition(|p| !p.is_zero())
    }

    /// Largest x-degree among numerator coefficients.
    pub fn x_degree(&self) -> Option<usize> {
        self.num.iter().filter_map(Poly::degree).max()
    }

    fn check(&self, other: &FunctionElement) {
        assert!(self.ff == other.ff, "{}", FfunError::FieldMismatch);
    }

    pub fn add(&self, other: &FunctionElement) -> FunctionElement {
        self.check(other);
        let f = self.ff.field();
        if self.den == other.den {
            let num = a_add(&self.ff, &self.num, &other.num);
            return FunctionElement { ff: self.ff.clone(), num, den: self.den.clone() }.normalized();
        }
        let g = self.den.gcd(&other.den, f);
        let l1 = other.den.div_exact(&g, f);
        let l2 = self.den.div_exact(&g, f);
        let num = a_add(&self.ff, &a_scale(&self.ff, &self.num, &l1), &a_scale(&self.ff, &other.num, &l2));
        let den = self.den.mul(&l1, f);
        FunctionElement { ff: self.ff.clone(), num, den }.normalized()
    }

    pub fn neg(&self) -> FunctionElement {
        let f = self.ff.field();
        FunctionElement { ff: self.ff.clone(), num: self.num.iter().map(|a| a.neg(f)).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &FunctionElement) -> FunctionElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FunctionElement) -> FunctionElement {
        self.check(other);
        let f = self.ff.field();
        let num = a_mul(&self.ff, &self.num, &other.num);
        let den = self.den.mul(&other.den, f);
        FunctionElement { ff: self.ff.clone(), num, den }.normalized()
    }

    pub fn scale(&self, c: Elem) -> FunctionElement {
        self.mul_poly(&Poly::constant(c))
    }

    pub fn mul_poly(&self, p: &Poly) -> FunctionElement {
        let num = a_scale(&self.ff, &self.num, p);
        FunctionElement { ff: self.ff.clone(), num, den: self.den.clone() }.normalized()
    }

    pub fn div_poly(&self, p: &Poly) -> Result<FunctionElement, FfunError> {
        if p.is_zero() {
            return Err(FfunError::DivisionByZero);
        }
        let den = self.den.mul(p, self.ff.field());
        Ok(FunctionElement { ff: self.ff.clone(), num: self.num.clone(), den }.normalized())
    }

    pub fn pow(&self, mut e: u64) -> FunctionElement {
        let mut result = self.ff.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `f^q`; for `f` with `F_q` coefficients this is `f` composed with the
    /// `q`-Frobenius of the curve.
    pub fn frobenius_power(&self, q: u64) -> FunctionElement {
        self.pow(q)
    }

    /// Value at the affine point `(a, b)` of the extension `emb.big()`;
    /// `None` when the stored denominator vanishes at `a`.
    pub fn eval(&self, emb: &Embedding, a: Elem, b: Elem) -> Option<Elem> {
        let k = emb.big();
        let map = |c| emb.map(c);
        let den = self.den.map_coeffs(map).eval(a, k);
        if den.is_zero() {
            return None;
        }
        let num = self.num.iter().rev().fold(Elem::ZERO, |acc, p| k.add(k.mul(acc, b), p.map_coeffs(map).eval(a, k)));
        k.div(num, den)
    }

    fn multiplication_rows(&self) -> Vec<Vec<Poly>> {
        let d = self.ff.degree();
        let mut rows = Vec::with_capacity(d);
        let mut cur = self.num.clone();
        for b in 0..d {
            if b > 0 {
                cur = a_mul_y(&self.ff, &cur);
            }
            rows.push(cur.clone());
        }
        rows
    }

    /// Norm of the numerator down to `F_q[x]`, the determinant of
    /// multiplication by it on `1, y, ..., y^(d-1)`.
    ///
    /// Evaluated as `Res_y(F(a, y), num(a, y))` at enough points `a` of an
    /// extension and interpolated; the degree bound is the sum of row degrees.
    pub fn numerator_norm(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let base = self.ff.field();
        let rows = self.multiplication_rows();
        let row_bound: usize = rows.iter().map(|r| r.iter().filter_map(Poly::degree).max().unwrap_or(0)).sum();
        let bound = self.pole_bound().map_or(row_bound, |b| b.min(row_bound));
        let q = base.cardinality() as u64;
        let mut m = 1;
        while q.pow(m) <= bound as u64 {
            m += 1;
        }
        let big = crate::galois::make_field(base.characteristic(), base.degree() * m)
            .expect("norm interpolation field within the cap");
        let emb = Embedding::new(base, &big).expect("extension of the base field");
        let map = |c| emb.map(c);
        let eq: Vec<Poly> = self.ff.equation().iter().map(|p| p.map_coeffs(map)).collect();
        let num: Vec<Poly> = self.num.iter().map(|p| p.map_coeffs(map)).collect();
        let xs: Vec<Elem> = big.elements().take(bound + 1).collect();
        let ys: Vec<Elem> = xs
            .iter()
            .map(|&a| {
                let fy = Poly::from_coeffs(eq.iter().map(|p| p.eval(a, &big)).collect());
                let gy = Poly::from_coeffs(num.iter().map(|p| p.eval(a, &big)).collect());
                fy.resultant(&gy, &big)
            })
            .collect();
        Poly::interpolate(&xs, &ys, &big).map_coeffs(|c| emb.preimage(c).expect("norm has base-field coefficients"))
    }

    /// `max_b (d deg num_b + deg f * b)` on an Artin–Schreier model with one
    /// place at infinity, where `x` and `y` have pole orders `d` and `deg f`.
    fn pole_bound(&self) -> Option<usize> {
        let a = self.ff.as_form()?;
        if !self.ff.single_place_at_infinity() {
            return None;
        }
        let d = self.ff.degree();
        let my = a.f.degree()?;
        self.num.iter().enumerate().filter_map(|(b, p)| p.degree().map(|k| d * k + my * b)).max()
    }

    /// Same norm by Bareiss elimination over `F_q[x]`; slower, kept as a
    /// reference.
    pub fn numerator_norm_bareiss(&self) -> Poly {
        bareiss_det(&self.multiplication_rows(), self.ff.field())
    }

    /// Pole order at the unique place over `x = infinity` (negative for a zero).
    pub fn pole_order(&self) -> Result<i64, FfunError> {
        if !self.ff.single_place_at_infinity() {
            return Err(FfunError::SeveralPlacesAtInfinity);
        }
        if self.is_zero() {
            return Err(FfunError::ZeroElement);
        }
        let n = self.numerator_norm().degree().expect("norm of a nonzero element") as i64;
        let dd = self.den.degree().unwrap() as i64;
        Ok(n - self.ff.degree() as i64 * dd)
    }
}
