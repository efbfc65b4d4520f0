use super::{FfunError, FunctionElement, FunctionField};
use crate::galois::{Elem, Embedding, Field};
use crate::poly::Poly;

/// Power series truncated modulo `t^len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series(pub Vec<Elem>);

impl Series {
    pub fn precision(&self) -> usize {
        self.0.len()
    }

    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Series, k: &Field) -> Series {
        Series(self.0.iter().zip(&o.0).map(|(&a, &b)| k.add(a, b)).collect())
    }

    pub fn sub(&self, o: &Series, k: &Field) -> Series {
        Series(self.0.iter().zip(&o.0).map(|(&a, &b)| k.sub(a, b)).collect())
    }

    pub fn mul(&self, o: &Series, k: &Field) -> Series {
        let n = self.0.len().min(o.0.len());
        let mut v = vec![Elem::ZERO; n];
        for (i, &a) in self.0.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.0.iter().take(n - i).enumerate() {
                v[i + j] = k.add(v[i + j], k.mul(a, b));
            }
        }
        Series(v)
    }

    /// Inverse of a unit series.
    pub fn inv(&self, k: &Field) -> Option<Series> {
        let n = self.0.len();
        let c0 = k.inv(*self.0.first()?)?;
        let mut v = vec![Elem::ZERO; n];
        v[0] = c0;
        for m in 1..n {
            let mut acc = Elem::ZERO;
            for i in 1..=m {
                acc = k.add(acc, k.mul(self.0[i], v[m - i]));
            }
            v[m] = k.neg(k.mul(acc, c0));
        }
        Some(Series(v))
    }

    pub fn truncate(&self, n: usize) -> Series {
        Series(self.0[..n.min(self.0.len())].to_vec())
    }
}

/// `p(a + t) mod t^n` for `p` over the base field, mapped by `emb`.
pub fn taylor_shift(p: &Poly, emb: &Embedding, a: Elem, n: usize) -> Series {
    let k = emb.big();
    let mut cur: Vec<Elem> = p.coeffs().iter().map(|&c| emb.map(c)).collect();
    let mut out = vec![Elem::ZERO; n];
    for slot in out.iter_mut() {
        if cur.is_empty() {
            break;
        }
        // synthetic division by (x - a)
        let mut carry = Elem::ZERO;
        let mut quot = vec![Elem::ZERO; cur.len() - 1];
        for i in (0..cur.len()).rev() {
            carry = k.add(k.mul(carry, a), cur[i]);
            if i > 0 {
                quot[i - 1] = carry;
            }
        }
        *slot = carry;
        cur = quot;
    }
    Series(out)
}

/// A truncated Laurent expansion in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesValue {
    /// Exponent of the first nonzero coefficient, `None` if zero to precision.
    pub order: Option<i64>,
    /// Coefficients from `t^order` on (empty when `order` is `None`).
    pub coeffs: Vec<Elem>,
    /// Everything is known modulo `t^precision`.
    pub precision: i64,
}

/// Expansion of `y` at an affine point in the local parameter `t = x - a`.
#[derive(Clone, Debug)]
pub struct LocalExpansion {
    ff: FunctionField,
    emb: Embedding,
    a: Elem,
    b: Elem,
    y: Series,
}

impl LocalExpansion {
    pub fn precision(&self) -> usize {
        self.y.precision()
    }

    pub fn point(&self) -> (Elem, Elem) {
        (self.a, self.b)
    }

    pub fn field(&self) -> &Field {
        self.emb.big()
    }

    pub fn y_series(&self) -> &Series {
        &self.y
    }

    /// Expansion of `g` at the center, to the recorded precision.
    pub fn eval(&self, g: &FunctionElement) -> SeriesValue {
        let k = self.emb.big();
        let n = self.precision();
        let mut acc = Series(vec![Elem::ZERO; n]);
        for p in g.numerator().iter().rev() {
            acc = acc.mul(&self.y, k).add(&taylor_shift(p, &self.emb, self.a, n), k);
        }
        let den = taylor_shift(g.denominator(), &self.emb, self.a, n);
        let vd = den.valuation().unwrap_or(n);
        if vd >= n {
            return SeriesValue { order: None, coeffs: Vec::new(), precision: -(n as i64) };
        }
        let unit = Series(den.0[vd..].to_vec());
        let q = acc.truncate(n - vd).mul(&unit.inv(k).unwrap(), k);
        let precision = (n - vd) as i64 - vd as i64;
        match q.valuation() {
            Some(v) => SeriesValue {
                order: Some(v as i64 - vd as i64),
                coeffs: q.0[v..].to_vec(),
                precision,
            },
            None => SeriesValue { order: None, coeffs: Vec::new(), precision },
        }
    }

    /// Vanishing order of `g` at the center, when below the precision.
    pub fn order(&self, g: &FunctionElement) -> Option<i64> {
        self.eval(g).order
    }
}

/// Expands `y` at the affine point `(a, b)` over `emb.big()` to precision
/// `n` by Newton iteration on `F(a + t, Y) = 0`.
pub fn expand_at(ff: &FunctionField, emb: &Embedding, a: Elem, b: Elem, n: usize) -> Result<LocalExpansion, FfunError> {
    let k = emb.big();
    let map = |c| emb.map(c);
    if !ff.eval_equation(k, &map, a, b).is_zero() {
        return Err(FfunError::NotOnCurve);
    }
    if ff.eval_dy(k, &map, a, b).is_zero() {
        return Err(FfunError::Ramified);
    }
    let n = n.max(1);
    let p = k.characteristic() as i64;
    let coeffs: Vec<Series> = ff.equation().iter().map(|c| taylor_shift(c, emb, a, n)).collect();
    let mut y = Series(vec![b]);
    let mut prec = 1;
    while prec < n {
        prec = (2 * prec).min(n);
        let mut yy = y.0.clone();
        yy.resize(prec, Elem::ZERO);
        let yy = Series(yy);
        let zero = Series(vec![Elem::ZERO; prec]);
        let mut g = zero.clone();
        let mut dg = zero;
        for (deg, c) in coeffs.iter().enumerate().rev() {
            let c = c.truncate(prec);
            g = g.mul(&yy, k).add(&c, k);
            if deg > 0 {
                let m = k.from_int(deg as i64 % p);
                let scaled = Series(c.0.iter().map(|&e| k.mul(e, m)).collect());
                dg = dg.mul(&yy, k).add(&scaled, k);
            }
        }
        let step = g.mul(&dg.inv(k).ok_or(FfunError::Ramified)?, k);
        y = yy.sub(&step, k);
    }
    Ok(LocalExpansion { ff: ff.clone(), emb: emb.clone(), a, b, y })
}

impl LocalExpansion {
    pub fn function_field(&self) -> &FunctionField {
        &self.ff
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffun::HasseTable;
    use crate::galois::make_field;

    fn hermitian2() -> FunctionField {
        FunctionField::artin_schreier(&make_field(2, 2).unwrap(), 2, Elem::ONE, &Poly::monomial(Elem::ONE, 3)).unwrap()
    }

    #[test]
    fn hensel_solution_of_y2_plus_y() {
        let ff = hermitian2();
        let emb = Embedding::identity(ff.field());
        let e = expand_at(&ff, &emb, Elem::ZERO, Elem::ZERO, 16).unwrap();
        // y = t^3 + t^6 + t^12 + ...
        let ys: Vec<usize> = e.y_series().0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
        assert_eq!(ys, vec![3, 6, 12]);
        assert_eq!(e.order(&ff.y()), Some(3));
        assert_eq!(e.order(&ff.x()), Some(1));
        assert_eq!(e.order(&ff.one()), Some(0));
        assert_eq!(e.order(&ff.zero()), None);
        let inv_x = ff.one().div_poly(&Poly::x()).unwrap();
        assert_eq!(e.order(&inv_x), Some(-1));
    }

    #[test]
    fn rejects_off_curve_points() {
        let ff = hermitian2();
        let emb = Embedding::identity(ff.field());
        assert_eq!(expand_at(&ff, &emb, Elem::ONE, Elem::ZERO, 4).err(), Some(FfunError::NotOnCurve));
    }

    #[test]
    fn taylor_coefficients_are_hasse_values() {
        // Suzuki s=1 points over F_64; coefficients of the expansion of g at P
        // are (D^(k) g)(P)
        let base = make_field(2, 3).unwrap();
        let rhs = Poly::monomial(Elem::ONE, 10).sub(&Poly::monomial(Elem::ONE, 3), &base);
        let ff = FunctionField::artin_schreier(&base, 8, Elem::ONE, &rhs).unwrap();
        let table = HasseTable::new(&ff, 10).unwrap();
        let big = make_field(2, 6).unwrap();
        let emb = Embedding::new(&base, &big).unwrap();
        let z = ff.x().pow(5).add(&ff.y().pow(4));
        let g = z.mul(&ff.y()).add(&ff.x()).div_poly(&Poly::x().add(&Poly::one(), &base)).unwrap();
        let dg = table.derivatives(&g, 9).unwrap();
        let mut checked = 0;
        for a in big.elements().filter(|&a| a != Elem::ONE) {
            let map = |c| emb.map(c);
            for b in big.elements() {
                if !ff.eval_equation(&big, &map, a, b).is_zero() {
                    continue;
                }
                let e = expand_at(&ff, &emb, a, b, 10).unwrap();
                let v = e.eval(&g);
                let mut full = vec![Elem::ZERO; 10];
                if let Some(o) = v.order {
                    for (i, &c) in v.coeffs.iter().enumerate() {
                        full[o as usize + i] = c;
                    }
                }
                for (kk, d) in dg.iter().enumerate() {
                    assert_eq!(Some(full[kk]), d.eval(&emb, a, b));
                }
                checked += 1;
            }
        }
        assert!(checked > 10);
    }
}
