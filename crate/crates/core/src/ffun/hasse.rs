use super::element::{a_add, a_is_zero, a_mul_y, a_scale, a_sub, FunctionElement};
use super::{FfunError, FunctionField};
use crate::poly::Poly;

/// `D^(j) y` for `j = 1..=depth` on an Artin–Schreier model; all of them are
/// polynomials in `x`.
#[derive(Clone, Debug)]
pub struct HasseTable {
    ff: FunctionField,
    dy: Vec<Poly>,
}

impl HasseTable {
    /// From `y^qp + c y = f`: `c D^(j) y = D^(j) f - [qp | j] (D^(j/qp) y)^qp`.
    pub fn new(ff: &FunctionField, depth: usize) -> Result<HasseTable, FfunError> {
        let a = ff.as_form().ok_or(FfunError::NotArtinSchreier)?;
        let f = ff.field();
        let cinv = f.inv(a.c).unwrap();
        let qp = a.qp as usize;
        let mut dy = vec![Poly::zero(); depth + 1];
        for j in 1..=depth {
            let mut v = a.f.hasse(j, f);
            if j % qp == 0 {
                v = v.sub(&dy[j / qp].frobenius_power(a.qp, f), f);
            }
            dy[j] = v.scale(cinv, f);
        }
        Ok(HasseTable { ff: ff.clone(), dy })
    }

    pub fn depth(&self) -> usize {
        self.dy.len() - 1
    }

    pub fn function_field(&self) -> &FunctionField {
        &self.ff
    }

    /// `D^(j) y`, `j >= 1`.
    pub fn dy(&self, j: usize) -> Result<&Poly, FfunError> {
        assert!(j > 0, "D^(0) y is y itself, not a polynomial");
        self.dy.get(j).ok_or(FfunError::DepthExceeded { needed: j, depth: self.depth() })
    }

    /// `[D^(0) g, ..., D^(order) g]` for `g` in `A`, via the Taylor
    /// homomorphism `x -> x + t`, `y -> sum_k D^(k) y t^k` and Horner in `y`.
    fn taylor_a(&self, g: &[Poly], order: usize) -> Vec<Vec<Poly>> {
        let ff = &self.ff;
        let f = ff.field();
        let d = ff.degree();
        let lift = |p: &Poly| -> Vec<Vec<Poly>> {
            (0..=order)
                .map(|k| {
                    let mut v = vec![Poly::zero(); d];
                    v[0] = p.hasse(k, f);
                    v
                })
                .collect()
        };
        let mut acc = lift(&g[d - 1]);
        for b in (0..d - 1).rev() {
            // acc <- acc * T(y) + T(g_b)
            let mut next: Vec<Vec<Poly>> = (0..=order).map(|k| a_mul_y(ff, &acc[k])).collect();
            for k in 1..=order {
                for i in 0..k {
                    if !a_is_zero(&acc[i]) && !self.dy[k - i].is_zero() {
                        next[k] = a_add(ff, &next[k], &a_scale(ff, &acc[i], &self.dy[k - i]));
                    }
                }
            }
            let tg = lift(&g[b]);
            acc = next.iter().zip(&tg).map(|(u, v)| a_add(ff, u, v)).collect();
        }
        acc
    }

    /// `[D^(0) g, ..., D^(order) g]`.
    pub fn derivatives(&self, g: &FunctionElement, order: usize) -> Result<Vec<FunctionElement>, FfunError> {
        if order > self.depth() {
            return Err(FfunError::DepthExceeded { needed: order, depth: self.depth() });
        }
        if g.function_field() != &self.ff {
            return Err(FfunError::FieldMismatch);
        }
        let ff = &self.ff;
        let f = ff.field();
        let num = self.taylor_a(g.numerator(), order);
        let den = g.denominator();
        if den.is_one() {
            return Ok(num.into_iter().map(|v| FunctionElement::from_a(ff, v)).collect());
        }
        // G_k = den^k num_k - sum_{i=1..k} D^(i)den den^(i-1) G_{k-i}; D^(k) g = G_k / den^(k+1)
        let dden: Vec<Poly> = (0..=order).map(|i| den.hasse(i, f)).collect();
        let mut den_pow = vec![Poly::one()];
        for k in 1..=order + 1 {
            den_pow.push(den_pow[k - 1].mul(den, f));
        }
        let mut big_g: Vec<Vec<Poly>> = Vec::with_capacity(order + 1);
        let mut out = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut v = a_scale(ff, &num[k], &den_pow[k]);
            for i in 1..=k {
                if dden[i].is_zero() {
                    continue;
                }
                let c = dden[i].mul(&den_pow[i - 1], f);
                v = a_sub(ff, &v, &a_scale(ff, &big_g[k - i], &c));
            }
            out.push(FunctionElement::from_parts(ff, v.clone(), den_pow[k + 1].clone())?);
            big_g.push(v);
        }
        Ok(out)
    }

    /// `D^(j) g`
    pub fn derive(&self, g: &FunctionElement, j: usize) -> Result<FunctionElement, FfunError> {
        Ok(self.derivatives(g, j)?.pop().unwrap())
    }
}

impl FunctionElement {
    /// `D^(j)` with respect to `x`, using a prebuilt table.
    pub fn hasse(&self, j: usize, table: &HasseTable) -> Result<FunctionElement, FfunError> {
        table.derive(self, j)
    }
}
