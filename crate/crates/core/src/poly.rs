//! Dense univariate polynomials over a [`Field`], the coefficient ring of
//! function-field elements.
//!
//! A `Poly` does not carry its field; every operation takes it explicitly so
//! that large tables of polynomials stay light.

use crate::galois::{binom_mod_p, Elem, Field};

/// Coefficients low degree first, never with trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Elem>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Elem::ONE])
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Elem, k: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        Poly(v)
    }

    pub fn x() -> Poly {
        Poly::monomial(Elem::ONE, 1)
    }

    pub fn from_coeffs(mut v: Vec<Elem>) -> Poly {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        Poly(v)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Elem {
        self.0.get(k).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0] == Elem::ONE
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.0.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = long.0.clone();
        for (i, &c) in short.0.iter().enumerate() {
            v[i] = f.add(v[i], c);
        }
        Poly::from_coeffs(v)
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        self.add(&other.neg(f), f)
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly(self.0.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c == Elem::ONE {
            return self.clone();
        }
        Poly(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.0.len() == 1 {
            return self.scale(other.0[0], f);
        }
        if self.0.len() == 1 {
            return other.scale(self.0[0], f);
        }
        let mut v = vec![Elem::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = f.add(v[i + j], f.mul(a, b));
                }
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Elem::ZERO; k];
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    pub fn pow(&self, mut e: u64, f: &Field) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        result
    }

    /// `(quotient, remainder)`; panics on division by zero.
    pub fn divrem(&self, d: &Poly, f: &Field) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(d.lead()).unwrap();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Elem::ZERO; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = f.mul(r[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            q[k - dd] = c;
            for (i, &b) in d.0.iter().enumerate() {
                r[k - dd + i] = f.sub(r[k - dd + i], f.mul(c, b));
            }
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Quotient of an exact division; debug-checks the remainder.
    pub fn div_exact(&self, d: &Poly, f: &Field) -> Poly {
        let (q, r) = self.divrem(d, f);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.lead()).unwrap(), f)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval(&self, x: Elem, f: &Field) -> Elem {
        self.0.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficients mapped through `map` into another field.
    pub fn map_coeffs(&self, map: impl Fn(Elem) -> Elem) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&c| map(c)).collect())
    }

    /// Hasse derivative: `D^(j) x^n = binom(n, j) x^(n-j)`.
    pub fn hasse(&self, j: usize, f: &Field) -> Poly {
        if j == 0 {
            return self.clone();
        }
        if self.0.len() <= j {
            return Poly::zero();
        }
        let p = f.characteristic();
        let v = (j..self.0.len())
            .map(|n| {
                let c = self.0[n];
                if c.is_zero() {
                    return c;
                }
                match binom_mod_p(n as u64, j as u64, p) {
                    0 => Elem::ZERO,
                    1 => c,
                    b => f.mul(c, f.from_int(b as i64)),
                }
            })
            .collect();
        Poly::from_coeffs(v)
    }

    /// Resultant `Res(self, other)`; for monic `self` this is the product of
    /// `other` over the roots of `self`.
    pub fn resultant(&self, other: &Poly, f: &Field) -> Elem {
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = Elem::ONE;
        loop {
            let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
                return Elem::ZERO;
            };
            if db == 0 {
                return f.mul(acc, f.pow(b.lead(), da as u64));
            }
            if da == 0 {
                return f.mul(acc, f.pow(a.lead(), db as u64));
            }
            let (_, r) = a.divrem(&b, f);
            let Some(dr) = r.degree() else {
                return Elem::ZERO;
            };
            if da % 2 == 1 && db % 2 == 1 {
                acc = f.neg(acc);
            }
            acc = f.mul(acc, f.pow(b.lead(), (da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// The polynomial of degree `< xs.len()` through `(xs[i], ys[i])`.
    pub fn interpolate(xs: &[Elem], ys: &[Elem], f: &Field) -> Poly {
        let n = xs.len();
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let den = f.sub(xs[i], xs[i - j]);
                dd[i] = f.div(f.sub(dd[i], dd[i - 1]), den).expect("distinct nodes");
            }
        }
        // Newton form to coefficients, Horner from the top
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            let lin = Poly::from_coeffs(vec![f.neg(xs[i]), Elem::ONE]);
            acc = acc.mul(&lin, f).add(&Poly::constant(dd[i]), f);
        }
        acc
    }

    /// Coefficient-wise Frobenius `c -> c^q` together with `x -> x^q`.
    pub fn frobenius_power(&self, q: u64, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let q = q as usize;
        let mut v = vec![Elem::ZERO; (self.0.len() - 1) * q + 1];
        for (i, &c) in self.0.iter().enumerate() {
            v[i * q] = f.pow(c, q as u64);
        }
        Poly(v)
    }
}
