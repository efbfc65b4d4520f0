//! h-polynomials (characteristic polynomials of Frobenius on the Jacobian),
//! the point counts they predict, and the classical bounds on `#X(F_q)`.

use num_rational::Rational64;
use serde::Serialize;
use thiserror::Error;

use crate::curvecat::{CurveClass, PlaneCurveModel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZetaError {
    #[error("unsupported factor shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("arithmetic overflow")]
    Overflow,
}

/// A monic integer factor `t^n + c_1 t^(n-1) + ... + c_n`, `n <= 2`,
/// stored as `[c_1, ..., c_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub tail: Vec<i64>,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HPolynomial {
    pub q: u64,
    /// Distinct irreducible factors with multiplicities.
    pub factors: Vec<Factor>,
    pub shape: String,
}

/// Power sums `p_1..=p_m` of the roots of `t^n + c_1 t^(n-1) + ... + c_n`
/// by Newton's identities.
pub fn power_sums(tail: &[i64], m: u32) -> Result<Vec<i128>, ZetaError> {
    let n = tail.len();
    let c: Vec<i128> = tail.iter().map(|&v| v as i128).collect();
    let mut p: Vec<i128> = Vec::with_capacity(m as usize);
    for k in 1..=m as usize {
        let mut acc: i128 = 0;
        for i in 1..=n.min(k - 1) {
            acc = acc.checked_add(c[i - 1].checked_mul(p[k - i - 1]).ok_or(ZetaError::Overflow)?).ok_or(ZetaError::Overflow)?;
        }
        if k <= n {
            acc = acc.checked_add(k as i128 * c[k - 1]).ok_or(ZetaError::Overflow)?;
        }
        p.push(-acc);
    }
    Ok(p)
}

fn is_square(v: i128) -> bool {
    if v < 0 {
        return false;
    }
    let r = (v as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).any(|s| s >= 0 && s * s == v)
}

impl HPolynomial {
    /// Validates shapes: linear `t + a` with `a^2 = q`, or an irreducible
    /// quadratic `t^2 + b t + q` with `b^2 < 4q`.
    pub fn new(q: u64, factors: Vec<Factor>, shape: &str) -> Result<HPolynomial, ZetaError> {
        if q < 2 {
            return Err(ZetaError::BadParameter(format!("q = {q}")));
        }
        for (i, f) in factors.iter().enumerate() {
            if f.multiplicity == 0 || factors[..i].iter().any(|g| g.tail == f.tail) {
                return Err(ZetaError::UnsupportedShape(format!("repeated or empty factor {:?}", f.tail)));
            }
            let qi = q as i128;
            match f.tail.as_slice() {
                [a] if (*a as i128) * (*a as i128) == qi => {}
                [b, c] if *c as i128 == qi && (*b as i128).pow(2) < 4 * qi && !is_square((*b as i128).pow(2) - 4 * qi) => {}
                other => return Err(ZetaError::UnsupportedShape(format!("{other:?} over q = {q}"))),
            }
        }
        Ok(HPolynomial { q, factors, shape: shape.to_string() })
    }

    /// `(t + l)^(2g)` over `F_(l^2)`.
    pub fn maximal(l: u64, g: u64) -> Result<HPolynomial, ZetaError> {
        let factors = if g == 0 { vec![] } else { vec![Factor { tail: vec![l as i64], multiplicity: 2 * g as u32 }] };
        HPolynomial::new(l * l, factors, "maximal")
    }

    /// `(t^2 + 2 q0 t + q)^g` with `q = 2 q0^2`.
    pub fn suzuki(q0: u64) -> Result<HPolynomial, ZetaError> {
        let q = 2 * q0 * q0;
        let g = q0 * (q - 1);
        HPolynomial::new(q, vec![Factor { tail: vec![2 * q0 as i64, q as i64], multiplicity: g as u32 }], "suzuki")
    }

    /// Shape for a catalog curve: Hermitian quotients are maximal.
    pub fn for_curve(curve: &PlaneCurveModel) -> Result<HPolynomial, ZetaError> {
        let g = curve.genus().ok_or_else(|| ZetaError::UnsupportedShape("genus unknown".into()))?;
        match curve.class() {
            CurveClass::Hermitian { l } | CurveClass::HermitianQuotient { l, .. } | CurveClass::FermatHalf { l } => {
                HPolynomial::maximal(*l, g)
            }
            CurveClass::Suzuki { .. } => {
                let (_, q0, _) = curve.suzuki_params().unwrap();
                HPolynomial::suzuki(q0)
            }
            CurveClass::Custom { name } => Err(ZetaError::UnsupportedShape(format!("no h-polynomial known for {name}"))),
        }
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|f| f.tail.len() as u64 * f.multiplicity as u64).sum()
    }

    pub fn genus(&self) -> u64 {
        self.degree() / 2
    }

    /// Coefficients of the product of the distinct factors, leading 1 first.
    pub fn radical(&self) -> Vec<i64> {
        let mut acc = vec![1i64];
        for f in &self.factors {
            let mut g = vec![1i64];
            g.extend(&f.tail);
            let mut next = vec![0i64; acc.len() + g.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in g.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            acc = next;
        }
        acc
    }

    /// `U`, the degree of the radical.
    pub fn u(&self) -> usize {
        self.radical().len() - 1
    }

    /// `alpha_1..=alpha_U`, the radical's coefficients below the leading one.
    pub fn alphas(&self) -> Vec<i64> {
        self.radical()[1..].to_vec()
    }

    /// `m`, the product of the distinct factors at 1.
    pub fn m(&self) -> i64 {
        self.radical().iter().sum()
    }

    /// `m > 0`, `alpha_1, alpha_U >= 1` and `alpha` nondecreasing.
    pub fn satisfies_z(&self) -> bool {
        let a = self.alphas();
        if a.is_empty() {
            return self.m() > 0;
        }
        self.m() > 0 && a[0] >= 1 && *a.last().unwrap() >= 1 && a.windows(2).all(|w| w[1] >= w[0])
    }

    /// Every factor's roots have absolute value `sqrt q`: `a^2 = q` for
    /// `t + a`, constant term `q` and negative discriminant for quadratics.
    pub fn roots_on_circle(&self) -> bool {
        let q = self.q as i128;
        self.factors.iter().all(|f| match f.tail.as_slice() {
            [a] => (*a as i128).pow(2) == q,
            [b, c] => *c as i128 == q && (*b as i128).pow(2) <= 4 * q,
            _ => false,
        })
    }

    /// `N_m = q^m + 1 - sum of m-th powers of the roots`.
    pub fn predicted_count(&self, m: u32) -> Result<i128, ZetaError> {
        if m == 0 {
            return Err(ZetaError::BadParameter("extension degree 0".into()));
        }
        let mut s: i128 = 0;
        for f in &self.factors {
            let p = power_sums(&f.tail, m)?;
            s = s.checked_add(p[m as usize - 1].checked_mul(f.multiplicity as i128).ok_or(ZetaError::Overflow)?).ok_or(ZetaError::Overflow)?;
        }
        let qm = (self.q as i128).checked_pow(m).ok_or(ZetaError::Overflow)?;
        Ok(qm + 1 - s)
    }
}

/// `q + 1 + 2 g sqrt q`, exact when `q` is a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HasseWeil {
    pub q: u64,
    pub g: u64,
}

pub fn hasse_weil(q: u64, g: u64) -> HasseWeil {
    HasseWeil { q, g }
}

fn isqrt(q: u64) -> Option<u64> {
    let r = (q as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|s| s * s == q)
}

impl HasseWeil {
    pub fn exact(&self) -> Option<u64> {
        isqrt(self.q).map(|l| self.q + 1 + 2 * self.g * l)
    }

    /// For display only; comparisons go through [`HasseWeil::admits`].
    pub fn approx(&self) -> f64 {
        self.q as f64 + 1.0 + 2.0 * self.g as f64 * (self.q as f64).sqrt()
    }

    /// `n <= q + 1 + 2 g sqrt q`, decided in integers.
    pub fn admits(&self, n: u64) -> bool {
        let lhs = n as i128 - self.q as i128 - 1;
        lhs <= 0 || lhs * lhs <= 4 * (self.g as i128).pow(2) * self.q as i128
    }
}

pub fn is_maximal(n: u64, q: u64, g: u64) -> bool {
    hasse_weil(q, g).exact() == Some(n)
}

/// `l (l - 1) / 2`, the largest genus of a maximal curve over `F_(l^2)`.
pub fn ihara_genus_cap(l: u64) -> u64 {
    l * (l - 1) / 2
}

/// `1 + q m1`.
pub fn lewittes_bound(q: u64, m1: u64) -> u64 {
    1 + q * m1
}

/// `(d - 1 - (r - 1)/2)^2 / (r - 1)`, an upper bound for `2g` on a curve
/// with a simple base-point-free `g^r_d`.
pub fn castelnuovo_limit(d: u64, r: u64) -> Result<Rational64, ZetaError> {
    if r < 2 || d <= r {
        return Err(ZetaError::BadParameter(format!("need r >= 2 and d > r, got d = {d}, r = {r}")));
    }
    let base = Rational64::from_integer(d as i64 - 1) - Rational64::new(r as i64 - 1, 2);
    Ok(base * base / Rational64::from_integer(r as i64 - 1))
}

/// L-polynomial recovered from counts for `g <= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FittedZeta {
    pub q: u64,
    pub g: u64,
    /// `h(t) = t^(2g) + c_1 t^(2g-1) + ... + c_(2g)`, as `[c_1, ..]`.
    pub tail: Vec<i64>,
}

impl FittedZeta {
    pub fn predicted_count(&self, m: u32) -> Result<i128, ZetaError> {
        if self.g == 0 {
            return Ok((self.q as i128).pow(m) + 1);
        }
        let p = power_sums(&self.tail, m)?;
        Ok((self.q as i128).pow(m) + 1 - p[m as usize - 1])
    }
}

/// Uses the functional equation `c_(2g-i) = q^(g-i) c_i` and `N_1..=N_g`.
pub fn fit(q: u64, g: u64, counts: &[u64]) -> Result<FittedZeta, ZetaError> {
    if g > 2 {
        return Err(ZetaError::BadParameter(format!("fitting supports g <= 2, got {g}")));
    }
    if (counts.len() as u64) < g {
        return Err(ZetaError::BadParameter(format!("need {g} counts, got {}", counts.len())));
    }
    let qi = q as i64;
    let s: Vec<i64> = counts.iter().take(g as usize).enumerate().map(|(i, &n)| qi.pow(i as u32 + 1) + 1 - n as i64).collect();
    let tail = match g {
        0 => vec![],
        1 => vec![-s[0], qi],
        _ => {
            let c1 = -s[0];
            let twice = c1 * c1 - s[1];
            if twice % 2 != 0 {
                return Err(ZetaError::BadParameter("counts are not those of a curve".into()));
            }
            let c2 = twice / 2;
            vec![c1, c2, qi * c1, qi * qi]
        }
    };
    Ok(FittedZeta { q, g, tail })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suzuki_predictions() {
        let h = HPolynomial::suzuki(2).unwrap();
        assert_eq!(h.degree(), 28);
        let n: Vec<i128> = (1..=4).map(|m| h.predicted_count(m).unwrap()).collect();
        assert_eq!(n, vec![65, 65, 65, 5889]);
        assert_eq!((h.u(), h.alphas(), h.m()), (2, vec![4, 8], 13));
        assert!(h.satisfies_z() && h.roots_on_circle());
    }

    #[test]
    fn maximal_predictions() {
        let h = HPolynomial::maximal(2, 1).unwrap();
        assert_eq!((h.predicted_count(1).unwrap(), h.predicted_count(2).unwrap()), (9, 9));
        assert_eq!(h.m(), 3);
        let h3 = HPolynomial::maximal(3, 3).unwrap();
        assert_eq!(h3.predicted_count(1).unwrap(), hasse_weil(9, 3).exact().unwrap() as i128);
        let h0 = HPolynomial::maximal(5, 0).unwrap();
        assert_eq!(h0.predicted_count(3).unwrap(), 15626);
    }

    #[test]
    fn z_condition_can_fail() {
        let h = HPolynomial::new(2, vec![Factor { tail: vec![-1, 2], multiplicity: 1 }], "custom").unwrap();
        assert!(h.roots_on_circle());
        assert!(!h.satisfies_z());
        assert_eq!(h.predicted_count(1).unwrap(), 2);
    }

    #[test]
    fn rejects_non_weil() {
        assert!(HPolynomial::new(9, vec![Factor { tail: vec![2], multiplicity: 1 }], "x").is_err());
        assert!(HPolynomial::new(4, vec![Factor { tail: vec![4, 4], multiplicity: 1 }], "x").is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(hasse_weil(9, 3).exact(), Some(28));
        let hw = hasse_weil(8, 14);
        assert_eq!(hw.exact(), None);
        assert!(hw.admits(65) && hw.admits(88) && !hw.admits(89));
        assert_eq!(hasse_weil(7, 0).exact(), None);
        assert!(hasse_weil(7, 0).admits(8) && !hasse_weil(7, 0).admits(9));
        assert!(is_maximal(28, 9, 3) && !is_maximal(27, 9, 3));
        assert_eq!((ihara_genus_cap(3), ihara_genus_cap(5)), (3, 10));
        assert_eq!((lewittes_bound(8, 8), lewittes_bound(9, 3), lewittes_bound(5, 1)), (65, 28, 6));
        assert_eq!(castelnuovo_limit(13, 6).unwrap(), Rational64::new(361, 20));
        assert_eq!(castelnuovo_limit(13, 4).unwrap(), Rational64::new(147, 4));
        for l in 2..20i64 {
            let c = castelnuovo_limit(l as u64 + 1, 2).unwrap();
            assert!(c >= Rational64::from_integer(l * l - l));
        }
        assert!(castelnuovo_limit(3, 1).is_err());
    }

    #[test]
    fn fit_recovers_h() {
        let f = fit(4, 1, &[9]).unwrap();
        assert_eq!(f.tail, vec![4, 4]);
        assert_eq!(f.predicted_count(2).unwrap(), 9);
        // q0 = 1: an elliptic curve over F_2
        let h = HPolynomial::suzuki(1).unwrap();
        let counts: Vec<u64> = (1..=2).map(|m| h.predicted_count(m).unwrap() as u64).collect();
        let f = fit(2, 1, &counts).unwrap();
        assert_eq!(f.tail, vec![2, 2]);
        assert_eq!(f.predicted_count(3).unwrap(), h.predicted_count(3).unwrap());
        assert!(fit(2, 3, &[1, 2, 3]).is_err());
    }

    #[test]
    fn fit_genus_two() {
        use crate::curvecat::{count_points, Term};
        use crate::exec::ExecMode;
        use crate::galois::make_field;
        let terms = vec![Term { a: 0, b: 2, coeff: 1 }, Term { a: 0, b: 1, coeff: 1 }, Term { a: 5, b: 0, coeff: 1 }];
        let c = PlaneCurveModel::custom("y2x5", make_field(2, 1).unwrap(), terms, None).unwrap();
        assert_eq!(c.genus(), Some(2));
        let counts: Vec<u64> = (1..=4).map(|m| count_points(&c, m, ExecMode::Sequential).unwrap()).collect();
        let f = fit(2, 2, &counts).unwrap();
        for m in 1..=4 {
            assert_eq!(f.predicted_count(m).unwrap(), counts[m as usize - 1] as i128);
        }
    }
}
