//! Catalog curves: defining equations, places at infinity, rational points
//! over extensions, and Riemann–Roch bases of `L(m P_inf)`.

mod cache;
mod census;
mod config;
mod points;
mod rr;

pub use cache::CountCache;
pub use census::{fiber_census, Coordinate, FiberCensus, FiberReport};
pub use config::CustomCurveConfig;
pub use points::{count_points, enumerate_points, PointEnumeration, PointKind, RationalPoint};
pub use rr::{rr_basis, suzuki_auxiliaries, BasisElement, RrBasis, SuzukiAuxiliaries};

use serde::Serialize;
use thiserror::Error;

use crate::ffun::{FfunError, FunctionField};
use crate::galois::{make_field, Elem, Embedding, Field, GaloisError, FIELD_CAP};
use crate::numsg::{gcd, SemigroupError};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("invalid curve parameters: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    Function(#[from] FfunError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("declared genus {declared} disagrees with the class formula {formula}")]
    GenusMismatch { declared: u64, formula: u64 },
    #[error("{what}: expected pole order {expected}, found {found}")]
    PoleOrder { what: String, expected: i64, found: i64 },
    #[error("L({m} P): expected dimension {expected}, basis has {found}")]
    RiemannRoch { m: u64, expected: u64, found: u64 },
    #[error("two basis functions share the pole order {0}")]
    PoleCollision(u64),
    #[error("operation needs {0}")]
    Unsupported(String),
    #[error("config: {0}")]
    Config(String),
    #[error("cache: {0}")]
    Cache(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum CurveClass {
    /// `y^l + y = x^(l+1)` over `F_(l^2)`
    Hermitian { l: u64 },
    /// `y^l + y = x^((l+1)/n)` over `F_(l^2)`
    HermitianQuotient { l: u64, n: u64 },
    /// `y^q - y = x^q0 (x^q - x)` over `F_q`, `q0 = 2^s`, `q = 2 q0^2`
    Suzuki { s: u32 },
    /// `x^k + y^k = 1` over `F_(l^2)`, `k = (l+1)/2`
    FermatHalf { l: u64 },
    Custom { name: String },
}

/// Where the curve meets the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Infinity {
    /// One place, rational over the base field, with the pole orders of `x`
    /// and `y` and generators of its Weierstrass semigroup.
    SinglePlace { m_x: u64, m_y: u64, generators: Vec<u64> },
    /// The points `(1 : z : 0)` with `z^k = -1`.
    FermatPoints { k: u64 },
    /// Nothing declared: counts are affine only.
    Undeclared,
}

/// One monomial `coeff * x^a * y^b` of the defining polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub a: u32,
    pub b: u32,
    pub coeff: u32,
}

#[derive(Clone, Debug)]
pub struct PlaneCurveModel {
    id: String,
    class: CurveClass,
    field: Field,
    terms: Vec<Term>,
    genus: Option<u64>,
    infinity: Infinity,
    ff: Option<FunctionField>,
}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p as u32, k))
}

impl PlaneCurveModel {
    fn build(
        id: String,
        class: CurveClass,
        field: Field,
        terms: Vec<Term>,
        genus: Option<u64>,
        infinity: Infinity,
    ) -> Result<PlaneCurveModel, CurveError> {
        let single = matches!(infinity, Infinity::SinglePlace { .. });
        let ff = function_field_from_terms(&field, &terms, single).ok();
        Ok(PlaneCurveModel { id, class, field, terms, genus, infinity, ff })
    }

    /// Artin–Schreier catalog curve `y^qp + c y = sum coeffs`.
    fn artin_schreier(
        id: String,
        class: CurveClass,
        field: Field,
        qp: u64,
        c: Elem,
        rhs: &[(u32, Elem)],
        genus: u64,
        generators: Vec<u64>,
    ) -> Result<PlaneCurveModel, CurveError> {
        let mut terms = vec![Term { a: 0, b: qp as u32, coeff: 1 }, Term { a: 0, b: 1, coeff: c.0 }];
        let m_y = rhs.iter().map(|t| t.0 as u64).max().unwrap_or(0);
        for &(a, k) in rhs {
            terms.push(Term { a, b: 0, coeff: field.neg(k).0 });
        }
        let infinity = Infinity::SinglePlace { m_x: qp, m_y, generators };
        PlaneCurveModel::build(id, class, field, terms, Some(genus), infinity)
    }

    pub fn hermitian(l: u64) -> Result<PlaneCurveModel, CurveError> {
        let (p, k) = prime_power(l).ok_or_else(|| CurveError::BadParameter(format!("l = {l} is not a prime power")))?;
        check_cap(p, 2 * k)?;
        let field = make_field(p, 2 * k)?;
        let g = l * (l - 1) / 2;
        PlaneCurveModel::artin_schreier(
            format!("hermitian:{l}"),
            CurveClass::Hermitian { l },
            field,
            l,
            Elem::ONE,
            &[(l as u32 + 1, Elem::ONE)],
            g,
            vec![l, l + 1],
        )
    }

    pub fn hermitian_quotient(l: u64, n: u64) -> Result<PlaneCurveModel, CurveError> {
        let (p, k) = prime_power(l).ok_or_else(|| CurveError::BadParameter(format!("l = {l} is not a prime power")))?;
        if n < 2 || (l + 1) % n != 0 {
            return Err(CurveError::BadParameter(format!("n = {n} must be at least 2 and divide l + 1 = {}", l + 1)));
        }
        check_cap(p, 2 * k)?;
        let field = make_field(p, 2 * k)?;
        let m = (l + 1) / n;
        let g = (l - 1) * (m - 1) / 2;
        let generators = if m == 1 { vec![1] } else { vec![m.min(l), m.max(l)] };
        PlaneCurveModel::artin_schreier(
            format!("quotient:{l}:{n}"),
            CurveClass::HermitianQuotient { l, n },
            field,
            l,
            Elem::ONE,
            &[(m as u32, Elem::ONE)],
            g,
            generators,
        )
    }

    pub fn suzuki(s: u32) -> Result<PlaneCurveModel, CurveError> {
        if s == 0 {
            return Err(CurveError::BadParameter("s must be at least 1".into()));
        }
        check_cap(2, 2 * s + 1)?;
        let field = make_field(2, 2 * s + 1)?;
        let q0 = 1u64 << s;
        let q = 2 * q0 * q0;
        // char 2: y^q + y = x^(q + q0) + x^(q0 + 1)
        PlaneCurveModel::artin_schreier(
            format!("suzuki:{s}"),
            CurveClass::Suzuki { s },
            field,
            q,
            Elem::ONE,
            &[((q + q0) as u32, Elem::ONE), ((q0 + 1) as u32, Elem::ONE)],
            q0 * (q - 1),
            crate::numsg::suzuki_point_semigroup(s),
        )
    }

    pub fn fermat_half(l: u64) -> Result<PlaneCurveModel, CurveError> {
        let (p, k) = prime_power(l).ok_or_else(|| CurveError::BadParameter(format!("l = {l} is not a prime power")))?;
        if l % 2 == 0 {
            return Err(CurveError::BadParameter("l must be odd".into()));
        }
        check_cap(p, 2 * k)?;
        let field = make_field(p, 2 * k)?;
        let kk = (l + 1) / 2;
        if kk % p as u64 == 0 {
            return Err(CurveError::BadParameter("characteristic divides the degree".into()));
        }
        let minus_one = field.neg(Elem::ONE).0;
        let terms = vec![
            Term { a: kk as u32, b: 0, coeff: 1 },
            Term { a: 0, b: kk as u32, coeff: 1 },
            Term { a: 0, b: 0, coeff: minus_one },
        ];
        let g = (kk - 1) * (kk - 2) / 2;
        PlaneCurveModel::build(
            format!("fermat:{l}"),
            CurveClass::FermatHalf { l },
            field,
            terms,
            Some(g),
            Infinity::FermatPoints { k: kk },
        )
    }

    /// A curve from explicit monomials. Artin–Schreier shapes
    /// `y^qp + c y = f(x)` with `p` not dividing `deg f` get their single
    /// place at infinity and genus `(qp - 1)(deg f - 1)/2`.
    pub fn custom(name: &str, field: Field, terms: Vec<Term>, genus: Option<u64>) -> Result<PlaneCurveModel, CurveError> {
        let card = field.cardinality();
        if terms.is_empty() {
            return Err(CurveError::BadParameter("no monomials".into()));
        }
        if let Some(t) = terms.iter().find(|t| t.coeff >= card) {
            return Err(CurveError::BadParameter(format!("coefficient {} outside {field}", t.coeff)));
        }
        let mut infinity = Infinity::Undeclared;
        let mut formula = None;
        if let Ok(ff) = function_field_from_terms(&field, &terms, true) {
            if let Some(a) = ff.as_form() {
                let m = a.f.degree().unwrap_or(0) as u64;
                if m > 0 && m % field.characteristic() as u64 != 0 && gcd(m, a.qp) == 1 {
                    formula = Some((a.qp - 1) * (m - 1) / 2);
                    let generators = if m == 1 { vec![1] } else { vec![a.qp.min(m), a.qp.max(m)] };
                    infinity = Infinity::SinglePlace { m_x: a.qp, m_y: m, generators };
                }
            }
        }
        if let (Some(d), Some(f)) = (genus, formula) {
            if d != f {
                return Err(CurveError::GenusMismatch { declared: d, formula: f });
            }
        }
        PlaneCurveModel::build(
            format!("custom:{name}"),
            CurveClass::Custom { name: name.to_string() },
            field,
            terms,
            genus.or(formula),
            infinity,
        )
    }

    /// Parses `hermitian:L`, `quotient:L:N`, `suzuki:S` or `fermat:L`.
    pub fn from_spec(spec: &str) -> Result<PlaneCurveModel, CurveError> {
        let parts: Vec<&str> = spec.split(':').collect();
        let num = |i: usize| -> Result<u64, CurveError> {
            parts
                .get(i)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| CurveError::BadParameter(format!("cannot parse curve spec '{spec}'")))
        };
        match (parts[0], parts.len()) {
            ("hermitian", 2) => PlaneCurveModel::hermitian(num(1)?),
            ("quotient", 3) => PlaneCurveModel::hermitian_quotient(num(1)?, num(2)?),
            ("suzuki", 2) => PlaneCurveModel::suzuki(num(1)? as u32),
            ("fermat", 2) => PlaneCurveModel::fermat_half(num(1)?),
            _ => Err(CurveError::BadParameter(format!(
                "unknown curve spec '{spec}' (use hermitian:L, quotient:L:N, suzuki:S, fermat:L or a TOML file)"
            ))),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn class(&self) -> &CurveClass {
        &self.class
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `q`, the size of the base field.
    pub fn q(&self) -> u64 {
        self.field.cardinality() as u64
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn genus(&self) -> Option<u64> {
        self.genus
    }

    pub fn infinity(&self) -> &Infinity {
        &self.infinity
    }

    /// `(m_x, m_y)` at the declared place at infinity.
    pub fn pole_orders(&self) -> Option<(u64, u64)> {
        match &self.infinity {
            Infinity::SinglePlace { m_x, m_y, .. } => Some((*m_x, *m_y)),
            _ => None,
        }
    }

    pub fn semigroup_generators(&self) -> Option<&[u64]> {
        match &self.infinity {
            Infinity::SinglePlace { generators, .. } => Some(generators),
            _ => None,
        }
    }

    pub fn function_field(&self) -> Result<&FunctionField, CurveError> {
        self.ff
            .as_ref()
            .ok_or_else(|| CurveError::Unsupported("an equation monic in y".into()))
    }

    /// `y^qp + c y = f(x)` data, when the model has that shape.
    pub fn as_form(&self) -> Option<&crate::ffun::ArtinSchreier> {
        self.ff.as_ref().and_then(|f| f.as_form())
    }

    /// `(s, q0, q)` for Suzuki models.
    pub fn suzuki_params(&self) -> Option<(u32, u64, u64)> {
        match self.class {
            CurveClass::Suzuki { s } => {
                let q0 = 1u64 << s;
                Some((s, q0, 2 * q0 * q0))
            }
            _ => None,
        }
    }

    /// `l` with `q = l^2`, for curves over a square field.
    pub fn sqrt_q(&self) -> Option<u64> {
        let q = self.q();
        let l = (q as f64).sqrt().round() as u64;
        (l * l == q).then_some(l)
    }

    /// `F_(q^m)` with the embedding of the base field.
    pub fn extension(&self, m: u32) -> Result<Embedding, CurveError> {
        if m == 0 {
            return Err(CurveError::BadParameter("extension degree must be positive".into()));
        }
        let n = self.field.degree() * m;
        check_cap(self.field.characteristic(), n)?;
        let big = make_field(self.field.characteristic(), n)?;
        Ok(Embedding::new(&self.field, &big)?)
    }

    /// `F(a, b)` in the extension.
    pub fn eval(&self, emb: &Embedding, a: Elem, b: Elem) -> Elem {
        let k = emb.big();
        self.terms.iter().fold(Elem::ZERO, |acc, t| {
            let v = k.mul(emb.map(Elem(t.coeff)), k.mul(k.pow(a, t.a as u64), k.pow(b, t.b as u64)));
            k.add(acc, v)
        })
    }

    /// `(dF/dx, dF/dy)` at `(a, b)`.
    pub fn gradient(&self, emb: &Embedding, a: Elem, b: Elem) -> (Elem, Elem) {
        let k = emb.big();
        let p = k.characteristic() as i64;
        let mut gx = Elem::ZERO;
        let mut gy = Elem::ZERO;
        for t in &self.terms {
            let c = emb.map(Elem(t.coeff));
            if t.a > 0 {
                let v = k.mul(k.from_int(t.a as i64 % p), k.mul(k.pow(a, t.a as u64 - 1), k.pow(b, t.b as u64)));
                gx = k.add(gx, k.mul(c, v));
            }
            if t.b > 0 {
                let v = k.mul(k.from_int(t.b as i64 % p), k.mul(k.pow(a, t.a as u64), k.pow(b, t.b as u64 - 1)));
                gy = k.add(gy, k.mul(c, v));
            }
        }
        (gx, gy)
    }
}

fn check_cap(p: u32, n: u32) -> Result<(), CurveError> {
    let card = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
    if card > FIELD_CAP as u128 {
        return Err(GaloisError::CapExceeded { p, n, cap: FIELD_CAP }.into());
    }
    Ok(())
}

fn function_field_from_terms(field: &Field, terms: &[Term], single: bool) -> Result<FunctionField, FfunError> {
    let d = terms.iter().map(|t| t.b as usize).max().unwrap_or(0);
    let mut eq = vec![Poly::zero(); d + 1];
    for t in terms {
        let mono = Poly::monomial(Elem(t.coeff), t.a as usize);
        eq[t.b as usize] = eq[t.b as usize].add(&mono, field);
    }
    FunctionField::new(field, eq, single)
}
