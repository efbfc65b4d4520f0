use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::modulus::{self, PrimePoly};
use super::GaloisError;

/// Largest field cardinality accepted by [`make_field`].
pub const FIELD_CAP: u64 = 1 << 24;

/// Fields up to this size get discrete-log tables.
const TABLE_LIMIT: u32 = 1 << 20;

/// Raw element of a finite field: the integer value of its coefficient
/// vector read low degree first in base p.
///
/// This integer is also the canonical element order used for every
/// tie-break and enumeration in the crate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct LogTables {
    // exp has length 2(card-1) so log sums never need a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    p: u32,
    n: u32,
    card: u32,
    modulus: PrimePoly,
    tables: Option<LogTables>,
}

/// Descriptor of GF(p^n) in polynomial-basis representation.
///
/// Cheap to clone; all clones share one immutable descriptor.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.n)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.n == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.n)
        }
    }
}

fn registry() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static REGISTRY: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds GF(p^n) with the smallest monic irreducible modulus of degree n.
///
/// Repeated calls with the same `(p, n)` return the same shared descriptor.
pub fn make_field(p: u32, n: u32) -> Result<Field, GaloisError> {
    if !modulus::is_prime(p as u64) {
        return Err(GaloisError::NotPrime(p as u64));
    }
    if n == 0 {
        return Err(GaloisError::ZeroDegree);
    }
    let card = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
    if card > FIELD_CAP {
        return Err(GaloisError::CapExceeded { p, n, cap: FIELD_CAP });
    }
    if let Some(f) = registry().lock().unwrap().get(&(p, n)) {
        return Ok(f.clone());
    }
    let field = Field::build(p, n, card as u32);
    let mut reg = registry().lock().unwrap();
    Ok(reg.entry((p, n)).or_insert(field).clone())
}

impl Field {
    fn build(p: u32, n: u32, card: u32) -> Field {
        let modulus = modulus::smallest_irreducible(p, n);
        let mut inner = FieldInner { p, n, card, modulus, tables: None };
        if card <= TABLE_LIMIT && card > 2 {
            let probe = Field(Arc::new(FieldInner { tables: None, modulus: inner.modulus.clone(), ..inner }));
            inner.tables = Some(probe.log_tables());
        }
        Field(Arc::new(inner))
    }

    fn log_tables(&self) -> LogTables {
        let g = self.find_primitive();
        let order = self.0.card - 1;
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![u32::MAX; self.0.card as usize];
        let mut cur = Elem::ONE;
        for k in 0..order {
            exp.push(cur.0);
            log[cur.0 as usize] = k;
            cur = self.mul_reference(cur, g);
        }
        debug_assert_eq!(cur, Elem::ONE);
        exp.extend_from_within(..);
        LogTables { exp, log }
    }

    /// Smallest element, in canonical order, generating the multiplicative group.
    pub fn find_primitive(&self) -> Elem {
        let order = (self.0.card - 1) as u64;
        let factors = modulus::prime_factors(order);
        for k in 1..self.0.card {
            let g = Elem(k);
            if factors.iter().all(|&r| self.pow_reference(g, order / r) != Elem::ONE) {
                return g;
            }
        }
        Elem::ONE
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    /// Degree n over the prime field.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.n
    }

    #[inline]
    pub fn cardinality(&self) -> u32 {
        self.0.card
    }

    /// Modulus coefficients, low degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.card).map(Elem)
    }

    /// Element with canonical integer `v`.
    pub fn elem(&self, v: u32) -> Elem {
        assert!(v < self.0.card, "{v} out of range for {self}");
        Elem(v)
    }

    /// Image of the integer `k` under the prime-field embedding.
    pub fn from_int(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.0.p as i64) as u32)
    }

    /// The class of the polynomial variable, `u = x mod modulus`.
    pub fn generator(&self) -> Elem {
        if self.0.n == 1 {
            // modulus is x itself, so u reduces to 0
            Elem::ZERO
        } else {
            Elem(self.0.p)
        }
    }

    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.n)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        let p = self.0.p;
        Elem(digits.iter().rev().fold(0u32, |acc, &d| acc * p + d % p))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.0.n == 1 {
            return Elem((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.0.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.0.tables {
            Some(t) => {
                let s = t.log[a.0 as usize] + t.log[b.0 as usize];
                Elem(t.exp[s as usize])
            }
            None => self.mul_reference(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        match &self.0.tables {
            Some(t) => {
                let order = self.0.card - 1;
                let l = t.log[a.0 as usize];
                Some(Elem(t.exp[((order - l) % order) as usize]))
            }
            None => Some(self.pow_reference(a, self.0.card as u64 - 2)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^e` with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.0.tables {
            Some(t) => {
                let order = (self.0.card - 1) as u64;
                let l = t.log[a.0 as usize] as u64;
                let k = ((l as u128 * (e % order) as u128) % order as u128) as usize;
                Elem(t.exp[k])
            }
            None => self.pow_reference(a, e),
        }
    }

    /// Square-and-multiply on top of [`Field::mul_reference`].
    pub fn pow_reference(&self, a: Elem, mut e: u64) -> Elem {
        let mut result = Elem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_reference(result, base);
            }
            base = self.mul_reference(base, base);
            e >>= 1;
        }
        result
    }

    /// Schoolbook product of coefficient vectors reduced by the modulus.
    /// Independent of the log tables.
    pub fn mul_reference(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        let n = self.0.n as usize;
        if p == 2 {
            let mut acc: u64 = 0;
            let (x, y) = (a.0 as u64, b.0 as u64);
            for i in 0..n {
                if (y >> i) & 1 == 1 {
                    acc ^= x << i;
                }
            }
            let m: u64 = self.0.modulus.iter().enumerate().map(|(i, &c)| (c as u64) << i).sum();
            for i in (n..2 * n).rev() {
                if (acc >> i) & 1 == 1 {
                    acc ^= m << (i - n);
                }
            }
            return Elem(acc as u32);
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] += x as u64 * y as u64;
            }
        }
        let mut prod: Vec<u32> = prod.iter().map(|&c| (c % p as u64) as u32).collect();
        let r = modulus::rem(&prod, &self.0.modulus, p);
        prod.clear();
        let mut digits = r;
        digits.resize(n, 0);
        self.from_digits(&digits)
    }

    /// `a^q`; fixes exactly the subfield GF(q).
    pub fn frobenius(&self, a: Elem, q: u64) -> Result<Elem, GaloisError> {
        self.check_power_of_p(q)?;
        Ok(self.pow(a, q))
    }

    /// `a + a^q + ... + a^{q^{m-1}}` where `q^m` is the cardinality.
    ///
    /// The result lies in the subfield GF(q) of this field.
    pub fn relative_trace(&self, a: Elem, q: u64) -> Result<Elem, GaloisError> {
        let k = self.check_power_of_p(q)?;
        if k == 0 || self.0.n % k != 0 {
            return Err(GaloisError::NoSubfield { q, field: self.to_string() });
        }
        let m = self.0.n / k;
        let mut acc = Elem::ZERO;
        let mut cur = a;
        for _ in 0..m {
            acc = self.add(acc, cur);
            cur = self.pow(cur, q);
        }
        Ok(acc)
    }

    /// Returns k with q = p^k.
    pub(crate) fn check_power_of_p(&self, q: u64) -> Result<u32, GaloisError> {
        let p = self.0.p as u64;
        let mut k = 0;
        let mut v = q;
        while v > 1 && v % p == 0 {
            v /= p;
            k += 1;
        }
        if v != 1 || q == 0 {
            return Err(GaloisError::NotPowerOfCharacteristic { q, p: self.0.p });
        }
        Ok(k)
    }

    /// Whether `a` lies in the subfield of order `p^k`.
    pub fn in_subfield(&self, a: Elem, k: u32) -> bool {
        self.pow(a, (self.0.p as u64).pow(k)) == a
    }
}
