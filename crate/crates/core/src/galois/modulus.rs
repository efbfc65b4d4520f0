//! Dense polynomials over a prime field, used only to pick field moduli.

/// Polynomial over GF(p), coefficients low degree first, no trailing zeros.
pub(crate) type PrimePoly = Vec<u32>;

pub(crate) fn trim(a: &mut PrimePoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small, Fermat is plenty.
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let m = p as u64;
    let mut r = 1u64;
    let mut b = (a % p) as u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u32
}

/// Remainder of `a` modulo the monic-or-not nonzero `b`.
pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> PrimePoly {
    let mut r: PrimePoly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p) as u64;
    while r.len() > db {
        let dr = r.len() - 1;
        let c = (r[dr] as u64 * lead_inv % p as u64) as u32;
        if c != 0 {
            let shift = dr - db;
            for (i, &bi) in b.iter().enumerate() {
                let t = (c as u64 * bi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        trim(&mut r);
    }
    r
}

/// Coefficients of the monic polynomial of degree `deg` whose canonical
/// integer is `p^deg + k`.
pub(crate) fn monic_from_index(k: u64, deg: u32, p: u32) -> PrimePoly {
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    let mut k = k;
    for _ in 0..deg {
        coeffs.push((k % p as u64) as u32);
        k /= p as u64;
    }
    coeffs.push(1);
    coeffs
}

/// Irreducibility by trial division against every monic polynomial of
/// degree at most `deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d);
        for k in 0..count {
            let g = monic_from_index(k, d, p);
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `n` over GF(p),
/// where candidates are ordered by their canonical integer value.
pub(crate) fn smallest_irreducible(p: u32, n: u32) -> PrimePoly {
    let count = (p as u64).pow(n);
    for k in 0..count {
        let f = monic_from_index(k, n, p);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_has_factor(f: &[u32], p: u32) -> bool {
        // any monic proper divisor of any degree below deg f
        let deg = (f.len() - 1) as u32;
        (1..deg).any(|d| (0..(p as u64).pow(d)).any(|k| rem(f, &monic_from_index(k, d, p), p).is_empty()))
    }

    #[test]
    fn cubics_over_gf2() {
        // all eight monic cubics, irreducible ones are x^3+x+1 and x^3+x^2+1
        let irreducible: Vec<_> = (0..8)
            .map(|k| monic_from_index(k, 3, 2))
            .filter(|f| !brute_has_factor(f, 2))
            .collect();
        assert_eq!(irreducible, vec![vec![1, 1, 0, 1], vec![1, 0, 1, 1]]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
    }

    #[test]
    fn trial_division_matches_full_factor_search() {
        for (p, n) in [(2, 4), (2, 5), (3, 3), (5, 2), (7, 2)] {
            for k in 0..(p as u64).pow(n) {
                let f = monic_from_index(k, n, p);
                assert_eq!(is_irreducible(&f, p), !brute_has_factor(&f, p), "{f:?} mod {p}");
            }
        }
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_factors(4095), vec![3, 5, 7, 13]);
    }
}
