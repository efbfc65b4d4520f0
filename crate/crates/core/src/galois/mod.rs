//! Exact arithmetic in GF(p^n) and between a field and its extensions.

mod element;
mod embed;
mod field;
pub(crate) mod modulus;

pub use element::{field_arith, FieldElement, FieldOp};
pub use embed::Embedding;
pub use field::{make_field, Elem, Field, FIELD_CAP};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{n}) exceeds the cardinality cap {cap}")]
    CapExceeded { p: u32, n: u32, cap: u64 },
    #[error("operands live in different fields: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("binary operation needs a second operand")]
    MissingOperand,
    #[error("{q} is not a power of the characteristic {p}")]
    NotPowerOfCharacteristic { q: u64, p: u32 },
    #[error("GF({q}) is not a subfield of {field}")]
    NoSubfield { q: u64, field: String },
    #[error("{small} does not embed into {big}")]
    NoEmbedding { small: String, big: String },
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binom_mod_p(mut n: u64, mut k: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p64, k % p64);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom(nd, kd) % p64;
        n /= p64;
        k /= p64;
    }
    acc as u32
}

fn small_binom(n: u64, k: u64) -> u64 {
    // n < p, fits comfortably for the characteristics in scope
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}
