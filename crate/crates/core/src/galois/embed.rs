use std::collections::HashMap;

use super::{Elem, Field, GaloisError};

/// Explicit embedding GF(p^k) -> GF(p^n) for k | n.
///
/// The subfield generator is sent to the smallest root (canonical order)
/// of its modulus inside the big field.
#[derive(Clone, Debug)]
pub struct Embedding {
    small: Field,
    big: Field,
    image: Vec<Elem>,
    preimage: HashMap<Elem, Elem>,
}

impl Embedding {
    pub fn new(small: &Field, big: &Field) -> Result<Embedding, GaloisError> {
        if small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0 {
            return Err(GaloisError::NoEmbedding { small: small.to_string(), big: big.to_string() });
        }
        let image: Vec<Elem> = if small.degree() == 1 {
            small.elements().map(|a| big.from_int(a.0 as i64)).collect()
        } else {
            let modulus: Vec<Elem> = small.modulus().iter().map(|&c| big.from_int(c as i64)).collect();
            let theta = big
                .elements()
                .find(|&t| {
                    let v = modulus.iter().rev().fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, t), c));
                    v.is_zero()
                })
                .ok_or_else(|| GaloisError::NoEmbedding {
                    small: small.to_string(),
                    big: big.to_string(),
                })?;
            let powers: Vec<Elem> = (0..small.degree()).map(|i| big.pow(theta, i as u64)).collect();
            small
                .elements()
                .map(|a| {
                    small.digits(a).iter().zip(&powers).fold(Elem::ZERO, |acc, (&d, &t)| {
                        big.add(acc, big.mul(big.from_int(d as i64), t))
                    })
                })
                .collect()
        };
        let preimage = image.iter().enumerate().map(|(i, &b)| (b, Elem(i as u32))).collect();
        Ok(Embedding { small: small.clone(), big: big.clone(), image, preimage })
    }

    pub fn identity(field: &Field) -> Embedding {
        Embedding::new(field, field).expect("a field embeds in itself")
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    #[inline]
    pub fn map(&self, a: Elem) -> Elem {
        self.image[a.0 as usize]
    }

    /// Inverse image, if `b` lies in the embedded subfield.
    pub fn preimage(&self, b: Elem) -> Option<Elem> {
        self.preimage.get(&b).copied()
    }
}
