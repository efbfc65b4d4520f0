use std::fmt;

use super::{Elem, Field, GaloisError};

/// An element bundled with the field it belongs to.
///
/// Hot loops work on raw [`Elem`] values through [`Field`] methods; this
/// wrapper is the checked surface that refuses to mix fields.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

/// Operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow(u64),
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.value.0, self.field)
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: Elem) -> FieldElement {
        assert!(value.0 < field.cardinality());
        FieldElement { field: field.clone(), value }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn coefficients(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), GaloisError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GaloisError::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    fn wrap(&self, value: Elem) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, GaloisError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, GaloisError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, GaloisError> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<FieldElement, GaloisError> {
        self.field.inv(self.value).map(|v| self.wrap(v)).ok_or(GaloisError::ZeroInverse)
    }

    pub fn pow(&self, k: u64) -> FieldElement {
        self.wrap(self.field.pow(self.value, k))
    }

    pub fn frobenius(&self, q: u64) -> Result<FieldElement, GaloisError> {
        Ok(self.wrap(self.field.frobenius(self.value, q)?))
    }

    pub fn relative_trace(&self, q: u64) -> Result<FieldElement, GaloisError> {
        Ok(self.wrap(self.field.relative_trace(self.value, q)?))
    }
}

/// Applies `op` to `a` (and `b` for binary operations).
pub fn field_arith(
    a: &FieldElement,
    b: Option<&FieldElement>,
    op: FieldOp,
) -> Result<FieldElement, GaloisError> {
    let rhs = || b.ok_or(GaloisError::MissingOperand);
    match op {
        FieldOp::Add => a.add(rhs()?),
        FieldOp::Sub => a.sub(rhs()?),
        FieldOp::Mul => a.mul(rhs()?),
        FieldOp::Inv => a.inv(),
        FieldOp::Pow(k) => Ok(a.pow(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;

    #[test]
    fn checked_ops() {
        let f4 = make_field(2, 2).unwrap();
        let f8 = make_field(2, 3).unwrap();
        let u = FieldElement::new(&f4, f4.generator());
        let uu = field_arith(&u, Some(&u), FieldOp::Mul).unwrap();
        assert_eq!(uu.value(), Elem(3));
        assert_eq!(uu.coefficients(), vec![1, 1]);
        let v = FieldElement::new(&f8, Elem(2));
        assert!(matches!(u.mul(&v), Err(GaloisError::FieldMismatch { .. })));
        let zero = FieldElement::new(&f8, Elem::ZERO);
        assert!(matches!(zero.inv(), Err(GaloisError::ZeroInverse)));
        assert_eq!(field_arith(&v, None, FieldOp::Pow(3)).unwrap().value(), Elem(3));
        assert!(field_arith(&v, None, FieldOp::Add).is_err());
        for a in f8.elements().skip(1) {
            let e = FieldElement::new(&f8, a);
            assert_eq!(e.mul(&e.inv().unwrap()).unwrap().value(), Elem::ONE);
        }
    }
}
