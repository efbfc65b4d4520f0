//! Fraction-free elimination over `A = F_q[x, y]/(F)`, an integral domain,
//! so a row is independent of earlier rows over the function field exactly
//! when cross-multiplied elimination leaves it nonzero.

use crate::ffun::element::{a_content, a_is_zero, a_mul, a_sub};
use crate::ffun::{FunctionElement, FunctionField};
use crate::poly::Poly;

pub(crate) type ARow = Vec<Vec<Poly>>;

/// Least common multiple of the denominators in `row`.
pub(crate) fn row_scale(ff: &FunctionField, row: &[FunctionElement]) -> Poly {
    let f = ff.field();
    let mut l = Poly::one();
    for e in row {
        let g = l.gcd(e.denominator(), f);
        l = l.mul(&e.denominator().div_exact(&g, f), f);
    }
    l
}

/// Clears denominators of a row of function-field elements.
pub(crate) fn integral_row(ff: &FunctionField, row: &[FunctionElement]) -> ARow {
    let f = ff.field();
    let l = row_scale(ff, row);
    row.iter()
        .map(|e| {
            let s = l.div_exact(e.denominator(), f);
            e.numerator().iter().map(|p| p.mul(&s, f)).collect()
        })
        .collect()
}

fn strip_content(ff: &FunctionField, row: &mut ARow) {
    let f = ff.field();
    let all: Vec<Poly> = row.iter().flatten().cloned().collect();
    let g = a_content(f, &all);
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        for p in e.iter_mut() {
            *p = p.div_exact(&g, f);
        }
    }
}

/// Rows in echelon form with their pivot columns.
#[derive(Clone)]
pub(crate) struct Echelon {
    ff: FunctionField,
    rows: Vec<(usize, ARow)>,
}

impl Echelon {
    pub fn new(ff: &FunctionField) -> Echelon {
        Echelon { ff: ff.clone(), rows: Vec::new() }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// What is left of `row` after elimination against the stored rows.
    fn reduce(&self, mut row: ARow) -> ARow {
        for (c, u) in &self.rows {
            if a_is_zero(&row[*c]) {
                continue;
            }
            let k = row[*c].clone();
            let piv = &u[*c];
            row = row
                .iter()
                .zip(u)
                .map(|(v, w)| a_sub(&self.ff, &a_mul(&self.ff, piv, v), &a_mul(&self.ff, &k, w)))
                .collect();
            strip_content(&self.ff, &mut row);
        }
        row
    }

    /// Adds `row` if it raises the rank.
    pub fn insert(&mut self, row: ARow) -> bool {
        let mut r = self.reduce(row);
        match r.iter().position(|e| !a_is_zero(e)) {
            Some(c) => {
                strip_content(&self.ff, &mut r);
                self.rows.push((c, r));
                true
            }
            None => false,
        }
    }

    pub fn is_independent(&self, row: ARow) -> bool {
        let r = self.reduce(row);
        r.iter().any(|e| !a_is_zero(e))
    }
}

/// Determinant of a square matrix over `A` by expansion over column subsets.
pub(crate) fn a_det(ff: &FunctionField, m: &[ARow]) -> Vec<Poly> {
    let n = m.len();
    let d = ff.degree();
    let one = {
        let mut v = vec![Poly::zero(); d];
        v[0] = Poly::one();
        v
    };
    let f = ff.field();
    let mut dp: Vec<Option<Vec<Poly>>> = vec![None; 1 << n];
    dp[0] = Some(one);
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize - 1;
        let mut acc = vec![Poly::zero(); d];
        for c in 0..n {
            if mask & (1 << c) == 0 || a_is_zero(&m[k][c]) {
                continue;
            }
            let rest = dp[mask ^ (1 << c)].as_ref().unwrap();
            if a_is_zero(rest) {
                continue;
            }
            let term = a_mul(ff, &m[k][c], rest);
            let above = (mask >> (c + 1)).count_ones();
            acc = if above % 2 == 0 {
                acc.iter().zip(&term).map(|(a, b)| a.add(b, f)).collect()
            } else {
                a_sub(ff, &acc, &term)
            };
        }
        dp[mask] = Some(acc);
    }
    dp.pop().unwrap().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{make_field, Elem};

    fn hermitian2() -> FunctionField {
        FunctionField::artin_schreier(&make_field(2, 2).unwrap(), 2, Elem::ONE, &Poly::monomial(Elem::ONE, 3)).unwrap()
    }

    #[test]
    fn rank_detects_dependence() {
        let ff = hermitian2();
        let x = ff.x();
        let y = ff.y();
        let mut e = Echelon::new(&ff);
        assert!(e.insert(integral_row(&ff, &[ff.one(), x.clone(), y.clone()])));
        assert!(!e.insert(integral_row(&ff, &[x.clone(), x.pow(2), x.mul(&y)])));
        assert!(e.insert(integral_row(&ff, &[x.clone(), y.clone(), x.clone()])));
        // y * row0 is dependent on row0 over the function field
        assert!(!e.insert(integral_row(&ff, &[y.clone(), x.mul(&y), y.pow(2)])));
        assert!(e.insert(integral_row(&ff, &[ff.zero(), ff.one(), y.pow(5)])));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn det_of_triangular_and_swapped() {
        let ff = hermitian2();
        let x = ff.x();
        let y = ff.y();
        let m = vec![
            integral_row(&ff, &[x.clone(), y.clone(), ff.one()]),
            integral_row(&ff, &[ff.zero(), y.clone(), x.clone()]),
            integral_row(&ff, &[ff.zero(), ff.zero(), x.clone()]),
        ];
        let det = FunctionElement::from_parts(&ff, a_det(&ff, &m), Poly::one()).unwrap();
        assert_eq!(det, x.pow(2).mul(&y));
        let mut swapped = m.clone();
        swapped.swap(0, 1);
        let det2 = FunctionElement::from_parts(&ff, a_det(&ff, &swapped), Poly::one()).unwrap();
        assert_eq!(det2, det.neg());
    }
}
