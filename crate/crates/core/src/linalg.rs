//! Exact linear algebra used across the crate: row reduction over a finite
//! field, fraction-free determinants over `F_q[x]`, and an `F_p`-linear
//! solver for additive maps on an extension field.

use crate::galois::{Elem, Field};
use crate::poly::Poly;

/// Row echelon form in place; returns pivot columns in row order.
///
/// Pivot for each row is the leftmost nonzero column, so the pivot set of a
/// matrix of truncated series is the set of attained vanishing orders.
pub fn row_reduce(rows: &mut Vec<Vec<Elem>>, f: &Field) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = f.inv(rows[rank][col]).unwrap();
        for c in rows[rank].iter_mut() {
            *c = f.mul(*c, inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let k = row[col];
            for (c, &pv) in row.iter_mut().zip(&pivot_row) {
                *c = f.sub(*c, f.mul(k, pv));
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Elem>], f: &Field) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m, f).len()
}

/// Determinant of a square matrix of integers mod a prime `p`.
pub fn det_mod_p(m: &[Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let mut det = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            a.swap(pr, c);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        let inv = pow_mod(a[c][c], p - 2, p);
        for i in c + 1..n {
            let k = a[i][c] * inv % p;
            if k == 0 {
                continue;
            }
            for j in c..n {
                a[i][j] = (a[i][j] + p * p - k * a[c][j] % p) % p;
            }
        }
    }
    det
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Determinant over `F_q[x]` by Bareiss fraction-free elimination.
pub fn bareiss_det(m: &[Vec<Poly>], f: &Field) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut a = m.to_vec();
    let mut prev = Poly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(pr) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Poly::zero();
            };
            a.swap(k, pr);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k], f).sub(&a[i][k].mul(&a[k][j], f), f);
                a[i][j] = v.div_exact(&prev, f);
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg(f)
    } else {
        d
    }
}

/// Solver for `L(u) = v` where `L` is additive (hence `F_p`-linear) on a
/// field `K`, using the digit vectors of elements as coordinates.
#[derive(Clone, Debug)]
pub struct AdditiveSolver {
    field: Field,
    dim: usize,
    p: u32,
    /// Reduced rows `[L(e_i) | e_i]` turned into echelon form on the left.
    echelon: Vec<(Vec<u32>, Vec<u32>)>,
    pivots: Vec<usize>,
    kernel: Vec<Elem>,
}

impl AdditiveSolver {
    pub fn new(field: &Field, map: impl Fn(Elem) -> Elem) -> AdditiveSolver {
        let p = field.characteristic();
        let dim = field.degree() as usize;
        let mut rows: Vec<(Vec<u32>, Vec<u32>)> = (0..dim)
            .map(|i| {
                let e = field.elem((p as u32).pow(i as u32));
                let mut id = vec![0u32; dim];
                id[i] = 1;
                (field.digits(map(e)), id)
            })
            .collect();
        // Gaussian elimination on the image half, tracking combinations.
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..dim {
            let Some(pr) = (r..dim).find(|&i| rows[i].0[col] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = inv_mod(rows[r].0[col], p);
            scale_row(&mut rows[r], inv, p);
            let piv = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.0[col] != 0 {
                    let k = row.0[col];
                    axpy(row, &piv, p - k, p);
                }
            }
            pivots.push(col);
            r += 1;
        }
        let kernel = rows[r..].iter().map(|(_, comb)| field.from_digits(comb)).collect();
        rows.truncate(r);
        AdditiveSolver { field: field.clone(), dim, p, echelon: rows, pivots, kernel }
    }

    /// `F_p`-basis of the kernel.
    pub fn kernel(&self) -> &[Elem] {
        &self.kernel
    }

    /// Some `u` with `L(u) = v`, if one exists.
    pub fn solve(&self, v: Elem) -> Option<Elem> {
        let p = self.p;
        let mut target = self.field.digits(v);
        let mut u = vec![0u32; self.dim];
        for ((img, comb), &col) in self.echelon.iter().zip(&self.pivots) {
            let k = target[col];
            if k == 0 {
                continue;
            }
            for (t, &a) in target.iter_mut().zip(img) {
                *t = (*t + (p - k) * a % p) % p;
            }
            for (x, &a) in u.iter_mut().zip(comb) {
                *x = (*x + k * a) % p;
            }
        }
        target.iter().all(|&t| t == 0).then(|| self.field.from_digits(&u))
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

fn scale_row(row: &mut (Vec<u32>, Vec<u32>), k: u32, p: u32) {
    for x in row.0.iter_mut().chain(row.1.iter_mut()) {
        *x = *x * k % p;
    }
}

fn axpy(row: &mut (Vec<u32>, Vec<u32>), piv: &(Vec<u32>, Vec<u32>), k: u32, p: u32) {
    for (x, &a) in row.0.iter_mut().zip(&piv.0) {
        *x = (*x + k * a) % p;
    }
    for (x, &a) in row.1.iter_mut().zip(&piv.1) {
        *x = (*x + k * a) % p;
    }
}
