//! Dense linear algebra over prime fields GF(p).
//!
//! Matrices act on row vectors from the right, matching the right-module
//! convention used by the representation code: a row vector `v` at a vertex
//! is sent to `v * M`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest prime for which a full inverse table is precomputed.
const INVERSE_TABLE_LIMIT: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
}

/// The prime field GF(p).
#[derive(Clone)]
pub struct Field {
    prime: u32,
    inverses: Option<Arc<[u32]>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.prime)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn new(prime: u64) -> Result<Self, LinalgError> {
        if prime >= 1 << 31 || !is_prime(prime) {
            return Err(LinalgError::NotPrime(prime));
        }
        let p = prime as u32;
        let inverses = (p <= INVERSE_TABLE_LIMIT).then(|| {
            let mut table = vec![0u32; p as usize];
            if p > 1 {
                table[1] = 1;
            }
            // inv(i) = -(p / i) * inv(p mod i)
            for i in 2..p as u64 {
                let q = prime / i;
                let r = (prime % i) as usize;
                table[i as usize] = ((prime - q) * table[r] as u64 % prime) as u32;
            }
            Arc::from(table)
        });
        Ok(Field { prime: p, inverses })
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.prime
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.prime as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.prime as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.prime - (b - a)
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.prime as u64) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.prime - a
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.prime);
        if let Some(table) = &self.inverses {
            return table[a as usize];
        }
        // extended Euclid
        let (mut old_r, mut r) = (a as i64, self.prime as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        self.reduce(old_s)
    }
}

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{:?}>{}x{}", self.field, self.rows, self.cols)?;
        f.debug_list().entries(self.row_vecs()).finish()
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing entries mod p.
    /// Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(field: &Field, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_rows_with_cols(field, cols, rows)
    }

    pub fn from_rows_with_cols<R: AsRef<[i64]>>(field: &Field, cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix from residues already in `[0, p)`.
    pub fn from_residues(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.prime));
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.prime);
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let p = f.prime as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (c, v) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = *v as u32;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Matrix { data, ..self.clone() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.mul(a, s)).collect();
        Matrix { data, ..self.clone() }
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = self.field.prime as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in acc.iter_mut().zip(self.row(k)) {
                *slot = (*slot + a as u64 * b as u64) % p;
            }
        }
        acc.into_iter().map(|x| x as u32).collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * m.cols + c] = self.get(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.data[(self.rows + r) * m.cols + self.cols + c] = other.get(r, c);
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form with pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry scanning columns left to
    /// right, so the result is the unique RREF of the row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let p = f.prime as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != lead {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, lead * cols + k);
                }
            }
            let inv = f.inv(self.data[lead * cols + c]) as u64;
            for k in c..cols {
                let x = &mut self.data[lead * cols + k];
                *x = (*x as u64 * inv % p) as u32;
            }
            let (before, rest) = self.data.split_at_mut(lead * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = other[c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor as u64;
                for k in c..cols {
                    other[k] = ((other[k] as u64 + neg * pivot_row[k] as u64) % p) as u32;
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of the right null space `{ v : self * v^T = 0 }`.
    pub fn kernel_basis(&self) -> Matrix {
        self.kernel_basis_with_coords().0
    }

    /// Right null space basis together with its coordinate columns: the
    /// basis restricted to those columns is the identity, so any vector `w`
    /// in the span equals `sum_i w[coords[i]] * row_i`.
    pub fn kernel_basis_with_coords(&self) -> (Matrix, Vec<usize>) {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            k.data[i * self.cols + fc] = 1;
            for (pr, &pc) in pivots.iter().enumerate() {
                k.data[i * self.cols + pc] = f.neg(r.get(pr, fc));
            }
        }
        (k, free)
    }

    /// Basis (as rows) of the left null space `{ v : v * self = 0 }`.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis()
    }

    /// A solution `X` of `self * X = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve_right(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "dimension mismatch in solve_right");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        let n = self.cols;
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(&self.field, n, b.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = r.get(pr, n + j);
            }
        }
        Some(x)
    }

    /// A solution `X` of `X * self = b`.
    pub fn solve_left(&self, b: &Matrix) -> Option<Matrix> {
        self.transpose()
            .solve_right(&b.transpose())
            .map(|x| x.transpose())
    }

    /// Nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// Square and of full rank.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn rejects_composites() {
        assert!(Field::new(1).is_err());
        assert!(Field::new(91).is_err());
        assert!(Field::new(1 << 31).is_err());
        assert!(Field::new(2_147_483_647).is_ok());
        assert!(Field::new(2_147_483_649).is_err());
    }

    #[test]
    fn inverses_agree_between_table_and_euclid() {
        let small = gf(65_521);
        for a in [1u32, 2, 3, 1000, 65_520] {
            assert_eq!(small.mul(a, small.inv(a)), 1);
        }
        let big = gf(2_147_483_647);
        for a in [1u32, 2, 12345, 2_147_483_628] {
            assert_eq!(big.mul(a, big.inv(a)), 1);
        }
    }

    #[test]
    fn rref_identity() {
        let f = gf(5);
        let id = Matrix::identity(&f, 2);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let f = gf(5);
        let z = Matrix::zeros(&f, 3, 2);
        let (r, piv) = z.rref();
        assert_eq!(r, z);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_rank_one_mod5() {
        let f = gf(5);
        let m = Matrix::from_rows(&f, &[[2, 4], [1, 2]]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_rows(&f, &[[1, 2], [0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(7);
        assert_eq!(Matrix::identity(&f, 4).kernel_basis().rows(), 0);
        let k = Matrix::zeros(&f, 2, 3).kernel_basis();
        assert_eq!(k.rows(), 3);
        assert_eq!(k.rank(), 3);

        let f2 = gf(2);
        let k = Matrix::from_rows(&f2, &[[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_rows(&f2, &[[1, 1]]));
    }

    #[test]
    fn solve_examples() {
        let f = gf(11);
        let b = Matrix::from_rows(&f, &[[3, 4], [5, 6]]);
        assert_eq!(Matrix::identity(&f, 2).solve_right(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(&f, 2, 2).solve_right(&b), None);

        let f3 = gf(3);
        let m = Matrix::from_rows(&f3, &[[1, 1], [0, 1]]);
        let b = Matrix::from_rows(&f3, &[[2], [1]]);
        assert_eq!(m.solve_right(&b), Some(Matrix::from_rows(&f3, &[[1], [1]])));
    }

    #[test]
    fn solve_left_matches_product() {
        let f = gf(13);
        let m = Matrix::from_rows(&f, &[[1, 2, 0], [0, 1, 4]]);
        let x = Matrix::from_rows(&f, &[[3, 5]]);
        let b = x.mul(&m);
        let y = m.solve_left(&b).unwrap();
        assert_eq!(y.mul(&m), b);
    }

    #[test]
    fn stacking_and_sums() {
        let f = gf(5);
        let a = Matrix::from_rows(&f, &[[1, 2]]);
        let b = Matrix::from_rows(&f, &[[3]]);
        let d = a.direct_sum(&b);
        assert_eq!(d, Matrix::from_rows(&f, &[[1, 2, 0], [0, 0, 3]]));
        assert_eq!(a.vstack(&a).rows(), 2);
        assert_eq!(a.hstack(&Matrix::from_rows(&f, &[[4]])).row(0), &[1, 2, 4]);
        assert_eq!(a.apply_row(&[2]), vec![2, 4]);
    }
}
