use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

use super::Permutation;

/// A dense row-major matrix over a commutative ring.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if let Some(bad) = rows.iter().find(|x| x.len() != c) {
            return Err(Error::Shape(format!("ragged rows: {} vs {}", bad.len(), c)));
        }
        Ok(RingMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Diagonal matrix with the given entries.
    pub fn diag(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// The matrix `P` with `P e_j = e_{π(j)}`, so `P[π(j)][j] = 1`.
    pub fn permutation(p: &Permutation) -> Self {
        let n = p.len();
        let mut m = Self::zeros(n, n);
        for j in 0..n {
            m.data[p.apply0(j) * n + j] = R::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<R> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        // Representation images are very sparse; index the nonzeros of each
        // row of `other` once and skip zero entries of `self`.
        let nz: Vec<Vec<usize>> =
            (0..other.rows).map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect()).collect();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, row_nz) in nz.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() || row_nz.is_empty() {
                    continue;
                }
                for &j in row_nz {
                    out.data[i * other.cols + j].add_mul(a, other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|e| k.mul_ref(e))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> RingMatrix<S> {
        RingMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    pub fn try_map<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<RingMatrix<S>> {
        Ok(RingMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect::<Result<_>>()? })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Block-diagonal assembly.
    pub fn direct_sum(blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.put_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Overwrites the block with top-left corner `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols).mul_ref(other.get(i % other.rows, j % other.cols))
        })
    }

    /// `P^{-1} · self · P` for an explicitly supplied inverse.
    pub fn base_change(&self, p: &Self, p_inv: &Self) -> Result<Self> {
        if !p_inv.try_mul(p)?.is_identity() {
            return Err(Error::NotInvertible("supplied inverse does not invert the basis".into()));
        }
        p_inv.try_mul(self)?.try_mul(p)
    }

    /// `P^{-1} · self · P` where `P` is the permutation matrix of `perm`.
    /// Entry `(i, j)` of the result is entry `(π(i), π(j))` of `self`.
    pub fn permute_basis(&self, perm: &Permutation) -> Result<Self> {
        if !self.is_square() || perm.len() != self.rows {
            return Err(Error::Shape(format!("{}x{} matrix, permutation of {}", self.rows, self.cols, perm.len())));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.get(perm.apply0(i), perm.apply0(j)).clone()))
    }

    /// Entry `(i, j)` of the result is entry `(τ(i), τ(j))` of `self`.
    pub fn index_relabel(&self, perm: &Permutation) -> Result<Self> {
        self.permute_basis(perm)
    }

    /// Exactly one nonzero entry per row and column, each a unit.
    pub fn is_monomial(&self) -> bool {
        self.monomial_pattern().is_ok()
    }

    // Column j's nonzero row, after checking the monomial shape.
    fn monomial_pattern(&self) -> Result<Vec<usize>> {
        if !self.is_square() {
            return Err(Error::NotMonomial("not square".into()));
        }
        let n = self.rows;
        let mut row_of = vec![usize::MAX; n];
        let mut row_used = vec![false; n];
        for j in 0..n {
            for i in 0..n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if row_of[j] != usize::MAX || row_used[i] {
                    return Err(Error::NotMonomial(format!("extra entry at ({}, {})", i + 1, j + 1)));
                }
                if !e.is_unit() {
                    return Err(Error::NotMonomial(format!("entry ({}, {}) is not a unit", i + 1, j + 1)));
                }
                row_of[j] = i;
                row_used[i] = true;
            }
            if row_of[j] == usize::MAX {
                return Err(Error::NotMonomial(format!("column {} is zero", j + 1)));
            }
        }
        Ok(row_of)
    }

    pub fn monomial_inverse(&self) -> Result<Self> {
        let row_of = self.monomial_pattern()?;
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for (j, &i) in row_of.iter().enumerate() {
            out.data[j * n + i] = self.get(i, j).unit_inverse().expect("checked unit");
        }
        Ok(out)
    }

    /// The permutation `j ↦ row of the nonzero entry in column j`, for a
    /// monomial matrix.
    pub fn monomial_permutation(&self) -> Result<Permutation> {
        Ok(Permutation::from_zero_based(self.monomial_pattern()?))
    }

    /// Gauss-Jordan inversion that only ever divides by units of the ring.
    /// Fails when no unit pivot is available, even if the matrix happens to
    /// be invertible.
    pub fn unit_pivot_inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotInvertible("not square".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a.get(r, col).is_unit())
                .ok_or_else(|| Error::NotInvertible(format!("no unit pivot in column {}", col + 1)))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p_inv = a.get(col, col).unit_inverse().expect("unit pivot");
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                a.sub_row_multiple(r, col, &f);
                inv.sub_row_multiple(r, col, &f);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, k: &R) {
        for j in 0..self.cols {
            let e = &mut self.data[r * self.cols + j];
            *e = k.mul_ref(e);
        }
    }

    // row[r] -= f * row[src]
    fn sub_row_multiple(&mut self, r: usize, src: usize, f: &R) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                let e = &mut self.data[r * self.cols + j];
                *e = e.sub_ref(&f.mul_ref(&s));
            }
        }
    }
}

impl<R: Ring> std::ops::Mul for &RingMatrix<R> {
    type Output = RingMatrix<R>;
    fn mul(self, rhs: Self) -> RingMatrix<R> {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Ring> std::ops::Add for &RingMatrix<R> {
    type Output = RingMatrix<R>;
    fn add(self, rhs: Self) -> RingMatrix<R> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Ring> std::ops::Sub for &RingMatrix<R> {
    type Output = RingMatrix<R>;
    fn sub(self, rhs: Self) -> RingMatrix<R> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// The matrix text format: `rows cols`, then one line per row with
/// `;`-separated entries.
impl<R: fmt::Display> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "{}", row.join("; "))?;
        }
        Ok(())
    }
}

impl<R: fmt::Display> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
