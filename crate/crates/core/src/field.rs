//! Exact arithmetic over a prime field `F_p` and dense linear algebra on top of it.
//!
//! Everything downstream (Hom spaces, Ext groups, sub-bimodules) is a subspace of
//! some `F_p^n`, and every subspace is stored as a matrix in reduced row-echelon
//! form with its zero rows dropped. Two subspaces are equal iff those matrices are
//! equal, so the RREF doubles as a dedupe key.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The prime field `F_p`. Cheap to copy; elements are plain `u32` residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::Validation(format!("{p} is not a prime")));
        }
        if p > 1 << 15 {
            return Err(Error::Validation(format!(
                "prime {p} is too large; only small primes are supported"
            )));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.reduce(t0))
    }

    pub fn elem(self, x: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(x),
            field: self,
        }
    }

    /// All elements `0..p`.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A single element of `F_p` that remembers its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        self.field
            .inv(self.value)
            .map(|value| Self { value, ..self })
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        Self {
            value: self.field.add(self.value, rhs.value),
            ..self
        }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        Self {
            value: self.field.sub(self.value, rhs.value),
            ..self
        }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        Self {
            value: self.field.mul(self.value, rhs.value),
            ..self
        }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: self.field.neg(self.value),
            ..self
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw residues. Panics if the length is wrong.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        let data = data.into_iter().map(|x| x % field.p).collect();
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&x| field.reduce(x)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Stacks equal-length vectors as rows.
    pub fn from_row_vectors(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row vector has the wrong length");
            data.extend_from_slice(row);
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
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
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o = (*o + a * b) % f.p;
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape mismatch (internal use where shapes are invariants).
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| (acc + a * b) % f.p)
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        let f = self.field;
        Self {
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
            ..*self
        }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        Self {
            data: self.data.iter().map(|&a| f.mul(a, s % f.p)).collect(),
            ..*self
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.field.p - 1)
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let mut out = Self::zeros(self.field, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            out.data[r * out.cols..r * out.cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * out.cols + self.cols..(r + 1) * out.cols].copy_from_slice(rhs.row(r));
        }
        out
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Self {
            rows: self.rows + rhs.rows,
            data,
            ..*self
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Self::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, rhs);
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    /// Sub-block `rows r0..r0+nr`, `cols c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        let mut out = Self::zeros(self.field, nr, nc);
        for r in 0..nr {
            for c in 0..nc {
                out.data[r * nc + c] = self.get(r0 + r, c0 + c);
            }
        }
        out
    }

    /// Keeps the given columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Self::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// Reduced row-echelon form with zero rows removed, and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = f.inv(m.get(lead, c)).expect("nonzero pivot");
            m.scale_row(lead, inv);
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.get(r, c);
                    if factor != 0 {
                        m.sub_row_multiple(r, lead, factor);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        m.data.truncate(lead * m.cols);
        m.rows = lead;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{x : self * x^T = 0}`.
    ///
    /// Row `k` is the standard kernel vector of the `k`-th free column: it has a one
    /// there and zeros on every other free column, so the coordinates of a kernel
    /// element in this basis are simply its entries on the free columns.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free = free_columns(self.cols, &pivots);
        let f = self.field;
        let mut k = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            k.data[i * self.cols + fc] = 1;
            for (pr, &pc) in pivots.iter().enumerate() {
                k.data[i * self.cols + pc] = f.neg(r.get(pr, fc));
            }
        }
        k
    }

    /// Solves `self * x = b`: some solution if the system is consistent, else `None`.
    /// Free variables of the RREF are set to zero.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let col = Matrix::from_vec(self.field, self.rows, 1, b.to_vec());
        let aug = self.hstack(&col);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(pr, self.cols);
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let f = self.field;
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = f.mul(*x, s);
        }
    }

    /// row[r] -= factor * row[src]
    fn sub_row_multiple(&mut self, r: usize, src: usize, factor: u32) {
        let f = self.field;
        for c in 0..self.cols {
            let s = self.data[src * self.cols + c];
            if s != 0 {
                let v = self.data[r * self.cols + c];
                self.data[r * self.cols + c] = f.sub(v, f.mul(factor, s));
            }
        }
    }
}

pub(crate) fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

/// A subspace of `F_p^n` held in canonical form (RREF rows, zero rows dropped).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {}) {:?}",
            self.dim(),
            self.basis.row_vectors()
        )
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Self { basis, pivots }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        Self::row_space(&Matrix::from_row_vectors(field, ambient, vectors))
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let factor = out[pc];
            if factor != 0 {
                for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                    *o = f.sub(*o, f.mul(factor, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::row_space(&self.basis.vstack(&other.basis))
    }

    pub fn with_vector(&self, v: &[u32]) -> Subspace {
        let row = Matrix::from_vec(self.field(), 1, v.len(), v.to_vec());
        Self::row_space(&self.basis.vstack(&row))
    }

    /// Intersection, through the kernel of `[U; -W]^T`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim(), other.ambient_dim());
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(f, self.ambient_dim());
        }
        let k = self.dim();
        let stacked = self.basis.vstack(&other.basis.neg());
        let ker = stacked.transpose().kernel_basis();
        // each kernel row (x, y) gives x·U = y·W in the intersection
        let coeffs = ker.block(0, 0, ker.rows(), k);
        Self::row_space(&coeffs.mul(&self.basis))
    }

    /// Image of the subspace under `x ↦ m·x` (vectors as columns).
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim());
        Self::row_space(&self.basis.mul(&m.transpose()))
    }

    /// The vectors `x` of this subspace with `m·x = 0`.
    pub fn kernel_of(&self, m: &Matrix) -> Subspace {
        if self.is_zero() {
            return Subspace::zero(self.field(), self.ambient_dim());
        }
        let images = self.basis.mul(&m.transpose());
        let ker = images.transpose().kernel_basis();
        Self::row_space(&ker.mul(&self.basis))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Non-pivot columns: the coordinates of the canonical complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        free_columns(self.ambient_dim(), &self.pivots)
    }

    pub fn vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vectors()
    }
}

/// Every vector of `F_p^n` in lexicographic order (first coordinate most significant).
pub fn all_vectors(field: PrimeField, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let p = field.modulus();
    let total = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    (0..total).map(move |mut idx| {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = (idx % p as u128) as u32;
            idx /= p as u128;
        }
        v
    })
}

/// Scales `v` so its first nonzero entry is one.
pub fn normalize_leading(field: PrimeField, v: &[u32]) -> Vec<u32> {
    match v.iter().find(|&&x| x != 0) {
        None => v.to_vec(),
        Some(&lead) => {
            let inv = field.inv(lead).expect("nonzero");
            v.iter().map(|&x| field.mul(x, inv)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mat(p: u32, cols: usize, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_rows(f(p), cols, &rows).unwrap()
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        for p in [2, 3, 5, 7, 11] {
            assert!(PrimeField::new(p).is_ok());
        }
    }

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7] {
            let k = f(p);
            assert_eq!(k.inv(0), None);
            for a in 1..p {
                assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
            }
        }
        let k = f(5);
        let x = k.elem(3) * k.elem(2) - k.elem(1);
        assert_eq!(x.value(), 0);
        assert_eq!((-k.elem(2)).value(), 3);
        assert_eq!(k.elem(3).inv().unwrap().value(), 2);
    }

    #[test]
    fn rref_examples() {
        let z = Matrix::zeros(f(2), 2, 3);
        let (r, piv) = z.rref();
        assert_eq!(r.rows(), 0);
        assert!(piv.is_empty());

        let id = Matrix::identity(f(2), 3);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);

        let m = mat(2, 2, &[&[1, 1], &[1, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(r, mat(2, 2, &[&[1, 1]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(f(3), 4).kernel_basis().rows(), 0);
        assert_eq!(Matrix::zeros(f(2), 2, 3).kernel_basis().rows(), 3);
        let k = mat(2, 2, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, mat(2, 2, &[&[1, 1]]));
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(f(5), 3);
        assert_eq!(id.solve(&[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
        let z = Matrix::zeros(f(5), 2, 2);
        assert_eq!(z.solve(&[0, 1]).unwrap(), None);
        let m = mat(2, 2, &[&[1, 1]]);
        assert_eq!(m.solve(&[1]).unwrap(), Some(vec![1, 0]));
        assert!(m.solve(&[1, 0]).is_err());
    }

    #[test]
    fn inverse_and_subspaces() {
        let m = mat(3, 2, &[&[1, 2], &[0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f(3), 2));
        assert!(mat(3, 2, &[&[1, 2], &[2, 1]]).inverse().is_none());
        assert_eq!(
            Matrix::zeros(f(3), 0, 0).inverse(),
            Some(Matrix::zeros(f(3), 0, 0))
        );

        let k = f(2);
        let u = Subspace::span(k, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::span(k, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = u.intersection(&w);
        assert_eq!(i, Subspace::span(k, 3, &[vec![0, 1, 0]]));
        assert_eq!(u.sum(&w), Subspace::full(k, 3));
        assert!(u.contains(&[1, 1, 0]));
        assert!(!u.contains(&[1, 1, 1]));
        assert_eq!(u.coords(&[1, 1, 0]), Some(vec![1, 1]));
        assert_eq!(u.complement_columns(), vec![2]);
    }

    #[test]
    fn all_vectors_is_lexicographic() {
        let v: Vec<_> = all_vectors(f(3), 2).collect();
        assert_eq!(v.len(), 9);
        assert_eq!(v[0], vec![0, 0]);
        assert_eq!(v[1], vec![0, 1]);
        assert_eq!(v[3], vec![1, 0]);
        assert_eq!(normalize_leading(f(5), &[0, 2, 4]), vec![0, 1, 2]);
    }
}
