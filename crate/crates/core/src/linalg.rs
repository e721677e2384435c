//! Exact subspace arithmetic: canonical bases, the lattice operations and
//! projector matrices.
//!
//! A [`Subspace`] stores an orthogonal (not orthonormal) basis in canonical
//! form: the reduced row echelon basis of the span, Gram-Schmidt orthogonalized
//! in pivot order, each vector scaled so its first non-zero entry is 1. Two
//! subspaces are equal exactly when their canonical bases are identical.

use std::fmt;

use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry {entry} of vector {vector} lies outside the workspace field")]
    ForeignEntry { vector: usize, entry: usize },
}

/// Hermitian inner product `Σ conj(u_k)·v_k`.
pub fn inner<F: Field>(u: &[F], v: &[F]) -> F {
    u.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(F::zero(), |acc, (a, b)| acc + a.conj() * b)
}

fn is_zero_vector<F: Field>(v: &[F]) -> bool {
    v.iter().all(F::is_zero)
}

fn scale<F: Field>(v: &[F], factor: &F) -> Vec<F> {
    v.iter().map(|x| x.clone() * factor).collect()
}

/// `v - factor·w`, in place.
fn axpy_sub<F: Field>(v: &mut [F], factor: &F, w: &[F]) {
    if factor.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x = x.clone() - factor.clone() * y;
        }
    }
}

fn leading_one<F: Field>(v: Vec<F>) -> Vec<F> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) if lead.is_one() => v,
        Some(lead) => {
            let inv = lead.inv().expect("non-zero lead");
            scale(&v, &inv)
        }
        None => v,
    }
}

/// Reduced row echelon form of `rows`; returns the non-zero rows and their pivot columns.
fn rref<F: Field>(mut rows: Vec<Vec<F>>, n: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("non-zero pivot");
        if !inv.is_one() {
            rows[r] = scale(&rows[r], &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                axpy_sub(row, &factor, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Gram-Schmidt in input order, dropping dependent vectors and scaling each
/// survivor to a leading coefficient of 1.
pub fn gram_schmidt<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut basis: Vec<(Vec<F>, F)> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for (b, norm) in &basis {
            let coeff = inner(b, &w) / norm;
            axpy_sub(&mut w, &coeff, b);
        }
        if is_zero_vector(&w) {
            continue;
        }
        let w = leading_one(w);
        let norm = inner(&w, &w);
        basis.push((w, norm));
    }
    basis.into_iter().map(|(v, _)| v).collect()
}

/// Null space basis of the system `rows · x = 0`.
fn null_space<F: Field>(rows: Vec<Vec<F>>, n: usize) -> Vec<Vec<F>> {
    let (reduced, pivots) = rref(rows, n);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![F::zero(); n];
        x[free] = F::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            x[p] = -row[free].clone();
        }
        out.push(x);
    }
    out
}

/// A closed linear subspace of `F^n`, doubling as the proposition / projector it determines.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    dim: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    /// The span of `vectors` in canonical form.
    pub fn canonicalize(vectors: &[Vec<F>], n: usize) -> Result<Self, LinalgError> {
        let mut seen: Vec<&F> = Vec::new();
        for (vi, v) in vectors.iter().enumerate() {
            if v.len() != n {
                return Err(LinalgError::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            for (ei, x) in v.iter().enumerate() {
                if seen.iter().any(|s| !s.same_field(x)) {
                    return Err(LinalgError::ForeignEntry {
                        vector: vi,
                        entry: ei,
                    });
                }
                seen.push(x);
            }
        }
        Ok(Self::span(vectors.to_vec(), n))
    }

    fn span(vectors: Vec<Vec<F>>, n: usize) -> Self {
        let rows: Vec<Vec<F>> = vectors.into_iter().filter(|v| !is_zero_vector(v)).collect();
        if rows.is_empty() {
            return Self::zero(n);
        }
        let (reduced, _) = rref(rows, n);
        Subspace {
            dim: n,
            basis: gram_schmidt(&reduced),
        }
    }

    pub fn zero(n: usize) -> Self {
        Subspace {
            dim: n,
            basis: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![F::zero(); n];
                v[i] = F::one();
                v
            })
            .collect();
        Subspace { dim: n, basis }
    }

    /// The ray spanned by a single vector (the zero subspace for the zero vector).
    pub fn ray(vector: &[F]) -> Self {
        Self::span(vec![vector.to_vec()], vector.len())
    }

    /// Coordinate subspace spanned by the standard basis vectors in `indices`.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&i| {
                let mut v = vec![F::zero(); n];
                v[i] = F::one();
                v
            })
            .collect();
        Self::span(vectors, n)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dim
    }

    fn check_dim(&self, other: &Self) -> Result<(), LinalgError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    /// `S⊥`.
    pub fn ortho(&self) -> Self {
        let n = self.dim;
        if self.basis.is_empty() {
            return Self::full(n);
        }
        if self.basis.len() == n {
            return Self::zero(n);
        }
        let rows = self
            .basis
            .iter()
            .map(|b| b.iter().map(F::conj).collect())
            .collect();
        Self::span(null_space(rows, n), n)
    }

    /// Closed linear span `S ∨ T`.
    pub fn join(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_dim(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::span(vectors, self.dim))
    }

    /// Intersection `S ∧ T`, computed as `(S⊥ ∨ T⊥)⊥`.
    pub fn meet(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_dim(other)?;
        if self.is_full() || other.is_zero() {
            return Ok(other.clone());
        }
        if other.is_full() || self.is_zero() {
            return Ok(self.clone());
        }
        Ok(self.ortho().join(&other.ortho())?.ortho())
    }

    /// Orthogonal projection of `v` onto this subspace.
    pub fn project(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for b in &self.basis {
            let coeff = inner(b, v) / inner(b, b);
            if coeff.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = o.clone() + coeff.clone() * x;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        let mut residual = v.to_vec();
        for b in &self.basis {
            let coeff = inner(b, &residual) / inner(b, b);
            axpy_sub(&mut residual, &coeff, b);
        }
        is_zero_vector(&residual)
    }

    /// Subspace inclusion `S ≤ T`.
    pub fn leq(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_dim(other)?;
        if self.rank() > other.rank() {
            return Ok(false);
        }
        Ok(self.basis.iter().all(|v| other.contains_vector(v)))
    }

    /// `S ⊥ T`, i.e. `S ≤ T⊥`.
    pub fn is_orthogonal_to(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_dim(other)?;
        Ok(self
            .basis
            .iter()
            .all(|u| other.basis.iter().all(|v| inner(u, v).is_zero())))
    }

    /// Hermitian idempotent projecting onto this subspace.
    pub fn projector_matrix(&self) -> Matrix<F> {
        let n = self.dim;
        let mut p: Matrix<F> = Matrix::zeros(n, n);
        for b in &self.basis {
            let norm_inv = inner(b, b).inv().expect("basis vectors are non-zero");
            for (r, br) in b.iter().enumerate() {
                if br.is_zero() {
                    continue;
                }
                let left = br.clone() * &norm_inv;
                for (c, bc) in b.iter().enumerate() {
                    if !bc.is_zero() {
                        let entry = p.get(r, c).clone() + left.clone() * bc.conj();
                        p.set(r, c, entry);
                    }
                }
            }
        }
        p
    }
}

impl<F: fmt::Display> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, v) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, ")")?;
        }
        write!(f, "}} in dim {}", self.dim)
    }
}

/// Dense square or rectangular matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let entry = out.get(r, c).clone() + a.clone() * b;
                        out.set(r, c, entry);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn scale(&self, factor: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * factor).collect(),
        }
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.adjoint()
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// `A·v`.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b)
            })
            .collect()
    }

    /// Canonical form of the column space.
    pub fn column_space(&self) -> Subspace<F> {
        let cols = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::span(cols, self.rows)
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, x) in self.data[r * self.cols..(r + 1) * self.cols].iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", x)?;
            }
        }
        write!(f, "]")
    }
}
