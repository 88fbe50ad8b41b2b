//! Lie algebras given by structure constants, linear maps and subspaces.

mod io;
mod matrix;
mod real;
mod saturate;
mod subspace;
pub mod vector;

use std::fmt;

pub use io::{AlgebraFile, BracketEntry, FieldTag, Imported, IoError};
pub use matrix::{LinearMap, Matrix};
pub use real::{complexify, realify, sigma, RealOrdering};
pub use saturate::{span_saturate, Saturation};
pub use subspace::{Coordinates, Subspace};
pub use vector::Vector;

use crate::scalars::{Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis index out of range in bracket entry ({0}, {1}, {2})")]
    IndexOutOfRange(usize, usize, usize),
    #[error("nonzero bracket [e{0}, e{0}]")]
    SelfBracket(usize),
    #[error("bracket of basis elements {0} and {1} leaves the span")]
    NotClosed(usize, usize),
    #[error("the given basis is linearly dependent")]
    DependentBasis,
    #[error("invalid basis permutation")]
    InvalidPermutation,
    #[error("labels must number {0}")]
    BadLabels(usize),
    #[error("change of basis is singular")]
    Singular,
}

/// A failing Jacobi triple with its nonzero residual.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiFailure<S> {
    pub triple: (usize, usize, usize),
    pub residual: Vector<S>,
}

/// Finite-dimensional Lie algebra by sparse structure constants
/// `[e_i, e_j] = Σ_k c_ij^k e_k`.
#[derive(Clone, PartialEq)]
pub struct LieAlgebra<S> {
    dim: usize,
    table: Vec<Vec<(usize, S)>>,
    labels: Option<Vec<String>>,
}

impl<S: Ring> LieAlgebra<S> {
    pub fn abelian(dim: usize) -> LieAlgebra<S> {
        LieAlgebra { dim, table: vec![Vec::new(); dim * dim], labels: None }
    }

    /// Builds from entries `(i, j, k, c)` meaning `c_ij^k += c`; entries with
    /// `i > j` are folded in by antisymmetry.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, S)>,
    ) -> Result<LieAlgebra<S>, LieError> {
        let mut dense: Vec<Vec<S>> = Vec::new();
        let mut touched = vec![false; dim * dim];
        dense.resize_with(dim * dim, Vec::new);
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(LieError::IndexOutOfRange(i, j, k));
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(LieError::SelfBracket(i));
            }
            let (a, b, c) = if i < j { (i, j, c) } else { (j, i, c.neg()) };
            let slot = a * dim + b;
            if !touched[slot] {
                dense[slot] = vector::zeros(dim);
                touched[slot] = true;
            }
            dense[slot][k].add_assign(&c);
        }
        let mut table = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in a + 1..dim {
                let slot = a * dim + b;
                if !touched[slot] {
                    continue;
                }
                let sparse: Vec<(usize, S)> = dense[slot]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                table[b * dim + a] = sparse.iter().map(|(k, c)| (*k, c.neg())).collect();
                table[slot] = sparse;
            }
        }
        Ok(LieAlgebra { dim, table, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<LieAlgebra<S>, LieError> {
        if labels.len() != self.dim {
            return Err(LieError::BadLabels(self.dim));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    /// Sparse `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.table[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> S {
        self.bracket_basis(i, j)
            .iter()
            .find(|(m, _)| *m == k)
            .map_or_else(S::zero, |(_, c)| c.clone())
    }

    /// Nonzero constants `(i, j, k, c)` with `i < j`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, S)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in self.bracket_basis(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vector<S> {
        assert_eq!(x.len(), self.dim, "dimension mismatch");
        assert_eq!(y.len(), self.dim, "dimension mismatch");
        let mut out = vector::zeros::<S>(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let row = self.bracket_basis(i, j);
                if row.is_empty() {
                    continue;
                }
                let w = xi.mul(yj);
                for (k, c) in row {
                    out[*k].add_mul(&w, c);
                }
            }
        }
        out
    }

    /// `ad x`, column `j` equal to `[x, e_j]`.
    pub fn ad(&self, x: &[S]) -> LinearMap<S> {
        let cols: Vec<Vector<S>> =
            (0..self.dim).map(|j| self.bracket(x, &vector::unit(self.dim, j))).collect();
        Matrix::from_columns(&cols)
    }

    pub fn ad_basis(&self, i: usize) -> LinearMap<S> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Jacobi residuals on basis triples `i < j < k`, normalizing each
    /// coefficient with `normalize` (for quotient rings) before testing zero.
    pub fn check_jacobi_with(&self, normalize: impl Fn(&S) -> S) -> Vec<JacobiFailure<S>> {
        let n = self.dim;
        let mut out = Vec::new();
        let e = |i: usize| vector::unit::<S>(n, i);
        for i in 0..n {
            for j in i + 1..n {
                let eij = self.bracket(&e(i), &e(j));
                for k in j + 1..n {
                    let a = self.bracket(&eij, &e(k));
                    let b = self.bracket(&self.bracket(&e(j), &e(k)), &e(i));
                    let c = self.bracket(&self.bracket(&e(k), &e(i)), &e(j));
                    let r: Vector<S> =
                        vector::add(&vector::add(&a, &b), &c).iter().map(&normalize).collect();
                    if !vector::is_zero(&r) {
                        out.push(JacobiFailure { triple: (i, j, k), residual: r });
                    }
                }
            }
        }
        out
    }

    pub fn check_jacobi(&self) -> Vec<JacobiFailure<S>> {
        self.check_jacobi_with(Clone::clone)
    }

    pub fn map_scalars<T: Ring>(&self, f: impl Fn(&S) -> T) -> LieAlgebra<T> {
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(k, c)| (*k, f(c)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        LieAlgebra { dim: self.dim, table, labels: self.labels.clone() }
    }

    /// Whether the span of `vs` is closed under the bracket.
    pub fn is_subalgebra(&self, vs: &[Vector<S>]) -> bool
    where
        S: Field,
    {
        let span = Subspace::from_vectors(self.dim, vs.iter().cloned());
        let b = span.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| span.contains(&self.bracket(&b[i], &b[j]))))
    }
}

impl<F: Field> LieAlgebra<F> {
    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<LieAlgebra<F>, LieError> {
        if p.rows() != self.dim || !p.is_square() {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: p.rows() });
        }
        let inv = p.inverse().ok_or(LieError::Singular)?;
        let cols = p.columns();
        let mut entries = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let w = inv.apply(&self.bracket(&cols[a], &cols[b]));
                for (k, c) in w.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((a, b, k, c));
                    }
                }
            }
        }
        LieAlgebra::from_entries(self.dim, entries)
    }

    /// Structure constants of the Lie algebra spanned by linearly
    /// independent matrices, with the coordinate map onto that span.
    pub fn from_matrix_basis(mats: &[Matrix<F>]) -> Result<MatrixAlgebra<F>, LieError> {
        MatrixAlgebra::new(mats.to_vec())
    }
}

impl<S: Ring> fmt::Debug for LieAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebra(dim {})", self.dim)?;
        for (i, j, k, c) in self.entries() {
            writeln!(f, "  [{}, {}] ∋ ({c})·{}", self.label(i), self.label(j), self.label(k))?;
        }
        Ok(())
    }
}

/// A Lie algebra realized by matrices, with coordinates in the given basis.
#[derive(Clone)]
pub struct MatrixAlgebra<F> {
    pub algebra: LieAlgebra<F>,
    pub basis: Vec<Matrix<F>>,
    coords: Coordinates<F>,
    size: usize,
}

impl<F: Field> fmt::Debug for MatrixAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixAlgebra({}x{}) {:?}", self.size, self.size, self.algebra)
    }
}

impl<F: Field> MatrixAlgebra<F> {
    pub fn new(basis: Vec<Matrix<F>>) -> Result<MatrixAlgebra<F>, LieError> {
        let size = basis.first().map_or(0, Matrix::rows);
        let flat: Vec<Vector<F>> = basis.iter().map(Matrix::vectorize).collect();
        let coords = Coordinates::new(size * size, &flat).ok_or(LieError::DependentBasis)?;
        let n = basis.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = basis[i].commutator(&basis[j]);
                let w = coords.solve(&c.vectorize()).ok_or(LieError::NotClosed(i, j))?;
                for (k, x) in w.into_iter().enumerate() {
                    if !x.is_zero() {
                        entries.push((i, j, k, x));
                    }
                }
            }
        }
        let algebra = LieAlgebra::from_entries(n, entries)?;
        Ok(MatrixAlgebra { algebra, basis, coords, size })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<MatrixAlgebra<F>, LieError> {
        self.algebra = self.algebra.with_labels(labels)?;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix size `m` of the `m×m` realization.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn coords(&self, m: &Matrix<F>) -> Option<Vector<F>> {
        self.coords.solve(&m.vectorize())
    }

    pub fn matrix(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.size, self.size);
        for (c, b) in x.iter().zip(&self.basis) {
            m.axpy(c, b);
        }
        m
    }

    /// Coordinate matrix of a linear map given on matrices.
    pub fn represent(
        &self,
        target: &MatrixAlgebra<F>,
        f: impl Fn(&Matrix<F>) -> Matrix<F>,
    ) -> Option<LinearMap<F>> {
        let cols: Option<Vec<Vector<F>>> = self.basis.iter().map(|b| target.coords(&f(b))).collect();
        Some(Matrix::from_columns(&cols?))
    }
}
