use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::{self, Vector};
use super::Subspace;
use crate::scalars::{Conjugate, Field, Ring};

/// Dense matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Endomorphism of a coordinate space, column `j` holding the image of `e_j`.
pub type LinearMap<S> = Matrix<S>;

impl<S: Ring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<S> {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix<S> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Matrix<S> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Matrix<S> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Integer entries, row by row.
    pub fn from_ints(rows: &[&[i64]]) -> Matrix<S> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_int(x)).collect()).collect())
    }

    pub fn from_columns(cols: &[Vector<S>]) -> Matrix<S> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        Matrix::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn from_vector(rows: usize, cols: usize, v: Vector<S>) -> Matrix<S> {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v }
    }

    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Matrix<S> {
        let mut m = Matrix::zeros(rows, cols);
        m.data[i * cols + j] = S::one();
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

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    /// Row-major coordinates.
    pub fn vectorize(&self) -> Vector<S> {
        self.data.clone()
    }

    pub fn apply(&self, v: &[S]) -> Vector<S> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let mut out = vector::zeros::<S>(self.rows);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                o.add_mul(&self.data[i * self.cols + j], vj);
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::<S>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    o.add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: vector::add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: vector::sub(&self.data, &other.data) }
    }

    pub fn neg(&self) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: vector::neg(&self.data) }
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: vector::scale(c, &self.data) }
    }

    /// `self += c·other`
    pub fn axpy(&mut self, c: &S, other: &Matrix<S>) {
        vector::axpy(&mut self.data, c, &other.data);
    }

    /// `[A, B] = AB − BA`
    pub fn commutator(&self, other: &Matrix<S>) -> Matrix<S> {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Matrix<S> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.rows.min(self.cols) {
            t.add_assign(self.get(i, i));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows) && self.is_square()
    }

    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix<S> {
        Matrix::from_fn(nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix<S>) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    /// Block-diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix<S>) -> Matrix<S> {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    /// Matrix assembled from a grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<Matrix<S>>]) -> Matrix<S> {
        let br = blocks[0][0].rows;
        let bc = blocks[0][0].cols;
        let mut m = Matrix::zeros(br * blocks.len(), bc * blocks[0].len());
        for (i, row) in blocks.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                m.set_block(i * br, j * bc, b);
            }
        }
        m
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// `P⁻¹ ∘ self ∘ P`-style conjugation given both factors.
    pub fn conjugate_by(&self, p: &Matrix<S>, p_inv: &Matrix<S>) -> Matrix<S> {
        p_inv.mul(self).mul(p)
    }

    /// Permutation matrix sending `e_{order[k]}` to `e_k`, so that `P·x`
    /// lists the coordinates of `x` in the new order.
    pub fn permutation(order: &[usize]) -> Matrix<S> {
        let n = order.len();
        let mut m = Matrix::zeros(n, n);
        for (k, &o) in order.iter().enumerate() {
            m.set(k, o, S::one());
        }
        m
    }
}

impl<S: Ring + Conjugate> Matrix<S> {
    pub fn conj(&self) -> Matrix<S> {
        self.map(Conjugate::conj)
    }
}

impl<F: Field> Matrix<F> {
    pub fn rank(&self) -> usize {
        Subspace::from_vectors(self.cols, (0..self.rows).map(|i| self.row(i).to_vec())).dim()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vector<F>> {
        Subspace::from_vectors(self.cols, (0..self.rows).map(|i| self.row(i).to_vec()))
            .annihilator()
            .basis()
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::<F>::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv().ok()?;
            for j in 0..n {
                *a.get_mut(col, j) = a.get(col, j).mul(&p);
                *inv.get_mut(col, j) = inv.get(col, j).mul(&p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(col, j).mul(&f);
                    a.get_mut(r, j).sub_assign(&x);
                    let y = inv.get(col, j).mul(&f);
                    inv.get_mut(r, j).sub_assign(&y);
                }
            }
        }
        Some(inv)
    }
}

impl<S: Ring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: Ring> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    type M = Matrix<Rational>;

    #[test]
    fn products_and_inverse() {
        let a = M::from_ints(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.trace(), Rational::from(5));
        assert_eq!(M::from_ints(&[&[1, 2], &[2, 4]]).inverse(), None);
        assert_eq!(M::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn column_action() {
        let a = M::from_ints(&[&[0, 1], &[0, 0]]);
        let e1 = vector::unit::<Rational>(2, 1);
        assert_eq!(a.apply(&e1), vector::unit(2, 0));
        assert_eq!(a.column(1), vector::unit(2, 0));
    }

    #[test]
    fn permutation_lists_coordinates() {
        let p = M::permutation(&[2, 0, 1]);
        let x: Vec<Rational> = vec![10.into(), 20.into(), 30.into()];
        assert_eq!(p.apply(&x), vec![30.into(), 10.into(), 20.into()]);
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = M::from_ints(&[&[1, 1, 0], &[2, 2, 0]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(vector::is_zero(&a.apply(v)));
        }
    }
}
