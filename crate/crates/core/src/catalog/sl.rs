use super::CatalogError;
use crate::liealg::{vector, LieAlgebra, LinearMap, Matrix, MatrixAlgebra, Subspace, Vector};
use crate::scalars::{Rational, Ring};
use crate::structures::{induced_hypercomplex, is_complex_product, ComplexProduct, InducedHypercomplex};

/// `sl(m+1,ℝ)` or `gl(m,ℝ)` with the splitting `gl(m,ℝ) ⊕ a ⊕ b`.
#[derive(Clone, Debug)]
pub struct Decomposed {
    pub algebra: MatrixAlgebra<Rational>,
    pub gl_part: Subspace<Rational>,
    pub a: Subspace<Rational>,
    pub b: Subspace<Rational>,
}

fn unit(m: usize, i: usize, j: usize) -> Matrix<Rational> {
    Matrix::unit(m, m, i, j)
}

fn pair_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{}{}", i + 1, j + 1)
    } else {
        format!("{},{}", i + 1, j + 1)
    }
}

fn units(dim: usize, range: std::ops::Range<usize>) -> Subspace<Rational> {
    Subspace::from_vectors(dim, range.map(|k| vector::unit(dim, k)))
}

/// `gl(m,ℝ)` on the basis `E_ij`, lexicographic.
pub fn build_gl(m: usize) -> Result<Decomposed, CatalogError> {
    if m == 0 {
        return Err(CatalogError::ZeroSize);
    }
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m {
        for j in 0..m {
            basis.push(unit(m, i, j));
            labels.push(format!("E{}", pair_label(i, j, m)));
        }
    }
    let algebra = MatrixAlgebra::new(basis)?.with_labels(labels)?;
    let dim = m * m;
    Ok(Decomposed {
        algebra,
        gl_part: Subspace::full(dim),
        a: Subspace::zero(dim),
        b: Subspace::zero(dim),
    })
}

/// `sl(m+1,ℝ)` on the basis `[E_ij 0; 0 −δ_ij]`, then the bottom row
/// vectors `a`, then the last column vectors `b`.
pub fn build_sl(m: usize) -> Result<Decomposed, CatalogError> {
    if m == 0 {
        return Err(CatalogError::ZeroSize);
    }
    let s = m + 1;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let mut x = unit(s, i, j);
            if i == j {
                x.set(m, m, Rational::from(-1));
            }
            basis.push(x);
            labels.push(format!("A{}", pair_label(i, j, m)));
        }
    }
    for i in 0..m {
        basis.push(unit(s, m, i));
        labels.push(format!("v{}", i + 1));
    }
    for i in 0..m {
        basis.push(unit(s, i, m));
        labels.push(format!("w{}", i + 1));
    }
    let algebra = MatrixAlgebra::new(basis)?.with_labels(labels)?;
    let g = m * m;
    let dim = g + 2 * m;
    Ok(Decomposed {
        algebra,
        gl_part: units(dim, 0..g),
        a: units(dim, g..g + m),
        b: units(dim, g + m..dim),
    })
}

/// The blocks of `[A C w₁; B D w₂; v₁ᵗ v₂ᵗ −tr(A+D)]` in `sl(2n+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlBlocks<S: Ring> {
    pub a: Matrix<S>,
    pub c: Matrix<S>,
    pub b: Matrix<S>,
    pub d: Matrix<S>,
    pub w1: Vector<S>,
    pub w2: Vector<S>,
    pub v1: Vector<S>,
    pub v2: Vector<S>,
}

impl<S: Ring> SlBlocks<S> {
    pub fn zero(n: usize) -> SlBlocks<S> {
        SlBlocks {
            a: Matrix::zeros(n, n),
            c: Matrix::zeros(n, n),
            b: Matrix::zeros(n, n),
            d: Matrix::zeros(n, n),
            w1: vector::zeros(n),
            w2: vector::zeros(n),
            v1: vector::zeros(n),
            v2: vector::zeros(n),
        }
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn split(x: &Matrix<S>) -> SlBlocks<S> {
        assert!(x.is_square() && x.rows() % 2 == 1, "expected a (2n+1)×(2n+1) matrix");
        let n = x.rows() / 2;
        let m = 2 * n;
        let col = |j: usize, r0: usize| (0..n).map(|r| x.get(r0 + r, j).clone()).collect();
        let row = |i: usize, c0: usize| (0..n).map(|c| x.get(i, c0 + c).clone()).collect();
        SlBlocks {
            a: x.block(0, 0, n, n),
            c: x.block(0, n, n, n),
            b: x.block(n, 0, n, n),
            d: x.block(n, n, n, n),
            w1: col(m, 0),
            w2: col(m, n),
            v1: row(m, 0),
            v2: row(m, n),
        }
    }

    /// The traceless matrix with these blocks.
    pub fn assemble(&self) -> Matrix<S> {
        let n = self.n();
        let m = 2 * n;
        let mut x = Matrix::zeros(m + 1, m + 1);
        x.set_block(0, 0, &self.a);
        x.set_block(0, n, &self.c);
        x.set_block(n, 0, &self.b);
        x.set_block(n, n, &self.d);
        for k in 0..n {
            x.set(k, m, self.w1[k].clone());
            x.set(n + k, m, self.w2[k].clone());
            x.set(m, k, self.v1[k].clone());
            x.set(m, n + k, self.v2[k].clone());
        }
        x.set(m, m, self.a.trace().add(&self.d.trace()).neg());
        x
    }
}

/// `J[A C w₁; B D w₂; v₁ᵗ v₂ᵗ ·] = [C −A w₂; D −B −w₁; v₂ᵗ −v₁ᵗ ·]`
pub fn sl_j<S: Ring>(x: &Matrix<S>) -> Matrix<S> {
    let p = SlBlocks::split(x);
    SlBlocks {
        a: p.c.clone(),
        c: p.a.neg(),
        b: p.d.clone(),
        d: p.b.neg(),
        w1: p.w2.clone(),
        w2: vector::neg(&p.w1),
        v1: p.v2.clone(),
        v2: vector::neg(&p.v1),
    }
    .assemble()
}

/// `E[A C w₁; B D w₂; v₁ᵗ v₂ᵗ ·] = [A −C −w₁; B −D w₂; v₁ᵗ −v₂ᵗ ·]`
pub fn sl_e<S: Ring>(x: &Matrix<S>) -> Matrix<S> {
    let p = SlBlocks::split(x);
    SlBlocks {
        a: p.a.clone(),
        c: p.c.neg(),
        b: p.b.clone(),
        d: p.d.neg(),
        w1: vector::neg(&p.w1),
        w2: p.w2.clone(),
        v1: p.v1.clone(),
        v2: vector::neg(&p.v2),
    }
    .assemble()
}

fn j0<S: Ring>(n: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        m.set(k, n + k, S::one().neg());
        m.set(n + k, k, S::one());
    }
    m
}

fn e0<S: Ring>(n: usize) -> Matrix<S> {
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if r != c {
            S::zero()
        } else if r < n {
            S::one()
        } else {
            S::one().neg()
        }
    })
}

/// `J′(X) = X·J₀` on `gl(2n)`.
pub fn gl_j<S: Ring>(x: &Matrix<S>) -> Matrix<S> {
    x.mul(&j0(x.rows() / 2))
}

/// `E′(X) = X·E₀` on `gl(2n)`.
pub fn gl_e<S: Ring>(x: &Matrix<S>) -> Matrix<S> {
    x.mul(&e0(x.rows() / 2))
}

/// A matrix algebra with a validated complex product structure.
#[derive(Clone, Debug)]
pub struct CpAlgebra {
    pub name: String,
    pub n: usize,
    pub algebra: MatrixAlgebra<Rational>,
    pub cp: ComplexProduct,
}

impl CpAlgebra {
    pub fn lie(&self) -> &LieAlgebra<Rational> {
        &self.algebra.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

fn with_structures(
    name: String,
    n: usize,
    algebra: MatrixAlgebra<Rational>,
    j: impl Fn(&Matrix<Rational>) -> Matrix<Rational>,
    e: impl Fn(&Matrix<Rational>) -> Matrix<Rational>,
) -> Result<CpAlgebra, CatalogError> {
    let jm = algebra.represent(&algebra, j).ok_or(crate::liealg::LieError::NotClosed(0, 0))?;
    let em = algebra.represent(&algebra, e).ok_or(crate::liealg::LieError::NotClosed(0, 0))?;
    let cp = is_complex_product(&algebra.algebra, &jm, &em)?;
    Ok(CpAlgebra { name, n, algebra, cp })
}

/// `gl(2n,ℝ)` on `E_ij` (lexicographic) with `{J′, E′}`.
pub fn cp_structure_gl(n: usize) -> Result<CpAlgebra, CatalogError> {
    let gl = build_gl(2 * n)?;
    with_structures(format!("gl({},R)", 2 * n), n, gl.algebra, gl_j, gl_e)
}

/// Positions of `α_ij, β_ij, γ_i, μ_i` in the basis `B₊ ∪ J(B₊)` of
/// `sl(2n+1,ℝ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlIndex {
    pub n: usize,
}

impl SlIndex {
    pub fn half(&self) -> usize {
        2 * self.n * (self.n + 1)
    }

    pub fn dim(&self) -> usize {
        2 * self.half()
    }

    pub fn alpha(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    pub fn beta(&self, i: usize, j: usize) -> usize {
        self.n * self.n + i * self.n + j
    }

    pub fn gamma(&self, i: usize) -> usize {
        2 * self.n * self.n + i
    }

    pub fn mu(&self, i: usize) -> usize {
        2 * self.n * self.n + self.n + i
    }

    /// Index of `J b_k`.
    pub fn minus(&self, k: usize) -> usize {
        self.half() + k
    }

    /// `B₊` as matrices.
    pub fn plus_basis(&self) -> (Vec<Matrix<Rational>>, Vec<String>) {
        let n = self.n;
        let s = 2 * n + 1;
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut x = unit(s, i, j);
                if i == j {
                    x.set(2 * n, 2 * n, Rational::from(-1));
                }
                mats.push(x);
                labels.push(format!("α{}", pair_label(i, j, n)));
            }
        }
        for i in 0..n {
            for j in 0..n {
                mats.push(unit(s, n + i, j));
                labels.push(format!("β{}", pair_label(i, j, n)));
            }
        }
        for i in 0..n {
            mats.push(unit(s, 2 * n, i));
            labels.push(format!("γ{}", i + 1));
        }
        for i in 0..n {
            mats.push(unit(s, n + i, 2 * n));
            labels.push(format!("μ{}", i + 1));
        }
        (mats, labels)
    }
}

/// `sl(2n+1,ℝ)` on `B₊ ∪ J(B₊)` with `{J, E}`.
pub fn cp_structure_sl(n: usize) -> Result<CpAlgebra, CatalogError> {
    if n == 0 {
        return Err(CatalogError::ZeroSize);
    }
    let (plus, plus_labels) = SlIndex { n }.plus_basis();
    let mut basis = plus.clone();
    basis.extend(plus.iter().map(sl_j));
    let mut labels = plus_labels.clone();
    labels.extend(plus_labels.iter().map(|l| format!("J{l}")));
    let algebra = MatrixAlgebra::new(basis)?.with_labels(labels)?;
    with_structures(format!("sl({},R)", 2 * n + 1), n, algebra, sl_j, sl_e)
}

/// `sl(2n+1,ℂ)_ℝ` with the hypercomplex structure induced by `{J, E}`.
/// Since `B₋ = J(B₊)` the adapted frame is the identity.
pub fn hypercomplex_sl_c(n: usize) -> Result<(CpAlgebra, InducedHypercomplex), CatalogError> {
    let sl = cp_structure_sl(n)?;
    let h = induced_hypercomplex(sl.lie(), &sl.cp)?;
    Ok((sl, h))
}

/// `ψ(x) = tr(J ∘ ad x)`
pub fn koszul_form<S: Ring>(l: &LieAlgebra<S>, j: &LinearMap<S>, x: &[S]) -> S {
    j.mul(&l.ad(x)).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::integrability_identity_failure;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn sl3_outer_product_bracket() {
        let sl = build_sl(2).unwrap();
        let l = &sl.algebra;
        assert_eq!(l.dim(), 8);
        // v = e₁, w′ = e₂: [(0,v,0),(0,0,w′)] = (−w′vᵗ, 0, 0) = −E₂₁
        let v = vector::unit(8, 4);
        let w = vector::unit(8, 7);
        let mut expected = vector::zeros(8);
        expected[2] = q(-1);
        assert_eq!(l.algebra.bracket(&v, &w), expected);
        for s in [&sl.a, &sl.b] {
            let b = s.basis();
            for x in &b {
                for y in &b {
                    assert!(vector::is_zero(&l.algebra.bracket(x, y)));
                }
            }
        }
    }

    #[test]
    fn gl_acts_on_a() {
        // [(A,0,0),(0,v′,0)] = (0, −Aᵗv′ − (tr A)v′, 0) with A = E₁₁, v′ = e₁
        let sl = build_sl(2).unwrap();
        let r = sl.algebra.algebra.bracket(&vector::unit(8, 0), &vector::unit(8, 4));
        let mut expected = vector::zeros(8);
        expected[4] = q(-2);
        assert_eq!(r, expected);
        let r = sl.algebra.algebra.bracket(&vector::unit(8, 0), &vector::unit(8, 6));
        let mut expected = vector::zeros(8);
        expected[6] = q(2);
        assert_eq!(r, expected);
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_sl(4).unwrap().algebra.dim(), 24);
        assert_eq!(build_gl(3).unwrap().algebra.dim(), 9);
        assert!(matches!(build_sl(0), Err(CatalogError::ZeroSize)));
    }

    #[test]
    fn gl_complex_product() {
        let gl = cp_structure_gl(1).unwrap();
        // J′(E₁₁) = E₁₁J₀ = −E₁₂
        let x = gl.cp.j.apply(&vector::unit(4, 0));
        assert_eq!(x, vec![q(0), q(-1), q(0), q(0)]);
        assert!(gl.cp.j.mul(&gl.cp.j).neg().is_identity());
        assert!(gl.cp.e.mul(&gl.cp.e).is_identity());
    }

    #[test]
    fn sl_blocks_round_trip() {
        let x = Matrix::<Rational>::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, -6]]);
        assert_eq!(SlBlocks::split(&x).assemble(), x);
        let jx = sl_j(&x);
        assert_eq!(jx, Matrix::from_ints(&[&[2, -1, 6], &[5, -4, -3], &[8, -7, 2]]));
        assert_eq!(sl_j(&jx), x.neg());
        assert_eq!(sl_e(&sl_e(&x)), x);
    }

    #[test]
    fn sl_complex_product() {
        for n in 1..=2 {
            let sl = cp_structure_sl(n).unwrap();
            let idx = SlIndex { n };
            assert_eq!(sl.dim(), idx.dim());
            assert_eq!(integrability_identity_failure(sl.lie(), &sl.cp.j), None);
            let plus = Subspace::from_vectors(sl.dim(), (0..idx.half()).map(|k| vector::unit(sl.dim(), k)));
            assert!(plus.same_span(&sl.cp.g_plus));
            let jg = sl.cp.j.apply(&vector::unit(sl.dim(), idx.gamma(0)));
            assert!(sl.cp.g_minus.contains(&jg));
        }
    }

    #[test]
    fn koszul_abelian() {
        let l = LieAlgebra::<Rational>::abelian(4);
        let j = cp_structure_gl(1).unwrap().cp.j;
        assert!(koszul_form(&l, &j, &vector::unit(4, 1)).is_zero());
    }

    #[test]
    fn koszul_remark() {
        for n in 1..=2 {
            let sl = cp_structure_sl(n).unwrap();
            let idx = SlIndex { n };
            let x = vector::unit(sl.dim(), idx.beta(0, 0));
            assert_eq!(koszul_form(sl.lie(), &sl.cp.j, &x), q(2 * n as i64 + 2));
        }
    }
}
