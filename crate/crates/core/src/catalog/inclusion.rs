use super::sl::{cp_structure_gl, cp_structure_sl, CpAlgebra, SlBlocks};
use super::CatalogError;
use crate::liealg::{vector, LieAlgebra, LieError, LinearMap, Matrix};
use crate::scalars::{Rational, Ring};
use crate::structures::{induced_hypercomplex, InducedHypercomplex};
use serde::Serialize;

/// A linear map between two algebras carrying complex product structures,
/// as a coordinate matrix.
#[derive(Clone, Debug)]
pub struct Inclusion {
    pub name: String,
    pub source: CpAlgebra,
    pub target: CpAlgebra,
    pub map: LinearMap<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    pub name: String,
    pub homomorphism: bool,
    pub injective: bool,
    pub intertwines_j: bool,
    pub intertwines_e: bool,
    pub complexified_homomorphism: bool,
    pub intertwines_j1: bool,
    pub intertwines_j2: bool,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.homomorphism
            && self.injective
            && self.intertwines_j
            && self.intertwines_e
            && self.complexified_homomorphism
            && self.intertwines_j1
            && self.intertwines_j2
    }
}

fn is_homomorphism(src: &LieAlgebra<Rational>, dst: &LieAlgebra<Rational>, m: &LinearMap<Rational>) -> bool {
    let n = src.dim();
    let images: Vec<_> = (0..n).map(|k| m.column(k)).collect();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let lhs = m.apply(&src.bracket(&vector::unit(n, i), &vector::unit(n, j)));
            lhs == dst.bracket(&images[i], &images[j])
        })
    })
}

fn intertwines(m: &LinearMap<Rational>, src: &LinearMap<Rational>, dst: &LinearMap<Rational>) -> bool {
    dst.mul(m) == m.mul(src)
}

impl Inclusion {
    fn build(
        name: String,
        source: CpAlgebra,
        target: CpAlgebra,
        f: impl Fn(&Matrix<Rational>) -> Matrix<Rational>,
    ) -> Result<Inclusion, CatalogError> {
        let map = source.algebra.represent(&target.algebra, f).ok_or(LieError::NotClosed(0, 0))?;
        Ok(Inclusion { name, source, target, map })
    }

    /// Realified matrix of the ℂ-linear extension between the induced
    /// hypercomplex algebras.
    pub fn complexified(&self, src: &InducedHypercomplex, dst: &InducedHypercomplex) -> LinearMap<Rational> {
        let m = dst.adapted_inverse.mul(&self.map).mul(&src.adapted);
        src.ordering.extend_map_into(&dst.ordering, &m)
    }

    pub fn check(&self) -> Result<InclusionReport, CatalogError> {
        let (s, t) = (&self.source, &self.target);
        let hs = induced_hypercomplex(s.lie(), &s.cp)?;
        let ht = induced_hypercomplex(t.lie(), &t.cp)?;
        let mc = self.complexified(&hs, &ht);
        Ok(InclusionReport {
            name: self.name.clone(),
            homomorphism: is_homomorphism(s.lie(), t.lie(), &self.map),
            injective: self.map.rank() == s.dim(),
            intertwines_j: intertwines(&self.map, &s.cp.j, &t.cp.j),
            intertwines_e: intertwines(&self.map, &s.cp.e, &t.cp.e),
            complexified_homomorphism: is_homomorphism(&hs.algebra, &ht.algebra, &mc),
            intertwines_j1: intertwines(&mc, &hs.structure.j1, &ht.structure.j1),
            intertwines_j2: intertwines(&mc, &hs.structure.j2, &ht.structure.j2),
        })
    }
}

/// `X ↦ [X 0; 0 −tr X]` from `gl(2n,ℝ)` into `sl(2n+1,ℝ)`.
pub fn gl_to_sl(n: usize) -> Result<Inclusion, CatalogError> {
    let src = cp_structure_gl(n)?;
    let dst = cp_structure_sl(n)?;
    Inclusion::build(format!("gl({0})->sl({1})", 2 * n, 2 * n + 1), src, dst, |x| {
        let m = x.rows();
        let mut y = Matrix::zeros(m + 1, m + 1);
        y.set_block(0, 0, x);
        y.set(m, m, x.trace().neg());
        y
    })
}

/// `X ↦ X†`: pad an `n×n` block with a zero row and column.
fn dagger(x: &Matrix<Rational>) -> Matrix<Rational> {
    let mut y = Matrix::zeros(x.rows() + 1, x.cols() + 1);
    y.set_block(0, 0, x);
    y
}

fn dagger_vec(v: &[Rational]) -> Vec<Rational> {
    let mut w = v.to_vec();
    w.push(Rational::zero());
    w
}

/// Blockwise `†` from `sl(2n+1,ℝ)` into `sl(2n+3,ℝ)`.
pub fn sl_to_sl_plus2(n: usize) -> Result<Inclusion, CatalogError> {
    let src = cp_structure_sl(n)?;
    let dst = cp_structure_sl(n + 1)?;
    Inclusion::build(format!("sl({})->sl({})", 2 * n + 1, 2 * n + 3), src, dst, |x| {
        let p = SlBlocks::split(x);
        SlBlocks {
            a: dagger(&p.a),
            c: dagger(&p.c),
            b: dagger(&p.b),
            d: dagger(&p.d),
            w1: dagger_vec(&p.w1),
            w2: dagger_vec(&p.w2),
            v1: dagger_vec(&p.v1),
            v2: dagger_vec(&p.v2),
        }
        .assemble()
    })
}

/// `[A C; B D] ↦ [A† C†; B† D†]` from `gl(2n,ℝ)` into `gl(2n+2,ℝ)`.
pub fn gl_to_gl_plus2(n: usize) -> Result<Inclusion, CatalogError> {
    let src = cp_structure_gl(n)?;
    let dst = cp_structure_gl(n + 1)?;
    Inclusion::build(format!("gl({})->gl({})", 2 * n, 2 * n + 2), src, dst, |x| {
        let h = x.rows() / 2;
        let mut y = Matrix::zeros(2 * h + 2, 2 * h + 2);
        for (r0, c0) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            y.set_block(r0 * (h + 1), c0 * (h + 1), &x.block(r0 * h, c0 * h, h, h));
        }
        y
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusions_are_compatible() {
        for inc in [gl_to_sl(1), sl_to_sl_plus2(1), gl_to_gl_plus2(1)] {
            let r = inc.unwrap().check().unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn gl_image_is_traceless() {
        let inc = gl_to_sl(1).unwrap();
        for k in 0..inc.source.dim() {
            let m = inc.target.algebra.matrix(&inc.map.column(k));
            assert!(m.trace().is_zero());
        }
    }
}
