//! Holonomy algebras by Ambrose–Singer saturation, and their block forms.

use serde::Serialize;

use crate::catalog::{CpAlgebra, SlIndex};
use crate::connections::Connection;
use crate::liealg::{span_saturate, vector, LieAlgebra, LinearMap, Matrix, Subspace};
use crate::scalars::{Rational, Ring};
use crate::structures::{ComplexProduct, Hypercomplex, InducedHypercomplex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HolonomyError {
    #[error("operator {0} does not commute with J₁ and J₂")]
    BlockDecompositionFail(usize),
    #[error("dimension {0} is not divisible by 4")]
    NotQuaternionic(usize),
}

/// A subalgebra of `End(g)`, stored as row-major vectorized operators.
#[derive(Clone, Debug)]
pub struct HolonomyAlgebra {
    pub algebra_dim: usize,
    pub space: Subspace<Rational>,
    pub basis_ops: Vec<LinearMap<Rational>>,
}

impl HolonomyAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, t: &LinearMap<Rational>) -> bool {
        self.space.contains(&t.vectorize())
    }

    pub fn same_span(&self, other: &Subspace<Rational>) -> bool {
        self.space.same_span(other)
    }
}

/// The smallest subalgebra of `End(g)` containing every `R(e_i, e_j)` and
/// closed under `[∇_{e_k}, ·]`.
pub fn ambrose_singer(l: &LieAlgebra<Rational>, c: &Connection) -> HolonomyAlgebra {
    let n = l.dim();
    let seed = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| c.curvature_basis(l, i, j)).collect();
    saturate(n, c, seed)
}

/// Saturation of an arbitrary seed under the same operations.
pub fn saturate(n: usize, c: &Connection, seed: Vec<LinearMap<Rational>>) -> HolonomyAlgebra {
    let ops: Vec<Box<dyn Fn(&LinearMap<Rational>) -> LinearMap<Rational> + Sync + '_>> = c
        .ops()
        .iter()
        .map(|nk| Box::new(move |t: &LinearMap<Rational>| nk.commutator(t)) as Box<_>)
        .collect();
    let op_refs: Vec<&(dyn Fn(&LinearMap<Rational>) -> LinearMap<Rational> + Sync)> =
        ops.iter().map(|b| b.as_ref()).collect();
    let bracket = |a: &LinearMap<Rational>, b: &LinearMap<Rational>| a.commutator(b);
    let vectorize = |t: &LinearMap<Rational>| t.vectorize();
    let sat = span_saturate(n * n, seed, &op_refs, Some(&bracket), &vectorize);
    HolonomyAlgebra { algebra_dim: n, space: sat.span, basis_ops: sat.elements }
}

/// The span of `μ_i, Jμ_i` (the last column of `sl(2n+1)`) in the
/// coordinates of `B₊ ∪ J B₊`.
pub fn column_block(n: usize) -> Subspace<Rational> {
    let idx = SlIndex { n };
    block(&idx, (0..n).map(|i| idx.mu(i)))
}

/// The span of `γ_i, Jγ_i` (the bottom row).
pub fn row_block(n: usize) -> Subspace<Rational> {
    let idx = SlIndex { n };
    block(&idx, (0..n).map(|i| idx.gamma(i)))
}

fn block(idx: &SlIndex, plus: impl Iterator<Item = usize>) -> Subspace<Rational> {
    let d = idx.dim();
    Subspace::from_vectors(d, plus.flat_map(|k| [vector::unit(d, k), vector::unit(d, idx.minus(k))]))
}

/// `{T : [T,J] = 0, [T,E] = 0, Im T ⊆ W}` as a subspace of vectorized
/// operators.
pub fn commutant_with_image(cp: &ComplexProduct, image: &Subspace<Rational>) -> Subspace<Rational> {
    let d = cp.j.rows();
    let w = Matrix::from_columns(&image.basis());
    let k = w.cols();
    let build = |phi: &Matrix<Rational>| w.mul(phi);
    let mut columns = Vec::with_capacity(k * d);
    for a in 0..k {
        for b in 0..d {
            let t = build(&Matrix::unit(k, d, a, b));
            let mut eq = t.commutator(&cp.j).vectorize();
            eq.extend(t.commutator(&cp.e).vectorize());
            columns.push(eq);
        }
    }
    let system = Matrix::from_columns(&columns);
    Subspace::from_vectors(
        d * d,
        system.kernel().into_iter().map(|x| build(&Matrix::from_vector(k, d, x)).vectorize()),
    )
}

pub fn match_theorem44(h: &HolonomyAlgebra, cp: &ComplexProduct, n: usize) -> bool {
    h.same_span(&commutant_with_image(cp, &column_block(n)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuaternionicReport {
    pub in_gl_h: bool,
    pub in_sl_h: bool,
    pub in_v: bool,
    /// First operator with `tr X ≠ 0` and that trace.
    pub witness: Option<(usize, Rational)>,
}

/// `H(X,Y,Z,W)` in the ordering `B₁ ∪ B₂ ∪ B₃ ∪ B₄`.
pub fn quaternionic_matrix(
    x: &Matrix<Rational>,
    y: &Matrix<Rational>,
    z: &Matrix<Rational>,
    w: &Matrix<Rational>,
) -> Matrix<Rational> {
    let blocks = vec![
        vec![x.clone(), y.neg(), z.neg(), w.neg()],
        vec![y.clone(), x.clone(), w.neg(), z.clone()],
        vec![z.clone(), w.clone(), x.clone(), y.neg()],
        vec![w.clone(), z.neg(), y.clone(), x.clone()],
    ];
    Matrix::from_blocks(&blocks)
}

/// `(X, Y, Z, W)` with `T = H(X,Y,Z,W)`, when `T` has that form.
pub fn quaternionic_blocks(t: &Matrix<Rational>) -> Option<[Matrix<Rational>; 4]> {
    let m = t.rows() / 4;
    let b = |r| t.block(r * m, 0, m, m);
    let parts = [b(0), b(1), b(2), b(3)];
    (quaternionic_matrix(&parts[0], &parts[1], &parts[2], &parts[3]) == *t).then_some(parts)
}

pub fn quaternionic_classify(ops: &[LinearMap<Rational>], h: &Hypercomplex) -> Result<QuaternionicReport, HolonomyError> {
    let d = h.dim();
    if !d.is_multiple_of(4) {
        return Err(HolonomyError::NotQuaternionic(d));
    }
    let mut report = QuaternionicReport { in_gl_h: true, in_sl_h: true, in_v: true, witness: None };
    for (k, t) in ops.iter().enumerate() {
        let commutes = [&h.j1, &h.j2].iter().all(|j| t.mul(j) == j.mul(t));
        let parts = quaternionic_blocks(t).filter(|_| commutes).ok_or(HolonomyError::BlockDecompositionFail(k))?;
        let tr = parts[0].trace();
        if !tr.is_zero() && report.witness.is_none() {
            report.in_sl_h = false;
            report.witness = Some((k, tr));
        }
        if !(parts[2].is_zero() && parts[3].is_zero()) {
            report.in_v = false;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidirectReport {
    pub dim: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub ideal_abelian: bool,
    pub ideal_is_ideal: bool,
    pub shape_match: bool,
    pub bracket_law: bool,
}

/// The `n × 2n(n+1)` block `(A₁..Aₙ, B₁..Bₙ, C, D)` of an operator on
/// `sl(2n+1)` of the form `M^{⊕2}`, or `None` when the shape differs.
pub fn m_block(t: &LinearMap<Rational>, n: usize) -> Option<Matrix<Rational>> {
    let idx = SlIndex { n };
    let h = idx.half();
    let upper = t.block(0, 0, h, h);
    if t.block(h, h, h, h) != upper || !t.block(0, h, h, h).is_zero() || !t.block(h, 0, h, h).is_zero() {
        return None;
    }
    if !upper.block(0, 0, h - n, h).is_zero() {
        return None;
    }
    Some(upper.block(h - n, 0, n, h))
}

fn from_m_block(m: &Matrix<Rational>, n: usize) -> LinearMap<Rational> {
    let h = SlIndex { n }.half();
    let mut upper = Matrix::zeros(h, h);
    upper.set_block(h - n, 0, m);
    upper.direct_sum(&upper)
}

/// `[M, M′]` predicted from the parameters: `D·(A′,B′,C,D′) − D′·(A,B,C,D)`.
fn bracket_law(m: &Matrix<Rational>, m2: &Matrix<Rational>, n: usize) -> Matrix<Rational> {
    let h = SlIndex { n }.half();
    let d = m.block(0, h - n, n, n);
    let d2 = m2.block(0, h - n, n, n);
    d.mul(m2).sub(&d2.mul(m))
}

pub fn semidirect_report(hol: &HolonomyAlgebra, n: usize) -> SemidirectReport {
    let idx = SlIndex { n };
    let h = idx.half();
    let blocks: Option<Vec<Matrix<Rational>>> = hol.basis_ops.iter().map(|t| m_block(t, n)).collect();
    let dim = hol.dim();
    let Some(blocks) = blocks else {
        return SemidirectReport {
            dim,
            ideal_dim: 0,
            quotient_dim: dim,
            ideal_abelian: false,
            ideal_is_ideal: false,
            shape_match: false,
            bracket_law: false,
        };
    };
    let d_of = |m: &Matrix<Rational>| m.block(0, h - n, n, n).vectorize();
    let d_map = Matrix::from_columns(&blocks.iter().map(d_of).collect::<Vec<_>>());
    let ideal: Vec<LinearMap<Rational>> = d_map
        .kernel()
        .into_iter()
        .map(|c| {
            let mut m = Matrix::zeros(n, h);
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    m.axpy(ck, &blocks[k]);
                }
            }
            from_m_block(&m, n)
        })
        .collect();
    let ideal_space = Subspace::from_vectors(hol.algebra_dim.pow(2), ideal.iter().map(|t| t.vectorize()));
    let ideal_abelian = ideal.iter().all(|a| ideal.iter().all(|b| a.commutator(b).is_zero()));
    let ideal_is_ideal = hol.basis_ops.iter().all(|t| ideal.iter().all(|v| ideal_space.contains(&t.commutator(v).vectorize())));
    let bracket_ok = (0..blocks.len()).all(|i| {
        (0..blocks.len()).all(|j| {
            let actual = hol.basis_ops[i].commutator(&hol.basis_ops[j]);
            actual == from_m_block(&bracket_law(&blocks[i], &blocks[j], n), n)
        })
    });
    SemidirectReport {
        dim,
        ideal_dim: ideal_space.dim(),
        quotient_dim: dim - ideal_space.dim(),
        ideal_abelian,
        ideal_is_ideal,
        shape_match: true,
        bracket_law: bracket_ok,
    }
}

/// `hol^Ob = ((hol^CP)^ℂ)_ℝ`: span equality and `dim hol^Ob = 2 dim hol^CP`.
pub fn complexified_holonomy_check(cp: &HolonomyAlgebra, ih: &InducedHypercomplex, ob: &HolonomyAlgebra) -> bool {
    let d = ob.algebra_dim;
    let embedded = Subspace::from_vectors(
        d * d,
        cp.basis_ops.iter().flat_map(|t| [ih.extend(t).vectorize(), ih.extend_times_i(t).vectorize()]),
    );
    ob.dim() == 2 * cp.dim() && embedded.same_span(&ob.space)
}

/// Exported form of a holonomy algebra.
#[derive(Clone, Debug, Serialize)]
pub struct HolonomyExport {
    pub dim: usize,
    pub algebra_dim: usize,
    pub basis: Vec<Vec<Vec<String>>>,
}

impl HolonomyAlgebra {
    pub fn export(&self) -> HolonomyExport {
        let basis = self
            .basis_ops
            .iter()
            .map(|t| (0..t.rows()).map(|i| t.row(i).iter().map(|x| x.to_string()).collect()).collect())
            .collect();
        HolonomyExport { dim: self.dim(), algebra_dim: self.algebra_dim, basis }
    }
}

/// Whether every operator commutes with `J` (and with `E` when given).
pub fn commutes_with(ops: &[LinearMap<Rational>], maps: &[&LinearMap<Rational>]) -> bool {
    ops.iter().all(|t| maps.iter().all(|m| t.mul(m) == m.mul(t)))
}

/// The CP holonomy of `sl(2n+1,ℝ)`.
pub fn cp_holonomy(alg: &CpAlgebra) -> HolonomyAlgebra {
    ambrose_singer(alg.lie(), &crate::connections::cp_connection(alg.lie(), &alg.cp))
}
