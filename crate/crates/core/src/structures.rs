//! Complex, product, complex product and hypercomplex structures.

use crate::liealg::{
    complexify, realify, vector, LieAlgebra, LieError, LinearMap, Matrix, RealOrdering, Subspace,
    Vector,
};
use crate::scalars::{ComplexRing, GaussRational, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("dimension mismatch: algebra has dim {algebra}, map has size {map}")]
    DimensionMismatch { algebra: usize, map: usize },
    #[error("square: J² ≠ −Id")]
    NotComplexSquare,
    #[error("square: E² ≠ Id")]
    NotInvolution,
    #[error("Nijenhuis tensor nonzero on basis pair ({0}, {1})")]
    IntegrabilityFail(usize, usize),
    #[error("JE ≠ −EJ")]
    AnticommuteFail,
    #[error("the {0} eigenspace of E is not a subalgebra")]
    EigenspaceNotSubalgebra(i8),
    #[error("J does not map g₊ onto g₋")]
    NotSwapped,
    #[error("quaternion relations fail: {0}")]
    QuaternionRelation(&'static str),
    #[error("m ⊕ σ(m) is not the whole algebra")]
    NotComplement,
    #[error("m is not closed under the bracket")]
    NotSubalgebra,
    #[error("the resulting map is not real")]
    NotReal,
    #[error(transparent)]
    Lie(#[from] LieError),
}

fn check_size<S: Ring>(l: &LieAlgebra<S>, m: &Matrix<S>) -> Result<(), StructureError> {
    if !m.is_square() || m.rows() != l.dim() {
        return Err(StructureError::DimensionMismatch { algebra: l.dim(), map: m.rows() });
    }
    Ok(())
}

/// `N_J(x,y) = [x,y] + J([Jx,y] + [x,Jy]) − [Jx,Jy]`
pub fn nijenhuis<S: Ring>(l: &LieAlgebra<S>, j: &LinearMap<S>, x: &[S], y: &[S]) -> Vector<S> {
    let jx = j.apply(x);
    let jy = j.apply(y);
    let inner = vector::add(&l.bracket(&jx, y), &l.bracket(x, &jy));
    let mut out = vector::add(&l.bracket(x, y), &j.apply(&inner));
    let t = l.bracket(&jx, &jy);
    for (o, s) in out.iter_mut().zip(&t) {
        o.sub_assign(s);
    }
    out
}

fn almost_complex<S: Ring>(l: &LieAlgebra<S>, j: &LinearMap<S>) -> Result<(), StructureError> {
    check_size(l, j)?;
    if !j.mul(j).add(&Matrix::identity(l.dim())).is_zero() {
        return Err(StructureError::NotComplexSquare);
    }
    Ok(())
}

/// Checks `J² = −Id` and `N_J = 0` on all basis pairs.
pub fn check_complex_structure<S: Ring>(
    l: &LieAlgebra<S>,
    j: &LinearMap<S>,
) -> Result<(), StructureError> {
    almost_complex(l, j)?;
    let n = l.dim();
    for a in 0..n {
        for b in a + 1..n {
            let v = nijenhuis(l, j, &vector::unit(n, a), &vector::unit(n, b));
            if !vector::is_zero(&v) {
                return Err(StructureError::IntegrabilityFail(a, b));
            }
        }
    }
    Ok(())
}

pub fn is_complex_structure<S: Ring>(l: &LieAlgebra<S>, j: &LinearMap<S>) -> bool {
    check_complex_structure(l, j).is_ok()
}

/// First basis pair violating `J[X,Y] = [JX,Y] + [X,JY] + J[JX,JY]`.
pub fn integrability_identity_failure<S: Ring>(
    l: &LieAlgebra<S>,
    j: &LinearMap<S>,
) -> Option<(usize, usize)> {
    let n = l.dim();
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (vector::unit::<S>(n, a), vector::unit::<S>(n, b));
            let (jx, jy) = (j.apply(&x), j.apply(&y));
            let lhs = j.apply(&l.bracket(&x, &y));
            let rhs = vector::add(
                &vector::add(&l.bracket(&jx, &y), &l.bracket(&x, &jy)),
                &j.apply(&l.bracket(&jx, &jy)),
            );
            if lhs != rhs {
                return Some((a, b));
            }
        }
    }
    None
}

fn eigenspace(m: &LinearMap<Rational>, value: i64) -> Subspace<Rational> {
    let shifted = m.sub(&Matrix::identity(m.rows()).scale(&Rational::from(value)));
    Subspace::from_vectors(m.rows(), shifted.kernel())
}

/// Checks `E² = Id` and returns the `±1` eigenspaces, both subalgebras.
pub fn check_product_structure(
    l: &LieAlgebra<Rational>,
    e: &LinearMap<Rational>,
) -> Result<(Subspace<Rational>, Subspace<Rational>), StructureError> {
    check_size(l, e)?;
    if !e.mul(e).is_identity() {
        return Err(StructureError::NotInvolution);
    }
    let plus = eigenspace(e, 1);
    let minus = eigenspace(e, -1);
    if !l.is_subalgebra(&plus.basis()) {
        return Err(StructureError::EigenspaceNotSubalgebra(1));
    }
    if !l.is_subalgebra(&minus.basis()) {
        return Err(StructureError::EigenspaceNotSubalgebra(-1));
    }
    Ok((plus, minus))
}

/// A validated complex product structure `{J, E}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexProduct {
    pub j: LinearMap<Rational>,
    pub e: LinearMap<Rational>,
    pub g_plus: Subspace<Rational>,
    pub g_minus: Subspace<Rational>,
}

impl ComplexProduct {
    /// The third product structure `F = JE`.
    pub fn f(&self) -> LinearMap<Rational> {
        self.j.mul(&self.e)
    }

    /// Projections `π± = (Id ± E)/2` onto `g±`.
    pub fn projections(&self) -> (LinearMap<Rational>, LinearMap<Rational>) {
        let id = Matrix::identity(self.e.rows());
        let half = Rational::new(1, 2);
        (id.add(&self.e).scale(&half), id.sub(&self.e).scale(&half))
    }
}

pub fn is_complex_product(
    l: &LieAlgebra<Rational>,
    j: &LinearMap<Rational>,
    e: &LinearMap<Rational>,
) -> Result<ComplexProduct, StructureError> {
    almost_complex(l, j)?;
    check_size(l, e)?;
    if !e.mul(e).is_identity() {
        return Err(StructureError::NotInvolution);
    }
    if !j.mul(e).add(&e.mul(j)).is_zero() {
        return Err(StructureError::AnticommuteFail);
    }
    let (g_plus, g_minus) = check_product_structure(l, e)?;
    let image = Subspace::from_vectors(l.dim(), g_plus.basis().iter().map(|v| j.apply(v)));
    if !image.same_span(&g_minus) || g_plus.dim() + g_minus.dim() != l.dim() {
        return Err(StructureError::NotSwapped);
    }
    check_complex_structure(l, j)?;
    Ok(ComplexProduct { j: j.clone(), e: e.clone(), g_plus, g_minus })
}

/// `J₁, J₂, J₃ = J₁J₂`, all integrable.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypercomplex {
    pub j1: LinearMap<Rational>,
    pub j2: LinearMap<Rational>,
    pub j3: LinearMap<Rational>,
}

impl Hypercomplex {
    pub fn get(&self, alpha: usize) -> &LinearMap<Rational> {
        match alpha {
            1 => &self.j1,
            2 => &self.j2,
            3 => &self.j3,
            _ => panic!("complex structures are indexed 1, 2, 3"),
        }
    }

    /// `a₁J₁ + a₂J₂ + a₃J₃`
    pub fn sphere_point(&self, a: [&Rational; 3]) -> LinearMap<Rational> {
        self.j1.scale(a[0]).add(&self.j2.scale(a[1])).add(&self.j3.scale(a[2]))
    }

    pub fn dim(&self) -> usize {
        self.j1.rows()
    }
}

/// Builds and validates `{J₁, J₂, J₁J₂}`. Integrability of all three is
/// checked.
pub fn check_hypercomplex(
    l: &LieAlgebra<Rational>,
    j1: &LinearMap<Rational>,
    j2: &LinearMap<Rational>,
) -> Result<Hypercomplex, StructureError> {
    almost_complex(l, j1)?;
    almost_complex(l, j2)?;
    let j3 = j1.mul(j2);
    if j2.mul(j1) != j3.neg() {
        return Err(StructureError::QuaternionRelation("J₂J₁ ≠ −J₁J₂"));
    }
    check_complex_structure(l, j1)?;
    check_complex_structure(l, j2)?;
    check_complex_structure(l, &j3)?;
    Ok(Hypercomplex { j1: j1.clone(), j2: j2.clone(), j3 })
}

/// The hypercomplex algebra `ĝ = (g^ℂ)_ℝ` carried by a complex product
/// structure, written in the basis `B₁ ∪ B₂ ∪ B₃ ∪ B₄`.
#[derive(Clone, Debug)]
pub struct InducedHypercomplex {
    pub algebra: LieAlgebra<Rational>,
    pub structure: Hypercomplex,
    /// Columns `B₊, J B₊` in the coordinates of `g`.
    pub adapted: Matrix<Rational>,
    pub adapted_inverse: Matrix<Rational>,
    pub ordering: RealOrdering,
}

impl InducedHypercomplex {
    /// Coordinates in `ĝ` of a vector of `g`.
    pub fn embed(&self, x: &[Rational]) -> Vector<Rational> {
        let z: Vec<GaussRational> =
            self.adapted_inverse.apply(x).into_iter().map(GaussRational::real).collect();
        self.ordering.real_coords(&z)
    }

    /// ℂ-linear extension to `ĝ` of a map on `g`.
    pub fn extend(&self, t: &LinearMap<Rational>) -> LinearMap<Rational> {
        self.ordering.extend_map(&t.conjugate_by(&self.adapted, &self.adapted_inverse))
    }

    /// `i·T^ℂ` on `ĝ` for a map `T` on `g`.
    pub fn extend_times_i(&self, t: &LinearMap<Rational>) -> LinearMap<Rational> {
        self.ordering.mult_i().mul(&self.extend(t))
    }
}

fn adapted_frame(cp: &ComplexProduct) -> Result<(Matrix<Rational>, Matrix<Rational>), StructureError> {
    let plus = cp.g_plus.basis();
    let mut cols = plus.clone();
    cols.extend(plus.iter().map(|b| cp.j.apply(b)));
    let p = Matrix::from_columns(&cols);
    let inv = p.inverse().ok_or(StructureError::NotSwapped)?;
    Ok((p, inv))
}

/// `J₁(x+iy) = Jx + iJy`, `J₂ = i·E^ℂ`, in the ordering `B₁ ∪ B₂ ∪ B₃ ∪ B₄`
/// built from the reduced basis of `g₊`.
pub fn induced_hypercomplex(
    l: &LieAlgebra<Rational>,
    cp: &ComplexProduct,
) -> Result<InducedHypercomplex, StructureError> {
    let (p, p_inv) = adapted_frame(cp)?;
    let adapted = l.change_basis(&p)?;
    let ordering = RealOrdering::quaternionic(l.dim())?;
    let algebra = realify(&complexify(&adapted), &ordering)?;
    let jp = cp.j.conjugate_by(&p, &p_inv);
    let ep = cp.e.conjugate_by(&p, &p_inv);
    let j1 = ordering.extend_map(&jp);
    let j2 = ordering.mult_i().mul(&ordering.extend_map(&ep));
    let structure = check_hypercomplex(&algebra, &j1, &j2)?;
    Ok(InducedHypercomplex { algebra, structure, adapted: p, adapted_inverse: p_inv, ordering })
}

/// The same hypercomplex structure in the plain realified basis
/// `(e_1..e_n, ie_1..ie_n)` of the original coordinates.
pub fn complexified_hypercomplex(
    l: &LieAlgebra<Rational>,
    cp: &ComplexProduct,
) -> Result<(LieAlgebra<Rational>, Hypercomplex), StructureError> {
    let ordering = RealOrdering::standard(l.dim());
    let algebra = realify(&complexify(l), &ordering)?;
    let j1 = ordering.extend_map(&cp.j);
    let j2 = ordering.mult_i().mul(&ordering.extend_map(&cp.e));
    let h = check_hypercomplex(&algebra, &j1, &j2)?;
    Ok((algebra, h))
}

/// `g^{0,1} = ker(J^ℂ + i)` in the complexified algebra.
pub fn minus_i_eigenspace(
    lc: &LieAlgebra<GaussRational>,
    j: &LinearMap<Rational>,
) -> Result<Subspace<GaussRational>, StructureError> {
    let n = lc.dim();
    if j.rows() != n {
        return Err(StructureError::DimensionMismatch { algebra: n, map: j.rows() });
    }
    let jc = j.map(|x| GaussRational::real(x.clone()));
    let shifted = jc.add(&Matrix::identity(n).scale(&GaussRational::i()));
    let m = Subspace::from_vectors(n, shifted.kernel());
    if 2 * m.dim() != n || m.sum(&m.sigma()).dim() != n {
        return Err(StructureError::NotComplexSquare);
    }
    if !lc.is_subalgebra(&m.basis()) {
        return Err(StructureError::NotSubalgebra);
    }
    Ok(m)
}

/// The real complex structure with `J = −i` on `m` and `J = i` on `σ(m)`.
pub fn complex_structure_from_subalgebra(
    lc: &LieAlgebra<GaussRational>,
    m: &Subspace<GaussRational>,
) -> Result<LinearMap<Rational>, StructureError> {
    let n = lc.dim();
    let b = m.basis();
    let sb: Vec<Vector<GaussRational>> = b.iter().map(|v| vector::conj(v)).collect();
    if 2 * b.len() != n || m.sum(&m.sigma()).dim() != n {
        return Err(StructureError::NotComplement);
    }
    if !lc.is_subalgebra(&b) {
        return Err(StructureError::NotSubalgebra);
    }
    let mut cols = b.clone();
    cols.extend(sb);
    let p = Matrix::from_columns(&cols);
    let inv = p.inverse().ok_or(StructureError::NotComplement)?;
    let h = n / 2;
    let d = Matrix::from_fn(n, n, |r, c| {
        if r != c {
            GaussRational::zero()
        } else if r < h {
            GaussRational::from_ints(0, -1)
        } else {
            GaussRational::i()
        }
    });
    let jc = p.mul(&d).mul(&inv);
    if jc.entries().iter().any(|z| !z.is_real()) {
        return Err(StructureError::NotReal);
    }
    Ok(jc.map(|z| z.re.clone()))
}
