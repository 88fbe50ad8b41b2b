//! Hyper-Hermitian metrics as exact linear families, the HKT equations and
//! positive-definiteness certificates.

use rayon::prelude::*;
use serde::Serialize;

use crate::liealg::{vector, Coordinates, LieAlgebra, LinearMap, Matrix, Subspace, Vector};
use crate::scalars::{Field, Rational, Ring};
use crate::structures::{check_hypercomplex, Hypercomplex, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HktError {
    #[error("the subspace is not invariant under J₁ and J₂")]
    NotInvariant,
    #[error("the subspace is not a subalgebra")]
    NotSubalgebra,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// `particular + span(directions)`, all symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricFamily {
    pub ambient_dim: usize,
    pub particular: Matrix<Rational>,
    pub directions: Vec<Matrix<Rational>>,
}

impl MetricFamily {
    pub fn all_symmetric(n: usize) -> MetricFamily {
        MetricFamily { ambient_dim: n, particular: Matrix::zeros(n, n), directions: symmetric_basis(n) }
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn member(&self, coeffs: &[Rational]) -> Matrix<Rational> {
        let mut g = self.particular.clone();
        for (c, d) in coeffs.iter().zip(&self.directions) {
            g.axpy(c, d);
        }
        g
    }

    fn direction_space(&self) -> Subspace<Rational> {
        let n = self.ambient_dim;
        Subspace::from_vectors(n * n, self.directions.iter().map(|d| d.vectorize()))
    }

    pub fn contains(&self, g: &Matrix<Rational>) -> bool {
        *g == g.transpose() && self.direction_space().contains(&g.sub(&self.particular).vectorize())
    }

    /// Same affine space.
    pub fn same_family(&self, other: &MetricFamily) -> bool {
        self.contains(&other.particular) && other.contains(&self.particular) && {
            let (a, b) = (self.direction_space(), other.direction_space());
            a.same_span(&b)
        }
    }

    /// Every member of `self` is a member of `other`.
    pub fn is_subfamily_of(&self, other: &MetricFamily) -> bool {
        other.contains(&self.particular)
            && self.directions.iter().all(|d| other.direction_space().contains(&d.vectorize()))
    }

    /// `{Pᵗ g P : g ∈ self}`.
    pub fn pullback(&self, p: &Matrix<Rational>) -> MetricFamily {
        let pt = p.transpose();
        let pull = |g: &Matrix<Rational>| pt.mul(g).mul(p);
        let k = p.cols();
        let space = Subspace::from_vectors(k * k, self.directions.iter().map(|d| pull(d).vectorize()));
        MetricFamily {
            ambient_dim: k,
            particular: pull(&self.particular),
            directions: space.basis().into_iter().map(|v| Matrix::from_vector(k, k, v)).collect(),
        }
    }

    /// Restriction to the members satisfying the homogeneous linear
    /// equations `f(d) = 0` evaluated on each direction.
    fn constrain(&self, equations: impl Fn(&Matrix<Rational>) -> Vector<Rational>) -> MetricFamily {
        assert!(self.particular.is_zero(), "constraints are imposed on homogeneous families");
        if self.directions.is_empty() {
            return self.clone();
        }
        let system = Matrix::from_columns(&self.directions.iter().map(equations).collect::<Vec<_>>());
        let kernel = system.kernel();
        let n = self.ambient_dim;
        let basis = Subspace::from_vectors(
            n * n,
            kernel.iter().map(|c| {
                let mut g = Matrix::zeros(n, n);
                for (ci, d) in c.iter().zip(&self.directions) {
                    if !ci.is_zero() {
                        g.axpy(ci, d);
                    }
                }
                g.vectorize()
            }),
        )
        .basis();
        MetricFamily {
            ambient_dim: n,
            particular: self.particular.clone(),
            directions: basis.into_iter().map(|v| Matrix::from_vector(n, n, v)).collect(),
        }
    }
}

fn symmetric_basis(n: usize) -> Vec<Matrix<Rational>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut m = Matrix::unit(n, n, i, j);
            m.set(j, i, Rational::one());
            out.push(m);
        }
    }
    out
}

fn preserves(g: &Matrix<Rational>, j: &LinearMap<Rational>) -> bool {
    j.transpose().mul(g).mul(j) == *g
}

/// Symmetric `g` with `g(J_α x, J_α y) = g(x, y)` for `α = 1, 2`.
pub fn hermitian_family(h: &Hypercomplex) -> MetricFamily {
    let fam = MetricFamily::all_symmetric(h.dim()).constrain(|g| {
        let mut eq = h.j1.transpose().mul(g).mul(&h.j1).sub(g).vectorize();
        eq.extend(h.j2.transpose().mul(g).mul(&h.j2).sub(g).vectorize());
        eq
    });
    debug_assert!(fam.directions.iter().all(|g| preserves(g, &h.j3)));
    fam
}

/// Whether every member is Hermitian for `J₃` as well.
pub fn hermitian_for_j3(fam: &MetricFamily, h: &Hypercomplex) -> bool {
    preserves(&fam.particular, &h.j3) && fam.directions.iter().all(|g| preserves(g, &h.j3))
}

/// `g([Jx,Jy],z) + g([Jy,Jz],x) + g([Jz,Jx],y)` as pairs `(k, v)` meaning
/// `Σ (g v)_k`.
fn cyclic_terms(
    l: &LieAlgebra<Rational>,
    j: &LinearMap<Rational>,
    t: (usize, usize, usize),
) -> [(usize, Vector<Rational>); 3] {
    let (jx, jy, jz) = (j.column(t.0), j.column(t.1), j.column(t.2));
    [(t.2, l.bracket(&jx, &jy)), (t.0, l.bracket(&jy, &jz)), (t.1, l.bracket(&jz, &jx))]
}

fn evaluate(g: &Matrix<Rational>, terms: &[(usize, Vector<Rational>)]) -> Rational {
    let mut s = Rational::zero();
    for (k, v) in terms {
        s.add_assign(&vector::dot(g.row(*k), v));
    }
    s
}

/// Imposes the HKT equalities on the listed basis triples.
pub fn hkt_constrain_triples(
    l: &LieAlgebra<Rational>,
    h: &Hypercomplex,
    fam: &MetricFamily,
    triples: &[(usize, usize, usize)],
) -> MetricFamily {
    let terms: Vec<[[(usize, Vector<Rational>); 3]; 3]> = triples
        .par_iter()
        .map(|&t| [1, 2, 3].map(|a| cyclic_terms(l, h.get(a), t)))
        .filter(|c| c.iter().flatten().any(|(_, v)| !vector::is_zero(v)))
        .collect();
    fam.constrain(|g| {
        terms
            .iter()
            .flat_map(|c| {
                let v: Vec<Rational> = c.iter().map(|t| evaluate(g, t)).collect();
                [v[0].sub(&v[1]), v[1].sub(&v[2])]
            })
            .collect()
    })
}

/// Imposes the HKT equalities on every basis triple. The expressions are
/// alternating, so `i < j < k` suffices.
pub fn hkt_constrain(l: &LieAlgebra<Rational>, h: &Hypercomplex, fam: &MetricFamily) -> MetricFamily {
    let n = l.dim();
    let triples: Vec<_> =
        (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k)))).collect();
    hkt_constrain_triples(l, h, fam, &triples)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// `g_ii = 0` on the whole family.
    ForcedZeroDiagonal { index: usize },
    /// `g_ii g_jj ≡ 0`, so the minor equals `−g_ij² ≤ 0`.
    ForcedNonPositiveMinor { i: usize, j: usize },
}

impl Certificate {
    /// The certificate's claim evaluated on one member.
    pub fn verify(&self, g: &Matrix<Rational>) -> bool {
        match *self {
            Certificate::ForcedZeroDiagonal { index } => g.get(index, index).is_zero(),
            Certificate::ForcedNonPositiveMinor { i, j } => {
                let minor = g.get(i, i).mul(g.get(j, j)).sub(&g.get(i, j).mul(g.get(i, j)));
                !minor.is_positive()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Infeasible(Certificate),
    Feasible(Matrix<Rational>),
    Undetermined,
}

/// Whether every leading principal minor is positive.
pub fn is_positive_definite(g: &Matrix<Rational>) -> bool {
    let n = g.rows();
    let mut a = g.clone();
    for k in 0..n {
        let p = a.get(k, k).clone();
        if !p.is_positive() {
            return false;
        }
        let inv = p.inv().expect("positive pivot");
        for i in k + 1..n {
            let f = a.get(i, k).mul(&inv);
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j).sub(&f.mul(a.get(k, j)));
                a.set(i, j, v);
            }
        }
    }
    true
}

pub fn pd_feasibility(fam: &MetricFamily) -> Feasibility {
    let n = fam.ambient_dim;
    let mut members = vec![fam.particular.clone()];
    members.extend(fam.directions.iter().cloned());
    let diag_zero = |i: usize| members.iter().all(|g| g.get(i, i).is_zero());
    if let Some(index) = (0..n).find(|&i| diag_zero(i)) {
        return Feasibility::Infeasible(Certificate::ForcedZeroDiagonal { index });
    }
    for i in 0..n {
        for j in i + 1..n {
            let vanishes = members.iter().enumerate().all(|(a, ga)| {
                members[a..]
                    .iter()
                    .all(|gb| ga.get(i, i).mul(gb.get(j, j)).add(&gb.get(i, i).mul(ga.get(j, j))).is_zero())
            });
            if vanishes {
                return Feasibility::Infeasible(Certificate::ForcedNonPositiveMinor { i, j });
            }
        }
    }
    let id = Matrix::identity(n);
    if fam.contains(&id) {
        return Feasibility::Feasible(id);
    }
    let mut candidates: Vec<Matrix<Rational>> = Vec::new();
    let mut sum = fam.particular.clone();
    for d in &fam.directions {
        let sign = if d.trace().is_negative() { Rational::from(-1) } else { Rational::one() };
        sum.axpy(&sign, d);
        candidates.push(fam.particular.add(&d.scale(&sign)));
    }
    candidates.push(sum);
    candidates.into_iter().find(is_positive_definite).map_or(Feasibility::Undetermined, Feasibility::Feasible)
}

/// A subalgebra carrying the restricted hypercomplex structure.
#[derive(Clone, Debug)]
pub struct Restricted {
    pub algebra: LieAlgebra<Rational>,
    pub structure: Hypercomplex,
}

/// The structure induced on the span of the columns of `p`.
pub fn restrict(l: &LieAlgebra<Rational>, h: &Hypercomplex, p: &Matrix<Rational>) -> Result<Restricted, HktError> {
    let cols = p.columns();
    let coords = Coordinates::new(l.dim(), &cols).ok_or(HktError::NotSubalgebra)?;
    let k = cols.len();
    let mut entries = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = coords.solve(&l.bracket(&cols[i], &cols[j])).ok_or(HktError::NotSubalgebra)?;
            entries.extend(w.into_iter().enumerate().map(|(m, c)| (i, j, m, c)));
        }
    }
    let algebra = LieAlgebra::from_entries(k, entries).map_err(StructureError::from)?;
    let map = |j: &LinearMap<Rational>| -> Result<Matrix<Rational>, HktError> {
        let images: Option<Vec<_>> = cols.iter().map(|c| coords.solve(&j.apply(c))).collect();
        Ok(Matrix::from_columns(&images.ok_or(HktError::NotInvariant)?))
    };
    let (j1, j2) = (map(&h.j1)?, map(&h.j2)?);
    let structure = check_hypercomplex(&algebra, &j1, &j2)?;
    Ok(Restricted { algebra, structure })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RestrictionReport {
    pub sub_dim: usize,
    pub ambient_family_dim: usize,
    pub pulled_back_dim: usize,
    pub own_family_dim: usize,
    /// The pullback of every HKT metric on the ambient algebra is HKT on the
    /// subalgebra.
    pub compatible: bool,
    pub own_certificate: Option<Certificate>,
}

/// Compares the pullback of the ambient HKT family with the subalgebra's own.
pub fn subalgebra_restriction_check(
    l: &LieAlgebra<Rational>,
    h: &Hypercomplex,
    p: &Matrix<Rational>,
) -> Result<RestrictionReport, HktError> {
    let sub = restrict(l, h, p)?;
    let ambient = hkt_constrain(l, h, &hermitian_family(h));
    let pulled = ambient.pullback(p);
    let own = hkt_constrain(&sub.algebra, &sub.structure, &hermitian_family(&sub.structure));
    let own_certificate = match pd_feasibility(&own) {
        Feasibility::Infeasible(c) => Some(c),
        _ => None,
    };
    Ok(RestrictionReport {
        sub_dim: p.cols(),
        ambient_family_dim: ambient.dim(),
        pulled_back_dim: pulled.dim(),
        own_family_dim: own.dim(),
        compatible: pulled.is_subfamily_of(&own),
        own_certificate,
    })
}

/// The displayed eight-by-eight shape in the parameters
/// `(a₁₁, a₁₃, a₁₄, a₁₇, a₁₈, a₃₃)`.
pub fn gl2c_shape(a: [i64; 6]) -> Matrix<Rational> {
    let [a11, a13, a14, a17, a18, a33] = a;
    Matrix::from_ints(&[
        &[a11, 0, a13, a14, 0, 0, a17, a18],
        &[0, a11, -a14, a13, 0, 0, -a18, a17],
        &[a13, -a14, a33, 0, -a17, -a18, 0, 0],
        &[a14, a13, 0, a33, a18, -a17, 0, 0],
        &[0, 0, -a17, a18, a11, 0, a13, -a14],
        &[0, 0, -a18, -a17, 0, a11, a14, a13],
        &[a17, -a18, 0, 0, a13, a14, a33, 0],
        &[a18, a17, 0, 0, -a14, a13, 0, a33],
    ])
}

/// The displayed shape as a family.
pub fn gl2c_shape_family() -> MetricFamily {
    let directions = (0..6)
        .map(|k| {
            let mut a = [0; 6];
            a[k] = 1;
            gl2c_shape(a)
        })
        .collect();
    MetricFamily { ambient_dim: 8, particular: Matrix::zeros(8, 8), directions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cp_structure_gl;
    use crate::structures::complexified_hypercomplex;

    fn gl2c() -> (LieAlgebra<Rational>, Hypercomplex) {
        let gl = cp_structure_gl(1).unwrap();
        complexified_hypercomplex(gl.lie(), &gl.cp).unwrap()
    }

    #[test]
    fn structure_on_paper_basis() {
        let (_, h) = gl2c();
        assert_eq!(h.j1.column(0), vector::neg(&vector::unit(8, 1)));
        assert_eq!(h.j2.column(0), vector::unit(8, 4));
        assert_eq!(h.j2.column(1), vector::neg(&vector::unit(8, 5)));
    }

    #[test]
    fn hermitian_family_matches_display() {
        let (_, h) = gl2c();
        let fam = hermitian_family(&h);
        assert_eq!(fam.dim(), 6);
        assert!(fam.same_family(&gl2c_shape_family()));
        assert!(hermitian_for_j3(&fam, &h));
        assert_eq!(pd_feasibility(&fam), Feasibility::Feasible(Matrix::identity(8)));
    }

    #[test]
    fn four_triples_force_zeros() {
        let (l, h) = gl2c();
        let fam = hermitian_family(&h);
        let red = hkt_constrain_triples(&l, &h, &fam, &[(0, 1, 2), (0, 1, 3), (0, 1, 7), (1, 2, 3)]);
        let expected = MetricFamily {
            ambient_dim: 8,
            particular: Matrix::zeros(8, 8),
            directions: vec![gl2c_shape([0, 0, 1, 0, 0, 0]), gl2c_shape([0, 0, 0, 0, 1, 0])],
        };
        assert!(red.same_family(&expected));
        let Feasibility::Infeasible(cert) = pd_feasibility(&red) else { panic!("expected a certificate") };
        assert_eq!(cert, Certificate::ForcedZeroDiagonal { index: 0 });
        assert!(red.is_subfamily_of(&fam));
        for c in [[1, 2], [-3, 5], [0, 7]] {
            assert!(cert.verify(&red.member(&[Rational::from(c[0]), Rational::from(c[1])])));
        }
        let full = hkt_constrain(&l, &h, &fam);
        assert!(full.is_subfamily_of(&red));
        assert!(full.directions.iter().all(|g| (0..8).all(|i| g.get(i, i).is_zero())));
    }

    #[test]
    fn abelian_cases() {
        let h = {
            let (_, h) = gl2c();
            h
        };
        let l = LieAlgebra::abelian(8);
        let fam = hermitian_family(&h);
        assert_eq!(hkt_constrain(&l, &h, &fam), fam);
        let abelian4 = LieAlgebra::<Rational>::abelian(4);
        let j1 = Matrix::<Rational>::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let j2 = Matrix::<Rational>::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
        let hq = check_hypercomplex(&abelian4, &j1, &j2).unwrap();
        assert_eq!(hermitian_family(&hq).dim(), 1);
    }

    #[test]
    fn trivial_feasibility() {
        let fam = MetricFamily::all_symmetric(3);
        assert_eq!(pd_feasibility(&fam), Feasibility::Feasible(Matrix::identity(3)));
        assert!(!is_positive_definite(&Matrix::from_ints(&[&[1, 2], &[2, 1]])));
    }
}
