//! Left-invariant connections as left-multiplication operators.

use crate::catalog::SlBlocks;
use crate::liealg::{vector, Coordinates, LieAlgebra, LieError, LinearMap, Matrix, RealOrdering, Subspace, Vector};
use crate::scalars::{Rational, Ring};
use crate::structures::{ComplexProduct, Hypercomplex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectionError {
    #[error("∇ leaves the subalgebra on basis pair ({0}, {1})")]
    NotClosed(usize, usize),
    #[error("connection has {connection} operators, algebra has dimension {algebra}")]
    DimensionMismatch { connection: usize, algebra: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `∇` stored as the operators `∇_{e_i}`; column `j` of `ops[i]` is
/// `∇_{e_i} e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    ops: Vec<LinearMap<Rational>>,
}

/// Which derivative `∇_u R(x,y)` to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum DerivativeMode {
    /// `[∇_u, R(x,y)]`
    Commutator,
    /// `[∇_u, R(x,y)] − R(∇_u x, y) − R(x, ∇_u y)`
    Tensorial,
}

impl Connection {
    pub fn from_ops(ops: Vec<LinearMap<Rational>>) -> Connection {
        let n = ops.len();
        assert!(ops.iter().all(|m| m.rows() == n && m.cols() == n), "operators must be {n}×{n}");
        Connection { ops }
    }

    /// `∇_x y = Γ(x, y)` for a bilinear `Γ` given on basis vectors.
    pub fn from_bilinear(dim: usize, f: impl Fn(usize, usize) -> Vector<Rational>) -> Connection {
        let ops = (0..dim)
            .map(|i| Matrix::from_columns(&(0..dim).map(|j| f(i, j)).collect::<Vec<_>>()))
            .collect();
        Connection { ops }
    }

    pub fn zero(dim: usize) -> Connection {
        Connection { ops: vec![Matrix::zeros(dim, dim); dim] }
    }

    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[LinearMap<Rational>] {
        &self.ops
    }

    /// `∇_x` as an operator.
    pub fn nabla(&self, x: &[Rational]) -> LinearMap<Rational> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (c, op) in x.iter().zip(&self.ops) {
            if !c.is_zero() {
                m.axpy(c, op);
            }
        }
        m
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector<Rational> {
        self.nabla(x).apply(y)
    }

    fn check(&self, l: &LieAlgebra<Rational>) -> Result<(), ConnectionError> {
        if l.dim() != self.dim() {
            return Err(ConnectionError::DimensionMismatch { connection: self.dim(), algebra: l.dim() });
        }
        Ok(())
    }

    /// `T(x,y) = ∇_x y − ∇_y x − [x,y]`
    pub fn torsion(&self, l: &LieAlgebra<Rational>, x: &[Rational], y: &[Rational]) -> Vector<Rational> {
        let t = vector::sub(&self.apply(x, y), &self.apply(y, x));
        vector::sub(&t, &l.bracket(x, y))
    }

    pub fn is_torsion_free(&self, l: &LieAlgebra<Rational>) -> bool {
        let n = l.dim();
        self.check(l).is_ok()
            && (0..n).all(|i| {
                (i + 1..n).all(|j| vector::is_zero(&self.torsion(l, &vector::unit(n, i), &vector::unit(n, j))))
            })
    }

    /// `∇T = 0`, i.e. `T` commutes with every `∇_x`.
    pub fn is_parallel(&self, t: &LinearMap<Rational>) -> bool {
        self.ops.iter().all(|op| op.mul(t) == t.mul(op))
    }

    pub fn is_flat(&self, l: &LieAlgebra<Rational>) -> bool {
        let n = l.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.curvature_basis(l, i, j).is_zero()))
    }

    /// `R(x,y) = ∇_x∇_y − ∇_y∇_x − ∇_{[x,y]}`
    pub fn curvature(&self, l: &LieAlgebra<Rational>, x: &[Rational], y: &[Rational]) -> LinearMap<Rational> {
        let (nx, ny) = (self.nabla(x), self.nabla(y));
        nx.commutator(&ny).sub(&self.nabla(&l.bracket(x, y)))
    }

    pub fn curvature_basis(&self, l: &LieAlgebra<Rational>, i: usize, j: usize) -> LinearMap<Rational> {
        let n = l.dim();
        let mut r = self.ops[i].commutator(&self.ops[j]);
        for (k, c) in l.bracket_basis(i, j) {
            r.axpy(&c.neg(), &self.ops[*k]);
        }
        debug_assert_eq!(r.rows(), n);
        r
    }

    pub fn cov_deriv_curvature(
        &self,
        l: &LieAlgebra<Rational>,
        u: &[Rational],
        x: &[Rational],
        y: &[Rational],
        mode: DerivativeMode,
    ) -> LinearMap<Rational> {
        let nu = self.nabla(u);
        let plain = nu.commutator(&self.curvature(l, x, y));
        match mode {
            DerivativeMode::Commutator => plain,
            DerivativeMode::Tensorial => plain
                .sub(&self.curvature(l, &nu.apply(x), y))
                .sub(&self.curvature(l, x, &nu.apply(y))),
        }
    }

    /// The induced connection on a subalgebra, in the coordinates of its
    /// reduced basis, together with that subalgebra's structure.
    pub fn restrict(
        &self,
        l: &LieAlgebra<Rational>,
        sub: &Subspace<Rational>,
    ) -> Result<(LieAlgebra<Rational>, Connection), ConnectionError> {
        self.check(l)?;
        let basis = sub.basis();
        let coords = Coordinates::new(l.dim(), &basis).ok_or(LieError::DependentBasis)?;
        let k = basis.len();
        let mut entries = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let w = coords.solve(&l.bracket(&basis[i], &basis[j])).ok_or(LieError::NotClosed(i, j))?;
                entries.extend(w.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (i, j, m, c)));
            }
        }
        let algebra = LieAlgebra::from_entries(k, entries)?;
        let mut ops = Vec::with_capacity(k);
        for (i, bi) in basis.iter().enumerate() {
            let op = self.nabla(bi);
            let cols: Result<Vec<_>, _> = basis
                .iter()
                .enumerate()
                .map(|(j, bj)| coords.solve(&op.apply(bj)).ok_or(ConnectionError::NotClosed(i, j)))
                .collect();
            ops.push(Matrix::from_columns(&cols?));
        }
        Ok((algebra, Connection { ops }))
    }

    /// The connection in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<Rational>, p_inv: &Matrix<Rational>) -> Connection {
        let ops = p.columns().iter().map(|col| self.nabla(col).conjugate_by(p, p_inv)).collect();
        Connection { ops }
    }

    /// ℂ-linear extension to `(g^ℂ)_ℝ` in the given ordering.
    pub fn complexify(&self, ordering: &RealOrdering) -> Connection {
        let n = self.dim();
        let i_map = ordering.mult_i();
        let ops = ordering
            .order()
            .iter()
            .map(|&old| {
                let ext = ordering.extend_map(&self.ops[old % n]);
                if old < n {
                    ext
                } else {
                    i_map.mul(&ext)
                }
            })
            .collect();
        Connection { ops }
    }
}

/// The connection with `∇J = ∇E = 0` and no torsion, from the four-case
/// formula on `g₊ ⊕ g₋`.
pub fn cp_connection(l: &LieAlgebra<Rational>, cp: &ComplexProduct) -> Connection {
    let n = l.dim();
    let (pp, pm) = cp.projections();
    let j = &cp.j;
    let nabla = |x: &[Rational], y: &[Rational]| -> Vector<Rational> {
        let (xp, xm) = (pp.apply(x), pm.apply(x));
        let (yp, ym) = (pp.apply(y), pm.apply(y));
        let pp_part = vector::neg(&pp.apply(&j.apply(&l.bracket(&xp, &j.apply(&yp)))));
        let mm_part = vector::neg(&pm.apply(&j.apply(&l.bracket(&xm, &j.apply(&ym)))));
        let pm_part = pm.apply(&l.bracket(&xp, &ym));
        let mp_part = pp.apply(&l.bracket(&xm, &yp));
        vector::add(&vector::add(&pp_part, &mm_part), &vector::add(&pm_part, &mp_part))
    };
    Connection::from_bilinear(n, |i, k| nabla(&vector::unit(n, i), &vector::unit(n, k)))
}

/// `¼{[x,y] − [Ex,Ey] + E[x,Ey] − E[Ex,y] − J[x,Jy] − J[Ex,Fy] + F[x,Fy] + F[Ex,Jy]}`
pub fn cp_quarter_formula(l: &LieAlgebra<Rational>, cp: &ComplexProduct, x: &[Rational], y: &[Rational]) -> Vector<Rational> {
    let (j, e) = (&cp.j, &cp.e);
    let f = cp.f();
    let b = |a: &[Rational], c: &[Rational]| l.bracket(a, c);
    let (ex, ey, jy, fy) = (e.apply(x), e.apply(y), j.apply(y), f.apply(y));
    let terms = [
        b(x, y),
        vector::neg(&b(&ex, &ey)),
        e.apply(&b(x, &ey)),
        vector::neg(&e.apply(&b(&ex, y))),
        vector::neg(&j.apply(&b(x, &jy))),
        vector::neg(&j.apply(&b(&ex, &fy))),
        f.apply(&b(x, &fy)),
        f.apply(&b(&ex, &jy)),
    ];
    let mut s = vector::zeros(l.dim());
    for t in &terms {
        s = vector::add(&s, t);
    }
    vector::scale(&Rational::new(1, 4), &s)
}

/// `½([x,y] + J₁[J₁x,y] − J₂[x,J₂y] + J₃[J₁x,J₂y])`
pub fn obata_connection(l: &LieAlgebra<Rational>, h: &Hypercomplex) -> Connection {
    let n = l.dim();
    let half = Rational::new(1, 2);
    Connection::from_bilinear(n, |i, k| {
        let (x, y) = (vector::unit::<Rational>(n, i), vector::unit::<Rational>(n, k));
        let j1x = h.j1.apply(&x);
        let j2y = h.j2.apply(&y);
        let mut s = l.bracket(&x, &y);
        s = vector::add(&s, &h.j1.apply(&l.bracket(&j1x, &y)));
        s = vector::sub(&s, &h.j2.apply(&l.bracket(&x, &j2y)));
        s = vector::add(&s, &h.j3.apply(&l.bracket(&j1x, &j2y)));
        vector::scale(&half, &s)
    })
}

/// Flatness of `∇^CP` restricted to `g₊` or `g₋`.
#[derive(Clone, Debug)]
pub struct FlatnessReport {
    pub side: Side,
    pub dim: usize,
    pub flat: bool,
    pub torsion_free: bool,
    pub algebra: LieAlgebra<Rational>,
    pub connection: Connection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    Plus,
    Minus,
}

pub fn restrict_and_flatness(
    l: &LieAlgebra<Rational>,
    cp: &ComplexProduct,
    side: Side,
) -> Result<FlatnessReport, ConnectionError> {
    let c = cp_connection(l, cp);
    let sub = match side {
        Side::Plus => &cp.g_plus,
        Side::Minus => &cp.g_minus,
    };
    let (algebra, connection) = c.restrict(l, sub)?;
    Ok(FlatnessReport {
        side,
        dim: algebra.dim(),
        flat: connection.is_flat(&algebra),
        torsion_free: connection.is_torsion_free(&algebra),
        algebra,
        connection,
    })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    vector::dot(a, b)
}

fn br(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    a.commutator(b)
}

fn id_scaled(n: usize, c: &Rational) -> Matrix<Rational> {
    Matrix::identity(n).scale(c)
}

/// `ξ(x₊, y₋, z₊)`, with `x₊ = (A, B, v₁, w₂)`, `y₋ = (G, H, z₁, y₂)` and
/// `z₊ = (U, V, p₁, q₂)` read from the respective blocks.
pub fn closed_form_xi(x: &SlBlocks<Rational>, y: &SlBlocks<Rational>, z: &SlBlocks<Rational>) -> Vector<Rational> {
    let (a, b, v1, w2) = (&x.a, &x.b, &x.v1, &x.w2);
    let (g, h, z1, y2) = (&y.c, &y.d, &y.w1, &y.v2);
    let (u, v, p1, q2) = (&z.a, &z.b, &z.v1, &z.w2);
    let m1 = br(a, h).add(&br(g, b));
    let m2 = br(v, a).add(&br(b, u));
    let m3 = br(g, v).add(&br(u, h));
    let mut s = m1.apply(q2);
    s = vector::add(&s, &m2.apply(z1));
    s = vector::add(&s, &m3.apply(w2));
    vector::axpy(&mut s, &dot(v1, z1).sub(&dot(y2, w2)), q2);
    vector::axpy(&mut s, &dot(v1, q2).add(&dot(w2, p1)), z1);
    vector::axpy(&mut s, &dot(p1, z1).sub(&dot(y2, q2)), w2);
    s
}

/// The matrix of `sl(2n+1)` whose only nonzero block is `w₂ = v`.
pub fn embed_mu(v: &[Rational]) -> Matrix<Rational> {
    let mut b = SlBlocks::zero(v.len());
    b.w2 = v.to_vec();
    b.assemble()
}

/// Which of the two covariant-derivative closed forms to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum NuSign {
    /// `u₊ = (X, Y, s₂, r₁)`
    Plus,
    /// `u₋ = (Z, W, s₁, r₂)`
    Minus,
}

/// Form of the `w₂`-coefficient in `ν₋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum NuVariant {
    /// `⟨y₂,Wq₂⟩ − ⟨y₂,Vs₁⟩ − ⟨r₂,Vz₁⟩`
    Corrected,
    /// `⟨y₂,Wq₂⟩ − ⟨y₂,Vs₁⟩ − ⟨r₂,Vs₁⟩`
    AsPrinted,
}

/// `ν±(u, x₊, y₋, z₊)`.
pub fn closed_form_nu(
    sign: NuSign,
    u: &SlBlocks<Rational>,
    x: &SlBlocks<Rational>,
    y: &SlBlocks<Rational>,
    z: &SlBlocks<Rational>,
) -> Vector<Rational> {
    closed_form_nu_variant(sign, NuVariant::Corrected, u, x, y, z)
}

pub fn closed_form_nu_variant(
    sign: NuSign,
    variant: NuVariant,
    u_: &SlBlocks<Rational>,
    x: &SlBlocks<Rational>,
    y: &SlBlocks<Rational>,
    z: &SlBlocks<Rational>,
) -> Vector<Rational> {
    let n = x.n();
    let (a, b, v1, w2) = (&x.a, &x.b, &x.v1, &x.w2);
    let (g, h, z1, y2) = (&y.c, &y.d, &y.w1, &y.v2);
    let (u, v, p1, q2) = (&z.a, &z.b, &z.v1, &z.w2);
    let two = Rational::from(2);
    let ah_gb = br(a, h).add(&br(g, b));
    let mut s = vector::zeros(n);
    match sign {
        NuSign::Plus => {
            let (xm, ym, s2, r1) = (&u_.a, &u_.b, &u_.w2, &u_.v1);
            let yu = ym.mul(u);
            let c1 = br(a, &yu)
                .add(&xm.mul(&br(v, a)))
                .add(&br(xm, b).mul(u))
                .add(&xm.scale(&dot(w2, p1).add(&dot(q2, v1))));
            s = vector::add(&s, &c1.apply(z1));
            let k2 = dot(&u.apply(s2), v1).add(&dot(&xm.apply(q2), v1)).add(&dot(&u.apply(w2), r1)).neg();
            vector::axpy(&mut s, &k2, z1);
            let c3 = br(&yu, g)
                .add(&xm.mul(&br(g, v)))
                .add(&br(h, xm).mul(u))
                .add(&xm.scale(&dot(z1, p1).sub(&dot(q2, y2))));
            s = vector::add(&s, &c3.apply(w2));
            let k4 = dot(&u.apply(s2), y2).add(&dot(&xm.apply(q2), y2)).sub(&dot(&u.apply(z1), r1));
            vector::axpy(&mut s, &k4, w2);
            s = vector::add(&s, &br(xm, &ah_gb).apply(q2));
            let c6 = br(h, a)
                .mul(u)
                .add(&br(b, g).mul(u))
                .add(&u.scale(&dot(y2, w2)))
                .sub(&u.scale(&dot(v1, z1)));
            s = vector::add(&s, &c6.apply(s2));
            let c7 = id_scaled(n, &dot(&g.apply(w2), p1).sub(&dot(&a.apply(z1), p1)))
                .add(&a.scale(&dot(z1, p1)))
                .sub(&g.scale(&dot(w2, p1)));
            s = vector::add(&s, &c7.apply(s2));
            let t1 = br(g, v).add(&br(u, h)).add(&id_scaled(n, &two.mul(&dot(z1, p1)))).apply(w2);
            let t2 = br(v, a).add(&br(b, u)).add(&id_scaled(n, &two.mul(&dot(w2, p1)))).apply(z1);
            vector::axpy(&mut s, &xm.trace(), &vector::add(&t1, &t2));
        }
        NuSign::Minus => {
            let (zm, wm, s1, r2) = (&u_.c, &u_.d, &u_.w1, &u_.v2);
            let zv = zm.mul(v);
            let c1 = br(&zv, b)
                .add(&br(a, wm).mul(v))
                .add(&wm.mul(&br(b, u)))
                .add(&wm.scale(&dot(v1, q2).add(&dot(p1, w2))));
            s = vector::add(&s, &c1.apply(z1));
            let k2 = dot(v1, &v.apply(s1)).sub(&dot(v1, &wm.apply(q2))).sub(&dot(r2, &v.apply(w2)));
            vector::axpy(&mut s, &k2, z1);
            let c3 = br(h, &zv)
                .add(&br(wm, g).mul(v))
                .add(&wm.mul(&br(u, h)))
                .add(&wm.scale(&dot(p1, z1).sub(&dot(y2, q2))));
            s = vector::add(&s, &c3.apply(w2));
            let last = match variant {
                NuVariant::Corrected => dot(r2, &v.apply(z1)),
                NuVariant::AsPrinted => dot(r2, &v.apply(s1)),
            };
            let k4 = dot(y2, &wm.apply(q2)).sub(&dot(y2, &v.apply(s1))).sub(&last);
            vector::axpy(&mut s, &k4, w2);
            s = vector::add(&s, &br(wm, &ah_gb).apply(q2));
            let c6 = ah_gb
                .mul(v)
                .sub(&v.scale(&dot(y2, w2)))
                .add(&v.scale(&dot(v1, z1)))
                .sub(&b.scale(&dot(p1, z1)))
                .add(&h.scale(&dot(p1, w2)));
            s = vector::add(&s, &c6.apply(s1));
            vector::axpy(&mut s, &dot(p1, &b.apply(z1)).sub(&dot(p1, &h.apply(w2))), s1);
            let t1 = br(u, h).add(&br(g, v)).add(&id_scaled(n, &two.mul(&dot(p1, z1)))).apply(w2);
            let t2 = br(b, u).add(&br(v, a)).add(&id_scaled(n, &two.mul(&dot(p1, w2)))).apply(z1);
            vector::axpy(&mut s, &wm.trace(), &vector::add(&t1, &t2));
        }
    }
    s
}

/// Whether `T` lies in `{T : [T,J] = 0, [T,E] = 0}`.
pub fn commutes_with_cp(t: &LinearMap<Rational>, cp: &ComplexProduct) -> bool {
    t.mul(&cp.j) == cp.j.mul(t) && t.mul(&cp.e) == cp.e.mul(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cp_structure_gl, cp_structure_sl, hypercomplex_sl_c, SlIndex};
    use crate::structures::complexified_hypercomplex;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn cp_connection_properties() {
        for n in 1..=2 {
            let sl = cp_structure_sl(n).unwrap();
            let l = sl.lie();
            let c = cp_connection(l, &sl.cp);
            assert!(c.is_torsion_free(l));
            assert!(c.is_parallel(&sl.cp.j));
            assert!(c.is_parallel(&sl.cp.e));
            let d = l.dim();
            for i in 0..d {
                for k in 0..d {
                    let (x, y) = (vector::unit(d, i), vector::unit(d, k));
                    assert_eq!(c.apply(&x, &y), cp_quarter_formula(l, &sl.cp, &x, &y));
                }
            }
        }
    }

    #[test]
    fn cp_connection_values() {
        let sl = cp_structure_sl(2).unwrap();
        let idx = SlIndex { n: 2 };
        let c = cp_connection(sl.lie(), &sl.cp);
        let d = sl.dim();
        let x = vector::unit(d, idx.gamma(0));
        assert!(vector::is_zero(&c.apply(&x, &vector::unit(d, idx.mu(0)))));
        let x = vector::unit(d, idx.alpha(0, 0));
        assert_eq!(c.apply(&x, &vector::unit(d, idx.mu(1))), vector::unit(d, idx.mu(1)));
    }

    #[test]
    fn curvature_sample() {
        let sl = cp_structure_sl(2).unwrap();
        let idx = SlIndex { n: 2 };
        let l = sl.lie();
        let c = cp_connection(l, &sl.cp);
        let d = sl.dim();
        let r = c.curvature(l, &vector::unit(d, idx.gamma(0)), &vector::unit(d, idx.minus(idx.mu(1))));
        assert_eq!(r.apply(&vector::unit(d, idx.mu(0))), vector::unit(d, idx.mu(1)));
        for i in 0..idx.half() {
            for j in 0..idx.half() {
                assert!(c.curvature_basis(l, i, j).is_zero());
            }
        }
        let x = vector::unit(d, 3);
        assert!(c.curvature(l, &x, &x).is_zero());
    }

    #[test]
    fn obata_is_complexified_cp() {
        let (sl, h) = hypercomplex_sl_c(1).unwrap();
        let ob = obata_connection(&h.algebra, &h.structure);
        assert!(ob.is_torsion_free(&h.algebra));
        for a in 1..=3 {
            assert!(ob.is_parallel(h.structure.get(a)));
        }
        let cp = cp_connection(sl.lie(), &sl.cp).change_basis(&h.adapted, &h.adapted_inverse);
        assert_eq!(cp.complexify(&h.ordering), ob);
    }

    #[test]
    fn obata_in_plain_realified_basis() {
        let gl = cp_structure_gl(1).unwrap();
        let (alg, h) = complexified_hypercomplex(gl.lie(), &gl.cp).unwrap();
        let ob = obata_connection(&alg, &h);
        let cp = cp_connection(gl.lie(), &gl.cp);
        assert_eq!(cp.complexify(&RealOrdering::standard(4)), ob);
    }

    #[test]
    fn restrictions_are_flat() {
        let sl3 = cp_structure_sl(1).unwrap();
        let sl5 = cp_structure_sl(2).unwrap();
        let gl2 = cp_structure_gl(1).unwrap();
        for (alg, side) in [(&sl3, Side::Plus), (&sl5, Side::Minus), (&gl2, Side::Plus), (&sl3, Side::Minus)] {
            let r = restrict_and_flatness(alg.lie(), &alg.cp, side).unwrap();
            assert!(r.flat && r.torsion_free, "{} {:?}", alg.name, side);
        }
    }

    #[test]
    fn derivative_modes_on_flat() {
        let l = LieAlgebra::<Rational>::abelian(3);
        let c = Connection::zero(3);
        let x = vector::unit(3, 0);
        for mode in [DerivativeMode::Commutator, DerivativeMode::Tensorial] {
            assert!(c.cov_deriv_curvature(&l, &x, &x, &vector::unit(3, 1), mode).is_zero());
        }
    }

    fn blocks_v1(n: usize, i: usize) -> SlBlocks<Rational> {
        let mut b = SlBlocks::zero(n);
        b.v1[i] = q(1);
        b
    }

    #[test]
    fn xi_special_cases() {
        let n = 3;
        let z0 = SlBlocks::zero(n);
        assert!(vector::is_zero(&closed_form_xi(&z0, &z0, &z0)));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let x = blocks_v1(n, i);
                    let mut y = SlBlocks::zero(n);
                    y.w1[j] = q(1);
                    let mut z = SlBlocks::zero(n);
                    z.w2[k] = q(1);
                    let mut expected: Vector<Rational> = vector::zeros(n);
                    if i == k {
                        expected[j] = expected[j].add(&q(1));
                    }
                    if i == j {
                        expected[k] = expected[k].add(&q(1));
                    }
                    assert_eq!(closed_form_xi(&x, &y, &z), expected);
                    let mut x2 = SlBlocks::zero(n);
                    x2.w2[i] = q(1);
                    let z2 = blocks_v1(n, k);
                    let mut expected: Vector<Rational> = vector::zeros(n);
                    if k == i {
                        expected[j] = expected[j].add(&q(1));
                    }
                    if k == j {
                        expected[i] = expected[i].add(&q(1));
                    }
                    assert_eq!(closed_form_xi(&x2, &y, &z2), expected);
                }
            }
        }
    }

    #[test]
    fn nu_zero() {
        let z0 = SlBlocks::zero(2);
        for s in [NuSign::Plus, NuSign::Minus] {
            assert!(vector::is_zero(&closed_form_nu(s, &z0, &z0, &z0, &z0)));
        }
    }
}
