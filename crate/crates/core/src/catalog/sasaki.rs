use super::CatalogError;
use crate::liealg::{LinearMap, Matrix, MatrixAlgebra, Subspace};
use crate::scalars::{ComplexRing, Conjugate, Field, GaussRational, Rational, Ring};
use crate::structures::complex_structure_from_subalgebra;

/// The invariant complex subalgebras of `sl(3,ℂ)` with stored tables.
#[derive(Clone, Debug, PartialEq)]
pub enum SasakiFamily<S> {
    /// `I_λ`, with `|λ| < 1` declared but not enforced for symbolic `λ`.
    I(S),
    II,
    /// The root-vector basis of `III`, equivalent to `II`.
    III,
}

impl<S> SasakiFamily<S> {
    pub fn tag(&self) -> &'static str {
        match self {
            SasakiFamily::I(_) => "I",
            SasakiFamily::II => "II",
            SasakiFamily::III => "III",
        }
    }
}

fn g<S: ComplexRing>(re: i64, im: i64) -> S {
    S::from_gauss(&GaussRational::from_ints(re, im))
}

fn mat<S: ComplexRing>(rows: [[(i64, i64); 3]; 3]) -> Matrix<S> {
    Matrix::from_fn(3, 3, |r, c| g(rows[r][c].0, rows[r][c].1))
}

fn half<S: ComplexRing>() -> S {
    S::from_rational(&Rational::new(1, 2))
}

/// Entrywise conjugation, i.e. conjugation of `sl(3,ℂ)` with respect to
/// `sl(3,ℝ)`.
pub fn sigma_matrix<S: ComplexRing>(m: &Matrix<S>) -> Matrix<S> {
    m.conj()
}

/// `{U, X, Y, Z}` with `X` and `Y` rescaled by `√2` for `I_λ` and `II`.
pub fn sasaki_basis<S: ComplexRing>(family: &SasakiFamily<S>) -> Vec<Matrix<S>> {
    let x_i: Matrix<S> = mat([[(0, 0), (0, 0), (1, 0)], [(0, 0), (0, 0), (0, 1)], [(0, 0); 3]]);
    let y: Matrix<S> = mat([[(0, 0); 3], [(0, 0); 3], [(1, 0), (0, 1), (0, 0)]]);
    let z: Matrix<S> = mat::<S>([[(1, 0), (0, 1), (0, 0)], [(0, 1), (-1, 0), (0, 0)], [(0, 0); 3]])
        .scale(&half());
    match family {
        SasakiFamily::I(lambda) => {
            let one = S::one();
            let i = S::i();
            let om = one.sub(lambda);
            let op = one.add(lambda);
            let ip = i.mul(&op);
            let zero = S::zero();
            let u = Matrix::from_rows(vec![
                vec![om.clone(), ip.neg(), zero.clone()],
                vec![ip, om.clone(), zero.clone()],
                vec![zero.clone(), zero, om.mul(&S::from_int(-2))],
            ])
            .scale(&half());
            vec![u, x_i, y, z]
        }
        SasakiFamily::II => {
            let u = mat::<S>([[(-1, 0), (0, -3), (0, 0)], [(0, 3), (-1, 0), (0, 0)], [(0, 0), (0, 0), (2, 0)]])
                .scale(&half());
            let x = mat([[(0, 0), (0, 0), (1, 0)], [(0, 0), (0, 0), (0, 1)], [(1, 0), (0, -1), (0, 0)]]);
            vec![u, x, y, z]
        }
        SasakiFamily::III => {
            let r = chevalley_frame();
            let h = Rational::new(1, 2);
            let c = |m: Matrix<GaussRational>| m.map(S::from_gauss);
            let q = |n: i64, d: i64| GaussRational::real(Rational::new(n, d));
            let s1 = r.e_alpha.add(&r.e_minus_alpha).sub(&r.e_beta).add(&r.e_gamma);
            let u = r.h_alpha.scale(&q(1, 2)).add(&r.h_beta).sub(&s1.scale(&q(3, 2)));
            let s2 = r.e_alpha.add(&r.e_minus_alpha).add(&r.e_beta).sub(&r.e_gamma);
            let x = r.h_alpha.scale(&q(1, 2)).add(&r.h_beta).add(&s2.scale(&q(1, 2)));
            let t = r.h_alpha.add(&r.e_alpha).sub(&r.e_minus_alpha);
            let y = t.sub(&r.e_beta).add(&r.e_gamma).scale(&q(-1, 2));
            let z = t.add(&r.e_beta).sub(&r.e_gamma).scale(&GaussRational::real(h));
            vec![c(u), c(x), c(y), c(z)]
        }
    }
}

/// Root vectors of `sl(3,ℂ)` in the adapted frame `E′_ij = g E_ij g⁻¹`
/// with `g = [[1,0,1],[i,0,−i],[0,1,0]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootFrame {
    pub h_alpha: Matrix<GaussRational>,
    pub h_beta: Matrix<GaussRational>,
    pub e_alpha: Matrix<GaussRational>,
    pub e_minus_alpha: Matrix<GaussRational>,
    pub e_beta: Matrix<GaussRational>,
    pub e_gamma: Matrix<GaussRational>,
}

pub fn chevalley_frame() -> RootFrame {
    let gm: Matrix<GaussRational> = mat([[(1, 0), (0, 0), (1, 0)], [(0, 1), (0, 0), (0, -1)], [(0, 0), (1, 0), (0, 0)]]);
    let gi = gm.inverse().expect("frame matrix is invertible");
    let e = |i: usize, j: usize| gm.mul(&Matrix::unit(3, 3, i, j)).mul(&gi);
    RootFrame {
        h_alpha: e(0, 0).sub(&e(1, 1)),
        h_beta: e(1, 1).sub(&e(2, 2)),
        e_alpha: e(0, 1),
        e_minus_alpha: e(1, 0),
        e_beta: e(1, 2),
        e_gamma: e(0, 2),
    }
}

/// Families with corrected bases, validated but not classified.
#[derive(Clone, Debug, PartialEq)]
pub enum OtherFamily {
    /// `IV_μ`, with `μ′` the square root of `1 + μ` returned by
    /// [`GaussRational::sqrt_exact`].
    IV(GaussRational),
    V,
    VIIInf,
}

impl OtherFamily {
    pub fn tag(&self) -> String {
        match self {
            OtherFamily::IV(mu) => format!("IV_{mu}"),
            OtherFamily::V => "V".into(),
            OtherFamily::VIIInf => "VII_inf".into(),
        }
    }
}

pub fn other_basis(family: &OtherFamily) -> Result<Vec<Matrix<GaussRational>>, CatalogError> {
    let r = chevalley_frame();
    let q = |n: i64| GaussRational::from_ints(n, 0);
    Ok(match family {
        OtherFamily::IV(mu) => {
            let s = GaussRational::one().add(mu);
            if s.is_zero() {
                return Err(CatalogError::DegenerateParameter);
            }
            let mp = s.sqrt_exact().ok_or_else(|| CatalogError::NotASquare(s.to_string()))?;
            let mpc = mp.conj();
            let inv = mp.inv().expect("μ′ ≠ 0");
            let u = r.h_alpha.add(&r.h_beta.scale(&q(2))).add(&r.e_beta.scale(&q(3)));
            let x = r
                .h_alpha
                .add(&r.e_alpha)
                .add(&r.e_minus_alpha.scale(&mp))
                .sub(&r.e_beta)
                .add(&r.e_gamma)
                .scale(&inv);
            let y = r.e_beta.scale(&mpc);
            let z = r.e_gamma.sub(&r.e_beta).scale(&mpc.mul(&inv));
            vec![u, x, y, z]
        }
        OtherFamily::V => {
            let h = GaussRational::real(Rational::new(1, 2));
            let u = r.h_alpha.add(&r.e_minus_alpha.scale(&q(2))).add(&r.e_beta);
            let x = r
                .e_alpha
                .sub(&r.e_minus_alpha)
                .sub(&r.h_alpha)
                .sub(&r.e_beta)
                .sub(&r.e_gamma)
                .scale(&h);
            vec![u, x, r.e_beta.scale(&q(2)), r.e_beta.add(&r.e_gamma)]
        }
        OtherFamily::VIIInf => {
            let u = r.h_beta.add(&r.e_minus_alpha).add(&r.e_beta.scale(&q(2)));
            let x = r.h_alpha.add(&r.e_alpha).sub(&r.e_minus_alpha).sub(&r.e_beta).add(&r.e_gamma);
            vec![u, x, r.e_beta.neg(), r.e_beta.sub(&r.e_gamma)]
        }
    })
}

/// `sl(3)` on `{E₁₁−E₃₃, E₂₂−E₃₃, E₂₁, E₁₂, E₃₁, E₃₂, E₁₃, E₂₃}`.
pub fn sasaki_sl3<F: Field>() -> MatrixAlgebra<F> {
    let e = |i: usize, j: usize| Matrix::<F>::unit(3, 3, i, j);
    let basis = vec![
        e(0, 0).sub(&e(2, 2)),
        e(1, 1).sub(&e(2, 2)),
        e(1, 0),
        e(0, 1),
        e(2, 0),
        e(2, 1),
        e(0, 2),
        e(1, 2),
    ];
    let labels = ["E11-E33", "E22-E33", "E21", "E12", "E31", "E32", "E13", "E23"];
    MatrixAlgebra::new(basis)
        .and_then(|m| m.with_labels(labels.iter().map(|s| s.to_string()).collect()))
        .expect("sl(3) basis")
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// The complex structure of the family on `sl(3,ℝ)`, column `j` being the
/// image of the `j`-th basis vector.
pub fn sasaki_j(family: &SasakiFamily<GaussRational>) -> Result<LinearMap<Rational>, CatalogError> {
    let rot: Matrix<Rational> =
        Matrix::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    match family {
        SasakiFamily::I(lambda) => {
            let (a, b) = (lambda.re.clone(), lambda.im.clone());
            let r2 = lambda.norm_sq();
            let den = r2.sub(&Rational::one());
            if den.is_zero() {
                return Err(CatalogError::DenominatorZero);
            }
            let one = Rational::one();
            let block = Matrix::from_rows(vec![
                vec![b.clone(), b.clone(), one.sub(&a), a.sub(&r2)],
                vec![b.clone(), b.clone(), r2.sub(&a), a.sub(&one)],
                vec![a.add(&one).neg(), r2.add(&a).neg(), b.neg(), b.clone()],
                vec![r2.add(&a), a.add(&one), b.clone(), b.neg()],
            ])
            .scale(&den.inv().expect("nonzero"));
            Ok(block.direct_sum(&rot))
        }
        SasakiFamily::II => {
            let block = Matrix::from_rows(vec![
                vec![q(0, 1), q(0, 1), q(-1, 3), q(-2, 3)],
                vec![q(0, 1), q(0, 1), q(2, 3), q(1, 3)],
                vec![q(-1, 1), q(-2, 1), q(0, 1), q(0, 1)],
                vec![q(2, 1), q(1, 1), q(0, 1), q(0, 1)],
            ]);
            let second =
                Matrix::from_ints(&[&[0, -1, 0, -2], &[1, 0, -2, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
            Ok(block.direct_sum(&second))
        }
        SasakiFamily::III => {
            let lc = sasaki_sl3::<GaussRational>();
            let coords: Vec<_> = sasaki_basis(family)
                .iter()
                .map(|m| lc.coords(m).expect("traceless"))
                .collect();
            let m = Subspace::from_vectors(8, coords);
            Ok(complex_structure_from_subalgebra(&lc.algebra, &m)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{is_complex_structure, minus_i_eigenspace};

    fn span(ms: &[Matrix<GaussRational>]) -> Subspace<GaussRational> {
        let lc = sasaki_sl3::<GaussRational>();
        Subspace::from_vectors(8, ms.iter().map(|m| lc.coords(m).unwrap()))
    }

    fn check_invariant(ms: &[Matrix<GaussRational>]) {
        let lc = sasaki_sl3::<GaussRational>();
        let m = span(ms);
        assert_eq!(m.dim(), 4);
        assert_eq!(m.sum(&m.sigma()).dim(), 8);
        assert!(lc.algebra.is_subalgebra(&m.basis()));
    }

    fn families() -> Vec<SasakiFamily<GaussRational>> {
        vec![
            SasakiFamily::I(GaussRational::zero()),
            SasakiFamily::I(GaussRational::real(q(1, 2))),
            SasakiFamily::I("(1+i)/3".parse().unwrap()),
            SasakiFamily::II,
            SasakiFamily::III,
        ]
    }

    #[test]
    fn bases_are_invariant_subalgebras() {
        for f in families() {
            check_invariant(&sasaki_basis(&f));
        }
        for f in [
            OtherFamily::IV(GaussRational::from_ints(3, 0)),
            OtherFamily::IV(GaussRational::real(q(-3, 4))),
            OtherFamily::IV(GaussRational::from_ints(-2, 0)),
            OtherFamily::V,
            OtherFamily::VIIInf,
        ] {
            check_invariant(&other_basis(&f).unwrap());
        }
    }

    #[test]
    fn iv_needs_a_square() {
        assert!(matches!(
            other_basis(&OtherFamily::IV(GaussRational::from_ints(1, 0))),
            Err(CatalogError::NotASquare(_))
        ));
        assert!(matches!(
            other_basis(&OtherFamily::IV(GaussRational::from_ints(-1, 0))),
            Err(CatalogError::DegenerateParameter)
        ));
    }

    #[test]
    fn ii_x_matrix() {
        let x = &sasaki_basis::<GaussRational>(&SasakiFamily::II)[1];
        let i = GaussRational::i();
        assert_eq!(x.get(0, 2), &GaussRational::one());
        assert_eq!(x.get(1, 2), &i);
        assert_eq!(x.get(2, 0), &GaussRational::one());
        assert_eq!(x.get(2, 1), &i.neg());
    }

    #[test]
    fn j_i0_first_column() {
        let j = sasaki_j(&SasakiFamily::I(GaussRational::zero())).unwrap();
        let col = j.column(0);
        let mut expected = vec![Rational::zero(); 8];
        expected[2] = Rational::one();
        assert_eq!(col, expected);
    }

    #[test]
    fn j_matches_subalgebra() {
        let l = sasaki_sl3::<Rational>();
        let lc = sasaki_sl3::<GaussRational>();
        for f in families() {
            let j = sasaki_j(&f).unwrap();
            assert!(is_complex_structure(&l.algebra, &j), "{}", f.tag());
            let m = minus_i_eigenspace(&lc.algebra, &j).unwrap();
            assert!(m.same_span(&span(&sasaki_basis(&f))), "{}", f.tag());
        }
    }

    #[test]
    fn unit_circle_rejected() {
        let f = SasakiFamily::I(GaussRational::from_ints(0, 1));
        assert_eq!(sasaki_j(&f), Err(CatalogError::DenominatorZero));
    }
}
