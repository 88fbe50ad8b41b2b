#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError};

use hyperlie::catalog::{cp_structure_sl, hypercomplex_sl_c, sasaki_j, sasaki_sl3, table_algebra, SasakiFamily};
use hyperlie::liealg::{complexify, span_saturate, AlgebraFile, FieldTag, Imported, LieAlgebra, Matrix, Subspace, Vector};
use hyperlie::scalars::{Conjugate, GaussRational, Poly, Rational, Ring, Var};
use hyperlie::structures::{complex_structure_from_subalgebra, minus_i_eigenspace};

pub fn config(seed: u64, cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn gauss() -> impl Strategy<Value = GaussRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussRational::new(a, b))
}

/// Points with both parts in `[−2/3, 2/3]`, so `|λ|² < 1`.
pub fn unit_disc() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| GaussRational::new(Rational::new(a, 6), Rational::new(b, 6)))
}

pub fn matrix3() -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..=3, 9).prop_map(|v| Matrix::from_vector(3, 3, v.into_iter().map(Rational::from).collect()))
}

pub fn vectors(count: usize, len: usize) -> impl Strategy<Value = Vec<Vector<Rational>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, len), count)
        .prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(Rational::from).collect()).collect())
}

pub fn poly() -> impl Strategy<Value = Poly> {
    let vars = ["l1", "l2", "lambda"];
    prop::collection::vec((gauss(), 0usize..3, any::<bool>(), 0u32..3), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, v, bar, e)| {
            let var = if bar { Var::new(vars[v]).conj() } else { Var::new(vars[v]) };
            acc.add(&Poly::var(var).pow(e).mul(&Poly::constant(c)))
        })
    })
}

pub fn structure_constants(dim: usize) -> impl Strategy<Value = Vec<(usize, usize, usize, GaussRational)>> {
    prop::collection::vec((0..dim, 0..dim, 0..dim, gauss()), 0..12).prop_map(|v| {
        let mut seen = std::collections::BTreeSet::new();
        v.into_iter()
            .filter(|(i, j, k, _)| i < j && seen.insert((*i, *j, *k)))
            .collect()
    })
}

fn commutator_span(seed: Vec<Matrix<Rational>>) -> (Subspace<Rational>, Vec<Matrix<Rational>>) {
    let bracket = |a: &Matrix<Rational>, b: &Matrix<Rational>| a.commutator(b);
    let vectorize = |m: &Matrix<Rational>| m.vectorize();
    let s = span_saturate(9, seed, &[], Some(&bracket), &vectorize);
    (s.span, s.elements)
}

/// Saturating an already saturated set changes nothing, and the result is
/// closed under the bracket.
pub fn saturation_idempotent(gens: Vec<Matrix<Rational>>) -> Result<(), TestCaseError> {
    let (span, elements) = commutator_span(gens);
    let (again, _) = commutator_span(elements.clone());
    prop_assert!(span.same_span(&again));
    for a in &elements {
        for b in &elements {
            prop_assert!(span.contains(&a.commutator(b).vectorize()));
        }
    }
    Ok(())
}

/// The reduced basis depends only on the span.
pub fn rref_stable(vs: Vec<Vector<Rational>>, mix: Vec<Rational>) -> Result<(), TestCaseError> {
    let n = vs[0].len();
    let a = Subspace::from_vectors(n, vs.clone());
    let mut mixed = vs.clone();
    for (k, c) in mix.iter().enumerate().take(vs.len() - 1) {
        let src = mixed[k + 1].clone();
        for (x, y) in mixed[k].iter_mut().zip(&src) {
            *x = x.add(&c.mul(y));
        }
    }
    mixed.reverse();
    let b = Subspace::from_vectors(n, mixed);
    prop_assert_eq!(a.basis(), b.basis());
    prop_assert_eq!(a.pivots(), b.pivots());
    Ok(())
}

pub fn conj_involution(z: GaussRational, p: Poly, q: Poly) -> Result<(), TestCaseError> {
    prop_assert_eq!(z.conj().conj(), z.clone());
    prop_assert_eq!(z.mul(&z.conj()).im, Rational::zero());
    prop_assert_eq!(p.conj().conj(), p.clone());
    prop_assert_eq!(p.mul(&q).conj(), p.conj().mul(&q.conj()));
    prop_assert_eq!(p.add(&q).conj(), p.conj().add(&q.conj()));
    Ok(())
}

fn round_trip(lc: &LieAlgebra<GaussRational>, j: &Matrix<Rational>) -> Result<(), TestCaseError> {
    let m = minus_i_eigenspace(lc, j).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let back = complex_structure_from_subalgebra(lc, &m).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, j);
    Ok(())
}

pub fn subalgebra_round_trip_i(lambda: GaussRational) -> Result<(), TestCaseError> {
    let lc = sasaki_sl3::<GaussRational>();
    let j = sasaki_j(&SasakiFamily::I(lambda)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    round_trip(&lc.algebra, &j)
}

pub fn subalgebra_round_trip_fixed() -> Result<(), TestCaseError> {
    let lc = sasaki_sl3::<GaussRational>();
    for f in [SasakiFamily::II, SasakiFamily::III] {
        round_trip(&lc.algebra, &sasaki_j(&f).unwrap())?;
    }
    let cp = cp_structure_sl(1).unwrap();
    round_trip(&complexify(cp.lie()), &cp.cp.j)?;
    let (_, ih) = hypercomplex_sl_c(1).unwrap();
    let lc = complexify(&ih.algebra);
    for a in 1..=3 {
        round_trip(&lc, ih.structure.get(a))?;
    }
    Ok(())
}

pub fn file_round_trip(entries: Vec<(usize, usize, usize, GaussRational)>) -> Result<(), TestCaseError> {
    let l = LieAlgebra::from_entries(5, entries.clone()).unwrap();
    let text = AlgebraFile::from_algebra(&l, FieldTag::Gauss).to_json();
    let back = AlgebraFile::from_json(&text).unwrap().to_gauss().unwrap();
    prop_assert_eq!(back.entries(), l.entries());
    let real = LieAlgebra::from_entries(5, entries.into_iter().map(|(i, j, k, z)| (i, j, k, z.re))).unwrap();
    let text = AlgebraFile::from_algebra(&real, FieldTag::Rational).to_json();
    prop_assert_eq!(AlgebraFile::from_json(&text).unwrap().to_rational().unwrap().entries(), real.entries());
    Ok(())
}

pub fn import_round_trip(lambda: GaussRational) -> Result<(), TestCaseError> {
    let l = table_algebra(&SasakiFamily::I(())).unwrap().instantiate(&lambda).unwrap();
    let text = AlgebraFile::from_algebra(&l, FieldTag::Gauss).to_json();
    match AlgebraFile::import(&text) {
        Ok(Imported::Gauss(back)) => prop_assert_eq!(back.entries(), l.entries()),
        other => return Err(TestCaseError::fail(format!("{other:?}"))),
    }
    Ok(())
}
