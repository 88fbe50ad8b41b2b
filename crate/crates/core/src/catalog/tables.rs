use super::sasaki::{sasaki_basis, sigma_matrix, SasakiFamily};
use super::CatalogError;
use crate::liealg::{JacobiFailure, LieAlgebra, Matrix};
use crate::scalars::{Assignment, Conjugate, Field, GaussRational, Poly, Rational, Reducer, Ring, Var};
use std::collections::BTreeMap;

/// Squares of the scale factors applied to `U, X, Y, Z, U^σ, X^σ, Y^σ, Z^σ`.
pub const RESCALE_SQUARES: [u8; 8] = [1, 2, 2, 1, 1, 2, 2, 1];

pub const LABELS: [&str; 8] = ["U", "X", "Y", "Z", "U^s", "X^s", "Y^s", "Z^s"];

/// One stored bracket `[b_i, b_j] = Σ c_k b_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, Poly)>,
}

/// The bracket tables of a family over `ℚ(i)[λ, λ̄, δ]` with
/// `δ(1 − λλ̄) = 1`, on `{U, X, Y, Z, U^σ, X^σ, Y^σ, Z^σ}`.
#[derive(Clone, Debug)]
pub struct TableAlgebra {
    pub family: &'static str,
    pub algebra: LieAlgebra<Poly>,
    pub reducer: Reducer,
    pub lambda: Var,
    pub delta: Var,
    pub stored: Vec<TableEntry>,
}

fn c(n: i64, d: i64) -> Poly {
    Poly::rational(Rational::new(n, d))
}

fn stored_entries(family: &SasakiFamily<()>) -> Result<Vec<TableEntry>, CatalogError> {
    let l = Poly::sym("lambda");
    let lb = Poly::sym_conj("lambda");
    let d = Poly::sym("delta");
    let one = Poly::one();
    let e = |i: usize, j: usize, terms: Vec<(usize, Poly)>| TableEntry { i, j, terms };
    Ok(match family {
        SasakiFamily::I(()) => vec![
            e(0, 1, vec![(1, c(2, 1).sub(&l))]),
            e(0, 2, vec![(2, times(&l, 2).sub(&one))]),
            e(0, 3, vec![(3, l.add(&one))]),
            e(1, 2, vec![(3, one.clone())]),
            e(1, 3, vec![]),
            e(2, 3, vec![]),
            e(0, 4, vec![]),
            e(0, 5, vec![(5, one.sub(&times(&l, 2)))]),
            e(0, 6, vec![(6, l.sub(&c(2, 1)))]),
            e(0, 7, vec![(7, l.add(&one).neg())]),
            e(1, 5, vec![]),
            e(1, 6, vec![(0, d.clone()), (4, l.mul(&d))]),
            e(1, 7, vec![(5, one.neg())]),
            e(2, 6, vec![]),
            e(2, 7, vec![(6, one.clone())]),
            e(3, 7, vec![(0, d.mul(&one.sub(&lb))), (4, d.mul(&one.sub(&l)).neg())]),
        ],
        SasakiFamily::II => vec![
            e(0, 1, vec![]),
            e(0, 2, vec![(2, c(3, 1))]),
            e(0, 3, vec![(3, c(3, 1))]),
            e(1, 2, vec![(3, one.clone())]),
            e(1, 3, vec![(2, one.clone())]),
            e(2, 3, vec![]),
            e(0, 4, vec![]),
            e(0, 5, vec![(2, c(6, 1)), (5, c(-3, 1))]),
            e(0, 6, vec![]),
            e(0, 7, vec![(7, c(-3, 1))]),
            e(1, 5, vec![(3, one.clone()), (7, one.neg())]),
            e(1, 6, vec![(0, c(-1, 3)), (4, c(-2, 3))]),
            e(1, 7, vec![(2, one.clone()), (5, one.neg())]),
            e(2, 6, vec![]),
            e(2, 7, vec![(6, one.clone())]),
            e(3, 7, vec![(0, c(1, 3)), (4, c(-1, 3))]),
        ],
        SasakiFamily::III => return Err(CatalogError::NoTable("III")),
    })
}

fn times(p: &Poly, k: i64) -> Poly {
    p.scale(&GaussRational::from_ints(k, 0))
}

fn sig(k: usize) -> usize {
    (k + 4) % 8
}

/// Builds the table of a family: Tables 1 and 2 as stored, completed by
/// `[a^σ, b^σ] = σ[a, b]` and `[a, b^σ] = −σ[b, a^σ]`.
pub fn table_algebra(family: &SasakiFamily<()>) -> Result<TableAlgebra, CatalogError> {
    let stored = stored_entries(family)?;
    let reducer = Reducer::unit_inverse("lambda", "delta");
    let sigma = |p: &Poly| reducer.reduce(&p.conj());
    let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Poly>> = BTreeMap::new();
    for en in &stored {
        let v = table.entry((en.i, en.j)).or_default();
        for (k, p) in &en.terms {
            v.insert(*k, p.clone());
        }
    }
    let sigma_vec = |v: &BTreeMap<usize, Poly>, negate: bool| -> BTreeMap<usize, Poly> {
        v.iter()
            .map(|(k, p)| (sig(*k), if negate { sigma(p).neg() } else { sigma(p) }))
            .collect()
    };
    for a in 0..4 {
        for b in 0..4 {
            let derived = table.get(&(b, 4 + a)).map(|v| sigma_vec(v, true));
            match (table.get(&(a, 4 + b)), derived) {
                (Some(given), Some(d)) if *given != d => {
                    return Err(CatalogError::InconsistentTable(a, 4 + b))
                }
                (None, Some(d)) => {
                    table.insert((a, 4 + b), d);
                }
                _ => {}
            }
        }
    }
    for a in 0..4 {
        for b in a + 1..4 {
            if let Some(v) = table.get(&(a, b)).map(|v| sigma_vec(v, false)) {
                table.insert((4 + a, 4 + b), v);
            }
        }
    }
    let mut entries = Vec::new();
    for ((i, j), v) in &table {
        for (k, p) in v {
            if !p.is_zero() {
                entries.push((*i, *j, *k, p.clone()));
            }
        }
    }
    let algebra = LieAlgebra::from_entries(8, entries)?
        .with_labels(LABELS.iter().map(|s| s.to_string()).collect())?;
    Ok(TableAlgebra {
        family: family.tag(),
        algebra,
        reducer,
        lambda: Var::new("lambda"),
        delta: Var::new("delta"),
        stored,
    })
}

/// The table of the `√2`-rescaled basis.
#[derive(Clone, Debug)]
pub struct RescaledTable {
    pub algebra: LieAlgebra<Poly>,
    pub squares: [u8; 8],
}

impl TableAlgebra {
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Poly {
        self.reducer.reduce(&self.algebra.structure_constant(i, j, k))
    }

    pub fn check_jacobi(&self) -> Vec<JacobiFailure<Poly>> {
        self.algebra.check_jacobi_with(|p| self.reducer.reduce(p))
    }

    /// Value assignment `λ ↦ λ₀`, `δ ↦ 1/(1 − |λ₀|²)`.
    pub fn assignment(&self, lambda: &GaussRational) -> Result<Assignment, CatalogError> {
        let den = Rational::one().sub(&lambda.norm_sq());
        let inv = den.inv().map_err(|_| CatalogError::DenominatorZero)?;
        let mut a = Assignment::new();
        a.bind(self.lambda.clone(), Poly::constant(lambda.clone()))?;
        a.bind(self.delta.clone(), Poly::rational(inv))?;
        Ok(a)
    }

    pub fn instantiate(&self, lambda: &GaussRational) -> Result<LieAlgebra<GaussRational>, CatalogError> {
        let a = self.assignment(lambda)?;
        Ok(self.algebra.map_scalars(|p| {
            p.substitute(&a).as_constant().expect("all variables are assigned")
        }))
    }

    /// `c′_ijk = c_ijk·d_i d_j / d_k` with `d² ∈ {1, 2}`.
    pub fn rescaled(&self) -> Result<RescaledTable, CatalogError> {
        let big = |k: usize| i32::from(RESCALE_SQUARES[k] == 2);
        let mut entries = Vec::new();
        for (i, j, k, p) in self.algebra.entries() {
            let e = big(i) + big(j) - big(k);
            let factor = match e {
                0 => 1,
                2 => 2,
                _ => return Err(CatalogError::OddRescaling(i, j, k)),
            };
            entries.push((i, j, k, p.scale(&GaussRational::from_ints(factor, 0))));
        }
        let algebra = LieAlgebra::from_entries(8, entries)?
            .with_labels(LABELS.iter().map(|s| s.to_string()).collect())?;
        Ok(RescaledTable { algebra, squares: RESCALE_SQUARES })
    }

    /// Pairs `(i, j)` where the rescaled table disagrees with the commutator
    /// of the rescaled matrices `B ∪ σ(B)`.
    pub fn realization_failures(&self, family: &SasakiFamily<Poly>) -> Result<Vec<(usize, usize)>, CatalogError> {
        let r = self.rescaled()?;
        let mut basis = sasaki_basis(family);
        let sb: Vec<Matrix<Poly>> = basis.iter().map(sigma_matrix).collect();
        basis.extend(sb);
        let reduce = |m: &Matrix<Poly>| m.map(|p| self.reducer.reduce(p));
        let mut out = Vec::new();
        for i in 0..8 {
            for j in i + 1..8 {
                let mut lhs = Matrix::zeros(3, 3);
                for (k, p) in r.algebra.bracket_basis(i, j) {
                    lhs.axpy(p, &basis[*k]);
                }
                if !reduce(&lhs.sub(&basis[i].commutator(&basis[j]))).is_zero() {
                    out.push((i, j));
                }
            }
        }
        Ok(out)
    }
}

impl RescaledTable {
    pub fn instantiate(&self, table: &TableAlgebra, lambda: &GaussRational) -> Result<LieAlgebra<GaussRational>, CatalogError> {
        let a = table.assignment(lambda)?;
        Ok(self.algebra.map_scalars(|p| p.substitute(&a).as_constant().expect("all variables are assigned")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda() -> Poly {
        Poly::sym("lambda")
    }

    #[test]
    fn table_values() {
        let t = table_algebra(&SasakiFamily::I(())).unwrap();
        assert_eq!(t.constant(0, 2, 2), times(&lambda(), 2).sub(&Poly::one()));
        assert_eq!(t.constant(1, 6, 0), Poly::sym("delta"));
        assert_eq!(t.constant(1, 6, 4), lambda().mul(&Poly::sym("delta")));
        for f in [SasakiFamily::I(()), SasakiFamily::II] {
            let t = table_algebra(&f).unwrap();
            for k in 0..8 {
                assert!(t.constant(0, 4, k).is_zero());
                assert!(t.constant(2, 6, k).is_zero());
            }
        }
        let ii = table_algebra(&SasakiFamily::II).unwrap();
        assert_eq!(ii.constant(1, 5, 3), Poly::one());
        assert_eq!(ii.constant(1, 5, 7), Poly::one().neg());
    }

    #[test]
    fn jacobi_symbolic() {
        for f in [SasakiFamily::I(()), SasakiFamily::II] {
            assert!(table_algebra(&f).unwrap().check_jacobi().is_empty());
        }
    }

    #[test]
    fn realized_by_matrices() {
        let t = table_algebra(&SasakiFamily::I(())).unwrap();
        assert!(t.realization_failures(&SasakiFamily::I(lambda())).unwrap().is_empty());
        let t = table_algebra(&SasakiFamily::II).unwrap();
        assert!(t.realization_failures(&SasakiFamily::II).unwrap().is_empty());
    }

    #[test]
    fn swapped_tables_fail() {
        let t = table_algebra(&SasakiFamily::II).unwrap();
        assert!(!t.realization_failures(&SasakiFamily::I(lambda())).unwrap().is_empty());
    }

    #[test]
    fn concrete_lambda() {
        let t = table_algebra(&SasakiFamily::I(())).unwrap();
        let l0 = GaussRational::real(Rational::new(1, 2));
        let a = t.instantiate(&l0).unwrap();
        // [X, Y^σ] = (U + λU^σ)/(1 − |λ|²) = 4/3 U + 2/3 U^σ
        assert_eq!(a.structure_constant(1, 6, 0), GaussRational::real(Rational::new(4, 3)));
        assert_eq!(a.structure_constant(1, 6, 4), GaussRational::real(Rational::new(2, 3)));
        assert!(a.check_jacobi().is_empty());
        assert_eq!(t.instantiate(&GaussRational::one()).unwrap_err(), CatalogError::DenominatorZero);
    }
}
