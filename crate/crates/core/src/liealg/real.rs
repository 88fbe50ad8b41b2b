use super::vector::{self, Vector};
use super::{LieAlgebra, LieError, Matrix};
use crate::scalars::{ComplexRing, GaussRational, Rational, Ring};

/// The same structure constants read over ℚ(i).
pub fn complexify(l: &LieAlgebra<Rational>) -> LieAlgebra<GaussRational> {
    l.map_scalars(|c| GaussRational::real(c.clone()))
}

/// Conjugation of a complexified algebra with respect to its real basis.
pub fn sigma(v: &[GaussRational]) -> Vector<GaussRational> {
    vector::conj(v)
}

/// Ordering of the real basis `(e_1..e_n, ie_1..ie_n)` of a complex space of
/// dimension `n`: `order[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealOrdering {
    n: usize,
    order: Vec<usize>,
    position: Vec<usize>,
}

impl RealOrdering {
    pub fn standard(n: usize) -> RealOrdering {
        RealOrdering::new(n, (0..2 * n).collect()).expect("identity permutation")
    }

    pub fn new(n: usize, order: Vec<usize>) -> Result<RealOrdering, LieError> {
        if order.len() != 2 * n {
            return Err(LieError::InvalidPermutation);
        }
        let mut position = vec![usize::MAX; 2 * n];
        for (new, &old) in order.iter().enumerate() {
            if old >= 2 * n || position[old] != usize::MAX {
                return Err(LieError::InvalidPermutation);
            }
            position[old] = new;
        }
        Ok(RealOrdering { n, order, position })
    }

    /// For `n = 2h` with the first `h` basis vectors spanning `g₊` and the last
    /// `h` spanning `g₋ = J g₊`: the ordering `B₁ ∪ B₂ ∪ B₃ ∪ B₄` with
    /// `B₁ = g₊`, `B₂ = i B₁`, `B₃ = g₋`, `B₄ = i B₃`.
    pub fn quaternionic(n: usize) -> Result<RealOrdering, LieError> {
        if !n.is_multiple_of(2) {
            return Err(LieError::InvalidPermutation);
        }
        let h = n / 2;
        let order = (0..h).chain(n..n + h).chain(h..n).chain(n + h..2 * n).collect();
        RealOrdering::new(n, order)
    }

    pub fn complex_dim(&self) -> usize {
        self.n
    }

    pub fn real_dim(&self) -> usize {
        2 * self.n
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// New index of `e_k` and of `ie_k`.
    pub fn index_of(&self, k: usize, imaginary: bool) -> usize {
        self.position[k + if imaginary { self.n } else { 0 }]
    }

    pub fn real_coords(&self, z: &[GaussRational]) -> Vector<Rational> {
        assert_eq!(z.len(), self.n, "dimension mismatch");
        let mut out = vector::zeros(2 * self.n);
        for (k, zk) in z.iter().enumerate() {
            out[self.position[k]] = zk.re.clone();
            out[self.position[self.n + k]] = zk.im.clone();
        }
        out
    }

    pub fn complex_coords(&self, x: &[Rational]) -> Vector<GaussRational> {
        assert_eq!(x.len(), 2 * self.n, "dimension mismatch");
        (0..self.n)
            .map(|k| {
                GaussRational::new(
                    x[self.position[k]].clone(),
                    x[self.position[self.n + k]].clone(),
                )
            })
            .collect()
    }

    /// Complex vector represented by new basis index `c`.
    fn basis_vector(&self, c: usize) -> Vector<GaussRational> {
        let old = self.order[c];
        let mut v = vector::zeros(self.n);
        v[old % self.n] = if old < self.n { GaussRational::one() } else { GaussRational::i() };
        v
    }

    /// Real matrix of a ℂ-linear map.
    pub fn realify_map(&self, t: &Matrix<GaussRational>) -> Matrix<Rational> {
        let cols: Vec<Vector<Rational>> =
            (0..2 * self.n).map(|c| self.real_coords(&t.apply(&self.basis_vector(c)))).collect();
        Matrix::from_columns(&cols)
    }

    /// Real matrix of the ℂ-linear extension of a real map.
    pub fn extend_map(&self, t: &Matrix<Rational>) -> Matrix<Rational> {
        self.realify_map(&t.map(|x| GaussRational::real(x.clone())))
    }

    /// Real matrix, from this ordering into `target`, of the ℂ-linear
    /// extension of a real map `t` (rows indexed by `target`).
    pub fn extend_map_into(&self, target: &RealOrdering, t: &Matrix<Rational>) -> Matrix<Rational> {
        assert_eq!(t.cols(), self.n, "dimension mismatch");
        assert_eq!(t.rows(), target.n, "dimension mismatch");
        let cols: Vec<Vector<Rational>> = (0..2 * self.n)
            .map(|c| {
                let old = self.order[c];
                let col = t.column(old % self.n);
                let z: Vec<GaussRational> = if old < self.n {
                    col.into_iter().map(GaussRational::real).collect()
                } else {
                    col.into_iter().map(|x| GaussRational::new(Rational::zero(), x)).collect()
                };
                target.real_coords(&z)
            })
            .collect();
        Matrix::from_columns(&cols)
    }

    /// Multiplication by `i`.
    pub fn mult_i(&self) -> Matrix<Rational> {
        self.realify_map(&Matrix::identity(self.n).scale(&GaussRational::i()))
    }

    /// Real matrix of the conjugation `σ`.
    pub fn sigma_map(&self) -> Matrix<Rational> {
        let cols: Vec<Vector<Rational>> = (0..2 * self.n)
            .map(|c| self.real_coords(&vector::conj(&self.basis_vector(c))))
            .collect();
        Matrix::from_columns(&cols)
    }
}

/// `L` viewed as a real algebra of dimension `2n` in the given ordering.
pub fn realify(
    l: &LieAlgebra<GaussRational>,
    ordering: &RealOrdering,
) -> Result<LieAlgebra<Rational>, LieError> {
    if ordering.complex_dim() != l.dim() {
        return Err(LieError::DimensionMismatch { expected: l.dim(), got: ordering.complex_dim() });
    }
    let m = 2 * l.dim();
    let basis: Vec<Vector<GaussRational>> = (0..m).map(|c| ordering.basis_vector(c)).collect();
    let mut entries = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let w = ordering.real_coords(&l.bracket(&basis[a], &basis[b]));
            for (k, c) in w.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((a, b, k, c));
                }
            }
        }
    }
    LieAlgebra::from_entries(m, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_line() {
        let l = LieAlgebra::<GaussRational>::abelian(1);
        let r = realify(&l, &RealOrdering::standard(1)).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.is_abelian());
    }

    #[test]
    fn permutations_validated() {
        assert!(RealOrdering::new(2, vec![0, 1, 2, 2]).is_err());
        assert!(RealOrdering::new(2, vec![0, 1, 2]).is_err());
        let q = RealOrdering::quaternionic(4).unwrap();
        assert_eq!(q.order(), &[0, 1, 4, 5, 2, 3, 6, 7]);
        assert_eq!(q.index_of(2, false), 4);
        assert_eq!(q.index_of(0, true), 2);
    }

    #[test]
    fn coordinates_round_trip() {
        let q = RealOrdering::quaternionic(2).unwrap();
        let z = vec![GaussRational::from_ints(1, 2), GaussRational::from_ints(-3, 5)];
        assert_eq!(q.complex_coords(&q.real_coords(&z)), z);
        let i = q.mult_i();
        assert!(i.mul(&i).add(&Matrix::identity(4)).is_zero());
        let s = q.sigma_map();
        assert!(s.mul(&s).is_identity());
    }
}
