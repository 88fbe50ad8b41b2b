use super::vector::{self, Vector};
use crate::scalars::{Field, GaussRational, Rational};

type SparseRow<F> = Vec<(usize, F)>;

/// A linear subspace of `F^ambient`, stored as the sparse rows of its reduced
/// row echelon form (leading ones, pivot columns cleared in every other row).
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<SparseRow<F>>,
}

fn to_sparse<F: Field>(v: &[F]) -> SparseRow<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// `a + c·b` on sorted sparse rows.
fn sparse_axpy<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c.mul(&b[j].1)));
            j += 1;
        } else {
            let mut x = a[i].1.clone();
            x.add_mul(c, &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Subspace<F> {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace<F> {
        Subspace::from_vectors(ambient, (0..ambient).map(|i| vector::unit(ambient, i)))
    }

    pub fn from_vectors(ambient: usize, vs: impl IntoIterator<Item = Vector<F>>) -> Subspace<F> {
        let mut s = Subspace::zero(ambient);
        for v in vs {
            s.insert(&v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Reduced echelon rows as dense vectors.
    pub fn basis(&self) -> Vec<Vector<F>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v = vector::zeros(self.ambient);
                for (i, x) in r {
                    v[*i] = x.clone();
                }
                v
            })
            .collect()
    }

    fn reduce_in_place(&self, v: &mut [F]) {
        for row in &self.rows {
            let p = row[0].0;
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (i, x) in row {
                let t = c.mul(x);
                v[*i].sub_assign(&t);
            }
        }
    }

    /// Residual of `v` modulo the subspace; zero iff `v` is a member.
    pub fn reduce(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.ambient, "dimension mismatch");
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span; true when the dimension grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = w[p].inv().expect("nonzero pivot");
        let new: SparseRow<F> = to_sparse(&w).into_iter().map(|(i, x)| (i, x.mul(&lead))).collect();
        for row in self.rows.iter_mut() {
            let Some(k) = row.iter().position(|(i, _)| *i == p) else { continue };
            let c = row[k].1.clone();
            *row = sparse_axpy(row, &c.neg(), &new);
        }
        let at = self.rows.partition_point(|r| r[0].0 < p);
        self.rows.insert(at, new);
        true
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Exact equality of spans (the reduced form is canonical).
    pub fn same_span(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(&v);
        }
        s
    }

    /// `{x : ⟨r, x⟩ = 0 for every row r}` under the coordinate pairing.
    pub fn annihilator(&self) -> Subspace<F> {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.ambient];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.ambient).filter(|&f| !is_pivot[f]) {
            let mut v = vector::zeros::<F>(self.ambient);
            v[f] = F::one();
            for row in &self.rows {
                if let Some((_, x)) = row.iter().find(|(i, _)| *i == f) {
                    v[row[0].0] = x.neg();
                }
            }
            out.push(v);
        }
        Subspace::from_vectors(self.ambient, out)
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

/// Span of complex vectors; `σ` acts coordinatewise.
impl Subspace<GaussRational> {
    pub fn sigma(&self) -> Subspace<GaussRational> {
        Subspace::from_vectors(self.ambient, self.basis().iter().map(|v| vector::conj(v)))
    }
}

impl Subspace<Rational> {
    pub fn complexify(&self) -> Subspace<GaussRational> {
        Subspace::from_vectors(
            self.ambient,
            self.basis().into_iter().map(|v| v.into_iter().map(GaussRational::real).collect()),
        )
    }
}

/// Solves `x = Σ cᵢ bᵢ` for a fixed independent family `bᵢ`.
#[derive(Clone, Debug)]
pub struct Coordinates<F> {
    ambient: usize,
    count: usize,
    // echelon rows in insertion order with pivot, row, and combination of the bᵢ
    rows: Vec<(usize, Vector<F>, Vector<F>)>,
}

impl<F: Field> Coordinates<F> {
    /// `None` when the family is dependent.
    pub fn new(ambient: usize, family: &[Vector<F>]) -> Option<Coordinates<F>> {
        let count = family.len();
        let mut rows: Vec<(usize, Vector<F>, Vector<F>)> = Vec::new();
        for (k, b) in family.iter().enumerate() {
            let mut v = b.clone();
            let mut comb = vector::unit::<F>(count, k);
            for (p, r, c) in &rows {
                if v[*p].is_zero() {
                    continue;
                }
                let f = v[*p].clone();
                vector::axpy(&mut v, &f.neg(), r);
                vector::axpy(&mut comb, &f.neg(), c);
            }
            let p = v.iter().position(|x| !x.is_zero())?;
            let lead = v[p].inv().ok()?;
            rows.push((p, vector::scale(&lead, &v), vector::scale(&lead, &comb)));
        }
        Some(Coordinates { ambient, count, rows })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `x`, or `None` outside the span.
    pub fn solve(&self, x: &[F]) -> Option<Vector<F>> {
        let mut v = x.to_vec();
        let mut out = vector::zeros::<F>(self.count);
        for (p, r, c) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            vector::axpy(&mut v, &f.neg(), r);
            vector::axpy(&mut out, &f, c);
        }
        vector::is_zero(&v).then_some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Ring;

    fn q(v: &[i64]) -> Vector<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn rref_shape() {
        let s = Subspace::from_vectors(3, [q(&[0, 2, 4]), q(&[1, 1, 1]), q(&[1, 2, 3])]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), vec![0, 1]);
        assert_eq!(s.basis(), vec![q(&[1, 0, -1]), q(&[0, 1, 2])]);
    }

    #[test]
    fn annihilator_and_intersection() {
        let a = Subspace::from_vectors(3, [q(&[1, 0, 0]), q(&[0, 1, 0])]);
        let b = Subspace::from_vectors(3, [q(&[0, 1, 0]), q(&[0, 0, 1])]);
        assert!(a.intersection(&b).same_span(&Subspace::from_vectors(3, [q(&[0, 1, 0])])));
        assert!(a.annihilator().same_span(&Subspace::from_vectors(3, [q(&[0, 0, 1])])));
        assert_eq!(Subspace::<Rational>::zero(4).annihilator().dim(), 4);
    }

    #[test]
    fn coordinates_solve() {
        let fam = [q(&[1, 1, 0]), q(&[0, 1, 1])];
        let c = Coordinates::new(3, &fam).unwrap();
        assert_eq!(c.solve(&q(&[2, 5, 3])), Some(q(&[2, 3])));
        assert_eq!(c.solve(&q(&[1, 0, 0])), None);
        assert!(Coordinates::new(3, &[q(&[1, 1, 0]), q(&[2, 2, 0])]).is_none());
        assert!(Rational::one().is_one());
    }
}
