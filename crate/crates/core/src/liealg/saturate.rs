use rayon::prelude::*;

use super::vector::Vector;
use super::Subspace;
use crate::scalars::Field;

/// Result of [`span_saturate`]: the span and the accepted elements in FIFO order.
#[derive(Clone, Debug)]
pub struct Saturation<T, F> {
    pub span: Subspace<F>,
    pub elements: Vec<T>,
}

/// Smallest subspace containing `seed` and closed under every operator and,
/// when given, under `bracket`.
///
/// Elements are processed first-in first-out. For the element at the head of
/// the queue, its brackets with all earlier elements come first, then its
/// operator images. Candidates for one element are built in parallel and
/// merged in that fixed order, so the basis matches a sequential run.
pub fn span_saturate<T, F>(
    ambient: usize,
    seed: Vec<T>,
    operators: &[&(dyn Fn(&T) -> T + Sync)],
    bracket: Option<&(dyn Fn(&T, &T) -> T + Sync)>,
    vectorize: &(dyn Fn(&T) -> Vector<F> + Sync),
) -> Saturation<T, F>
where
    T: Clone + Send + Sync,
    F: Field,
{
    let mut span = Subspace::zero(ambient);
    let mut elements = Vec::new();
    for s in seed {
        if span.insert(&vectorize(&s)) {
            elements.push(s);
        }
    }
    let mut head = 0;
    while head < elements.len() && span.dim() < ambient {
        let x = &elements[head];
        let mut jobs: Vec<(Option<usize>, Option<usize>)> = Vec::new();
        if bracket.is_some() {
            jobs.extend((0..head).map(|j| (Some(j), None)));
        }
        jobs.extend((0..operators.len()).map(|k| (None, Some(k))));
        let candidates: Vec<(T, Vector<F>)> = jobs
            .par_iter()
            .map(|job| {
                let t = match *job {
                    (Some(j), _) => bracket.expect("bracket job")(&elements[j], x),
                    (_, Some(k)) => operators[k](x),
                    _ => unreachable!(),
                };
                let v = span.reduce(&vectorize(&t));
                (t, v)
            })
            .collect();
        for (t, v) in candidates {
            if span.insert(&v) {
                elements.push(t);
            }
        }
        head += 1;
    }
    Saturation { span, elements }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{vector, LieAlgebra};
    use crate::scalars::Rational;

    type Q = Rational;

    fn heisenberg() -> LieAlgebra<Q> {
        LieAlgebra::from_entries(3, [(1, 0, 2, Q::from(1))]).unwrap()
    }

    #[test]
    fn two_step_closure() {
        let h = heisenberg();
        let ad = h.ad_basis(1);
        let op = move |v: &Vector<Q>| ad.apply(v);
        let id = |v: &Vector<Q>| v.clone();
        let sat = span_saturate(3, vec![vector::unit(3, 0)], &[&op], None, &id);
        let expect = Subspace::from_vectors(3, [vector::unit(3, 0), vector::unit(3, 2)]);
        assert!(sat.span.same_span(&expect));
    }

    #[test]
    fn trivial_cases() {
        let id = |v: &Vector<Q>| v.clone();
        let full: Vec<Vector<Q>> = (0..3).map(|i| vector::unit(3, i)).collect();
        assert_eq!(span_saturate(3, full, &[], None, &id).span.dim(), 3);
        assert_eq!(span_saturate::<Vector<Q>, Q>(3, vec![], &[], None, &id).span.dim(), 0);
    }
}
