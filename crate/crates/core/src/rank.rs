//! Rank of sparse vectors keyed by any ordered index, over ℝ or ℂ.

use std::collections::BTreeMap;
use std::ops::{Div, Mul, SubAssign};

use num_complex::Complex64;

/// Field scalars usable in [`sparse_rank`].
pub trait Scalar: Copy + Mul<Output = Self> + Div<Output = Self> + SubAssign + Default {
    fn magnitude(self) -> f64;
}

impl Scalar for f64 {
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Dimension of the span of `vectors`.
///
/// Incremental elimination: each vector is reduced against the rows kept so
/// far; a remainder whose largest entry exceeds `tol` becomes a new row with
/// that entry as pivot.
pub fn sparse_rank<K: Ord + Clone, T: Scalar>(vectors: impl IntoIterator<Item = BTreeMap<K, T>>, tol: f64) -> usize {
    let mut rows: Vec<(K, BTreeMap<K, T>)> = Vec::new();
    for mut v in vectors {
        for (pivot, row) in &rows {
            let c = match v.get(pivot) {
                Some(c) if c.magnitude() != 0.0 => *c,
                _ => continue,
            };
            for (k, r) in row {
                *v.entry(k.clone()).or_default() -= c * *r;
            }
            v.remove(pivot);
        }
        let best = v.iter().max_by(|a, b| a.1.magnitude().total_cmp(&b.1.magnitude())).map(|(k, c)| (k.clone(), *c));
        if let Some((k, c)) = best {
            if c.magnitude() > tol {
                let row: BTreeMap<K, T> =
                    v.into_iter().filter(|(_, x)| x.magnitude() > 0.0).map(|(key, x)| (key, x / c)).collect();
                rows.push((k, row));
            }
        }
    }
    rows.len()
}

/// Real rank; see [`sparse_rank`].
pub fn real_rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = BTreeMap<K, f64>>, tol: f64) -> usize {
    sparse_rank(vectors, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u8, f64)]) -> BTreeMap<u8, f64> {
        entries.iter().copied().collect()
    }

    #[test]
    fn dependent_vectors_do_not_count() {
        let set = vec![v(&[(0, 1.0), (1, 2.0)]), v(&[(1, 1.0), (2, 1.0)]), v(&[(0, 1.0), (1, 3.0), (2, 1.0)])];
        assert_eq!(real_rank(set, 1e-10), 2);
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(real_rank(Vec::<BTreeMap<u8, f64>>::new(), 1e-10), 0);
        assert_eq!(real_rank(vec![v(&[(3, 1e-12)])], 1e-10), 0);
    }

    #[test]
    fn complex_multiples_are_dependent() {
        let i = Complex64::i();
        let a: BTreeMap<u8, Complex64> = [(0, Complex64::new(1.0, 0.0)), (1, i)].into();
        let b: BTreeMap<u8, Complex64> = [(0, i), (1, Complex64::new(-1.0, 0.0))].into();
        assert_eq!(sparse_rank(vec![a.clone(), b], 1e-9), 1);
        // over the reals the same pair (split into re/im) would be independent
        let c: BTreeMap<u8, Complex64> = [(0, Complex64::new(1.0, 0.0)), (1, -i)].into();
        assert_eq!(sparse_rank(vec![a, c], 1e-9), 2);
    }
}
