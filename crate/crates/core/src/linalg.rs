//! Dense exact linear algebra over a field (`ℚ` or `ℚ(i)`).

use num_traits::Num;

use crate::error::{Error, Result};

pub trait Field: Clone + Num {}
impl<T: Clone + Num> Field for T {}

pub type Matrix<T> = Vec<Vec<T>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<T: Field>(m: &mut Matrix<T>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate().take(rows) {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot).take(cols) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn kernel<T: Field>(m: &Matrix<T>, cols: usize) -> Vec<Vec<T>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = T::zero() - a[row][f].clone();
            }
            v
        })
        .collect()
}

pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let n = m.len();
    let mut aug: Matrix<T> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(T::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<T: Field>(a: &Matrix<T>, v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

pub fn identity<T: Field>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn transpose<T: Clone>(a: &Matrix<T>) -> Matrix<T> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Incremental sparse row reduction; rows are `column -> value` maps.
#[derive(Debug, Default)]
pub struct SparseEchelon<T> {
    pivots: std::collections::BTreeMap<usize, std::collections::BTreeMap<usize, T>>,
}

impl<T: Field> SparseEchelon<T> {
    pub fn new() -> Self {
        SparseEchelon {
            pivots: std::collections::BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots and keeps it if independent.
    pub fn push(&mut self, mut row: std::collections::BTreeMap<usize, T>) -> bool {
        row.retain(|_, v| !v.is_zero());
        while let Some(col) = row.keys().copied().find(|c| self.pivots.contains_key(c)) {
            let f = row[&col].clone();
            for (c, v) in &self.pivots[&col] {
                let entry = row.entry(*c).or_insert_with(T::zero);
                *entry = entry.clone() - f.clone() * v.clone();
            }
            row.retain(|_, v| !v.is_zero());
        }
        let Some((&lead, lv)) = row.iter().next() else {
            return false;
        };
        let inv = T::one() / lv.clone();
        for v in row.values_mut() {
            *v = v.clone() * inv.clone();
        }
        self.pivots.insert(lead, row);
        true
    }

    /// Kernel basis of the accumulated rows over `cols` columns, one vector per
    /// free column, in increasing free-column order.
    pub fn kernel(&self, cols: usize) -> Vec<Vec<T>> {
        // back-substitute to reduced form
        let mut reduced: std::collections::BTreeMap<usize, std::collections::BTreeMap<usize, T>> =
            std::collections::BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            while let Some(col) = row.keys().copied().find(|&c| c != p && reduced.contains_key(&c)) {
                let f = row[&col].clone();
                for (c, v) in &reduced[&col] {
                    let entry = row.entry(*c).or_insert_with(T::zero);
                    *entry = entry.clone() - f.clone() * v.clone();
                }
                row.retain(|_, v| !v.is_zero());
            }
            reduced.insert(p, row);
        }
        (0..cols)
            .filter(|c| !reduced.contains_key(c))
            .map(|f| {
                let mut v = vec![T::zero(); cols];
                v[f] = T::one();
                for (&p, row) in &reduced {
                    if let Some(x) = row.get(&f) {
                        v[p] = T::zero() - x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn inverse_of_cartan_matrix() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
    }

    #[test]
    fn singular_is_rejected() {
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&a, v).iter().all(|x| x == &int(0)));
        }
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let a = m(&[&[1, 2, 0, 3], &[0, 0, 1, 1], &[1, 2, 1, 4]]);
        let mut e = SparseEchelon::new();
        for row in &a {
            e.push(row.iter().cloned().enumerate().collect());
        }
        assert_eq!(e.rank(), 2);
        let k = e.kernel(4);
        assert_eq!(k, kernel(&a, 4));
    }
}
