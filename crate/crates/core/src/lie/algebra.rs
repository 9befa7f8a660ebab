use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, Rational};

/// Sparse vector over the standard basis: `(basis index, coefficient)`, sorted by index.
pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    SpecialLinear,
}

/// Iwasawa/root grading of a basis vector. Root indices refer to
/// [`LieAlgebra::positive_roots`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "kebab-case")]
pub enum PartTag {
    PositiveNilpotent(usize),
    Cartan(usize),
    NegativeNilpotent(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector {
    pub label: String,
    /// Label for human-facing output (`X₊`, `H`, … for sl₂).
    pub pretty: String,
    pub tag: PartTag,
}

/// A positive restricted root, recorded by its values on the Cartan basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub values: Vec<Rational>,
    pub simple_coeffs: Vec<i64>,
    pub height: i64,
}

/// A split real semisimple Lie algebra with a Chevalley basis, ordered
/// `𝔫` (by root height, then index), `𝔞`, `𝔫̄` (same order).
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    family: Family,
    n: usize,
    rank: usize,
    basis: Vec<BasisVector>,
    positive_roots: Vec<PositiveRoot>,
    brackets: Vec<Vec<SparseVec>>,
    killing: Vec<Vec<Rational>>,
    theta: Vec<SparseVec>,
    matrices: Vec<Vec<Vec<i64>>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl LieAlgebra {
    /// `sl_n` over the rationals.
    pub fn special_linear(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let rank = n - 1;
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        pairs.sort_by_key(|&(i, j)| (j - i, i));

        let elementary = |i: usize, j: usize| {
            let mut m = vec![vec![0i64; n]; n];
            m[i][j] = 1;
            m
        };
        let sl2 = n == 2;
        let mut basis = Vec::new();
        let mut matrices = Vec::new();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            basis.push(BasisVector {
                label: if sl2 { "X+".into() } else { format!("e{}{}", i + 1, j + 1) },
                pretty: if sl2 { "X₊".into() } else { format!("e{}{}", i + 1, j + 1) },
                tag: PartTag::PositiveNilpotent(k),
            });
            matrices.push(elementary(i, j));
        }
        for k in 0..rank {
            let mut m = vec![vec![0i64; n]; n];
            m[k][k] = 1;
            m[k + 1][k + 1] = -1;
            basis.push(BasisVector {
                label: if sl2 { "H".into() } else { format!("h{}", k + 1) },
                pretty: if sl2 { "H".into() } else { format!("h{}", k + 1) },
                tag: PartTag::Cartan(k),
            });
            matrices.push(m);
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            basis.push(BasisVector {
                label: if sl2 { "X-".into() } else { format!("e{}{}", j + 1, i + 1) },
                pretty: if sl2 { "X₋".into() } else { format!("e{}{}", j + 1, i + 1) },
                tag: PartTag::NegativeNilpotent(k),
            });
            matrices.push(elementary(j, i));
        }

        let npos = pairs.len();
        let decompose = |m: &[Vec<i64>]| -> SparseVec {
            let mut v: SparseVec = Vec::new();
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if m[i][j] != 0 {
                    v.push((k, int(m[i][j])));
                }
            }
            let mut partial = 0;
            for (k, row) in m.iter().enumerate().take(rank) {
                partial += row[k];
                if partial != 0 {
                    v.push((npos + k, int(partial)));
                }
            }
            debug_assert_eq!(partial + m[n - 1][n - 1], 0, "matrix must be traceless");
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if m[j][i] != 0 {
                    v.push((npos + rank + k, int(m[j][i])));
                }
            }
            v
        };
        let mul = |a: &[Vec<i64>], b: &[Vec<i64>]| -> Vec<Vec<i64>> {
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
                .collect()
        };

        let dim = basis.len();
        let brackets: Vec<Vec<SparseVec>> = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        let ab = mul(&matrices[a], &matrices[b]);
                        let ba = mul(&matrices[b], &matrices[a]);
                        let c: Vec<Vec<i64>> = (0..n)
                            .map(|i| (0..n).map(|j| ab[i][j] - ba[i][j]).collect())
                            .collect();
                        decompose(&c)
                    })
                    .collect()
            })
            .collect();
        let theta: Vec<SparseVec> = matrices
            .iter()
            .map(|m| {
                let t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| -m[j][i]).collect()).collect();
                decompose(&t)
            })
            .collect();

        // root values α(h_k): [h_k, e_α] = α(h_k) e_α
        let positive_roots: Vec<PositiveRoot> = (0..npos)
            .map(|k| {
                let values: Vec<Rational> = (0..rank)
                    .map(|c| {
                        brackets[npos + c][k]
                            .iter()
                            .find(|(idx, _)| *idx == k)
                            .map_or_else(Rational::zero, |(_, v)| v.clone())
                    })
                    .collect();
                let (i, j) = pairs[k];
                let simple_coeffs: Vec<i64> =
                    (0..rank).map(|s| i64::from(s >= i && s < j)).collect();
                PositiveRoot {
                    values,
                    height: (j - i) as i64,
                    simple_coeffs,
                }
            })
            .collect();

        let mut alg = LieAlgebra {
            family: Family::SpecialLinear,
            n,
            rank,
            basis,
            positive_roots,
            brackets,
            killing: Vec::new(),
            theta,
            matrices,
        };
        alg.killing = (0..dim)
            .map(|a| (0..dim).map(|b| alg.killing_basis(a, b)).collect())
            .collect();
        Ok(alg)
    }

    /// Parses `sl2`, `sl3`, `sl<n>`.
    pub fn from_name(name: &str) -> Result<Self> {
        let n = name
            .strip_prefix("sl")
            .and_then(|s| s.trim_start_matches('_').parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("unknown algebra {name:?}")))?;
        Self::special_linear(n)
    }

    pub fn name(&self) -> String {
        format!("sl{}", self.n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Standard basis index of the positive root vector `e_α`.
    pub fn positive_index(&self, root: usize) -> usize {
        root
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        self.num_positive_roots() + i
    }

    pub fn negative_index(&self, root: usize) -> usize {
        self.num_positive_roots() + self.rank + root
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn defining_matrix(&self, idx: usize) -> &[Vec<i64>] {
        &self.matrices[idx]
    }

    /// `[x_a, x_b]` in the standard basis.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &SparseVec {
        &self.brackets[a][b]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, c) in &self.brackets[a][b] {
                    out[*k] += xa * yb * c;
                }
            }
        }
        out
    }

    pub fn unit(&self, idx: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[idx] = Rational::one();
        v
    }

    fn killing_basis(&self, a: usize, b: usize) -> Rational {
        // trace(ad x_a ∘ ad x_b) = Σ_l Σ_m c_{b l}^m c_{a m}^l
        let mut tr = Rational::zero();
        for l in 0..self.dim() {
            for (m, cbl) in &self.brackets[b][l] {
                for (k, cam) in &self.brackets[a][*m] {
                    if *k == l {
                        tr += cbl * cam;
                    }
                }
            }
        }
        tr
    }

    pub fn killing_matrix(&self) -> &[Vec<Rational>] {
        &self.killing
    }

    /// `B(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing_form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                acc += xa * yb * &self.killing[a][b];
            }
        }
        acc
    }

    /// Killing form restricted to `𝔞` in the basis `h_1, …, h_r`.
    pub fn cartan_killing(&self) -> Vec<Vec<Rational>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.killing[self.cartan_index(i)][self.cartan_index(j)].clone())
                    .collect()
            })
            .collect()
    }

    pub fn theta_basis(&self, idx: usize) -> &SparseVec {
        &self.theta[idx]
    }

    /// Cartan involution `θ(x) = −xᵀ`.
    pub fn theta(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in &self.theta[a] {
                out[*k] += xa * c;
            }
        }
        out
    }

    /// Compact basis vector `e_α − f_α`, fixed by `θ`.
    pub fn compact_vector(&self, root: usize) -> Vec<Rational> {
        let mut v = self.unit(self.positive_index(root));
        v[self.negative_index(root)] = -Rational::one();
        v
    }

    /// Root grading of a basis vector as values on the Cartan basis
    /// (zero for Cartan vectors).
    pub fn weight_of(&self, idx: usize) -> Vec<Rational> {
        match self.basis[idx].tag {
            PartTag::PositiveNilpotent(k) => self.positive_roots[k].values.clone(),
            PartTag::NegativeNilpotent(k) => {
                self.positive_roots[k].values.iter().map(|v| -v).collect()
            }
            PartTag::Cartan(_) => vec![Rational::zero(); self.rank],
        }
    }

    pub fn iwasawa_components(&self, x: &[Rational]) -> IwasawaParts {
        let dim = self.dim();
        let mut parts = IwasawaParts {
            n: vec![Rational::zero(); dim],
            a: vec![Rational::zero(); dim],
            k: vec![Rational::zero(); dim],
        };
        for (idx, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            match self.basis[idx].tag {
                PartTag::PositiveNilpotent(_) => parts.n[idx] += c,
                PartTag::Cartan(_) => parts.a[idx] += c,
                PartTag::NegativeNilpotent(_) => {
                    // y = −θ(y) + (y + θ(y)), with −θ(y) ∈ 𝔫 and y + θ(y) ∈ 𝔨
                    parts.k[idx] += c;
                    for (t, tc) in &self.theta[idx] {
                        parts.n[*t] -= c * tc;
                        parts.k[*t] += c * tc;
                    }
                }
            }
        }
        parts
    }
}

/// `x = x_𝔫 + x_𝔞 + x_𝔨`, each in the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IwasawaParts {
    pub n: Vec<Rational>,
    pub a: Vec<Rational>,
    pub k: Vec<Rational>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sl(n: usize) -> LieAlgebra {
        LieAlgebra::special_linear(n).unwrap()
    }

    fn vec_of(alg: &LieAlgebra, terms: &[(&str, i64)]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); alg.dim()];
        for (l, c) in terms {
            v[alg.index_of(l).unwrap()] += int(*c);
        }
        v
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(LieAlgebra::special_linear(1), Err(Error::InvalidRank(1)));
        assert_eq!(LieAlgebra::special_linear(0), Err(Error::InvalidRank(0)));
    }

    #[test]
    fn sl2_commutation_relations() {
        let g = sl(2);
        let labels: Vec<&str> = g.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["X+", "H", "X-"]);
        let h = vec_of(&g, &[("H", 1)]);
        let xp = vec_of(&g, &[("X+", 1)]);
        let xm = vec_of(&g, &[("X-", 1)]);
        assert_eq!(g.bracket(&h, &xp), vec_of(&g, &[("X+", 2)]));
        assert_eq!(g.bracket(&h, &xm), vec_of(&g, &[("X-", -2)]));
        assert_eq!(g.bracket(&xp, &xm), h);
    }

    #[test]
    fn sl2_theta_and_compact() {
        let g = sl(2);
        let xp = vec_of(&g, &[("X+", 1)]);
        assert_eq!(g.theta(&xp), vec_of(&g, &[("X-", -1)]));
        let w = g.compact_vector(0);
        assert_eq!(w, vec_of(&g, &[("X+", 1), ("X-", -1)]));
        assert_eq!(g.theta(&w), w);
    }

    #[test]
    fn sl3_dimensions() {
        let g = sl(3);
        assert_eq!(g.dim(), 8);
        assert_eq!(g.rank(), 2);
        assert_eq!(g.num_positive_roots() * 2, 6);
    }

    #[test]
    fn killing_values_sl2() {
        let g = sl(2);
        let h = vec_of(&g, &[("H", 1)]);
        let xp = vec_of(&g, &[("X+", 1)]);
        let xm = vec_of(&g, &[("X-", 1)]);
        // oracle: explicit trace of ad(H)^2 on (X+, H, X-) is 4 + 0 + 4
        let ad_h_diag = [2i64, 0, -2];
        let oracle: i64 = ad_h_diag.iter().map(|d| d * d).sum();
        assert_eq!(g.killing_form(&h, &h), int(oracle));
        assert_eq!(g.killing_form(&xp, &xp), int(0));
        // ad X+ ad X- : X+ -> [X+,[X-,X+]] = [X+,-H] = 2X+ ; H -> [X+,[X-,H]] = [X+,2X-] = 2H ; X- -> 0
        assert_eq!(g.killing_form(&xp, &xm), int(4));
    }

    #[test]
    fn iwasawa_examples() {
        let g = sl(2);
        let xm = vec_of(&g, &[("X-", 1)]);
        let p = g.iwasawa_components(&xm);
        assert_eq!(p.n, vec_of(&g, &[("X+", 1)]));
        assert!(p.a.iter().all(Zero::is_zero));
        let w = g.compact_vector(0);
        assert_eq!(p.k, w.iter().map(|c| -c).collect::<Vec<_>>());

        let h = vec_of(&g, &[("H", 1)]);
        let p = g.iwasawa_components(&h);
        assert_eq!(p.a, h);
        assert!(p.n.iter().chain(&p.k).all(Zero::is_zero));

        let g3 = sl(3);
        let e31 = vec_of(&g3, &[("e31", 1)]);
        let p = g3.iwasawa_components(&e31);
        // oracle: solve n + k = e31 with n ∈ span{e13}, k ∈ span{e13 − e31}
        assert_eq!(p.n, vec_of(&g3, &[("e13", 1)]));
        assert_eq!(p.k, vec_of(&g3, &[("e13", -1), ("e31", 1)]));
    }

    #[test]
    fn jacobi_antisymmetry_exhaustive() {
        for n in 2..=4 {
            let g = sl(n);
            let d = g.dim();
            for a in 0..d {
                for b in 0..d {
                    let ab = g.bracket(&g.unit(a), &g.unit(b));
                    let ba = g.bracket(&g.unit(b), &g.unit(a));
                    assert!(ab.iter().zip(&ba).all(|(x, y)| x == &-y));
                    for c in 0..d {
                        let x = g.unit(a);
                        let y = g.unit(b);
                        let z = g.unit(c);
                        let t1 = g.bracket(&x, &g.bracket(&y, &z));
                        let t2 = g.bracket(&y, &g.bracket(&z, &x));
                        let t3 = g.bracket(&z, &g.bracket(&x, &y));
                        assert!((0..d).all(|k| (&t1[k] + &t2[k] + &t3[k]).is_zero()));
                    }
                }
            }
        }
    }

    #[test]
    fn theta_is_an_involutive_automorphism_reversing_roots() {
        for n in 2..=4 {
            let g = sl(n);
            for a in 0..g.dim() {
                let x = g.unit(a);
                assert_eq!(g.theta(&g.theta(&x)), x);
                let wt = g.weight_of(a);
                let tx = g.theta(&x);
                for (b, c) in tx.iter().enumerate() {
                    if !c.is_zero() {
                        let neg: Vec<Rational> = wt.iter().map(|v| -v).collect();
                        assert_eq!(g.weight_of(b), neg);
                    }
                }
                if let PartTag::Cartan(_) = g.basis()[a].tag {
                    assert_eq!(tx, x.iter().map(|v| -v).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn brackets_respect_root_grading() {
        let g = sl(4);
        for a in 0..g.dim() {
            for b in 0..g.dim() {
                let want: Vec<Rational> =
                    g.weight_of(a).iter().zip(g.weight_of(b)).map(|(x, y)| x + y).collect();
                for (k, _) in g.bracket_basis(a, b) {
                    assert_eq!(g.weight_of(*k), want);
                }
            }
        }
    }
}
