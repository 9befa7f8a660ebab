use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, PartTag};
use crate::linalg::{self, Matrix};
use crate::scalar::Rational;

/// Letter index within a [`PbwOrder`]; the index is also its sort position.
pub type Letter = u16;
pub type Word = Vec<Letter>;
/// Rational combination of words.
pub type Linear = BTreeMap<Word, Rational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Part {
    PositiveNilpotent,
    Cartan,
    NegativeNilpotent,
    Compact,
}

/// Which PBW factorization the order realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    /// `𝔫, 𝔞, 𝔫̄`: the standard basis, used for the projection to `U(𝔞)`.
    Pr,
    /// `𝔫, 𝔞, 𝔨` with compact letters `e_α − f_α`.
    B,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Pr => "pr",
            OrderKind::B => "b",
        }
    }

    pub fn parts(self) -> [Part; 3] {
        match self {
            OrderKind::Pr => [Part::PositiveNilpotent, Part::Cartan, Part::NegativeNilpotent],
            OrderKind::B => [Part::PositiveNilpotent, Part::Cartan, Part::Compact],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterDef {
    pub label: String,
    pub pretty: String,
    pub part: Part,
    /// Coordinates in the standard basis of the algebra.
    pub vector: Vec<Rational>,
    /// `Some(i)` for the Cartan letter `h_i`.
    pub cartan: Option<usize>,
    /// Root grading (values on the Cartan basis) when the letter is a weight vector.
    pub weight: Option<Vec<Rational>>,
}

/// An ordered basis of `𝔤` partitioned into parts, together with the bracket
/// table in that basis. Sorted words form the PBW basis of `U(𝔤_ℂ)`.
pub struct PbwOrder {
    kind: OrderKind,
    algebra: Arc<LieAlgebra>,
    letters: Vec<LetterDef>,
    brackets: Vec<Vec<Vec<(Letter, Rational)>>>,
    /// Row `j` holds the letter coordinates of the standard basis vector `j`.
    std_to_letters: Matrix<Rational>,
    memo: Mutex<HashMap<(Letter, Word), Arc<Linear>>>,
}

impl fmt::Debug for PbwOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PbwOrder({}, {})", self.algebra.name(), self.kind.name())
    }
}

impl PbwOrder {
    pub fn new(algebra: Arc<LieAlgebra>, kind: OrderKind) -> Arc<Self> {
        let letters = match kind {
            OrderKind::Pr => algebra
                .basis()
                .iter()
                .enumerate()
                .map(|(idx, b)| LetterDef {
                    label: b.label.clone(),
                    pretty: b.pretty.clone(),
                    part: match b.tag {
                        PartTag::PositiveNilpotent(_) => Part::PositiveNilpotent,
                        PartTag::Cartan(_) => Part::Cartan,
                        PartTag::NegativeNilpotent(_) => Part::NegativeNilpotent,
                    },
                    vector: algebra.unit(idx),
                    cartan: match b.tag {
                        PartTag::Cartan(i) => Some(i),
                        _ => None,
                    },
                    weight: Some(algebra.weight_of(idx)),
                })
                .collect::<Vec<_>>(),
            OrderKind::B => {
                let npos = algebra.num_positive_roots();
                let mut v: Vec<LetterDef> = Vec::new();
                for idx in 0..npos + algebra.rank() {
                    let b = &algebra.basis()[idx];
                    v.push(LetterDef {
                        label: b.label.clone(),
                        pretty: b.pretty.clone(),
                        part: if idx < npos { Part::PositiveNilpotent } else { Part::Cartan },
                        vector: algebra.unit(idx),
                        cartan: if idx < npos { None } else { Some(idx - npos) },
                        weight: Some(algebra.weight_of(idx)),
                    });
                }
                for root in 0..npos {
                    let pos = &algebra.basis()[algebra.positive_index(root)].label;
                    let (label, pretty) = if algebra.matrix_size() == 2 {
                        ("W".to_string(), "W".to_string())
                    } else {
                        let ij = pos.trim_start_matches('e');
                        (format!("k{ij}"), format!("k{ij}"))
                    };
                    v.push(LetterDef {
                        label,
                        pretty,
                        part: Part::Compact,
                        vector: algebra.compact_vector(root),
                        cartan: None,
                        weight: None,
                    });
                }
                v
            }
        };
        assert!(letters.len() <= Letter::MAX as usize);
        let dim = algebra.dim();
        // letters as columns: x_std = L y  =>  y = L⁻¹ x_std
        let l: Matrix<Rational> = (0..dim)
            .map(|row| letters.iter().map(|lt| lt.vector[row].clone()).collect())
            .collect();
        let l_inv = linalg::inverse(&l).expect("letters form a basis");
        let std_to_letters = linalg::transpose(&l_inv);
        let to_letters = |x: &[Rational]| -> Vec<(Letter, Rational)> {
            linalg::mat_vec(&l_inv, x)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as Letter, c))
                .collect()
        };
        let brackets = letters
            .iter()
            .map(|a| {
                letters
                    .iter()
                    .map(|b| to_letters(&algebra.bracket(&a.vector, &b.vector)))
                    .collect()
            })
            .collect();
        Arc::new(PbwOrder {
            kind,
            algebra,
            letters,
            brackets,
            std_to_letters,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn letters(&self) -> &[LetterDef] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn letter(&self, l: Letter) -> &LetterDef {
        &self.letters[l as usize]
    }

    pub fn letter_by_label(&self, label: &str) -> Result<Letter> {
        self.letters
            .iter()
            .position(|l| l.label == label)
            .map(|p| p as Letter)
            .ok_or_else(|| Error::UnknownLetter(label.to_string()))
    }

    pub fn cartan_letter(&self, i: usize) -> Letter {
        self.letters
            .iter()
            .position(|l| l.cartan == Some(i))
            .expect("every order contains the Cartan letters") as Letter
    }

    /// Same algebra and same factorization.
    pub fn same_as(&self, other: &PbwOrder) -> bool {
        self.kind == other.kind && *self.algebra == *other.algebra
    }

    pub fn describe(&self) -> String {
        format!("{}/{}", self.algebra.name(), self.kind.name())
    }

    pub fn check_same(&self, other: &PbwOrder) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.describe(), other.describe()))
        }
    }

    pub fn bracket_letters(&self, a: Letter, b: Letter) -> &[(Letter, Rational)] {
        &self.brackets[a as usize][b as usize]
    }

    /// Letter coordinates of a vector given in the standard basis.
    pub fn letter_coords(&self, x: &[Rational]) -> Vec<(Letter, Rational)> {
        let mut out: Vec<Rational> = vec![Rational::zero(); self.len()];
        for (j, xj) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (l, c) in self.std_to_letters[j].iter().enumerate() {
                if !c.is_zero() {
                    out[l] += xj * c;
                }
            }
        }
        out.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as Letter, c))
            .collect()
    }

    pub fn is_sorted(w: &[Letter]) -> bool {
        w.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn check_letters(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&l| l as usize >= self.len()) {
            Some(l) => Err(Error::UnknownLetter(format!("#{l}"))),
            None => Ok(()),
        }
    }

    /// Normal form of `x · w` for a sorted word `w`.
    pub fn insert(&self, x: Letter, w: &[Letter]) -> Arc<Linear> {
        if w.first().is_none_or(|&y| x <= y) {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(x);
            word.extend_from_slice(w);
            return Arc::new(Linear::from([(word, Rational::one())]));
        }
        let key = (x, w.to_vec());
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return Arc::clone(hit);
        }
        let y = w[0];
        let rest = &w[1..];
        let mut out = Linear::new();
        // x y rest = y (x rest) + [x, y] rest
        for (v, c) in self.insert(x, rest).iter() {
            for (u, d) in self.insert(y, v).iter() {
                add_to(&mut out, u, c * d);
            }
        }
        for (m, cm) in self.bracket_letters(x, y) {
            for (u, d) in self.insert(*m, rest).iter() {
                add_to(&mut out, u, cm * d);
            }
        }
        let out = Arc::new(out);
        self.memo
            .lock()
            .expect("memo lock")
            .insert(key, Arc::clone(&out));
        out
    }

    /// Normal form of an arbitrary word.
    pub fn normal_form_word(&self, w: &[Letter]) -> Linear {
        self.left_multiply_word(w, &Linear::from([(Vec::new(), Rational::one())]))
    }

    /// Normal form of `w · v` where `v` is already a normal form.
    pub fn left_multiply_word(&self, w: &[Letter], v: &Linear) -> Linear {
        let mut acc = v.clone();
        for &x in w.iter().rev() {
            let mut next = Linear::new();
            for (u, c) in &acc {
                for (t, d) in self.insert(x, u).iter() {
                    add_to(&mut next, t, c * d);
                }
            }
            acc = next;
        }
        acc
    }

    /// Reduces a combination of words by rewriting adjacent inversions
    /// `xy → yx + [x,y]`, letting `pick(n)` (returning a value in `0..n`)
    /// choose which unsorted term and which inversion to rewrite next.
    pub fn reduce_with_strategy(
        &self,
        expr: &Linear,
        mut pick: impl FnMut(usize) -> usize,
    ) -> Linear {
        let mut done = Linear::new();
        let mut pending = Linear::new();
        let route = |done: &mut Linear, pending: &mut Linear, w: &Word, c: Rational| {
            if Self::is_sorted(w) {
                add_to(done, w, c);
            } else {
                add_to(pending, w, c);
            }
        };
        for (w, c) in expr {
            route(&mut done, &mut pending, w, c.clone());
        }
        while !pending.is_empty() {
            let k = pick(pending.len()) % pending.len();
            let w = pending.keys().nth(k).cloned().expect("index in range");
            let c = pending.remove(&w).expect("present");
            let inversions: Vec<usize> = (0..w.len() - 1).filter(|&i| w[i] > w[i + 1]).collect();
            let pos = inversions[pick(inversions.len()) % inversions.len()];
            let mut swapped = w.clone();
            swapped.swap(pos, pos + 1);
            route(&mut done, &mut pending, &swapped, c.clone());
            for (m, cm) in self.bracket_letters(w[pos], w[pos + 1]) {
                let mut v = w[..pos].to_vec();
                v.push(*m);
                v.extend_from_slice(&w[pos + 2..]);
                route(&mut done, &mut pending, &v, &c * cm);
            }
        }
        done
    }

    pub fn memo_len(&self) -> usize {
        self.memo.lock().expect("memo lock").len()
    }
}

pub(crate) fn add_to(map: &mut Linear, w: &[Letter], c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(w) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                map.remove(w);
            }
        }
        None => {
            map.insert(w.to_vec(), c);
        }
    }
}
