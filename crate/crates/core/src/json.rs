//! JSON forms of the exact objects. Rationals are always strings `"p/q"`
//! (integers carry `/1`) so output is byte-stable and round-trips exactly.

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::hc::{Annihilator, Certificates};
use crate::lie::{LieAlgebra, PartTag};
use crate::model::TrigPolynomial;
use crate::nupoly::NuPolynomial;
use crate::scalar::{self, gauss};
use crate::uea::{OrderKind, Part, UeaElement, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub re: String,
    pub im: String,
}

pub type PolyJson = Vec<TermJson>;

pub fn poly_to_json(p: &NuPolynomial) -> PolyJson {
    p.terms()
        .map(|(e, c)| TermJson {
            exp: e.clone(),
            re: scalar::format_rational(&c.re),
            im: scalar::format_rational(&c.im),
        })
        .collect()
}

pub fn poly_from_json(j: &PolyJson, nvars: usize) -> Result<NuPolynomial> {
    let mut p = NuPolynomial::zero(nvars);
    for t in j {
        if t.exp.len() != nvars {
            return Err(Error::Dimension {
                expected: nvars,
                got: t.exp.len(),
            });
        }
        p.add_term(
            t.exp.clone(),
            gauss(scalar::parse_rational(&t.re)?, scalar::parse_rational(&t.im)?),
        );
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub algebra: String,
    pub kind: OrderKind,
    pub parts: Vec<Part>,
    pub letters: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTermJson {
    pub word: Word,
    pub coeff: PolyJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaJson {
    pub order: OrderJson,
    pub terms: Vec<WordTermJson>,
}

pub fn uea_to_json(u: &UeaElement) -> UeaJson {
    let order = u.order();
    UeaJson {
        order: OrderJson {
            algebra: order.algebra().name(),
            kind: order.kind(),
            parts: order.kind().parts().to_vec(),
            letters: order.letters().iter().map(|l| l.label.clone()).collect(),
        },
        terms: u
            .terms()
            .iter()
            .map(|(w, c)| WordTermJson {
                word: w.clone(),
                coeff: poly_to_json(c),
            })
            .collect(),
    }
}

/// Rebuilds an element; the descriptor must match the context's order exactly.
/// Words need not be sorted: they are normal-ordered on the way in.
pub fn uea_from_json(ctx: &Context, j: &UeaJson) -> Result<UeaElement> {
    let order = ctx.order(j.order.kind);
    let expected = uea_to_json(&UeaElement::zero(order)).order;
    if j.order != expected {
        return Err(Error::OrderMismatch(
            format!("{}/{}", j.order.algebra, j.order.kind.name()),
            order.describe(),
        ));
    }
    let terms = j
        .terms
        .iter()
        .map(|t| Ok((t.word.clone(), poly_from_json(&t.coeff, ctx.rank())?)))
        .collect::<Result<Vec<_>>>()?;
    UeaElement::normal_form(order, terms)
}

pub fn parse_uea(ctx: &Context, s: &str) -> Result<UeaElement> {
    let j: UeaJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    uea_from_json(ctx, &j)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeJson {
    pub n: i64,
    pub coeff: PolyJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrigJson {
    pub modes: Vec<ModeJson>,
}

pub fn trig_to_json(t: &TrigPolynomial) -> TrigJson {
    TrigJson {
        modes: t
            .modes()
            .iter()
            .map(|(&n, c)| ModeJson { n, coeff: poly_to_json(c) })
            .collect(),
    }
}

pub fn trig_from_json(j: &TrigJson, nvars: usize) -> Result<TrigPolynomial> {
    let modes = j
        .modes
        .iter()
        .map(|m| Ok((m.n, poly_from_json(&m.coeff, nvars)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TrigPolynomial::from_modes(nvars, modes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanCoeffJson {
    pub cartan: usize,
    pub label: String,
    pub coeff: PolyJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorJson {
    pub algebra: String,
    pub degree: usize,
    #[serde(rename = "H_part")]
    pub h_part: Vec<CartanCoeffJson>,
    #[serde(rename = "J")]
    pub j: UeaJson,
    pub certificates: Certificates,
    #[serde(rename = "P")]
    pub p: PolyJson,
    pub pr: UeaJson,
    pub b: UeaJson,
    pub source: UeaJson,
    /// Rank one only: `H + J/(c r^{d−1})` at `ν(H) = 2ir`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub normalized: Option<String>,
}

pub fn annihilator_to_json(ctx: &Context, a: &Annihilator) -> AnnihilatorJson {
    AnnihilatorJson {
        algebra: ctx.algebra.name(),
        degree: a.degree,
        h_part: a
            .h_part
            .iter()
            .enumerate()
            .map(|(i, c)| CartanCoeffJson {
                cartan: i,
                label: ctx.algebra.basis()[ctx.algebra.cartan_index(i)].label.clone(),
                coeff: poly_to_json(c),
            })
            .collect(),
        j: uea_to_json(&a.j),
        certificates: a.certificates,
        p: poly_to_json(&a.p),
        pr: uea_to_json(&a.pr),
        b: uea_to_json(&a.b),
        source: uea_to_json(&a.source),
        normalized: a.normalized_display(),
    }
}

pub fn annihilator_from_json(ctx: &Context, j: &AnnihilatorJson) -> Result<Annihilator> {
    if j.algebra != ctx.algebra.name() {
        return Err(Error::OrderMismatch(j.algebra.clone(), ctx.algebra.name()));
    }
    let r = ctx.rank();
    let mut h_part = vec![NuPolynomial::zero(r); r];
    for c in &j.h_part {
        if c.cartan >= r {
            return Err(Error::Dimension {
                expected: r,
                got: c.cartan + 1,
            });
        }
        h_part[c.cartan] = poly_from_json(&c.coeff, r)?;
    }
    Ok(Annihilator {
        degree: j.degree,
        h_part,
        j: uea_from_json(ctx, &j.j)?,
        source: uea_from_json(ctx, &j.source)?,
        p: poly_from_json(&j.p, r)?,
        pr: uea_from_json(ctx, &j.pr)?,
        b: uea_from_json(ctx, &j.b)?,
        certificates: j.certificates,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub label: String,
    pub pretty: String,
    pub part: PartTag,
}

/// Algebra descriptor. `structure_constants` lists `[i, j, k, c]` for
/// `[x_i, x_j] = Σ c x_k`, `i < j`, nonzero `c` only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub rank: usize,
    pub dim: usize,
    pub basis: Vec<BasisJson>,
    pub structure_constants: Vec<[i64; 4]>,
    pub killing: Vec<Vec<String>>,
}

pub fn algebra_to_json(alg: &LieAlgebra) -> AlgebraJson {
    let mut sc = Vec::new();
    for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            for (k, c) in alg.bracket_basis(i, j) {
                let c = c.to_integer().try_into().expect("Chevalley constants are small integers");
                sc.push([i as i64, j as i64, *k as i64, c]);
            }
        }
    }
    AlgebraJson {
        name: alg.name(),
        rank: alg.rank(),
        dim: alg.dim(),
        basis: alg
            .basis()
            .iter()
            .map(|b| BasisJson {
                label: b.label.clone(),
                pretty: b.pretty.clone(),
                part: b.tag,
            })
            .collect(),
        structure_constants: sc,
        killing: alg
            .killing_matrix()
            .iter()
            .map(|r| r.iter().map(scalar::format_rational).collect())
            .collect(),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
