//! Gram–Schmidt construction of `P^ε_λ` from the monomial basis.
//!
//! Works entirely in m-coordinates with the Gram matrix
//! `G_{αβ} = ⟨m_α, m_β⟩ = Σ_ρ M_{αρ} M_{βρ} ε_ρ z_ρ`, independent of the
//! eigen-solver in [`crate::vertex`].

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coeffs::Coeff;
use crate::error::{Error, Result};
use crate::heisenberg::jack_d_apply;
use crate::partitions::Partition;
use crate::report::Report;
use crate::symfunc::transition::transition;
use crate::symfunc::{Basis, EpsSequence, SymFunc};

/// `P_λ = m_λ + Σ_{μ<λ} c_μ m_μ` and its dual normalization `Q_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GHLResult {
    pub lambda: Partition,
    /// m-basis expansion, monic on `m_λ`.
    pub p: SymFunc,
    /// q-basis expansion with diagonal coefficient 1.
    pub q: SymFunc,
    /// `⟨P_λ, P_λ⟩`.
    pub norm: Coeff,
    /// Factor applied to `P/⟨P,P⟩` to make the q-diagonal 1.
    pub rescale: Coeff,
    pub eps: String,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
struct GhlRepr {
    lambda: Partition,
    terms: Vec<TermRepr>,
    p_terms: Vec<TermRepr>,
    norm: Coeff,
    rescale: Coeff,
    spec: String,
}

fn terms_of(f: &SymFunc) -> Vec<TermRepr> {
    f.terms()
        .iter()
        .map(|(k, c)| TermRepr {
            partition: k.clone(),
            coeff: c.clone(),
        })
        .collect()
}

impl Serialize for GHLResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GhlRepr {
            lambda: self.lambda.clone(),
            terms: terms_of(&self.q),
            p_terms: terms_of(&self.p),
            norm: self.norm.clone(),
            rescale: self.rescale.clone(),
            spec: self.eps.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GHLResult {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GhlRepr::deserialize(d)?;
        let build = |basis, ts: Vec<TermRepr>| {
            SymFunc::from_terms(basis, ts.into_iter().map(|t| (t.partition, t.coeff)))
        };
        Ok(GHLResult {
            lambda: r.lambda,
            q: build(Basis::Q, r.terms),
            p: build(Basis::M, r.p_terms),
            norm: r.norm,
            rescale: r.rescale,
            eps: r.spec,
        })
    }
}

impl GHLResult {
    pub fn to_text(&self) -> String {
        format!(
            "lambda {:?}  eps {}\nnorm {}\nrescale {}\nP\n{}Q\n{}",
            self.lambda,
            self.eps,
            self.norm,
            self.rescale,
            self.p.to_text(),
            self.q.to_text()
        )
    }
}

/// Gram matrix of `{m_λ}` at degree `n`, indexed in enumerate order.
pub fn gram_matrix(n: usize, eps: &EpsSequence) -> Vec<Vec<Coeff>> {
    let t = transition(n);
    let k = t.partitions.len();
    let weights: Vec<Coeff> = t
        .partitions
        .iter()
        .map(|rho| eps.of_partition(rho).scale_int(&rho.z()))
        .collect();
    let rows: Vec<Vec<Coeff>> = t
        .m_to_p
        .iter()
        .map(|row| row.iter().map(Coeff::from_ratio).collect())
        .collect();
    let mut g = vec![vec![Coeff::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            let mut s = Coeff::zero();
            for r in 0..k {
                if rows[a][r].is_zero() || rows[b][r].is_zero() {
                    continue;
                }
                s += &(&(&rows[a][r] * &rows[b][r]) * &weights[r]);
            }
            g[b][a] = s.clone();
            g[a][b] = s;
        }
    }
    g
}

/// `G v`, i.e. the vector `(⟨m_a, v⟩)_a`.
fn gram_apply(v: &[Coeff], g: &[Vec<Coeff>]) -> Vec<Coeff> {
    g.iter()
        .map(|row| {
            let mut s = Coeff::zero();
            for (vb, gb) in v.iter().zip(row) {
                if !vb.is_zero() && !gb.is_zero() {
                    s += &(vb * gb);
                }
            }
            s
        })
        .collect()
}

fn dot(u: &[Coeff], w: &[Coeff]) -> Coeff {
    let mut s = Coeff::zero();
    for (x, y) in u.iter().zip(w) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x * y);
        }
    }
    s
}

struct Orthogonalized {
    partitions: Vec<Partition>,
    gram: Vec<Vec<Coeff>>,
    /// m-coordinates of `P`, in enumerate order.
    p: Vec<Vec<Coeff>>,
    /// `G P`: the pairings `⟨m_a, P⟩`.
    gp: Vec<Vec<Coeff>>,
    norms: Vec<Coeff>,
}

fn orthogonalize(n: usize, eps: &EpsSequence) -> Result<Orthogonalized> {
    eps.validate(n)?;
    let t = transition(n);
    let k = t.partitions.len();
    let gram = gram_matrix(n, eps);
    let mut p: Vec<Vec<Coeff>> = vec![Vec::new(); k];
    let mut gp: Vec<Vec<Coeff>> = vec![Vec::new(); k];
    let mut norms = vec![Coeff::zero(); k];
    for i in (0..k).rev() {
        let mut v = vec![Coeff::zero(); k];
        v[i] = Coeff::one();
        for j in (i + 1)..k {
            let proj = &gp[j][i] / &norms[j];
            if proj.is_zero() {
                continue;
            }
            for (x, pj) in v.iter_mut().zip(&p[j]) {
                if !pj.is_zero() {
                    *x -= &(&proj * pj);
                }
            }
        }
        let w = gram_apply(&v, &gram);
        // ⟨P_i, P_i⟩ = ⟨m_i, P_i⟩ since P_i - m_i lies in span{P_j : j > i}
        let norm = w[i].clone();
        if norm.is_zero() {
            return Err(Error::DegenerateGram(t.partitions[i].clone()));
        }
        norms[i] = norm;
        p[i] = v;
        gp[i] = w;
    }
    Ok(Orthogonalized {
        partitions: t.partitions.clone(),
        gram,
        p,
        gp,
        norms,
    })
}

/// All `P^ε_λ` with `|λ| = n`, in enumerate order.
pub fn ghl_degree(n: usize, eps: &EpsSequence) -> Result<Vec<GHLResult>> {
    let o = orthogonalize(n, eps)?;
    let k = o.partitions.len();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let p = SymFunc::from_terms(
            Basis::M,
            o.partitions.iter().cloned().zip(o.p[i].iter().cloned()),
        );
        // coefficient of q_μ in f is ⟨f, m_μ⟩
        let raw: Vec<Coeff> = o.gp[i].iter().map(|c| c / &o.norms[i]).collect();
        let rescale = raw[i].inv()?;
        let q = SymFunc::from_terms(
            Basis::Q,
            o.partitions
                .iter()
                .cloned()
                .zip(raw.iter().map(|c| c * &rescale)),
        );
        out.push(GHLResult {
            lambda: o.partitions[i].clone(),
            p,
            q,
            norm: o.norms[i].clone(),
            rescale,
            eps: eps.name().to_string(),
        });
    }
    Ok(out)
}

pub fn ghl_p(lambda: &Partition, eps: &EpsSequence) -> Result<GHLResult> {
    ghl_degree(lambda.weight(), eps)?
        .into_iter()
        .find(|r| &r.lambda == lambda)
        .ok_or_else(|| Error::InvalidArgument(format!("no partition {lambda:?}")))
}

/// Gram matrix at degree `n`, its LDU diagonal (the norms, bottom-up), and
/// a pairwise check `⟨P_λ, P_μ⟩ = 0` for `λ ≠ μ`.
pub fn ghl_gram_report(n: usize, eps: &EpsSequence) -> Report {
    let range = json!({ "degree": n, "eps": eps.name() });
    let claim = "<P_lambda, P_mu> = 0 for lambda != mu";
    let o = match orthogonalize(n, eps) {
        Ok(o) => o,
        Err(e) => return Report::fail(claim, range, json!({ "error": e.to_string() })),
    };
    let k = o.partitions.len();
    let details = json!({
        "partitions": o.partitions,
        "gram": o.gram,
        "ldu_diagonal": o.norms.iter().rev().collect::<Vec<_>>(),
    });
    for i in 0..k {
        for j in (i + 1)..k {
            let v = dot(&o.p[i], &o.gp[j]);
            if !v.is_zero() {
                return Report::fail(
                    claim,
                    range,
                    json!({ "lambda": o.partitions[i], "mu": o.partitions[j], "value": v }),
                )
                .with_details(details);
            }
        }
    }
    Report::pass(claim, range).with_details(details)
}

/// `P_λ` is supported on `{μ ≤ λ}` in the m-basis and `Q_λ` on `{μ ≥ λ}`
/// in the q-basis with diagonal 1, for every `|λ| ≤ d`.
pub fn ghl_support_check(d: usize, eps: &EpsSequence) -> Report {
    let range = json!({ "max_weight": d, "eps": eps.name() });
    let claim = "P_lambda lower unitriangular in m, Q_lambda upper unitriangular in q";
    for n in 1..=d {
        let results = match ghl_degree(n, eps) {
            Ok(r) => r,
            Err(e) => return Report::fail(claim, range, json!({ "degree": n, "error": e.to_string() })),
        };
        for r in results {
            let lambda = &r.lambda;
            let p_ok = r.p.coeff(lambda).is_one()
                && r.p.support().all(|mu| lambda.dominates(mu).unwrap_or(false));
            let q_ok = r.q.coeff(lambda).is_one()
                && r.q.support().all(|mu| mu.dominates(lambda).unwrap_or(false));
            if !(p_ok && q_ok) {
                return Report::fail(claim, range, json!({ "lambda": lambda, "p_ok": p_ok, "q_ok": q_ok }));
            }
        }
    }
    Report::pass(claim, range)
}

/// With `ε = jack`, every `P_λ` with `|λ| ≤ d` is an eigenvector of `D(α)`.
pub fn jack_eigen_check(d: usize) -> Report {
    let eps = EpsSequence::jack();
    let range = json!({ "max_weight": d, "eps": "jack" });
    let claim = "jack P_lambda are eigenvectors of D(alpha)";
    for n in 1..=d {
        let results = match ghl_degree(n, &eps) {
            Ok(r) => r,
            Err(e) => return Report::fail(claim, range, json!({ "degree": n, "error": e.to_string() })),
        };
        for r in results {
            let image = jack_d_apply(&r.p).to_m(&eps);
            let value = image.coeff(&r.lambda);
            if image != r.p.scale(&value) {
                return Report::fail(claim, range, json!({ "lambda": r.lambda }));
            }
        }
    }
    Report::pass(claim, range)
}
