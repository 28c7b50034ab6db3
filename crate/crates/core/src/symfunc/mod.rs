//! Symmetric functions as sparse partition-indexed maps.
//!
//! The canonical basis is the power sums `p_λ`, where the ε-scalar product is
//! diagonal. Expansions in the monomial basis `m_λ` and in the generalized
//! complete functions `q^ε_λ` are produced by conversion.

mod eps;
pub mod transition;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

pub use eps::{CoeffSeq, EpsPreset, EpsSequence};
pub use transition::{transition, Transition, CACHE_ENV};

use crate::coeffs::Coeff;
use crate::partitions::{enumerate, union, z_lambda, Partition};
use crate::report::Report;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "m")]
    M,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::Q => "q",
            Basis::M => "m",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `Σ_λ c_λ b_λ` for one of the bases `p`, `q^ε`, `m`. Zero coefficients are
/// never stored, so equal functions in the same basis have equal term maps.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Coeff>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::from([(lambda, Coeff::one())]),
        }
    }

    /// `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        SymFunc::basis_element(Basis::P, lambda)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Coeff)>) -> Self {
        let mut f = SymFunc::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, &c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Coeff> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Coeff> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    /// Common weight of all terms; `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(|k| k.weight());
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Splits into homogeneous components, by increasing degree.
    pub fn homogeneous_parts(&self) -> Vec<(usize, SymFunc)> {
        let mut parts: BTreeMap<usize, SymFunc> = BTreeMap::new();
        for (k, c) in &self.terms {
            parts
                .entry(k.weight())
                .or_insert_with(|| SymFunc::zero(self.basis))
                .terms
                .insert(k.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    pub fn scale(&self, c: &Coeff) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<E>(&self, mut f: impl FnMut(&Coeff) -> Result<Coeff, E>) -> Result<SymFunc, E> {
        let mut out = SymFunc::zero(self.basis);
        for (k, v) in &self.terms {
            let c = f(v)?;
            if !c.is_zero() {
                out.terms.insert(k.clone(), c);
            }
        }
        Ok(out)
    }

    fn assert_same_basis(&self, other: &SymFunc) {
        assert_eq!(
            self.basis, other.basis,
            "symmetric functions in different bases; convert first"
        );
    }

    /// Ring product. Keys combine by union in the multiplicative bases `p`
    /// and `q`; an `m`-basis product is taken through power sums.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        self.assert_same_basis(other);
        if self.basis == Basis::M {
            let eps = EpsSequence::ones();
            return self.to_p(&eps).mul(&other.to_p(&eps)).to_m(&eps);
        }
        let mut out = SymFunc::zero(self.basis);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_term(union(k1, k2), &(c1 * c2));
            }
        }
        out
    }

    /// Multiplies by the basis element `b_μ` (`p` or `q` basis only).
    pub fn mul_basis_element(&self, mu: &Partition) -> SymFunc {
        assert!(self.basis != Basis::M, "m_μ is not multiplicative");
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (union(k, mu), c.clone()))
                .collect(),
        }
    }

    pub fn to_basis(&self, basis: Basis, eps: &EpsSequence) -> SymFunc {
        match basis {
            Basis::P => self.to_p(eps),
            Basis::Q => self.to_q(eps),
            Basis::M => self.to_m(eps),
        }
    }

    /// Power-sum expansion. `eps` is only consulted for the `q` basis.
    pub fn to_p(&self, eps: &EpsSequence) -> SymFunc {
        match self.basis {
            Basis::P => self.clone(),
            Basis::Q => {
                let mut out = SymFunc::zero(Basis::P);
                for (lambda, c) in &self.terms {
                    for (rho, v) in q_eps_lambda(lambda, eps).terms() {
                        out.add_term(rho.clone(), &(c * v));
                    }
                }
                out
            }
            Basis::M => {
                let mut acc: HashMap<Partition, Coeff> = HashMap::new();
                for (nu, c) in &self.terms {
                    let t = transition(nu.weight());
                    for (rho, r) in t.monomial_row(nu) {
                        let term = c * &Coeff::from_ratio(r);
                        *acc.entry(rho.clone()).or_default() += &term;
                    }
                }
                SymFunc::from_terms(Basis::P, acc)
            }
        }
    }

    /// Expansion in `q^ε_μ`, read off by duality: the coefficient of `q^ε_μ`
    /// is `⟨f, m_μ⟩`.
    pub fn to_q(&self, eps: &EpsSequence) -> SymFunc {
        if self.basis == Basis::Q {
            return self.clone();
        }
        let f = self.to_p(eps);
        let mut out = SymFunc::zero(Basis::Q);
        for (n, part) in f.homogeneous_parts() {
            let t = transition(n);
            // f_ρ ε_ρ z_ρ, then contract against rows of M
            let weighted: Vec<(usize, Coeff)> = part
                .terms
                .iter()
                .map(|(rho, c)| {
                    let w = c * &eps.of_partition(rho);
                    (t.idx(rho), w.scale_int(&z_lambda(rho)))
                })
                .collect();
            for (i, mu) in t.partitions.iter().enumerate() {
                let row = &t.m_to_p[i];
                let mut acc = Coeff::zero();
                for (j, w) in &weighted {
                    let r = &row[*j];
                    if !r.is_zero() {
                        acc += &(w * &Coeff::from_ratio(r));
                    }
                }
                out.add_term(mu.clone(), &acc);
            }
        }
        out
    }

    /// Monomial expansion. `eps` is only consulted for the `q` basis.
    pub fn to_m(&self, eps: &EpsSequence) -> SymFunc {
        if self.basis == Basis::M {
            return self.clone();
        }
        let f = self.to_p(eps);
        let mut acc: HashMap<Partition, Coeff> = HashMap::new();
        for (rho, c) in &f.terms {
            let t = transition(rho.weight());
            let row = &t.p_to_m[t.idx(rho)];
            for (k, l) in row.iter().enumerate() {
                if !l.is_zero() {
                    *acc.entry(t.partitions[k].clone()).or_default() += &c.scale_int(l);
                }
            }
        }
        SymFunc::from_terms(Basis::M, acc)
    }

    /// Aligned two-column text: partition, coefficient.
    pub fn to_text(&self) -> String {
        let rows: Vec<(String, String)> = self
            .terms
            .iter()
            .map(|(k, c)| (format!("{k:?}"), c.to_string()))
            .collect();
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let mut s = format!("basis {}\n", self.basis);
        if rows.is_empty() {
            s.push_str("  0\n");
        }
        for (k, c) in rows {
            s.push_str(&format!("  {k:<width$}  {c}\n"));
        }
        s
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({c}) {}{k:?}", self.basis))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.assert_same_basis(rhs);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        SymFunc::mul(self, rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFuncRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermRepr {
                    partition: k.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymFuncRepr::deserialize(deserializer)?;
        let mut f = SymFunc::zero(repr.basis);
        for t in repr.terms {
            if f.terms.contains_key(&t.partition) {
                return Err(D::Error::custom(format!("duplicate partition {:?}", t.partition)));
            }
            f.add_term(t.partition, &t.coeff);
        }
        Ok(f)
    }
}

/// `f · g`.
pub fn mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    f.mul(g)
}

/// `p_λ`.
pub fn power_sum(lambda: &Partition) -> SymFunc {
    SymFunc::p(lambda.clone())
}

/// p-expansion of `h_λ = Π_i Σ_{ρ ⊢ λ_i} p_ρ / z_ρ`, with rational coefficients.
fn complete_in_p(lambda: &Partition) -> Arc<Vec<(Partition, BigRational)>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<Vec<(Partition, BigRational)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("h cache").get(lambda) {
        return v.clone();
    }
    let mut acc: BTreeMap<Partition, BigRational> =
        BTreeMap::from([(Partition::empty(), BigRational::one())]);
    for &part in lambda.parts() {
        let row: Vec<(Partition, BigRational)> = enumerate(part)
            .into_iter()
            .map(|rho| {
                let z = z_lambda(&rho);
                (rho, BigRational::new(BigInt::one(), z))
            })
            .collect();
        let mut next = BTreeMap::new();
        for (k, c) in &acc {
            for (rho, r) in &row {
                *next.entry(union(k, rho)).or_insert_with(BigRational::zero) += c * r;
            }
        }
        acc = next;
    }
    let v: Arc<Vec<_>> = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    cache
        .write()
        .expect("h cache")
        .entry(lambda.clone())
        .or_insert(v)
        .clone()
}

/// `q^ε_n = Σ_{λ ⊢ n} p_λ / (z_λ ε_λ)`; zero for `n < 0`, one for `n = 0`.
pub fn q_eps(n: i64, eps: &EpsSequence) -> SymFunc {
    if n < 0 {
        return SymFunc::zero(Basis::P);
    }
    (*q_eps_lambda(&Partition::row(n as usize), eps)).clone()
}

/// `q^ε_λ = Π_i q^ε_{λ_i}` in the p-basis, memoized on `eps`.
///
/// # Panics
/// If some `ε_n` with `n ≤ |λ|` is zero.
pub fn q_eps_lambda(lambda: &Partition, eps: &EpsSequence) -> Arc<SymFunc> {
    if let Some(f) = eps.cached_q(lambda) {
        return f;
    }
    let mut f = SymFunc::zero(Basis::P);
    for (rho, r) in complete_in_p(lambda).iter() {
        let c = Coeff::from_ratio(r)
            .checked_div(&eps.of_partition(rho))
            .unwrap_or_else(|_| panic!("eps vanishes on {rho:?} for {}", eps.name()));
        f.terms.insert(rho.clone(), c);
    }
    eps.store_q(lambda, f)
}

/// `m_λ` in the p-basis.
pub fn monomial(lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(Basis::M, lambda.clone()).to_p(&EpsSequence::ones())
}

/// `⟨f, g⟩` with `⟨p_λ, p_μ⟩ = δ_{λμ} ε_λ z_λ`.
pub fn inner(f: &SymFunc, g: &SymFunc, eps: &EpsSequence) -> Coeff {
    let f = f.to_p(eps);
    let g = g.to_p(eps);
    let (small, large) = if f.len() <= g.len() { (&f, &g) } else { (&g, &f) };
    let mut acc = Coeff::zero();
    for (rho, c) in &small.terms {
        if let Some(d) = large.terms.get(rho) {
            acc += &(c * d * eps.of_partition(rho)).scale_int(&z_lambda(rho));
        }
    }
    acc
}

/// Checks `⟨m_μ, q^ε_λ⟩ = δ_{λμ}` for all `λ, μ ⊢ k`, `k ≤ n`.
pub fn duality_check(n: usize, eps: &EpsSequence) -> Report {
    let range = json!({ "max_weight": n, "eps": eps.name() });
    let claim = "<m_mu, q_lambda> = delta";
    for k in 0..=n {
        let parts = enumerate(k);
        let ms: Vec<SymFunc> = parts.iter().map(monomial).collect();
        for lambda in &parts {
            let q = q_eps_lambda(lambda, eps);
            for (mu, m) in parts.iter().zip(&ms) {
                let v = inner(m, &q, eps);
                let expect = if lambda == mu { Coeff::one() } else { Coeff::zero() };
                if v != expect {
                    return Report::fail(
                        claim,
                        range,
                        json!({ "lambda": lambda, "mu": mu, "value": v }),
                    );
                }
            }
        }
    }
    Report::pass(claim, range)
}
