//! Heisenberg operators on the Fock space `Λ(ε)`, the generalized Newton
//! operator `T`, and the Jack operator `D(α)`.
//!
//! `h_n = n ε_n ∂/∂p_n` for `n > 0`, `h_{-n}` is multiplication by `p_n` and
//! `h_0` is the identity. All operators act on [`SymFunc`] values and return
//! power-sum expansions unless stated otherwise.

mod newton;

pub use newton::{
    make_r, newton_triangularity_check, t_apply, t_apply_iterative, two_row_action, NewtonData,
    RSequence,
};
pub(crate) use newton::tally_indices;

use serde_json::json;

use crate::coeffs::{Coeff, Symbol};
use crate::partitions::{enumerate, Partition};
use crate::report::Report;
use crate::symfunc::{inner, Basis, EpsSequence, SymFunc};

/// The representation `n ↦ h_n` determined by an ε sequence.
#[derive(Clone, Debug)]
pub struct HeisenbergAction {
    eps: EpsSequence,
}

impl HeisenbergAction {
    pub fn new(eps: EpsSequence) -> Self {
        HeisenbergAction { eps }
    }

    pub fn eps(&self) -> &EpsSequence {
        &self.eps
    }

    pub fn apply(&self, n: i64, f: &SymFunc) -> SymFunc {
        h_apply(n, f, &self.eps)
    }

    /// `h_{ν_1} h_{ν_2} ⋯ f` (all modes of one sign commute).
    pub fn apply_all(&self, modes: &[i64], f: &SymFunc) -> SymFunc {
        modes.iter().rev().fold(f.to_p(&self.eps), |g, &n| self.apply(n, &g))
    }
}

/// `h_n . f`, returned in the p-basis.
pub fn h_apply(n: i64, f: &SymFunc, eps: &EpsSequence) -> SymFunc {
    let f = f.to_p(eps);
    if n == 0 {
        return f;
    }
    let k = n.unsigned_abs() as usize;
    if n < 0 {
        return f.mul_basis_element(&Partition::row(k));
    }
    let scale = eps.get(k).scale_int(&k.into());
    let mut out = SymFunc::zero(Basis::P);
    for (lambda, c) in f.terms() {
        let mult = lambda.multiplicity(k);
        if mult == 0 {
            continue;
        }
        let rest = lambda.without_part(k).expect("part present");
        out.add_term(rest, &(c * &scale).scale_int(&mult.into()));
    }
    out
}

/// Checks `⟨h_n f, g⟩ = ⟨f, h_{-n} g⟩` on all pairs of power sums with
/// `|f| ≤ d` and `|g| = |f| - n`.
pub fn adjoint_check(n: usize, d: usize, eps: &EpsSequence) -> Report {
    let range = json!({ "n": n, "max_weight": d, "eps": eps.name() });
    let claim = "h_n^* = h_{-n}";
    let n_i = n as i64;
    for w in 0..=d {
        for lambda in enumerate(w) {
            let f = SymFunc::p(lambda.clone());
            let hf = h_apply(n_i, &f, eps);
            if w < n {
                if !hf.is_zero() {
                    return Report::fail(claim, range, json!({ "f": lambda, "h_n f": hf }));
                }
                continue;
            }
            for mu in enumerate(w - n) {
                let g = SymFunc::p(mu.clone());
                let lhs = inner(&hf, &g, eps);
                let rhs = inner(&f, &h_apply(-n_i, &g, eps), eps);
                if lhs != rhs {
                    return Report::fail(
                        claim,
                        range,
                        json!({ "f": lambda, "g": mu, "lhs": lhs, "rhs": rhs }),
                    );
                }
            }
        }
    }
    Report::pass(claim, range)
}

/// Checks `[h_m, h_n] = m ε_m δ_{m,-n}` on every power sum of weight `≤ d`,
/// for `1 ≤ |m|, |n| ≤ max_mode`.
pub fn commutation_check(max_mode: usize, d: usize, eps: &EpsSequence) -> Report {
    let range = json!({ "max_mode": max_mode, "max_weight": d, "eps": eps.name() });
    let claim = "[h_m, h_n] = m eps_m delta_{m,-n}";
    let k = max_mode as i64;
    let modes: Vec<i64> = (-k..=k).filter(|&m| m != 0).collect();
    for w in 0..=d {
        for lambda in enumerate(w) {
            let v = SymFunc::p(lambda.clone());
            for &m in &modes {
                for &n in &modes {
                    let mn = h_apply(m, &h_apply(n, &v, eps), eps);
                    let nm = h_apply(n, &h_apply(m, &v, eps), eps);
                    let central = if m == -n {
                        let mu = m.unsigned_abs() as usize;
                        let c = eps.get(mu).scale_int(&m.into());
                        v.scale(&c)
                    } else {
                        SymFunc::zero(Basis::P)
                    };
                    let defect = &(&mn - &nm) - &central;
                    if !defect.is_zero() {
                        return Report::fail(
                            claim,
                            range,
                            json!({ "m": m, "n": n, "v": lambda, "defect": defect }),
                        );
                    }
                }
            }
        }
    }
    Report::pass(claim, range)
}

/// `D(α) = Σ_{i,j≥1} h_{-i}h_{-j}h_{i+j} + Σ_{i,j≥1} h_{-(i+j)}h_i h_j
/// + (α-1) Σ_{i≥1} i h_{-i}h_i` with `ε_n = α`, applied termwise.
pub fn jack_d_apply(f: &SymFunc) -> SymFunc {
    let eps = EpsSequence::jack();
    let f = f.to_p(&eps);
    let alpha = Coeff::symbol(Symbol::Alpha);
    let alpha_minus_one = &alpha - &Coeff::one();
    let mut out = SymFunc::zero(Basis::P);
    for (lambda, c) in f.terms() {
        let v = SymFunc::p(lambda.clone());
        let w = lambda.weight();
        let mut acc = SymFunc::zero(Basis::P);
        for k in 2..=w {
            let hk = h_apply(k as i64, &v, &eps);
            if hk.is_zero() {
                continue;
            }
            for i in 1..k {
                let j = k - i;
                acc = &acc + &hk.mul_basis_element(&Partition::row(i)).mul_basis_element(&Partition::row(j));
            }
        }
        for i in 1..w {
            let hi = h_apply(i as i64, &v, &eps);
            if hi.is_zero() {
                continue;
            }
            for j in 1..=(w - i) {
                let hij = h_apply(j as i64, &hi, &eps);
                if !hij.is_zero() {
                    acc = &acc + &hij.mul_basis_element(&Partition::row(i + j));
                }
            }
        }
        for i in 1..=w {
            let hi = h_apply(i as i64, &v, &eps);
            if !hi.is_zero() {
                let term = h_apply(-(i as i64), &hi, &eps)
                    .scale(&alpha_minus_one.scale_int(&i.into()));
                acc = &acc + &term;
            }
        }
        out = &out + &acc.scale(c);
    }
    out
}

/// Checks `⟨D f, g⟩ = ⟨f, D g⟩` on power sums of equal weight `≤ d`.
pub fn jack_d_self_adjoint_check(d: usize) -> Report {
    let eps = EpsSequence::jack();
    let range = json!({ "max_weight": d, "eps": "jack" });
    let claim = "D(alpha) is self-adjoint";
    for w in 0..=d {
        let parts = enumerate(w);
        let images: Vec<SymFunc> = parts.iter().map(|l| jack_d_apply(&SymFunc::p(l.clone()))).collect();
        for (i, lambda) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate().skip(i) {
                let lhs = inner(&images[i], &SymFunc::p(mu.clone()), &eps);
                let rhs = inner(&SymFunc::p(lambda.clone()), &images[j], &eps);
                if lhs != rhs {
                    return Report::fail(claim, range, json!({ "f": lambda, "g": mu }));
                }
            }
        }
    }
    Report::pass(claim, range)
}

/// Checks that `D(α) q_λ` is supported on `{μ ≥ λ}` for `|λ| ≤ d`.
pub fn jack_d_raising_check(d: usize) -> Report {
    let eps = EpsSequence::jack();
    let range = json!({ "max_weight": d, "eps": "jack" });
    let claim = "D(alpha) raises q_lambda";
    for w in 0..=d {
        for lambda in enumerate(w) {
            let q = SymFunc::basis_element(Basis::Q, lambda.clone());
            let image = jack_d_apply(&q).to_q(&eps);
            let bad = image.support().find(|mu| !mu.dominates(&lambda).unwrap_or(false)).cloned();
            if let Some(mu) = bad {
                return Report::fail(claim, range, json!({ "lambda": lambda, "mu": mu }));
            }
        }
    }
    Report::pass(claim, range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::cf;
    use crate::symfunc::q_eps;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn h_apply_examples() {
        let eps = EpsSequence::macdonald();
        assert_eq!(h_apply(2, &q_eps(3, &eps), &eps), q_eps(1, &eps));
        assert!(h_apply(1, &SymFunc::p(p("2")), &eps).is_zero());
        assert_eq!(h_apply(-1, &SymFunc::one(Basis::P), &eps), SymFunc::p(p("1")));
        // h_i q_n = q_{n-i}
        for n in 0..=5i64 {
            for i in 1..=6i64 {
                assert_eq!(h_apply(i, &q_eps(n, &eps), &eps), q_eps(n - i, &eps));
            }
        }
    }

    #[test]
    fn adjoint_examples() {
        let eps = EpsSequence::abc();
        let v = inner(&h_apply(1, &SymFunc::p(p("1")), &eps), &SymFunc::one(Basis::P), &eps);
        assert_eq!(v, eps.get(1));
        let v = inner(&h_apply(2, &SymFunc::p(p("2")), &eps), &SymFunc::one(Basis::P), &eps);
        assert_eq!(v, eps.get(2).scale_int(&2.into()));
        assert!(adjoint_check(1, 2, &eps).passed());
        assert!(adjoint_check(2, 2, &eps).passed());
        assert!(adjoint_check(3, 2, &eps).passed());
    }

    #[test]
    fn jack_d_examples() {
        // direct evaluation: only (α-1)·1·h_{-1}h_1 acts, and h_1 p_1 = α
        assert_eq!(jack_d_apply(&SymFunc::p(p("1"))), SymFunc::p(p("1")).scale(&cf("alpha*(alpha-1)")));
        assert!(jack_d_apply(&SymFunc::one(Basis::P)).is_zero());
        let eps = EpsSequence::jack();
        for n in 1..=5 {
            let q = q_eps(n, &eps);
            let d = jack_d_apply(&q);
            let top = Partition::row(n as usize);
            let ratio = &d.coeff(&top) / &q.coeff(&top);
            assert_eq!(d, q.scale(&ratio), "n={n}");
        }
    }
}
