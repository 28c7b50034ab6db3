//! The vertex operator `X_0` and its eigenbasis.
//!
//! `X_0 = Σ_{|μ|=|ν|} z_μ^{-1} η_μ h_{-μ} z_ν^{-1} τ_ν h_ν` is the constant
//! term of `exp(Σ z^n η_n h_{-n} / n) exp(Σ z^{-n} τ_n h_n / n)`. With `τ_n = 1 - a^n`, `η_n = (1 - a^n) c^n` and
//! `ε_n = (b^n - 1) c^{-n} / (1 - a^n)` it is self-adjoint and raises `q^ε_λ`,
//! so its eigenvectors form an orthogonal basis of `Λ(ε)`.
//!
//! In the specialization `b = q, c = t, a = 1/t`, the operator `(X_0 - 1)/(t - 1)`
//! is Macdonald's limit operator `E`.

mod jj;
mod solve;

pub use jj::{jj_closed_form, jj_recursion};
pub use solve::{solve_q, specialize_q, EigenResult, Specialization};

use serde_json::json;

use crate::coeffs::{cf, Coeff, Symbol};
use crate::error::{Error, Result};
use crate::heisenberg::{h_apply, tally_indices, RSequence};
use crate::partitions::{enumerate, z_lambda, Partition};
use crate::report::Report;
use crate::symfunc::{inner, q_eps_lambda, Basis, CoeffSeq, EpsSequence, SymFunc};

/// The data `(η, τ, ε)` of `X_0`, with `R` derived from `η`.
#[derive(Clone, Debug)]
pub struct OperatorSpec {
    name: String,
    eta: CoeffSeq,
    tau: CoeffSeq,
    eps: EpsSequence,
    r: RSequence,
    a: Coeff,
    b: Coeff,
    c: Coeff,
}

impl OperatorSpec {
    /// Generic parameters `a, b, c` with the self-adjoint relations.
    pub fn generic() -> Self {
        let eta = CoeffSeq::new("(1-a^n)c^n", |n| cf(&format!("(1 - a^{n})*c^{n}")));
        let tau = CoeffSeq::new("1-a^n", |n| cf(&format!("1 - a^{n}")));
        OperatorSpec::from_parts("generic", eta, tau, EpsSequence::abc())
    }

    fn from_parts(name: &str, eta: CoeffSeq, tau: CoeffSeq, eps: EpsSequence) -> Self {
        OperatorSpec {
            name: name.to_string(),
            r: RSequence::from_eta(eta.clone()),
            eta,
            tau,
            eps,
            a: Coeff::symbol(Symbol::A),
            b: Coeff::symbol(Symbol::B),
            c: Coeff::symbol(Symbol::C),
        }
    }

    /// The same operator with `η_n ↦ η_n + delta`; breaks self-adjointness.
    pub fn with_perturbed_eta(&self, n: usize, delta: Coeff) -> Self {
        let eta = self.eta.perturbed(n, delta);
        let mut spec = OperatorSpec::from_parts(&self.name, eta, self.tau.clone(), self.eps.clone());
        spec.name = format!("{}+eta[{n}]", self.name);
        spec
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eta(&self) -> &CoeffSeq {
        &self.eta
    }

    pub fn tau(&self) -> &CoeffSeq {
        &self.tau
    }

    pub fn eps(&self) -> &EpsSequence {
        &self.eps
    }

    pub fn r(&self) -> &RSequence {
        &self.r
    }

    pub fn a(&self) -> &Coeff {
        &self.a
    }

    /// `d_0 = 1`, `d_k = 1 - a`.
    pub fn d(&self, k: usize) -> Coeff {
        if k == 0 {
            Coeff::one()
        } else {
            &Coeff::one() - &self.a
        }
    }

    /// Checks `τ_n = 1 - a^n`, `η_n = c^n τ_n`, `ε_n η_n = b^n - 1` for
    /// `n ≤ upto`, and `η_1 τ_1 ≠ 0`.
    pub fn check_relations(&self, upto: usize) -> Report {
        let range = json!({ "max_n": upto, "spec": self.name });
        let claim = "eta_n = c^n tau_n, eps_n eta_n = b^n - 1, tau_n = 1 - a^n";
        if (self.eta.get(1) * self.tau.get(1)).is_zero() {
            return Report::fail(claim, range, json!({ "n": 1, "eta1_tau1": "0" }));
        }
        for n in 1..=upto {
            let one = Coeff::one();
            let tau = &one - &self.a.powu(n);
            let ok = self.tau.get(n) == tau
                && self.eta.get(n) == &self.c.powu(n) * &tau
                && &self.eps.get(n) * &self.eta.get(n) == &self.b.powu(n) - &one;
            if !ok {
                return Report::fail(claim, range, json!({ "n": n }));
            }
        }
        Report::pass(claim, range)
    }
}

/// `X_0 q_λ = Σ_{i_k ≥ 0} R_{Σ i_k} Π_k d_{i_k} q_{λ_k - i_k}` in the `q^ε`
/// basis, with `R_N` expanded once per total degree `N`.
pub fn x0_apply_q(lambda: &Partition, spec: &OperatorSpec) -> SymFunc {
    let one_minus_a = spec.d(1);
    let mut out = SymFunc::zero(Basis::Q);
    for ((n, nu, nonzero), count) in tally_indices(lambda, 0) {
        let w = one_minus_a.powu(nonzero).scale_int(&count.into());
        let r = spec.r.get_q(n, &spec.eps);
        out = &out + &r.mul_basis_element(&nu).scale(&w);
    }
    out
}

/// Normal-ordered `X_0` applied to `f`, homogeneous of weight `degree`,
/// returned in the p-basis.
pub fn x0_apply_heisenberg(f: &SymFunc, spec: &OperatorSpec, degree: usize) -> Result<SymFunc> {
    let eps = &spec.eps;
    let f = f.to_p(eps);
    if !f.is_zero() && f.degree() != Some(degree) {
        return Err(Error::NotHomogeneous);
    }
    let mut out = SymFunc::zero(Basis::P);
    for k in 0..=degree {
        let mut lowered = SymFunc::zero(Basis::P);
        for nu in enumerate(k) {
            let mut g = f.clone();
            for &part in nu.parts() {
                g = h_apply(part as i64, &g, eps);
                if g.is_zero() {
                    break;
                }
            }
            if g.is_zero() {
                continue;
            }
            let w = spec.tau.product_over(&nu) / Coeff::from_bigint(z_lambda(&nu));
            lowered = &lowered + &g.scale(&w);
        }
        if lowered.is_zero() {
            continue;
        }
        let mut raise = SymFunc::zero(Basis::P);
        for mu in enumerate(k) {
            let w = spec.eta.product_over(&mu) / Coeff::from_bigint(z_lambda(&mu));
            raise.add_term(mu, &w);
        }
        out = &out + &raise.mul(&lowered);
    }
    Ok(out)
}

/// `c_λλ = 1 + (1 - a) Σ_i (b^{λ_i} - 1) a^{i-1}`.
pub fn eigenvalue(lambda: &Partition, spec: &OperatorSpec) -> Coeff {
    let one = Coeff::one();
    let mut s = Coeff::zero();
    for (i, &part) in lambda.parts().iter().enumerate() {
        s += &(&(&spec.b.powu(part) - &one) * &spec.a.powu(i));
    }
    &one + &(&(&one - &spec.a) * &s)
}

/// `(c - 1)/(1 - a)`, the eigenvalue of `X'_0 = (X_0 - 1)/(1 - a)`.
pub fn shifted_eigenvalue(c: &Coeff, a: &Coeff) -> Option<Coeff> {
    (c - &Coeff::one()).checked_div(&(&Coeff::one() - a)).ok()
}

/// `⟨X_0 q_λ, q_μ⟩ = ⟨q_λ, X_0 q_μ⟩` for `|λ| = |μ| ≤ d`, with `X_0` in its
/// normal-ordered form.
pub fn self_adjointness(d: usize, spec: &OperatorSpec) -> Report {
    let eps = &spec.eps;
    let range = json!({ "max_weight": d, "spec": spec.name });
    let claim = "<X0 q_lambda, q_mu> = <q_lambda, X0 q_mu>";
    for k in 0..=d {
        let parts = enumerate(k);
        let qs: Vec<_> = parts.iter().map(|l| q_eps_lambda(l, eps)).collect();
        let images: Vec<SymFunc> = qs
            .iter()
            .map(|q| x0_apply_heisenberg(q, spec, k).expect("homogeneous"))
            .collect();
        for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                let lhs = inner(&images[i], &qs[j], eps);
                let rhs = inner(&qs[i], &images[j], eps);
                if lhs != rhs {
                    return Report::fail(
                        claim,
                        range,
                        json!({ "lambda": parts[i], "mu": parts[j], "lhs": lhs, "rhs": rhs }),
                    );
                }
            }
        }
    }
    Report::pass(claim, range)
}

/// Self-adjointness of `spec` at weight `≤ d`, together with the negative
/// control `η_2 ↦ η_2 + 1`, which must fail once `d ≥ 2`.
pub fn self_adjoint_check(d: usize, spec: &OperatorSpec) -> Report {
    let main = self_adjointness(d, spec);
    let control = self_adjointness(d, &spec.with_perturbed_eta(2, Coeff::one()));
    let range = json!({ "max_weight": d, "spec": spec.name });
    let claim = "X0 self-adjoint; perturbed eta_2 is not";
    let details = json!({ "main": main, "control": control });
    let report = if !main.passed() {
        Report::fail(claim, range, main.counterexample.clone().unwrap_or_default())
    } else if d >= 2 && control.passed() {
        Report::fail(claim, range, json!({ "control": "perturbed operator passed" }))
    } else {
        Report::pass(claim, range)
    };
    report.with_details(details)
}
