//! The acceptance suite: nine exact checks plus a wall-clock budget for the
//! whole run. Shared by the `audit` subcommand and the acceptance tests.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;

use crate::coeffs::Coeff;
use crate::heisenberg::{
    jack_d_raising_check, jack_d_self_adjoint_check, newton_triangularity_check, t_apply,
    t_apply_iterative, two_row_action, NewtonData,
};
use crate::oracle::{ghl_degree, jack_eigen_check};
use crate::partitions::{enumerate, Partition};
use crate::report::Report;
use crate::symfunc::{duality_check, inner, q_eps, EpsPreset, EpsSequence, SymFunc};
use crate::vertex::{
    eigenvalue, jj_closed_form, jj_recursion, self_adjoint_check, solve_q, specialize_q,
    x0_apply_heisenberg, x0_apply_q, EigenResult, OperatorSpec, Specialization,
};
use crate::Basis;

pub const PRESETS: [EpsPreset; 5] = [
    EpsPreset::Ones,
    EpsPreset::Jack,
    EpsPreset::HallLittlewood,
    EpsPreset::Macdonald,
    EpsPreset::Abc,
];

/// Budget for a full run.
pub const TOTAL_BUDGET: Duration = Duration::from_secs(30 * 60);

#[derive(Copy, Clone, Debug)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub budget: Option<Duration>,
}

pub const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, title: "classical Newton identity, k <= 10", budget: Some(Duration::from_secs(1)) },
    Criterion { id: 2, title: "duality <m_mu, q_lambda> = delta, degree <= 7, all presets", budget: Some(Duration::from_secs(30)) },
    Criterion { id: 3, title: "generalized Newton triangularity, |lambda| <= 8", budget: Some(Duration::from_secs(300)) },
    Criterion { id: 4, title: "sum eps_i^-1 p_i q_{n-i} = n q_n, n <= 10; T q_11 = 2 q_2 - q_11", budget: None },
    Criterion { id: 5, title: "X0 triangular (<= 7), forms agree (<= 6), self-adjoint (<= 6)", budget: Some(Duration::from_secs(600)) },
    Criterion { id: 6, title: "solver = Gram-Schmidt oracle (<= 6), orthogonal, eigenvalues separate (<= 8)", budget: None },
    Criterion { id: 7, title: "two-row closed form = recursion = solver, m + n <= 9", budget: None },
    Criterion { id: 8, title: "specializations match Schur, Macdonald and Hall-Littlewood oracles", budget: Some(Duration::from_secs(600)) },
    Criterion { id: 9, title: "D(alpha) self-adjoint, raising, Jack oracle eigenvectors", budget: None },
];

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub seconds: f64,
    pub report: Report,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {}: {}",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.report
        )
    }
}

pub fn run(id: u8) -> Option<Outcome> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let mut report = match id {
        1 => classical_newton(),
        2 => duality(),
        3 => generalized_newton(),
        4 => newton_corollary(),
        5 => vertex_operator(),
        6 => solver(),
        7 => two_row(),
        8 => specializations(),
        9 => jack_route(),
        _ => unreachable!(),
    };
    let elapsed = start.elapsed();
    if let Some(budget) = c.budget {
        if report.passed() && elapsed > budget {
            report = Report::fail(
                report.claim.clone(),
                report.range.clone(),
                json!({ "elapsed_s": elapsed.as_secs_f64(), "budget_s": budget.as_secs_f64() }),
            );
        }
    }
    Some(Outcome {
        id,
        title: c.title,
        seconds: elapsed.as_secs_f64(),
        report,
    })
}

/// Criterion 10: every other criterion passes and the run fits the budget.
pub fn overall(outcomes: &[Outcome], elapsed: Duration) -> Outcome {
    let range = json!({ "budget_s": TOTAL_BUDGET.as_secs_f64() });
    let claim = "full audit passes within budget";
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.id).collect();
    let report = if !failed.is_empty() {
        Report::fail(claim, range, json!({ "failed": failed }))
    } else if elapsed > TOTAL_BUDGET {
        Report::fail(claim, range, json!({ "elapsed_s": elapsed.as_secs_f64() }))
    } else {
        Report::pass(claim, range)
    };
    Outcome {
        id: 10,
        title: "full audit within 30 minutes",
        seconds: elapsed.as_secs_f64(),
        report,
    }
}

/// Runs criteria 1 to 9 in order, calling `each` as they finish, then 10.
pub fn run_all(mut each: impl FnMut(&Outcome)) -> Vec<Outcome> {
    let start = Instant::now();
    let mut out = Vec::new();
    for c in CRITERIA {
        let o = run(c.id).expect("known criterion");
        each(&o);
        out.push(o);
    }
    let last = overall(&out, start.elapsed());
    each(&last);
    out.push(last);
    out
}

fn newton_sum(n: usize, eps: &EpsSequence) -> SymFunc {
    let mut lhs = SymFunc::zero(Basis::P);
    for i in 1..=n {
        let term = q_eps((n - i) as i64, eps)
            .mul_basis_element(&Partition::row(i))
            .scale(&eps.get(i).inv().expect("eps_i nonzero"));
        lhs = &lhs + &term;
    }
    lhs
}

fn classical_newton() -> Report {
    let eps = EpsSequence::ones();
    let range = json!({ "max_k": 10, "eps": "ones" });
    let claim = "sum_{i=1}^k p_i q_{k-i} = k q_k";
    for k in 1..=10 {
        let rhs = q_eps(k as i64, &eps).scale(&Coeff::from_int(k as i64));
        if newton_sum(k, &eps) != rhs {
            return Report::fail(claim, range, json!({ "k": k }));
        }
    }
    Report::pass(claim, range)
}

fn duality() -> Report {
    let range = json!({ "max_weight": 7, "presets": PRESETS.map(|p| p.name()) });
    let mut parts = Vec::new();
    for preset in PRESETS {
        let eps = EpsSequence::preset(preset);
        for n in 0..=7 {
            parts.push(duality_check(n, &eps));
        }
    }
    Report::all("<m_mu, q_lambda> = delta_{lambda mu}", range, parts)
}

fn generalized_newton() -> Report {
    let eps = EpsSequence::abc();
    let data = NewtonData::exponential(&eps);
    let range = json!({ "max_weight": 8, "eps": "abc" });
    let claim = "T q_lambda triangular with leading (-1)^{l-1}(b^{lambda_s}-1); three forms agree";
    for n in 1..=8 {
        for lambda in enumerate(n) {
            let rep = match newton_triangularity_check(&lambda, &data.r, &data.c, &eps) {
                Ok(r) => r,
                Err(e) => return Report::fail(claim, range, json!({ "lambda": lambda, "error": e.to_string() })),
            };
            if !rep.passed() {
                return Report::fail(claim, range, json!({ "lambda": lambda, "report": rep }));
            }
            let direct = t_apply(&lambda, &data.r, &eps);
            let iterated = t_apply_iterative(&lambda, &data.r, &eps);
            if direct.is_err() || direct != iterated {
                return Report::fail(claim, range, json!({ "lambda": lambda, "mismatch": "iterative" }));
            }
            if lambda.len() == 2 {
                let (m, k) = (lambda.parts()[0], lambda.parts()[1]);
                if two_row_action(m, k, &data.c).ok() != direct.ok() {
                    return Report::fail(claim, range, json!({ "lambda": lambda, "mismatch": "two_row" }));
                }
            }
        }
    }
    Report::pass(claim, range)
}

fn newton_corollary() -> Report {
    let range = json!({ "max_n": 10, "presets": PRESETS.map(|p| p.name()) });
    let claim = "sum eps_i^-1 p_i q_{n-i} = n q_n; T q_(1,1) = 2 q_(2) - q_(1,1)";
    for preset in PRESETS {
        let eps = EpsSequence::preset(preset);
        for n in 1..=10 {
            let rhs = q_eps(n as i64, &eps).scale(&Coeff::from_int(n as i64));
            if newton_sum(n, &eps) != rhs {
                return Report::fail(claim, range, json!({ "eps": preset.name(), "n": n }));
            }
        }
        let data = NewtonData::classical(&eps);
        let lambda: Partition = "1,1".parse().expect("valid");
        let expected = SymFunc::from_terms(
            Basis::Q,
            [(Partition::row(2), Coeff::from_int(2)), (lambda.clone(), Coeff::from_int(-1))],
        );
        match t_apply(&lambda, &data.r, &eps) {
            Ok(t) if t == expected => {}
            other => {
                return Report::fail(
                    claim,
                    range,
                    json!({ "eps": preset.name(), "lambda": lambda, "got": other.map(|t| t.to_text()).unwrap_or_default() }),
                )
            }
        }
    }
    Report::pass(claim, range)
}

fn vertex_operator() -> Report {
    let spec = OperatorSpec::generic();
    let eps = spec.eps().clone();
    let range = json!({ "triangular": 7, "forms": 6, "self_adjoint": 6 });
    let claim = "X0 triangular with closed-form diagonal; forms agree; self-adjoint with failing control";
    for n in 0..=7 {
        for lambda in enumerate(n) {
            let image = x0_apply_q(&lambda, &spec);
            let supported = image.support().all(|mu| mu.dominates(&lambda).unwrap_or(false));
            if !supported || image.coeff(&lambda) != eigenvalue(&lambda, &spec) {
                return Report::fail(claim, range, json!({ "lambda": lambda, "check": "triangular" }));
            }
            if n <= 6 {
                let q = crate::symfunc::q_eps_lambda(&lambda, &eps);
                let ok = x0_apply_heisenberg(&q, &spec, n).map(|f| f.to_q(&eps) == image);
                if ok != Ok(true) {
                    return Report::fail(claim, range, json!({ "lambda": lambda, "check": "forms" }));
                }
            }
        }
    }
    let sa = self_adjoint_check(6, &spec);
    if !sa.passed() {
        return Report::fail(claim, range, json!({ "check": "self_adjoint", "report": sa }));
    }
    Report::pass(claim, range)
}

fn solve_degree(n: usize, spec: &OperatorSpec) -> crate::Result<Vec<EigenResult>> {
    enumerate(n).iter().map(|l| solve_q(l, spec)).collect()
}

fn solver() -> Report {
    let spec = OperatorSpec::generic();
    let eps = EpsSequence::abc();
    let range = json!({ "oracle": 6, "separation": 8, "eps": "abc" });
    let claim = "solve_Q = oracle Q; <Q_lambda, Q_mu> = 0; c_lambda != c_mu";
    for n in 1..=6 {
        let solved = match solve_degree(n, &spec) {
            Ok(s) => s,
            Err(e) => return Report::fail(claim, range, json!({ "degree": n, "error": e.to_string() })),
        };
        let oracle = match ghl_degree(n, &eps) {
            Ok(o) => o,
            Err(e) => return Report::fail(claim, range, json!({ "degree": n, "error": e.to_string() })),
        };
        for (s, o) in solved.iter().zip(&oracle) {
            if s.lambda != o.lambda || s.q != o.q {
                return Report::fail(claim, range, json!({ "lambda": s.lambda, "check": "oracle" }));
            }
        }
        for i in 0..solved.len() {
            for j in (i + 1)..solved.len() {
                if !inner(&solved[i].q, &solved[j].q, &eps).is_zero() {
                    return Report::fail(
                        claim,
                        range,
                        json!({ "lambda": solved[i].lambda, "mu": solved[j].lambda, "check": "orthogonal" }),
                    );
                }
            }
        }
    }
    for n in 1..=8 {
        let parts = enumerate(n);
        let values: Vec<Coeff> = parts.iter().map(|l| eigenvalue(l, &spec)).collect();
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                if values[i] == values[j] {
                    return Report::fail(
                        claim,
                        range,
                        json!({ "lambda": parts[i], "mu": parts[j], "check": "separation" }),
                    );
                }
            }
        }
    }
    Report::pass(claim, range)
}

fn two_row() -> Report {
    let spec = OperatorSpec::generic();
    let range = json!({ "max_m_plus_n": 9 });
    let claim = "g_i closed form = recursion = solver coefficient of q_(m+i,n-i)";
    if jj_closed_form(1, 1, 1).ok() != Some(crate::cf("(1-a)*(1+b)/(a-b)")) {
        return Report::fail(claim, range, json!({ "spot": "g_1(1,1)" }));
    }
    for total in 2..=9usize {
        for n in 1..=total / 2 {
            let m = total - n;
            let (rec, solved) = match (jj_recursion(m, n), solve_q(&Partition::new(vec![m, n]).expect("valid"), &spec)) {
                (Ok(r), Ok(s)) => (r, s),
                _ => return Report::fail(claim, range, json!({ "m": m, "n": n, "error": true })),
            };
            for (i, g) in rec.iter().enumerate() {
                let mu = Partition::new(vec![m + i, n - i]).expect("valid");
                let closed = jj_closed_form(m, n, i);
                if closed.as_ref() != Ok(g) || solved.coefficient(&mu) != *g {
                    return Report::fail(claim, range, json!({ "m": m, "n": n, "i": i }));
                }
            }
        }
    }
    Report::pass(claim, range)
}

fn specializations() -> Report {
    let spec = OperatorSpec::generic();
    let range = json!({ "oracles": 5, "a_equals_b": 4 });
    let claim = "(D) Schur, (A) = (B) Macdonald, (C) Hall-Littlewood match oracles";
    let cases = [
        (Specialization::Schur, EpsSequence::ones()),
        (Specialization::MacdonaldA, EpsSequence::macdonald()),
        (Specialization::HallLittlewood, EpsSequence::hall_littlewood()),
    ];
    for n in 1..=5 {
        let generic = match solve_degree(n, &spec) {
            Ok(s) => s,
            Err(e) => return Report::fail(claim, range, json!({ "degree": n, "error": e.to_string() })),
        };
        for (which, eps) in &cases {
            let oracle = match ghl_degree(n, eps) {
                Ok(o) => o,
                Err(e) => return Report::fail(claim, range, json!({ "degree": n, "error": e.to_string() })),
            };
            for (g, o) in generic.iter().zip(&oracle) {
                let s = match specialize_q(g, *which) {
                    Ok(s) => s,
                    Err(e) => return Report::fail(claim, range, json!({ "lambda": g.lambda, "spec": which.name(), "error": e.to_string() })),
                };
                let a_free = *which != Specialization::Schur
                    || s.q.terms().values().all(|c| c.as_rational().is_some());
                if !a_free || s.q != o.q {
                    return Report::fail(claim, range, json!({ "lambda": g.lambda, "spec": which.name() }));
                }
            }
        }
        if n <= 4 {
            for g in &generic {
                let a = specialize_q(g, Specialization::MacdonaldA).map(|r| r.q);
                let b = specialize_q(g, Specialization::MacdonaldB).map(|r| r.q);
                if a.is_err() || a != b {
                    return Report::fail(claim, range, json!({ "lambda": g.lambda, "spec": "A vs B" }));
                }
            }
        }
    }
    let lambda: Partition = "1,1".parse().expect("valid");
    let schur = solve_q(&lambda, &spec).and_then(|r| specialize_q(&r, Specialization::Schur));
    let expected = SymFunc::from_terms(
        Basis::Q,
        [(lambda.clone(), Coeff::one()), (Partition::row(2), Coeff::from_int(-1))],
    );
    if schur.map(|r| r.q) != Ok(expected) {
        return Report::fail(claim, range, json!({ "spot": "Q_(1,1) under (D)" }));
    }
    Report::pass(claim, range)
}

fn jack_route() -> Report {
    let range = json!({ "self_adjoint": 5, "raising": 6, "eigenvectors": 5 });
    Report::all(
        "D(alpha) self-adjoint, raising, diagonal on Jack oracle",
        range,
        vec![jack_d_self_adjoint_check(5), jack_d_raising_check(6), jack_eigen_check(5)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_criteria_pass() {
        for id in [1, 4, 7] {
            let o = run(id).unwrap();
            assert!(o.passed(), "{}", o.line());
        }
        assert!(run(11).is_none());
    }
}
