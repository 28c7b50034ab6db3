use std::time::Instant;

use symfn::oracle::ghl_degree;
use symfn::partitions::enumerate;
use symfn::symfunc::{inner, q_eps_lambda};
use symfn::vertex::{
    eigenvalue, jj_closed_form, jj_recursion, self_adjoint_check, solve_q, x0_apply_heisenberg,
    x0_apply_q, OperatorSpec,
};
use symfn::{cf, Basis, EpsSequence, Partition};

#[test]
fn x0_triangular_with_closed_form_diagonal() {
    let start = Instant::now();
    let spec = OperatorSpec::generic();
    for n in 0..=7 {
        for lambda in enumerate(n) {
            let image = x0_apply_q(&lambda, &spec);
            for mu in image.support() {
                assert!(mu.dominates(&lambda).unwrap(), "lambda={lambda:?} mu={mu:?}");
            }
            assert_eq!(image.coeff(&lambda), eigenvalue(&lambda, &spec), "lambda={lambda:?}");
        }
    }
    println!("triangularity to weight 7: {:?}", start.elapsed());
}

#[test]
fn x0_forms_agree() {
    let start = Instant::now();
    let spec = OperatorSpec::generic();
    let eps = spec.eps().clone();
    for n in 0..=6 {
        for lambda in enumerate(n) {
            let q = q_eps_lambda(&lambda, &eps);
            let via_modes = x0_apply_heisenberg(&q, &spec, n).unwrap().to_q(&eps);
            assert_eq!(via_modes, x0_apply_q(&lambda, &spec), "lambda={lambda:?}");
        }
    }
    println!("cross-form to weight 6: {:?}", start.elapsed());
}

#[test]
fn x0_self_adjoint_with_failing_control() {
    let start = Instant::now();
    let r = self_adjoint_check(6, &OperatorSpec::generic());
    assert!(r.passed(), "{r}");
    let control = &r.details.as_ref().unwrap()["control"];
    assert_eq!(control["status"], "fail");
    assert_eq!(control["counterexample"]["lambda"], serde_json::json!([2]));
    assert_eq!(control["counterexample"]["mu"], serde_json::json!([1, 1]));
    println!("self-adjointness to weight 6: {:?}", start.elapsed());
}

#[test]
fn eigenvalues_separate() {
    let spec = OperatorSpec::generic();
    for n in 1..=8 {
        let values: Vec<_> = enumerate(n).iter().map(|l| eigenvalue(l, &spec)).collect();
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                assert!(!(&values[i] - &values[j]).is_zero(), "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn solver_orthogonal_and_matches_oracle() {
    let start = Instant::now();
    let spec = OperatorSpec::generic();
    let eps = EpsSequence::abc();
    for n in 1..=6 {
        let oracle = ghl_degree(n, &eps).unwrap();
        let solved: Vec<_> = enumerate(n).iter().map(|l| solve_q(l, &spec).unwrap()).collect();
        for (s, o) in solved.iter().zip(&oracle) {
            assert_eq!(s.lambda, o.lambda);
            assert_eq!(s.q, o.q, "lambda={:?}", s.lambda);
        }
        for i in 0..solved.len() {
            for j in (i + 1)..solved.len() {
                assert!(inner(&solved[i].q, &solved[j].q, &eps).is_zero(), "n={n} i={i} j={j}");
            }
        }
    }
    println!("solver vs oracle to weight 6: {:?}", start.elapsed());
}

#[test]
fn two_row_formulas_agree_with_solver() {
    let spec = OperatorSpec::generic();
    assert_eq!(jj_closed_form(1, 1, 1).unwrap(), cf("(1-a)*(1+b)/(a-b)"));
    for total in 2..=9usize {
        for n in 1..=total / 2 {
            let m = total - n;
            let rec = jj_recursion(m, n).unwrap();
            let solved = solve_q(&Partition::new(vec![m, n]).unwrap(), &spec).unwrap();
            assert_eq!(solved.q.basis(), Basis::Q);
            for (i, g) in rec.iter().enumerate() {
                assert_eq!(*g, jj_closed_form(m, n, i).unwrap(), "({m},{n}) i={i}");
                let mu = Partition::new(vec![m + i, n - i]).unwrap();
                assert_eq!(*g, solved.coefficient(&mu), "({m},{n}) i={i}");
            }
        }
    }
}
