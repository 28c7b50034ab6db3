use std::time::Instant;

use num_bigint::BigInt;
use proptest::prelude::*;
use symfn::partitions::{enumerate, z_lambda};
use symfn::symfunc::{inner, monomial, q_eps, q_eps_lambda, transition, Basis, EpsPreset};
use symfn::{Coeff, EpsSequence, Partition, SymFunc};

/// Degree-`n` part of `exp(X)` for `X = Σ_k z^k p_k / (k ε_k)`, by the
/// exponential series in the formal variable z.
fn exp_series_coefficient(n: usize, eps: &EpsSequence) -> SymFunc {
    let x: Vec<SymFunc> = (0..=n)
        .map(|k| {
            if k == 0 {
                SymFunc::zero(Basis::P)
            } else {
                let c = (Coeff::from_int(k as i64) * eps.get(k)).inv().unwrap();
                SymFunc::p(Partition::row(k)).scale(&c)
            }
        })
        .collect();
    // power[d] = degree-d part of X^j / j!, iterated in j
    let mut total = if n == 0 { SymFunc::one(Basis::P) } else { SymFunc::zero(Basis::P) };
    let mut power: Vec<SymFunc> = (0..=n)
        .map(|d| if d == 0 { SymFunc::one(Basis::P) } else { SymFunc::zero(Basis::P) })
        .collect();
    for j in 1..=n {
        let mut next: Vec<SymFunc> = (0..=n).map(|_| SymFunc::zero(Basis::P)).collect();
        for (d, pd) in power.iter().enumerate() {
            for (k, xk) in x.iter().enumerate().skip(1) {
                if d + k <= n {
                    next[d + k] = &next[d + k] + &pd.mul(xk);
                }
            }
        }
        let inv_j = Coeff::from_int(j as i64).inv().unwrap();
        power = next.into_iter().map(|f| f.scale(&inv_j)).collect();
        total = &total + &power[n];
    }
    total
}

#[test]
fn generating_function_reproduces_q_eps() {
    for preset in EpsPreset::ALL {
        let eps = EpsSequence::preset(preset);
        for n in 0..=8 {
            assert_eq!(
                exp_series_coefficient(n, &eps),
                q_eps(n as i64, &eps),
                "eps={preset} n={n}"
            );
        }
    }
}

#[test]
fn kernel_expansion_per_degree() {
    // Σ_λ q_λ(x) m_λ(y) = Σ_ρ p_ρ(x) p_ρ(y) / (z_ρ ε_ρ)
    let eps = EpsSequence::abc();
    for n in 0..=5 {
        let parts = enumerate(n);
        for rho in &parts {
            for sigma in &parts {
                let mut lhs = Coeff::zero();
                for lambda in &parts {
                    let q = q_eps_lambda(lambda, &eps).coeff(rho);
                    let m = monomial(lambda).coeff(sigma);
                    lhs += &(q * m);
                }
                let rhs = if rho == sigma {
                    (eps.of_partition(rho).scale_int(&z_lambda(rho))).inv().unwrap()
                } else {
                    Coeff::zero()
                };
                assert_eq!(lhs, rhs, "rho={rho:?} sigma={sigma:?}");
            }
        }
    }
}

#[test]
fn monomials_have_leading_term() {
    for n in 1..=7 {
        let t = transition(n);
        for lambda in &t.partitions {
            let m = SymFunc::basis_element(Basis::M, lambda.clone());
            let back = monomial(lambda).to_m(&EpsSequence::ones());
            assert_eq!(back, m);
        }
    }
}

#[test]
fn duality_all_presets_to_degree_seven() {
    let start = Instant::now();
    for preset in EpsPreset::ALL {
        let r = symfn::symfunc::duality_check(7, &EpsSequence::preset(preset));
        assert!(r.passed(), "{r}");
    }
    assert!(start.elapsed().as_secs() < 30, "duality took {:?}", start.elapsed());
}

fn p_vector(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    let keys: Vec<Partition> = (0..=max_degree).flat_map(enumerate).collect();
    let n = keys.len();
    prop::collection::vec(-3i64..=3, n).prop_map(move |cs| {
        SymFunc::from_terms(
            Basis::P,
            keys.iter().cloned().zip(cs.into_iter().map(Coeff::from_int)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inner_symmetric_bilinear_and_anisotropic(
        f in p_vector(5), g in p_vector(5), h in p_vector(5), k in -5i64..=5
    ) {
        let eps = EpsSequence::abc();
        prop_assert_eq!(inner(&f, &g, &eps), inner(&g, &f, &eps));
        let kc = Coeff::from_int(k);
        let lhs = inner(&(&f.scale(&kc) + &h), &g, &eps);
        let rhs = &inner(&f, &g, &eps).scale_int(&BigInt::from(k)) + &inner(&h, &g, &eps);
        prop_assert_eq!(lhs, rhs);
        if !f.is_zero() {
            prop_assert!(!inner(&f, &f, &eps).is_zero());
        }
    }
}
