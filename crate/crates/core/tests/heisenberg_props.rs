use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use symfn::coeffs::Symbol;
use symfn::heisenberg::{
    commutation_check, jack_d_raising_check, jack_d_self_adjoint_check, newton_triangularity_check,
    t_apply, t_apply_iterative, two_row_action, NewtonData,
};
use symfn::partitions::enumerate;
use symfn::{Coeff, EpsSequence, Partition};

/// `x ∈ Σ_i Z (b^{μ_i} - 1)`: an integer polynomial in `b` vanishing at
/// `b = 1` whose nonconstant monomials are `b^{μ_i}`.
fn in_integer_span(x: &Coeff, mu: &Partition) -> bool {
    if !x.den().is_one() {
        return false;
    }
    let mut total = BigInt::zero();
    for (mono, c) in x.num().terms() {
        for s in Symbol::ALL {
            if s != Symbol::B && mono[s.index()] != 0 {
                return false;
            }
        }
        let k = mono[Symbol::B.index()] as usize;
        if k != 0 && !mu.parts().contains(&k) {
            return false;
        }
        total += c;
    }
    total.is_zero()
}

#[test]
fn heisenberg_commutation() {
    for eps in [EpsSequence::abc(), EpsSequence::jack()] {
        let r = commutation_check(4, 5, &eps);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn generalized_newton_to_weight_eight() {
    let start = Instant::now();
    let eps = EpsSequence::abc();
    let data = NewtonData::exponential(&eps);
    for n in 1..=8 {
        for lambda in enumerate(n) {
            let rep = newton_triangularity_check(&lambda, &data.r, &data.c, &eps).unwrap();
            assert!(rep.passed(), "{rep}");
            let direct = t_apply(&lambda, &data.r, &eps).unwrap();
            let iterated = t_apply_iterative(&lambda, &data.r, &eps).unwrap();
            assert_eq!(direct, iterated, "lambda={lambda:?}");
            if lambda.len() == 2 {
                let (m, k) = (lambda.parts()[0], lambda.parts()[1]);
                assert_eq!(two_row_action(m, k, &data.c).unwrap(), direct, "lambda={lambda:?}");
            }
            if n <= 6 {
                for (mu, c) in direct.terms() {
                    assert!(in_integer_span(c, mu), "lambda={lambda:?} mu={mu:?} c={c}");
                }
            }
        }
    }
    println!("weight <= 8 Newton suite: {:?}", start.elapsed());
}

#[test]
fn classical_newton_identity() {
    let eps = EpsSequence::ones();
    let data = NewtonData::classical(&eps);
    for n in 1..=10 {
        let t = t_apply_iterative(&Partition::row(n), &data.r, &eps).unwrap();
        assert_eq!(t.coeff(&Partition::row(n)), Coeff::from_int(n as i64));
        assert_eq!(t.len(), 1);
    }
}

#[test]
fn jack_operator_self_adjoint_and_raising() {
    let r = jack_d_self_adjoint_check(5);
    assert!(r.passed(), "{r}");
    let r = jack_d_raising_check(6);
    assert!(r.passed(), "{r}");
}
