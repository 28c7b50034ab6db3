use std::time::Instant;

use symfn::oracle::{ghl_degree, ghl_gram_report, ghl_support_check, jack_eigen_check};
use symfn::partitions::enumerate;
use symfn::symfunc::EpsPreset;
use symfn::vertex::{solve_q, specialize_q, OperatorSpec, Specialization};
use symfn::{Coeff, EpsSequence, Partition, Symbol};

const PRESETS: [EpsPreset; 5] = [
    EpsPreset::Ones,
    EpsPreset::Jack,
    EpsPreset::HallLittlewood,
    EpsPreset::Macdonald,
    EpsPreset::Abc,
];

#[test]
fn gram_schmidt_orthogonal_for_every_preset() {
    for preset in PRESETS {
        let start = Instant::now();
        let eps = EpsSequence::preset(preset);
        for n in 1..=6 {
            let r = ghl_gram_report(n, &eps);
            assert!(r.passed(), "{r}");
        }
        println!("{} gram reports to degree 6: {:?}", preset.name(), start.elapsed());
    }
}

#[test]
fn ghl_unitriangular() {
    for preset in [EpsPreset::Ones, EpsPreset::Jack, EpsPreset::HallLittlewood, EpsPreset::Macdonald] {
        let r = ghl_support_check(6, &EpsSequence::preset(preset));
        assert!(r.passed(), "{r}");
    }
    let r = ghl_support_check(5, &EpsSequence::abc());
    assert!(r.passed(), "{r}");
}

#[test]
fn jack_functions_are_d_eigenvectors() {
    let r = jack_eigen_check(5);
    assert!(r.passed(), "{r}");
}

fn solved(n: usize) -> Vec<symfn::vertex::EigenResult> {
    let spec = OperatorSpec::generic();
    enumerate(n).iter().map(|l| solve_q(l, &spec).unwrap()).collect()
}

#[test]
fn specializations_match_oracles() {
    let start = Instant::now();
    let cases = [
        (Specialization::MacdonaldA, EpsSequence::macdonald()),
        (Specialization::MacdonaldB, EpsSequence::macdonald()),
        (Specialization::HallLittlewood, EpsSequence::hall_littlewood()),
        (Specialization::Schur, EpsSequence::ones()),
    ];
    for n in 1..=5 {
        let generic = solved(n);
        for (which, eps) in &cases {
            let oracle = ghl_degree(n, eps).unwrap();
            for (g, o) in generic.iter().zip(&oracle) {
                let s = specialize_q(g, *which).unwrap();
                assert_eq!(s.q, o.q, "{which} lambda={:?}", g.lambda);
                if *which == Specialization::Schur {
                    for c in s.q.terms().values() {
                        assert!(c.as_rational().is_some(), "{which} lambda={:?} {c}", g.lambda);
                    }
                    assert!(!s.eigenvalue.symbols().contains(&Symbol::B));
                }
            }
        }
    }
    let schur = specialize_q(&solved(2)[1], Specialization::Schur).unwrap();
    assert_eq!(schur.coefficient(&Partition::row(2)), Coeff::from_int(-1));
    assert_eq!(schur.coefficient(&"1,1".parse().unwrap()), Coeff::one());
    println!("specializations to weight 5: {:?}", start.elapsed());
}
