use proptest::prelude::*;
use symfn::partitions::{dominance_geq, enumerate, lambda_plus, sort_to_partition, union, Partition};

/// Euler's pentagonal recurrence.
fn partition_counts(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p
}

#[test]
fn enumeration_counts() {
    let p = partition_counts(20);
    for n in 0..=20 {
        assert_eq!(enumerate(n).len() as i64, p[n], "n={n}");
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=9 {
        let parts = enumerate(n);
        let geq: Vec<Vec<bool>> = parts
            .iter()
            .map(|a| parts.iter().map(|b| dominance_geq(a, b).unwrap()).collect())
            .collect();
        let k = parts.len();
        for i in 0..k {
            assert!(geq[i][i]);
            for j in 0..k {
                if i != j {
                    assert!(!(geq[i][j] && geq[j][i]), "{:?} {:?}", parts[i], parts[j]);
                }
                if geq[i][j] {
                    // enumerate order is a linear extension
                    assert!(i <= j, "{:?} {:?}", parts[i], parts[j]);
                    for l in 0..k {
                        if geq[j][l] {
                            assert!(geq[i][l]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn union_is_monotone() {
    for n in 1..=6 {
        let parts = enumerate(n);
        for lambda in &parts {
            for mu in parts.iter().filter(|mu| dominance_geq(mu, lambda).unwrap()) {
                for w in 0..=4 {
                    for nu in enumerate(w) {
                        assert!(
                            dominance_geq(&union(mu, &nu), &union(lambda, &nu)).unwrap(),
                            "mu={mu:?} lambda={lambda:?} nu={nu:?}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn lambda_plus_strictly_dominates() {
    for n in 2..=9 {
        for lambda in enumerate(n).into_iter().filter(|l| l.len() >= 2) {
            let plus = lambda_plus(&lambda).unwrap();
            assert!(dominance_geq(&plus, &lambda).unwrap() && plus != lambda, "{lambda:?}");
        }
    }
    assert!(lambda_plus(&Partition::row(3)).is_err());
}

proptest! {
    #[test]
    fn sort_to_partition_is_canonical(v in prop::collection::vec(0usize..6, 0..8)) {
        let p = sort_to_partition(&v);
        prop_assert_eq!(p.weight(), v.iter().sum::<usize>());
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(p.parts().iter().all(|&x| x > 0));
        let mut rev = v.clone();
        rev.reverse();
        prop_assert_eq!(sort_to_partition(&rev), p.clone());
        let text = p.to_string();
        let back: Partition = if text.is_empty() { Partition::empty() } else { text.parse().unwrap() };
        prop_assert_eq!(back, p);
    }

    #[test]
    fn union_adds_weights(a in prop::collection::vec(1usize..5, 0..5), b in prop::collection::vec(1usize..5, 0..5)) {
        let (x, y) = (sort_to_partition(&a), sort_to_partition(&b));
        let u = union(&x, &y);
        prop_assert_eq!(u.weight(), x.weight() + y.weight());
        prop_assert_eq!(u.len(), x.len() + y.len());
        prop_assert_eq!(union(&y, &x), u);
    }
}
