use num_bigint::BigInt;
use proptest::prelude::*;
use symfn::coeffs::{gcd, Coeff, Mono, Poly, Symbol, NVARS};

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Poly> {
    // degree <= 4 in the first three symbols; small integer coefficients
    prop::collection::vec(((0u16..=2, 0u16..=2, 0u16..=1), -4i64..=4), 1..=max_terms).prop_map(
        |terms| {
            Poly::from_terms(
                terms
                    .into_iter()
                    .map(|((ea, eb, ec), c)| {
                        let mut m: Mono = [0; NVARS];
                        m[Symbol::A.index()] = ea;
                        m[Symbol::B.index()] = eb;
                        m[Symbol::C.index()] = ec;
                        (m, BigInt::from(c))
                    })
                    .collect(),
            )
        },
    )
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly_strategy(4).prop_filter("nonzero", |p| !p.is_zero())
}

fn coeff_strategy() -> impl Strategy<Value = Coeff> {
    (poly_strategy(4), nonzero_poly()).prop_map(|(n, d)| Coeff::new(n, d).unwrap())
}

fn nonzero_coeff() -> impl Strategy<Value = Coeff> {
    coeff_strategy().prop_filter("nonzero", |c| !c.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(x in coeff_strategy(), y in coeff_strategy(), z in nonzero_coeff()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&z * &z.inv().unwrap(), Coeff::one());
        prop_assert_eq!(&(&x / &z) * &z, x.clone());
    }

    #[test]
    fn canonical_form_is_a_function_of_the_value(x in coeff_strategy(), w in nonzero_coeff()) {
        let y = &(&x * &w) / &w;
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(y.to_string(), x.to_string());
        // agreement with cross-multiplication
        let (n1, d1) = (x.num().clone(), x.den().clone());
        let (n2, d2) = (y.num().clone(), y.den().clone());
        prop_assert_eq!(&n1 * &d2, &n2 * &d1);
    }

    #[test]
    fn gcd_divides_both(x in nonzero_poly(), y in nonzero_poly(), f in nonzero_poly()) {
        let a = &x * &f;
        let b = &y * &f;
        let g = gcd(&a, &b);
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
        // the planted factor divides the gcd
        prop_assert!(g.div_exact(&f).is_some());
    }

    #[test]
    fn substitution_commutes_with_arithmetic(x in coeff_strategy(), y in coeff_strategy()) {
        let bindings = vec![
            (Symbol::A, "1/q".parse::<Coeff>().unwrap()),
            (Symbol::B, "t - 2".parse::<Coeff>().unwrap()),
        ];
        let sx = x.substitute(&bindings);
        let sy = y.substitute(&bindings);
        if let (Ok(sx), Ok(sy)) = (sx, sy) {
            prop_assert_eq!((&x * &y).substitute(&bindings).unwrap(), &sx * &sy);
            prop_assert_eq!((&x + &y).substitute(&bindings).unwrap(), &sx + &sy);
        }
    }

    #[test]
    fn string_and_json_round_trip(x in coeff_strategy()) {
        let back: Coeff = x.to_string().parse().unwrap();
        prop_assert_eq!(&back, &x);
        let json = serde_json::to_string(&x).unwrap();
        let back: Coeff = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, x);
    }
}
