//! Property tests for the exact-arithmetic and enumeration invariants.

use proptest::prelude::*;

use hdl_core::exactcomb::{binomial, rational_from_str, rational_to_string, Rational};
use hdl_core::picard::DivisorClass;
use hdl_core::symcover::{enumerate_xi, CycleType, Permutation};
use hdl_core::{braid, ResourceGuard};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (any::<i32>(), 1..10_000i32).prop_map(|(p, q)| {
        Rational::new(p.into(), q.into())
    })
}

proptest! {
    #[test]
    fn rational_strings_round_trip(r in arb_rational()) {
        let s = rational_to_string(&r);
        prop_assert_eq!(rational_from_str(&s).unwrap(), r);
    }

    #[test]
    fn divisor_class_json_round_trips(k in 1u64..6, coeffs in proptest::collection::vec(arb_rational(), 7)) {
        let c_delta = coeffs[1..=(k as usize + 1)].to_vec();
        let cls = DivisorClass::new(k, coeffs[0].clone(), c_delta).unwrap();
        let parsed = DivisorClass::from_json_str(&cls.to_json_string()).unwrap();
        prop_assert_eq!(parsed, cls);
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 1u64..60, r in 0i64..60) {
        prop_assert_eq!(binomial(n, r), binomial(n, n as i64 - r));
        prop_assert_eq!(
            binomial(n, r),
            binomial(n - 1, r - 1) + binomial(n - 1, r)
        );
    }

    #[test]
    fn enumerated_tuples_satisfy_their_contract(
        d in 2usize..5,
        b in 1usize..5,
        seed in 0usize..6,
    ) {
        let guard = ResourceGuard::default();
        let types: Vec<CycleType> = partitions_of(d);
        let mu = &types[seed % types.len()];
        let phi = mu.canonical_rep();
        let xi = enumerate_xi(d, b, &phi, &guard).unwrap();
        // Parity mismatch means the set is empty.
        let parity = if b % 2 == 0 { 1 } else { -1 };
        if phi.sign() != parity {
            prop_assert!(xi.is_empty());
        }
        for tuple in &xi {
            prop_assert_eq!(tuple.len(), b);
            prop_assert_eq!(tuple.product(), &phi);
            prop_assert!(tuple.is_generating());
        }
    }

    #[test]
    fn braid_words_preserve_products_and_invert(
        b in 2usize..5,
        letters in proptest::collection::vec((1i32..4, any::<bool>()), 1..8),
        pick in any::<u64>(),
    ) {
        let guard = ResourceGuard::default();
        let d = 3;
        let phi = Permutation::parse_cycles(d, if b % 2 == 0 { "(1 2 3)" } else { "(1 2)" }).unwrap();
        let xi = enumerate_xi(d, b, &phi, &guard).unwrap();
        prop_assume!(!xi.is_empty());
        let tuple = &xi[(pick as usize) % xi.len()];

        let letters: Vec<i32> = letters
            .into_iter()
            .map(|(i, inv)| {
                let i = ((i as usize - 1) % (b - 1) + 1) as i32;
                if inv { -i } else { i }
            })
            .collect();
        let word = braid::BraidWord::new(b, letters).unwrap();
        let moved = braid::act_word(&word, tuple).unwrap();
        prop_assert_eq!(moved.product(), tuple.product());
        let back = braid::act_word(&word.inverse(), &moved).unwrap();
        prop_assert_eq!(&back, tuple);
    }
}

fn partitions_of(d: usize) -> Vec<CycleType> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(d, d, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|parts| CycleType::new(parts).unwrap())
        .collect()
}
