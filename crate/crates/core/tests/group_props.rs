use plates_core::invariants::{act, family_polynomial, representation_matrix, Family};
use plates_core::linalg::{mat_mul, trace};
use plates_core::perm::{
    factorial, mn_character, pairing_stabilizer, symmetric_group, wreath_product, Pairing,
    Partition, Permutation,
};
use proptest::prelude::*;
use std::collections::BTreeSet;

const N: usize = 6;

fn perm() -> impl Strategy<Value = Permutation> {
    Just((1..=N).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|line| Permutation::from_images(&line).unwrap())
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::X), Just(Family::C), Just(Family::G)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn representation_is_a_homomorphism(g in perm(), h in perm(), f in family()) {
        let gh = representation_matrix(&g.compose(&h), f).unwrap();
        let prod = mat_mul(&representation_matrix(&g, f).unwrap(), &representation_matrix(&h, f).unwrap());
        prop_assert_eq!(gh, prod);
    }

    #[test]
    fn trace_is_a_class_function(g in perm(), h in perm(), f in family()) {
        let conj = h.compose(&g).compose(&h.inverse());
        prop_assert_eq!(
            trace(&representation_matrix(&conj, f).unwrap()),
            trace(&representation_matrix(&g, f).unwrap())
        );
        prop_assert_eq!(conj.cycle_type(), g.cycle_type());
    }

    #[test]
    fn action_composes(g in perm(), h in perm(), f in family()) {
        let p = family_polynomial(f, &Pairing::parse("12,34,56").unwrap()).unwrap();
        prop_assert_eq!(act(&g, &act(&h, &p)), act(&g.compose(&h), &p));
    }

    #[test]
    fn pairing_orbit_times_stabilizer(g in perm()) {
        let group = symmetric_group(N);
        let start = Pairing::parse("12,34,56").unwrap().apply(&g);
        let orbit: BTreeSet<Pairing> = group.iter().map(|h| start.apply(h)).collect();
        let stab = pairing_stabilizer(&start, &group);
        prop_assert_eq!(orbit.len() * stab.len(), group.len());
        prop_assert_eq!(orbit.len(), 15);
    }

    #[test]
    fn vector_orbit_times_stabilizer(v in prop::collection::vec(0i64..3, N)) {
        let group = wreath_product(2, 3);
        let orbit: BTreeSet<Vec<i64>> = group.iter().map(|g| g.act_on_vector(&v)).collect();
        let stab = group.iter().filter(|g| g.act_on_vector(&v) == v).count();
        prop_assert_eq!(orbit.len() * stab, group.len());
    }
}

#[test]
fn character_norms_and_orthogonality() {
    let parts = Partition::all(N);
    assert_eq!(parts.len(), 11);
    let order = factorial(N) as i128;
    assert_eq!(
        parts.iter().map(|m| m.class_size()).sum::<u128>(),
        factorial(N)
    );
    for a in &parts {
        for b in &parts {
            let inner: i128 = parts
                .iter()
                .map(|mu| {
                    let x = mn_character(a, mu).unwrap() as i128;
                    let y = mn_character(b, mu).unwrap() as i128;
                    mu.class_size() as i128 * x * y
                })
                .sum();
            assert_eq!(inner, if a == b { order } else { 0 }, "{a:?} {b:?}");
        }
        let identity = Partition::new(vec![1; N]).unwrap();
        assert_eq!(
            mn_character(a, &identity).unwrap() as u128,
            a.hook_length_dimension()
        );
    }
}

#[test]
fn class_sizes_match_enumeration() {
    let mut counts = std::collections::BTreeMap::new();
    for g in symmetric_group(N) {
        *counts.entry(g.cycle_type()).or_insert(0u128) += 1;
    }
    for (mu, c) in counts {
        assert_eq!(mu.class_size(), c);
        assert_eq!(mu.centralizer_order() * c, factorial(N));
    }
}
