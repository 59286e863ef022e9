use apa_core::term::check_single;
use apa_core::{canonical_form, laws, CayleyTable, Op};
use proptest::prelude::*;

fn table(max_n: usize) -> impl Strategy<Value = CayleyTable> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n * n)
            .prop_map(move |cells| CayleyTable::new(n, cells).unwrap())
    })
}

fn brute_associative(t: &CayleyTable) -> bool {
    let n = t.n();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t.op(t.op(x, y), z) == t.op(x, t.op(y, z)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn identity_engine_agrees_with_direct_scan(t in table(5)) {
        let via_terms = check_single(&t, &laws::associative(Op::Star));
        prop_assert_eq!(via_terms.holds, brute_associative(&t));
        prop_assert_eq!(&via_terms, &t.is_associative());
        if let Some(w) = via_terms.witness {
            let (l, r) = laws::associative(Op::Star).sides(&t, &t, &w);
            prop_assert_ne!(l, r);
        }
    }

    #[test]
    fn reflexive_law_always_holds(t in table(5)) {
        prop_assert!(check_single(&t, &laws::reflexive()).holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_ignores_relabeling(
        (d, s, perm) in (1usize..=4).prop_flat_map(|n| (
            proptest::collection::vec(0..n, n * n),
            proptest::collection::vec(0..n, n * n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )).prop_map(|(a, b, p)| {
            let n = p.len();
            (CayleyTable::new(n, a).unwrap(), CayleyTable::new(n, b).unwrap(), p)
        })
    ) {
        let c = canonical_form(&d, Some(&s)).unwrap();
        let c2 = canonical_form(&d.relabel(&perm), Some(&s.relabel(&perm))).unwrap();
        prop_assert_eq!(c, c2);
    }
}
