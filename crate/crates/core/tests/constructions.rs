use apa_core::constructions::{ltd_tensor, rtd_tensor, FreeBand};
use apa_core::pentagon::classify;
use apa_core::term::check_single;
use apa_core::{laws, CayleyTable};
use proptest::prelude::*;

fn band3() -> &'static FreeBand {
    static B: std::sync::OnceLock<FreeBand> = std::sync::OnceLock::new();
    B.get_or_init(|| FreeBand::new(3).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn free_band_laws(x in 0usize..159, y in 0usize..159) {
        let b = band3();
        let t = b.table();
        prop_assert_eq!(t.op(x, x), x);
        let mut c = b.content(x);
        c.extend(b.content(y));
        c.sort_unstable();
        c.dedup();
        prop_assert_eq!(b.content(t.op(x, y)), c);
        // the stored word is its own canonical representative
        prop_assert_eq!(b.element_of(b.elements()[x].letters()), x);
    }

    #[test]
    fn words_evaluate_consistently(w in proptest::collection::vec(0usize..3, 1..12)) {
        let b = band3();
        let e = b.element_of(&w);
        let folded = w.iter().skip(1).fold(w[0], |acc, &g| b.table().op(acc, g));
        prop_assert_eq!(e, folded);
    }
}

fn two_element_tables() -> impl Iterator<Item = CayleyTable> {
    (0..16usize).map(|c| CayleyTable::from_fn(2, |x, y| (c >> (2 * x + y)) & 1))
}

#[test]
fn every_two_element_star_in_the_variety_gives_an_apa() {
    let band = FreeBand::new(2).unwrap();
    let mut ltd_seen = 0;
    let mut rtd_seen = 0;
    for s in two_element_tables() {
        let assoc = s.is_associative().holds;
        let p2 = assoc
            && check_single(&s, &laws::right_normal()).holds
            && check_single(&s, &laws::p(2)).holds;
        let q1 = assoc && check_single(&s, &laws::q(1)).holds;
        match ltd_tensor(&s, &band) {
            Ok(p) => {
                assert!(p2);
                assert!(classify(&p, 2).unwrap().is_ltd);
                ltd_seen += 1;
            }
            Err(e) => assert!(!p2, "{e}"),
        }
        match rtd_tensor(&s, &band) {
            Ok(p) => {
                assert!(q1);
                let c = classify(&p, 2).unwrap();
                assert!(c.is_rtd && c.tprofile.right_zero);
                rtd_seen += 1;
            }
            Err(e) => assert!(!q1, "{e}"),
        }
    }
    assert!(ltd_seen > 0 && rtd_seen > 0);
}
