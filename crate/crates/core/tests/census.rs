use apa_core::census::{enumerate_semigroups, enumerate_stars, run_census, CensusQuery};
use apa_core::pentagon::classify;
use apa_core::pentagon::make_apa;
use apa_core::CayleyTable;

fn all_tables(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow((n * n) as u32);
    (0..total).map(move |mut code| {
        let mut cells = vec![0; n * n];
        // most significant cell first, so the codes run in lexicographic order
        for c in cells.iter_mut().rev() {
            *c = code % n;
            code /= n;
        }
        cells
    })
}

fn associative(n: usize, t: &[usize]) -> bool {
    let m = |x: usize, y: usize| t[x * n + y];
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(m(x, y), z) == m(x, m(y, z)))))
}

fn naive_stars(dot: &[usize], n: usize) -> Vec<Vec<usize>> {
    let d = |x: usize, y: usize| dot[x * n + y];
    all_tables(n)
        .filter(|s| {
            let st = |x: usize, y: usize| s[x * n + y];
            associative(n, s)
                && (0..n).all(|x| {
                    (0..n).all(|y| {
                        (0..n).all(|z| {
                            d(st(x, y), st(d(x, y), z)) == st(x, d(y, z))
                                && st(st(x, y), st(d(x, y), z)) == st(y, z)
                        })
                    })
                })
        })
        .collect()
}

#[test]
fn semigroup_counts_match_full_scan() {
    for n in 1..=3 {
        let naive: Vec<Vec<usize>> = all_tables(n).filter(|t| associative(n, t)).collect();
        let found: Vec<Vec<usize>> = enumerate_semigroups(n, false)
            .unwrap()
            .iter()
            .map(|t| t.cells().collect())
            .collect();
        assert_eq!(found, naive, "order {n}");
    }
}

#[test]
fn stars_match_naive_filter_at_order_two() {
    for dot in all_tables(2).filter(|t| associative(2, t)) {
        let found: Vec<Vec<usize>> = enumerate_stars(&CayleyTable::new(2, dot.clone()).unwrap())
            .unwrap()
            .iter()
            .map(|t| t.cells().collect())
            .collect();
        assert_eq!(found, naive_stars(&dot, 2), "dot {dot:?}");
    }
}

#[test]
fn left_zero_two_has_five_stars() {
    let lz = vec![0, 0, 1, 1];
    assert_eq!(naive_stars(&lz, 2).len(), 5);
    assert_eq!(
        enumerate_stars(&CayleyTable::left_zero(2)).unwrap().len(),
        5
    );
}

#[test]
fn stars_match_naive_filter_on_sampled_order_three_dots() {
    for dot in enumerate_semigroups(3, false).unwrap().iter().step_by(7) {
        let cells: Vec<usize> = dot.cells().collect();
        let found: Vec<Vec<usize>> = enumerate_stars(dot)
            .unwrap()
            .iter()
            .map(|t| t.cells().collect())
            .collect();
        assert_eq!(found, naive_stars(&cells, 3));
    }
}

#[test]
fn monoid_dots_give_constant_rows() {
    for dot in enumerate_semigroups(3, false).unwrap() {
        let n = dot.n();
        let is_monoid = (0..n).any(|e| (0..n).all(|x| dot.op(e, x) == x && dot.op(x, e) == x));
        if !is_monoid {
            continue;
        }
        for star in enumerate_stars(&dot).unwrap() {
            assert!(star.rows().all(|r| r == star.row(0)));
        }
    }
}

#[test]
fn semilattice_stars_are_gamma_determined() {
    let dot = CayleyTable::from_fn(2, |x, y| x.min(y));
    let stars = enumerate_stars(&dot).unwrap();
    assert!(!stars.is_empty());
    for s in stars {
        let p = make_apa(dot.clone(), s).unwrap();
        assert!(classify(&p, 2).unwrap().determined_by.is_some());
    }
}

#[test]
fn census_orders_two_and_three() {
    let r2 = run_census(&CensusQuery::all(2)).unwrap();
    assert_eq!((r2.dots, r2.total), (8, 22));
    let r3 = run_census(&CensusQuery::all(3)).unwrap();
    assert_eq!((r3.dots, r3.total), (113, 590));
    for r in [&r2, &r3] {
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.cells.sum(), r.total);
        assert_eq!(r.cells.both, r.gamma_determined);
    }
}

#[test]
fn census_order_four_has_no_violations() {
    let r = run_census(&CensusQuery::all(4)).unwrap();
    assert_eq!(r.dots, 3492);
    assert!(r.violations.is_empty(), "{:?}", &r.violations[..r.violations.len().min(3)]);
    assert_eq!(r.cells.sum(), r.total);
    assert_eq!(r.cells.both, r.gamma_determined);
}

/// Published counts of semigroups up to isomorphism (not anti-isomorphism).
#[test]
fn semigroups_up_to_isomorphism() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_semigroups(n, true).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 5, 24, 188, 1915]);
}

#[test]
fn census_is_deterministic_across_pool_sizes() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| run_census(&CensusQuery::all(3)).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn ex_left_dot_census_contains_both_stars() {
    let dot = CayleyTable::from_rows(&[vec![0, 0, 0], vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
    let r = run_census(&CensusQuery::single(dot)).unwrap();
    let stars: Vec<&str> = r.entries.iter().map(|e| e.star.as_str()).collect();
    assert!(stars.contains(&"010/101/010"));
    assert!(stars.contains(&"101/010/101"));
}
