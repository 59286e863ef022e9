use apa_core::constructions::ex_left_star;
use apa_core::freeobjects::{build_ak, build_bx, build_cn, hom_extension_pk, hom_extension_q1};
use apa_core::{CayleyTable, Error};

fn assignments(gens: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..gens {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..size).map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

fn is_hom(source: &CayleyTable, target: &CayleyTable, map: &[usize]) -> bool {
    let n = source.n();
    (0..n).all(|u| (0..n).all(|v| map[source.op(u, v)] == target.op(map[u], map[v])))
}

fn targets() -> Vec<(&'static str, CayleyTable)> {
    vec![
        ("A_2(1)", build_ak(2, 1).unwrap().table),
        ("ex_left star", ex_left_star().unwrap().star().clone()),
        ("right-zero 3", CayleyTable::right_zero(3)),
        ("B(X_1)", build_bx(1).unwrap().table),
        ("zero 3", CayleyTable::constant(3, 0)),
    ]
}

#[test]
fn size_formulas() {
    for (k, n) in [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3)] {
        assert_eq!(build_ak(k, n).unwrap().n(), n * k.pow(n as u32) + n);
    }
    for n in 1..=3 {
        assert_eq!(build_cn(n).unwrap().n(), n << n);
        assert_eq!(build_bx(n).unwrap().n(), (n + 1) * n);
    }
}

#[test]
fn pk_extensions_are_homomorphisms() {
    let mut checked = 0;
    for (k, n) in [(2, 1), (2, 2)] {
        let src = build_ak(k, n).unwrap();
        for (name, t) in targets() {
            for images in assignments(n, t.n()) {
                match hom_extension_pk(k, &src, &t, &images) {
                    Ok(h) => {
                        assert!(h.check.holds, "{name} {images:?}");
                        assert!(is_hom(&src.table, &t, &h.map), "{name} {images:?}");
                        checked += 1;
                    }
                    Err(Error::TargetNotInVariety(_)) => {}
                    Err(e) => panic!("{name}: {e}"),
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn q1_extensions_are_homomorphisms() {
    let mut checked = 0;
    for n in 1..=2 {
        let src = build_bx(n).unwrap();
        for (name, t) in targets() {
            for images in assignments(n, t.n()) {
                match hom_extension_q1(&src, &t, &images) {
                    Ok(h) => {
                        assert!(is_hom(&src.table, &t, &h.map), "{name} {images:?}");
                        checked += 1;
                    }
                    Err(Error::TargetNotInVariety(_)) => {}
                    Err(e) => panic!("{name}: {e}"),
                }
            }
        }
    }
    assert!(checked > 0);
}
