//! The map check `s23 s13 s12 = s12 s23` against the defining laws, with
//! both sides computed independently of the library.

use apa_core::pentagon::{make_apa, triple_map_check};
use apa_core::CayleyTable;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Applies the map on positions `(i, j)` of a triple by hand.
fn apply(d: &[usize], s: &[usize], n: usize, i: usize, j: usize, t: &mut [usize; 3]) {
    let (x, y) = (t[i], t[j]);
    t[i] = d[x * n + y];
    t[j] = s[x * n + y];
}

fn map_oracle(d: &[usize], s: &[usize], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut l = [x, y, z];
                apply(d, s, n, 0, 1, &mut l);
                apply(d, s, n, 0, 2, &mut l);
                apply(d, s, n, 1, 2, &mut l);
                let mut r = [x, y, z];
                apply(d, s, n, 1, 2, &mut r);
                apply(d, s, n, 0, 1, &mut r);
                if l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn laws_oracle(d: &[usize], s: &[usize], n: usize) -> bool {
    let dd = |x: usize, y: usize| d[x * n + y];
    let ss = |x: usize, y: usize| s[x * n + y];
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                dd(dd(x, y), z) == dd(x, dd(y, z))
                    && dd(ss(x, y), ss(dd(x, y), z)) == ss(x, dd(y, z))
                    && ss(ss(x, y), ss(dd(x, y), z)) == ss(y, z)
            })
        })
    })
}

fn agree(n: usize, d: Vec<usize>, s: Vec<usize>) {
    let p = make_apa(
        CayleyTable::new(n, d.clone()).unwrap(),
        CayleyTable::new(n, s.clone()).unwrap(),
    )
    .unwrap();
    let lib = triple_map_check(&p).holds;
    let by_laws = p.status().is_pentagon_algebra();
    assert_eq!(lib, map_oracle(&d, &s, n), "{d:?} {s:?}");
    assert_eq!(lib, laws_oracle(&d, &s, n), "{d:?} {s:?}");
    assert_eq!(lib, by_laws, "{d:?} {s:?}");
}

fn decode(mut code: usize, n: usize) -> Vec<usize> {
    (0..n * n)
        .map(|_| {
            let v = code % n;
            code /= n;
            v
        })
        .collect()
}

#[test]
fn all_two_element_pairs() {
    for dc in 0..16 {
        for sc in 0..16 {
            agree(2, decode(dc, 2), decode(sc, 2));
        }
    }
}

#[test]
fn seeded_three_element_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let d: Vec<usize> = (0..9).map(|_| rng.gen_range(0..3)).collect();
        let s: Vec<usize> = (0..9).map(|_| rng.gen_range(0..3)).collect();
        agree(3, d, s);
    }
}
