//! Product constructions on tables.

use crate::table::CayleyTable;

fn pair_labels(t1: &CayleyTable, t2: &CayleyTable) -> Vec<String> {
    let mut out = Vec::with_capacity(t1.n() * t2.n());
    for a in 0..t1.n() {
        for b in 0..t2.n() {
            out.push(format!("({},{})", t1.label(a), t2.label(b)));
        }
    }
    out
}

/// Componentwise product; element `(a, b)` has index `a * n2 + b`.
pub fn direct_product(t1: &CayleyTable, t2: &CayleyTable) -> CayleyTable {
    let n2 = t2.n();
    CayleyTable::from_fn(t1.n() * n2, |x, y| {
        t1.op(x / n2, y / n2) * n2 + t2.op(x % n2, y % n2)
    })
    .with_labels(pair_labels(t1, t2))
    .expect("pair labels are distinct")
}

/// The rectangular band on pairs over `t`'s carrier:
/// `(x1,x2)·(y1,y2) = (x1,y2)`. Only the labels of `t` are used.
pub fn rectangular_band(t: &CayleyTable) -> CayleyTable {
    let n = t.n();
    CayleyTable::from_fn(n * n, |x, y| (x / n) * n + y % n)
        .with_labels(pair_labels(t, t))
        .expect("pair labels are distinct")
}
