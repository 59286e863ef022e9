//! Backtracking over operation tables filled row-major.

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Largest order for star enumeration over a fixed dot.
pub const MAX_STAR_ORDER: usize = 6;
/// Largest order for labeled semigroup enumeration.
pub const MAX_LABELED_ORDER: usize = 4;
/// Largest order for semigroup enumeration with isomorphism pruning.
pub const MAX_ISO_ORDER: usize = 5;

const UNSET: u8 = u8::MAX;

/// Cells fixed before the search splits into parallel subtrees.
const SPLIT_DEPTH: usize = 2;

/// A constraint over a partial table: `false` as soon as some fully
/// instantiated instance fails.
trait Constraint: Sync {
    fn n(&self) -> usize;
    fn consistent(&self, cells: &[u8]) -> bool;
}

fn get(cells: &[u8], n: usize, x: usize, y: usize) -> Option<usize> {
    let v = cells[x * n + y];
    (v != UNSET).then_some(v as usize)
}

struct Associative {
    n: usize,
}

impl Constraint for Associative {
    fn n(&self) -> usize {
        self.n
    }

    fn consistent(&self, cells: &[u8]) -> bool {
        let n = self.n;
        let s = |x, y| get(cells, n, x, y);
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = s(x, y) else { continue };
                for z in 0..n {
                    if let (Some(l), Some(yz)) = (s(xy, z), s(y, z)) {
                        if s(x, yz).is_some_and(|r| r != l) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Star associativity and both pentagon laws against a fixed dot.
struct PentagonStar<'a> {
    dot: &'a CayleyTable,
}

impl Constraint for PentagonStar<'_> {
    fn n(&self) -> usize {
        self.dot.n()
    }

    fn consistent(&self, cells: &[u8]) -> bool {
        let n = self.dot.n();
        let d = |x, y| self.dot.op(x, y);
        let s = |x, y| get(cells, n, x, y);
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = s(x, y) else { continue };
                let dxy = d(x, y);
                for z in 0..n {
                    let yz = s(y, z);
                    if let (Some(l), Some(yz)) = (s(xy, z), yz) {
                        if s(x, yz).is_some_and(|r| r != l) {
                            return false;
                        }
                    }
                    if let Some(t) = s(dxy, z) {
                        if s(x, d(y, z)).is_some_and(|r| r != d(xy, t)) {
                            return false;
                        }
                        if let (Some(l), Some(r)) = (s(xy, t), yz) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

fn fill<C: Constraint>(c: &C, cells: &mut Vec<u8>, pos: usize, out: &mut Vec<Vec<u8>>) {
    let n = c.n();
    if pos == cells.len() {
        out.push(cells.clone());
        return;
    }
    for v in 0..n as u8 {
        cells[pos] = v;
        if c.consistent(cells) {
            fill(c, cells, pos + 1, out);
        }
    }
    cells[pos] = UNSET;
}

/// Every complete table satisfying `c`, in lexicographic order of cells.
fn search<C: Constraint>(c: &C) -> Vec<Vec<u8>> {
    let n = c.n();
    let total = n * n;
    let depth = SPLIT_DEPTH.min(total);
    let mut prefixes = Vec::new();
    let mut cells = vec![UNSET; total];
    fill_prefix(c, &mut cells, 0, depth, &mut prefixes);
    prefixes
        .par_iter()
        .map(|prefix| {
            let mut cells = prefix.clone();
            let mut out = Vec::new();
            fill(c, &mut cells, depth, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn fill_prefix<C: Constraint>(
    c: &C,
    cells: &mut Vec<u8>,
    pos: usize,
    depth: usize,
    out: &mut Vec<Vec<u8>>,
) {
    if pos == depth {
        out.push(cells.clone());
        return;
    }
    for v in 0..c.n() as u8 {
        cells[pos] = v;
        if c.consistent(cells) {
            fill_prefix(c, cells, pos + 1, depth, out);
        }
    }
    cells[pos] = UNSET;
}

fn to_table(n: usize, cells: Vec<u8>) -> CayleyTable {
    CayleyTable::new(n, cells.into_iter().map(usize::from).collect())
        .expect("search fills in range")
}

/// All stars completing `dot` to an APA, in lexicographic order.
pub fn enumerate_stars(dot: &CayleyTable) -> Result<Vec<CayleyTable>> {
    let n = dot.n();
    if n > MAX_STAR_ORDER {
        return Err(Error::TooLarge {
            what: "star enumeration",
            n,
            bound: MAX_STAR_ORDER,
        });
    }
    if let Some(w) = dot.is_associative().witness {
        return Err(Error::DotNotAssociative(w));
    }
    let labels = dot.labels().map(<[String]>::to_vec);
    Ok(search(&PentagonStar { dot })
        .into_iter()
        .map(|cells| {
            let t = to_table(n, cells);
            match &labels {
                Some(l) => t.with_labels(l.clone()).expect("dot labels are valid"),
                None => t,
            }
        })
        .collect())
}

/// Associative tables of order `n`: all labeled ones, or with `up_to_iso`
/// the lexicographically first of each isomorphism class.
pub fn enumerate_semigroups(n: usize, up_to_iso: bool) -> Result<Vec<CayleyTable>> {
    let cap = if up_to_iso {
        MAX_ISO_ORDER
    } else {
        MAX_LABELED_ORDER
    };
    if n > cap {
        return Err(Error::SizeCap { size: n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let all = search(&Associative { n });
    if !up_to_iso {
        return Ok(all.into_iter().map(|c| to_table(n, c)).collect());
    }
    let tables: Vec<CayleyTable> = all.into_iter().map(|c| to_table(n, c)).collect();
    let forms: Vec<_> = tables
        .par_iter()
        .map(|t| canonical_form(t, None))
        .collect::<Result<_>>()?;
    let mut seen = std::collections::HashSet::new();
    Ok(tables
        .into_iter()
        .zip(forms)
        .filter_map(|(t, f)| seen.insert(f).then_some(t))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_counts() {
        assert_eq!(enumerate_semigroups(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_semigroups(2, false).unwrap().len(), 8);
        assert_eq!(enumerate_semigroups(3, false).unwrap().len(), 113);
        // up to isomorphism (not anti-isomorphism): 5 of order 2, 24 of order 3
        assert_eq!(enumerate_semigroups(2, true).unwrap().len(), 5);
        assert_eq!(enumerate_semigroups(3, true).unwrap().len(), 24);
        assert!(matches!(
            enumerate_semigroups(5, false),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn left_zero_two() {
        let stars = enumerate_stars(&CayleyTable::left_zero(2)).unwrap();
        let rows: Vec<Vec<usize>> = stars.iter().map(|t| t.cells().collect()).collect();
        assert_eq!(
            rows,
            vec![
                vec![0, 0, 0, 0],
                vec![0, 1, 0, 1],
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn rejects_bad_dot() {
        let bad = CayleyTable::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(matches!(
            enumerate_stars(&bad),
            Err(Error::DotNotAssociative(_))
        ));
    }
}
