//! Isomorphism-invariant serialization by exhaustive relabeling.

use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Largest carrier for which all `n!` relabelings are scanned.
pub const MAX_CANON_N: usize = 8;

/// Lexicographically least serialization over all simultaneous relabelings.
///
/// Layout: `[n, has_star, dot cells…, star cells…]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    /// Hex-free compact text: the cell digits, operations separated by `/`.
    pub fn to_text(&self) -> String {
        let n = self.0[0] as usize;
        let body = &self.0[2..];
        body.chunks(n * n)
            .map(|c| {
                c.iter()
                    .map(|v| char::from_digit(*v as u32, 36).unwrap())
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

fn serialize(
    dot: &CayleyTable,
    star: Option<&CayleyTable>,
    perm: &[usize],
    inv: &[usize],
    out: &mut Vec<u8>,
) {
    let n = dot.n();
    out.clear();
    out.push(n as u8);
    out.push(star.is_some() as u8);
    for t in std::iter::once(dot).chain(star) {
        for i in 0..n {
            for j in 0..n {
                out.push(perm[t.op(inv[i], inv[j])] as u8);
            }
        }
    }
}

pub fn canonical_form(dot: &CayleyTable, star: Option<&CayleyTable>) -> Result<CanonicalForm> {
    let n = dot.n();
    if n > MAX_CANON_N {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            bound: MAX_CANON_N,
        });
    }
    if let Some(s) = star {
        if s.n() != n {
            return Err(Error::MismatchedCarrier(n, s.n()));
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut inv = perm.clone();
    let mut best = Vec::new();
    serialize(dot, star, &perm, &inv, &mut best);
    let mut buf = Vec::new();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            perm.swap(j, i);
            inv[perm[j]] = j;
            inv[perm[i]] = i;
            serialize(dot, star, &perm, &inv, &mut buf);
            if buf < best {
                std::mem::swap(&mut buf, &mut best);
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalForm(best))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_and_right_zero_differ() {
        let l = canonical_form(&CayleyTable::left_zero(2), None).unwrap();
        let r = canonical_form(&CayleyTable::right_zero(2), None).unwrap();
        assert_ne!(l, r);
    }

    #[test]
    fn relabeling_invariant() {
        let t = CayleyTable::from_rows(&[vec![0, 0, 0], vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
        let c = canonical_form(&t, None).unwrap();
        assert_eq!(canonical_form(&t.relabel(&[1, 2, 0]), None).unwrap(), c);
        assert_eq!(canonical_form(&t, None).unwrap(), c);
    }

    #[test]
    fn too_large() {
        let t = CayleyTable::right_zero(9);
        assert!(matches!(
            canonical_form(&t, None),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn text_form() {
        let c = canonical_form(
            &CayleyTable::right_zero(2),
            Some(&CayleyTable::left_zero(2)),
        )
        .unwrap();
        assert_eq!(c.to_text(), "0101/0011");
    }
}
