use std::fmt;

use super::{check_cap, verify_laws, FreeObject, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::table::CayleyTable;
use crate::term::laws;

/// An element `(a_1,…,a_n,l)` of `A_k(n)`, pointer stored 0-based.
///
/// A T-element has every coordinate 0 except `coords[pointer] = k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AkElement {
    pub coords: Vec<usize>,
    pub pointer: usize,
}

impl AkElement {
    pub fn is_t(&self, k: usize) -> bool {
        self.coords[self.pointer] == k
    }

    /// The generator `(0,…,0,m)`.
    pub fn generator(n: usize, m: usize) -> Self {
        AkElement {
            coords: vec![0; n],
            pointer: m,
        }
    }

    pub fn t_element(n: usize, k: usize, m: usize) -> Self {
        let mut coords = vec![0; n];
        coords[m] = k;
        AkElement { coords, pointer: m }
    }
}

impl fmt::Display for AkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.coords {
            write!(f, "{c},")?;
        }
        write!(f, "{})", self.pointer + 1)
    }
}

/// Product in `A_k(n)`: coordinates add mod `k` (a T-flag counts as 0),
/// with an extra 1 at the left pointer; an all-zero sum becomes the
/// T-element at the right pointer.
pub fn ak_product(k: usize, a: &AkElement, b: &AkElement) -> AkElement {
    let n = a.coords.len();
    let mut s: Vec<usize> = (0..n)
        .map(|i| (a.coords[i] % k + b.coords[i] % k) % k)
        .collect();
    s[a.pointer] = (s[a.pointer] + 1) % k;
    if s.iter().any(|&v| v != 0) {
        AkElement {
            coords: s,
            pointer: b.pointer,
        }
    } else {
        AkElement::t_element(n, k, b.pointer)
    }
}

pub fn build_ak(k: usize, n: usize) -> Result<FreeObject<AkElement>> {
    build_ak_capped(k, n, DEFAULT_SIZE_CAP)
}

/// `A_k(n)`: plain elements in lexicographic `(coords, pointer)` order,
/// then the T-elements by pointer.
pub fn build_ak_capped(k: usize, n: usize, cap: usize) -> Result<FreeObject<AkElement>> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "A_k(n) needs k, n ≥ 1, got k={k}, n={n}"
        )));
    }
    let plain = u32::try_from(n)
        .ok()
        .and_then(|e| k.checked_pow(e))
        .and_then(|p| p.checked_mul(n))
        .ok_or(Error::SizeCap {
            size: usize::MAX,
            cap,
        })?;
    check_cap(plain + n, cap)?;

    let mut elements = Vec::with_capacity(plain + n);
    let mut coords = vec![0usize; n];
    loop {
        for l in 0..n {
            elements.push(AkElement {
                coords: coords.clone(),
                pointer: l,
            });
        }
        let mut i = n;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < k {
                break;
            }
            coords[i] = 0;
        }
        if coords.iter().all(|&c| c == 0) {
            break;
        }
    }
    elements.extend((0..n).map(|m| AkElement::t_element(n, k, m)));

    let index = |e: &AkElement| -> usize {
        if e.is_t(k) {
            plain + e.pointer
        } else {
            e.coords.iter().fold(0, |acc, &c| acc * k + c) * n + e.pointer
        }
    };
    debug_assert!(elements.iter().enumerate().all(|(i, e)| index(e) == i));
    let table = CayleyTable::from_fn(elements.len(), |x, y| {
        index(&ak_product(k, &elements[x], &elements[y]))
    })
    .with_labels(elements.iter().map(|e| e.to_string()).collect())?;
    verify_laws(
        &format!("A_{k}({n})"),
        &table,
        &[
            ("right-normality", laws::right_normal()),
            ("P_k", laws::p(k)),
        ],
    )?;
    Ok(FreeObject { table, elements })
}

/// Idempotents of `A_k(n)`, found by scanning the diagonal and
/// independently as the `k`-th powers of the generators.
pub fn ak_idempotents(k: usize, n: usize) -> Result<Vec<usize>> {
    let a = build_ak(k, n)?;
    let scanned = a.table.idempotents();
    let mut powers: Vec<usize> = (0..n)
        .map(|m| {
            let g = a
                .index_of(&AkElement::generator(n, m))
                .expect("generator present");
            a.table.pow(g, k)
        })
        .collect();
    powers.sort_unstable();
    powers.dedup();
    if powers != scanned {
        return Err(Error::InternalInconsistency(format!(
            "idempotents {scanned:?} differ from generator powers {powers:?}"
        )));
    }
    Ok(scanned)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_order_and_labels() {
        let a = build_ak(2, 2).unwrap();
        let labels: Vec<String> = a.elements.iter().map(|e| e.to_string()).collect();
        assert_eq!(
            labels,
            [
                "(0,0,1)", "(0,0,2)", "(0,1,1)", "(0,1,2)", "(1,0,1)", "(1,0,2)", "(1,1,1)",
                "(1,1,2)", "(2,0,1)", "(0,2,2)"
            ]
        );
    }

    #[test]
    fn k_one_collapses_to_t_elements() {
        let a = build_ak(1, 2).unwrap();
        assert_eq!(a.n(), 4);
        for x in 0..4 {
            for y in 0..4 {
                assert!(a.elements[a.table.op(x, y)].is_t(1));
            }
        }
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(
            build_ak_capped(2, 3, 20),
            Err(Error::SizeCap { size: 27, cap: 20 })
        );
    }

    #[test]
    fn idempotents_two_ways() {
        let a = build_ak(2, 1).unwrap();
        let e = ak_idempotents(2, 1).unwrap();
        assert_eq!(
            e.iter().map(|&i| a.table.label(i)).collect::<Vec<_>>(),
            ["(1,1)"]
        );
    }
}
