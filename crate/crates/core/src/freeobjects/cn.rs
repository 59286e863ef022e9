use std::fmt;

use super::{check_cap, verify_laws, FreeObject, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::table::CayleyTable;
use crate::term::laws;

/// An element `(a_1,…,a_n,l)` of `C_n`, pointer stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnElement {
    pub coords: Vec<u8>,
    pub pointer: usize,
}

impl fmt::Display for CnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.coords {
            write!(f, "{c},")?;
        }
        write!(f, "{})", self.pointer + 1)
    }
}

pub fn build_cn(n: usize) -> Result<FreeObject<CnElement>> {
    build_cn_capped(n, DEFAULT_SIZE_CAP)
}

/// `C_n = Z_2^n × [n]` with `(a,l)∗(b,m) = (a + b + e_l, m)`, elements in
/// lexicographic `(coords, pointer)` order.
pub fn build_cn_capped(n: usize, cap: usize) -> Result<FreeObject<CnElement>> {
    if n == 0 {
        return Err(Error::InvalidArgument("C_n needs n ≥ 1".into()));
    }
    let size = u32::try_from(n)
        .ok()
        .and_then(|e| 2usize.checked_pow(e))
        .and_then(|p| p.checked_mul(n))
        .unwrap_or(usize::MAX);
    check_cap(size, cap)?;
    let mut elements = Vec::with_capacity(size);
    for code in 0..size / n {
        let coords = (0..n)
            .map(|i| ((code >> (n - 1 - i)) & 1) as u8)
            .collect::<Vec<_>>();
        for l in 0..n {
            elements.push(CnElement {
                coords: coords.clone(),
                pointer: l,
            });
        }
    }
    // index = code * n + pointer; the product flips bit l of a xor b
    let table = CayleyTable::from_fn(size, |x, y| {
        let (a, l) = (x / n, x % n);
        let (b, m) = (y / n, y % n);
        ((a ^ b ^ (1 << (n - 1 - l))) * n) + m
    })
    .with_labels(elements.iter().map(|e| e.to_string()).collect())?;
    verify_laws(
        &format!("C_{n}"),
        &table,
        &[
            ("x∗x∗z = z", laws::r()),
            ("right-normality", laws::right_normal()),
        ],
    )?;
    Ok(FreeObject { table, elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_table() {
        let c = build_cn(1).unwrap();
        // x = (0,1), x² = (1,1)
        assert_eq!(c.table.labels().unwrap(), ["(0,1)", "(1,1)"]);
        assert!(c
            .table
            .same_operation(&CayleyTable::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap()));
    }

    #[test]
    fn product_matches_definition() {
        let c = build_cn(2).unwrap();
        for (x, a) in c.elements.iter().enumerate() {
            for (y, b) in c.elements.iter().enumerate() {
                let mut s: Vec<u8> = a
                    .coords
                    .iter()
                    .zip(&b.coords)
                    .map(|(p, q)| (p + q) % 2)
                    .collect();
                s[a.pointer] ^= 1;
                let expected = CnElement {
                    coords: s,
                    pointer: b.pointer,
                };
                assert_eq!(c.elements[c.table.op(x, y)], expected);
            }
        }
    }
}
