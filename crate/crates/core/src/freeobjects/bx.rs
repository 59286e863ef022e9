use std::fmt;

use super::{check_cap, verify_laws, FreeObject, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::table::CayleyTable;
use crate::term::laws;

/// An element `(a,b)` of `B(X_n)`, `a ∈ {0,…,n}`, `b ∈ {1,…,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BxElement {
    pub first: usize,
    pub second: usize,
}

impl fmt::Display for BxElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

pub fn bx_product(u: BxElement, v: BxElement) -> BxElement {
    if v.first != 0 {
        v
    } else {
        BxElement {
            first: u.second,
            second: v.second,
        }
    }
}

pub fn build_bx(n: usize) -> Result<FreeObject<BxElement>> {
    build_bx_capped(n, DEFAULT_SIZE_CAP)
}

/// `B(X_n) = ({0} ∪ [n]) × [n]`, elements in lexicographic order.
pub fn build_bx_capped(n: usize, cap: usize) -> Result<FreeObject<BxElement>> {
    if n == 0 {
        return Err(Error::InvalidArgument("B(X_n) needs n ≥ 1".into()));
    }
    check_cap((n + 1).saturating_mul(n), cap)?;
    let elements: Vec<BxElement> = (0..=n)
        .flat_map(|first| (1..=n).map(move |second| BxElement { first, second }))
        .collect();
    let index = |e: BxElement| e.first * n + e.second - 1;
    let table = CayleyTable::from_fn(elements.len(), |x, y| {
        index(bx_product(elements[x], elements[y]))
    })
    .with_labels(elements.iter().map(|e| e.to_string()).collect())?;
    verify_laws(&format!("B(X_{n})"), &table, &[("x∗y∗z = y∗z", laws::q(1))])?;
    Ok(FreeObject { table, elements })
}
