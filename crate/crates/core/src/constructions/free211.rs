//! The free object of the law `x·y·z = y·z`.

use super::word::letter_names;
use crate::error::{Error, Result};
use crate::freeobjects::DEFAULT_SIZE_CAP;
use crate::pentagon::make_apa;
use crate::table::CayleyTable;

/// Generators `0..m` followed by the products `x·y` at `m + x*m + y`.
/// Multiplication keeps the last two letters of the concatenation.
pub fn free_211_semigroup(m: usize) -> Result<CayleyTable> {
    if m == 0 {
        return Err(Error::InvalidArgument("need at least one generator".into()));
    }
    let size = m.saturating_add(m.saturating_mul(m));
    if size > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCap {
            size,
            cap: DEFAULT_SIZE_CAP,
        });
    }
    let last_two = |e: usize| -> (Option<usize>, usize) {
        if e < m {
            (None, e)
        } else {
            (Some((e - m) / m), (e - m) % m)
        }
    };
    let t = CayleyTable::from_fn(size, |x, y| {
        let (_, bx) = last_two(x);
        match last_two(y) {
            (Some(a), b) => m + a * m + b,
            (None, b) => m + bx * m + b,
        }
    });
    let names = letter_names(m);
    let mut labels = names.clone();
    for a in &names {
        for b in &names {
            labels.push(format!("{a}·{b}"));
        }
    }
    let t = t.with_labels(labels)?;
    let apa = make_apa(t.clone(), t.clone())?;
    if let Some((what, w)) = apa.status().first_failure() {
        return Err(Error::InternalInconsistency(format!(
            "(S,·,·) fails {what} at {w:?}"
        )));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_generators() {
        let t = free_211_semigroup(2).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(t.idempotents(), vec![2, 3, 4, 5]);
        assert_eq!(t.label(3), "a·b");
    }
}
