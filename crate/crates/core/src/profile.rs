//! Structural classification of a single finite operation.

use serde::Serialize;

use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub associative: bool,
    pub commutative: bool,
    pub band: bool,
    pub semilattice: bool,
    pub left_zero: bool,
    pub right_zero: bool,
    pub right_normal: bool,
    pub left_normal: bool,
    pub rectangular_band: bool,
    pub left_group: bool,
    pub group: bool,
    pub clifford: bool,
    pub idempotents: Vec<usize>,
    pub left_identities: Vec<usize>,
    pub right_identities: Vec<usize>,
    /// Elements `l` with `l·x = l` for all `x`.
    pub left_annihilators: Vec<usize>,
    /// Elements `r` with `x·r = r` for all `x`.
    pub right_annihilators: Vec<usize>,
}

impl StructuralProfile {
    pub fn is_monoid(&self) -> bool {
        self.associative && !self.left_identities.is_empty() && !self.right_identities.is_empty()
    }

    /// The two-sided identity, if any.
    pub fn identity(&self) -> Option<usize> {
        self.left_identities
            .iter()
            .copied()
            .find(|e| self.right_identities.contains(e))
    }

    /// Elements that are both left and right annihilators.
    pub fn annihilators(&self) -> Vec<usize> {
        self.left_annihilators
            .iter()
            .copied()
            .filter(|a| self.right_annihilators.contains(a))
            .collect()
    }
}

fn all3(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))))
}

fn all2(n: usize, f: impl Fn(usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| f(x, y)))
}

/// The idempotent power `x^ω` of `x` in a finite semigroup.
pub fn idempotent_power(t: &CayleyTable, x: usize) -> usize {
    let mut p = x;
    for _ in 0..=t.n() {
        if t.op(p, p) == p {
            return p;
        }
        p = t.op(p, x);
    }
    // x^(n!) is idempotent; the sequence above reaches it within n steps
    // of the cycle, so only non-associative tables get here.
    p
}

pub fn structural_profile(t: &CayleyTable) -> StructuralProfile {
    let n = t.n();
    let op = |x, y| t.op(x, y);
    let associative = t.is_associative().holds;
    let commutative = t.is_commutative();
    let idempotents = t.idempotents();
    let band = idempotents.len() == n;
    let left_zero = all2(n, |x, y| op(x, y) == x);
    let right_zero = all2(n, |x, y| op(x, y) == y);
    let right_normal = associative && all3(n, |x, y, z| op(op(x, y), z) == op(op(y, x), z));
    let left_normal = associative && all3(n, |x, y, z| op(op(x, y), z) == op(op(x, z), y));
    let rectangular_band = associative && band && all2(n, |x, y| op(op(x, y), x) == x);
    let left_identities: Vec<usize> = (0..n).filter(|&e| (0..n).all(|x| op(e, x) == x)).collect();
    let right_identities: Vec<usize> = (0..n).filter(|&e| (0..n).all(|x| op(x, e) == x)).collect();
    let left_annihilators = (0..n).filter(|&l| (0..n).all(|x| op(l, x) == l)).collect();
    let right_annihilators = (0..n).filter(|&r| (0..n).all(|x| op(x, r) == r)).collect();

    let right_cancellative = (0..n).all(|a| {
        let mut seen = vec![false; n];
        (0..n).all(|x| !std::mem::replace(&mut seen[op(x, a)], true))
    });
    // In a finite carrier, right cancellation makes x ↦ x·a a bijection, so
    // every x·a = b is solvable; the explicit check keeps the definition visible.
    let right_solvable = all2(n, |a, b| (0..n).any(|x| op(x, a) == b));
    let left_group = associative && right_cancellative && right_solvable;
    let left_solvable = all2(n, |a, b| (0..n).any(|x| op(a, x) == b));
    let group = left_group && left_solvable;

    let central_idempotents = idempotents
        .iter()
        .all(|&e| (0..n).all(|x| op(e, x) == op(x, e)));
    let clifford =
        associative && central_idempotents && (0..n).all(|x| op(x, idempotent_power(t, x)) == x);

    StructuralProfile {
        associative,
        commutative,
        band,
        semilattice: associative && band && commutative,
        left_zero,
        right_zero,
        right_normal,
        left_normal,
        rectangular_band,
        left_group,
        group,
        clifford,
        idempotents,
        left_identities,
        right_identities,
        left_annihilators,
        right_annihilators,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_semilattice() {
        let t = CayleyTable::from_fn(2, |x, y| x.min(y));
        let p = structural_profile(&t);
        assert!(p.semilattice && p.band && p.clifford);
        assert_eq!(p.identity(), Some(1));
        assert_eq!(p.annihilators(), vec![0]);
    }

    #[test]
    fn groups() {
        let p = structural_profile(&CayleyTable::cyclic_group(4));
        assert!(p.group && p.left_group && p.clifford && p.commutative);
        assert!(!p.band);
        let lz = structural_profile(&CayleyTable::left_zero(3));
        assert!(lz.left_group && !lz.group && lz.rectangular_band);
        assert_eq!(lz.left_annihilators, vec![0, 1, 2]);
        assert!(lz.right_annihilators.is_empty());
    }

    #[test]
    fn right_zero_is_not_clifford() {
        let p = structural_profile(&CayleyTable::right_zero(2));
        assert!(p.band && !p.clifford && !p.left_group);
    }

    #[test]
    fn non_associative_flags_are_false() {
        let t = CayleyTable::from_rows(&[vec![0, 0], vec![1, 0]]).unwrap();
        let p = structural_profile(&t);
        assert!(!p.associative && !p.left_group && !p.clifford && !p.semilattice);
    }
}
