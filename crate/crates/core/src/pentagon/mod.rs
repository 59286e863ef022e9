//! Pentagon algebras `(S,·,∗)`, their validation, and the structure of
//! their left star-translations.

mod classify;
mod crosscheck;
mod relations;
mod translations;

pub use classify::{classify, ApaClassification, StarVarieties};
pub use crosscheck::{lm_eq_equivalence, theorem_crosscheck, Violation, CROSSCHECK_MAX_K};
pub use relations::{derived_relations, DerivedRelations};
pub use translations::{translations, TProfile, TranslationFamily};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scan;
use crate::table::{CayleyTable, CheckResult};
use crate::term::{check_identity, laws, Op};

/// Outcome of the four defining checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApaStatus {
    pub dot_associative: CheckResult,
    pub star_associative: CheckResult,
    pub first_pentagon: CheckResult,
    pub second_pentagon: CheckResult,
}

impl ApaStatus {
    pub fn is_apa(&self) -> bool {
        self.dot_associative.holds
            && self.star_associative.holds
            && self.first_pentagon.holds
            && self.second_pentagon.holds
    }

    /// Pentagon solution, star not necessarily associative.
    pub fn is_pentagon_algebra(&self) -> bool {
        self.dot_associative.holds && self.first_pentagon.holds && self.second_pentagon.holds
    }

    /// Name and witness of the first failing check.
    pub fn first_failure(&self) -> Option<(&'static str, &[usize])> {
        [
            ("dot associativity", &self.dot_associative),
            ("star associativity", &self.star_associative),
            ("(x∗y)·((x·y)∗z) = x∗(y·z)", &self.first_pentagon),
            ("(x∗y)∗((x·y)∗z) = y∗z", &self.second_pentagon),
        ]
        .into_iter()
        .find_map(|(name, r)| r.witness.as_deref().map(|w| (name, w)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonAlgebra {
    dot: CayleyTable,
    star: CayleyTable,
    status: ApaStatus,
}

/// Validates `(dot, star)` on all triples and records the result.
pub fn make_apa(dot: CayleyTable, star: CayleyTable) -> Result<PentagonAlgebra> {
    if dot.n() != star.n() {
        return Err(Error::MismatchedCarrier(dot.n(), star.n()));
    }
    let status = ApaStatus {
        dot_associative: dot.is_associative(),
        star_associative: check_identity(&dot, &star, &laws::associative(Op::Star))?,
        first_pentagon: check_identity(&dot, &star, &laws::first_pentagon())?,
        second_pentagon: check_identity(&dot, &star, &laws::second_pentagon())?,
    };
    Ok(PentagonAlgebra { dot, star, status })
}

impl PentagonAlgebra {
    pub fn n(&self) -> usize {
        self.dot.n()
    }

    pub fn dot(&self) -> &CayleyTable {
        &self.dot
    }

    pub fn star(&self) -> &CayleyTable {
        &self.star
    }

    pub fn status(&self) -> &ApaStatus {
        &self.status
    }

    pub fn is_apa(&self) -> bool {
        self.status.is_apa()
    }

    pub fn label(&self, x: usize) -> String {
        self.dot.label(x)
    }

    /// Errors with `NotAnApa` unless all four checks passed.
    pub fn require_apa(&self) -> Result<()> {
        match self.status.first_failure() {
            None => Ok(()),
            Some((what, w)) => Err(Error::NotAnApa(format!("{what} fails at {w:?}"))),
        }
    }

    /// `s(x, y) = (x·y, x∗y)`.
    pub fn s(&self, x: usize, y: usize) -> (usize, usize) {
        (self.dot.op(x, y), self.star.op(x, y))
    }

    /// True iff `s` is a bijection of `S×S`.
    pub fn solution_is_bijective(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = self.s(x, y);
                if std::mem::replace(&mut seen[a * n + b], true) {
                    return false;
                }
            }
        }
        true
    }
}

type Triple = [usize; 3];

/// Applies `s` to positions `i < j` of a triple.
fn s_at(p: &PentagonAlgebra, i: usize, j: usize, mut t: Triple) -> Triple {
    let (a, b) = p.s(t[i], t[j]);
    t[i] = a;
    t[j] = b;
    t
}

/// Applies the listed `s_ij` from first to last.
fn apply_seq(p: &PentagonAlgebra, seq: &[(usize, usize)], t: Triple) -> Triple {
    seq.iter().fold(t, |acc, &(i, j)| s_at(p, i, j, acc))
}

/// Compares two composites given in application order.
fn compare_composites(
    p: &PentagonAlgebra,
    first: &[(usize, usize)],
    second: &[(usize, usize)],
) -> CheckResult {
    CheckResult::from_triple(scan::first_failing_triple(p.n(), |x, y, z| {
        apply_seq(p, first, [x, y, z]) == apply_seq(p, second, [x, y, z])
    }))
}

/// `s23 s13 s12 = s12 s23` on every triple, evaluated on the maps themselves.
pub fn triple_map_check(p: &PentagonAlgebra) -> CheckResult {
    compare_composites(p, &[(0, 1), (0, 2), (1, 2)], &[(1, 2), (0, 1)])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionSymmetries {
    /// `s12 s13 = s13 s12`.
    pub commutative: CheckResult,
    /// `s23 s13 = s13 s23`.
    pub cocommutative: CheckResult,
    /// `s12 s13 s23 = s23 s13 s12`.
    pub qybe: CheckResult,
}

pub fn solution_symmetries(p: &PentagonAlgebra) -> SolutionSymmetries {
    SolutionSymmetries {
        commutative: compare_composites(p, &[(0, 2), (0, 1)], &[(0, 1), (0, 2)]),
        cocommutative: compare_composites(p, &[(0, 2), (1, 2)], &[(1, 2), (0, 2)]),
        qybe: compare_composites(p, &[(1, 2), (0, 2), (0, 1)], &[(0, 1), (0, 2), (1, 2)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex_left() -> PentagonAlgebra {
        let dot = CayleyTable::from_rows(&[vec![0, 0, 0], vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
        let star = CayleyTable::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        make_apa(dot, star).unwrap()
    }

    #[test]
    fn right_zero_star_is_apa() {
        let dot = CayleyTable::cyclic_group(3);
        let p = make_apa(dot, CayleyTable::right_zero(3)).unwrap();
        assert!(p.is_apa());
        assert!(triple_map_check(&p).holds);
        assert!(p.solution_is_bijective());
    }

    #[test]
    fn group_inverse_star_is_not_associative() {
        // x·y = x and x∗y = x⁻¹y over Z3
        let dot = CayleyTable::left_zero(3);
        let star = CayleyTable::from_fn(3, |x, y| (3 - x + y) % 3);
        let p = make_apa(dot, star).unwrap();
        assert!(!p.status().star_associative.holds);
        assert!(p.status().is_pentagon_algebra());
        assert!(triple_map_check(&p).holds);
        assert!(p.require_apa().is_err());
        // over Z2 the same star is x+y, which is associative
        let z2 = make_apa(CayleyTable::left_zero(2), CayleyTable::cyclic_group(2)).unwrap();
        assert!(z2.is_apa());
    }

    #[test]
    fn ex_left_is_apa() {
        let p = ex_left();
        assert!(p.is_apa());
        assert!(triple_map_check(&p).holds);
    }

    #[test]
    fn mismatched() {
        assert!(make_apa(CayleyTable::right_zero(2), CayleyTable::right_zero(3)).is_err());
    }

    #[test]
    fn singleton_symmetries() {
        let p = make_apa(CayleyTable::right_zero(1), CayleyTable::right_zero(1)).unwrap();
        let s = solution_symmetries(&p);
        assert!(s.commutative.holds && s.cocommutative.holds && s.qybe.holds);
    }

    #[test]
    fn left_zero_right_zero_is_commutative_solution() {
        let p = make_apa(CayleyTable::left_zero(2), CayleyTable::right_zero(2)).unwrap();
        assert!(solution_symmetries(&p).commutative.holds);
    }
}
