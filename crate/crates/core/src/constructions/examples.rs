//! Named small APAs.

use super::presentation::{presented_semigroup, two_generator_seven};
use super::word::letter_names;
use crate::error::{Error, Result};
use crate::pentagon::{classify, make_apa, translations, PentagonAlgebra};
use crate::product::rectangular_band;
use crate::profile::structural_profile;
use crate::table::CayleyTable;

fn abc(t: CayleyTable) -> CayleyTable {
    let n = t.n();
    t.with_labels(letter_names(n)).expect("distinct letters")
}

fn ex_left_dot() -> CayleyTable {
    abc(CayleyTable::from_rows(&[vec![0, 0, 0], vec![1, 1, 1], vec![0, 0, 0]]).expect("valid rows"))
}

fn validated(p: PentagonAlgebra, what: &str) -> Result<PentagonAlgebra> {
    match p.status().first_failure() {
        None => Ok(p),
        Some((law, w)) => Err(Error::ValidationFailed(format!(
            "{what}: {law} fails at {w:?}"
        ))),
    }
}

/// Three elements `a, b, c`; the dot has `a, b` as left annihilators.
pub fn ex_left_star() -> Result<PentagonAlgebra> {
    let star = abc(CayleyTable::from_rows(&[
        vec![0, 1, 0],
        vec![1, 0, 1],
        vec![0, 1, 0],
    ])?);
    validated(make_apa(ex_left_dot(), star)?, "ex_left_star")
}

/// Same dot as [`ex_left_star`] with the complementary star.
pub fn ex_left_starprime() -> Result<PentagonAlgebra> {
    let star = abc(CayleyTable::from_rows(&[
        vec![1, 0, 1],
        vec![0, 1, 0],
        vec![1, 0, 1],
    ])?);
    validated(make_apa(ex_left_dot(), star)?, "ex_left_starprime")
}

/// `x∗y = γ(y)` for an idempotent endomorphism `γ` of the dot.
pub fn gamma(dot: &CayleyTable, g: &[u32]) -> Result<PentagonAlgebra> {
    let n = dot.n();
    if g.len() != n || g.iter().any(|&v| v as usize >= n) {
        return Err(Error::GammaNotIdempotentEndomorphism(format!(
            "{g:?} is not a map on {n} elements"
        )));
    }
    if let Some(x) = (0..n).find(|&x| g[g[x] as usize] != g[x]) {
        return Err(Error::GammaNotIdempotentEndomorphism(format!(
            "γ(γ({x})) ≠ γ({x})"
        )));
    }
    if !dot.is_endomorphism(g) {
        return Err(Error::GammaNotIdempotentEndomorphism(format!(
            "{g:?} does not preserve the dot"
        )));
    }
    let star = CayleyTable::from_fn(n, |_, y| g[y] as usize);
    let star = match dot.labels() {
        Some(l) => star.with_labels(l.to_vec())?,
        None => star,
    };
    validated(make_apa(dot.clone(), star)?, "gamma")
}

fn require_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("needs n ≥ 2, got {n}")));
    }
    Ok(())
}

/// On `{0..n−1}`: `x·y = n−2` if `y = n−2`, `x` if `x = y`, else `0`;
/// `x∗y = n−1` if `y = n−1`, else `0`. Both LTD and RTD.
pub fn prop_both(n: usize) -> Result<PentagonAlgebra> {
    require_n(n)?;
    let dot = CayleyTable::from_fn(n, |x, y| {
        if y == n - 2 {
            n - 2
        } else if x == y {
            x
        } else {
            0
        }
    });
    let star = CayleyTable::from_fn(n, |_, y| if y == n - 1 { n - 1 } else { 0 });
    let p = validated(make_apa(dot, star)?, "prop_both")?;
    let c = classify(&p, 2)?;
    if !(c.is_ltd && c.is_rtd) {
        return Err(Error::ValidationFailed(format!(
            "prop_both({n}) is {}",
            c.cell()
        )));
    }
    Ok(p)
}

/// On `{0..n}`: `x·y = x` unless `x = n ≠ y`, where it is `0`;
/// `x∗y = 1` exactly when one of `x, y` is `1` and the other is not.
pub fn left_triv(n: usize) -> Result<PentagonAlgebra> {
    require_n(n)?;
    let size = n + 1;
    let dot = CayleyTable::from_fn(size, |x, y| if x != n || y == n { x } else { 0 });
    let star = CayleyTable::from_fn(size, |x, y| usize::from((x == 1) != (y == 1)));
    let p = validated(make_apa(dot, star)?, "left_triv")?;
    if !classify(&p, 2)?.is_ltd {
        return Err(Error::ValidationFailed(format!(
            "left_triv({n}) is not LTD"
        )));
    }
    let sp = structural_profile(p.dot());
    if !sp.left_annihilators.contains(&0) || sp.right_annihilators.contains(&0) {
        return Err(Error::ValidationFailed(format!(
            "left_triv({n}): 0 is not a left-but-not-right annihilator"
        )));
    }
    Ok(p)
}

/// Which formula to use in the second case of the pair construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairStar {
    /// `(x₁∗y₁, x₁∗a³)` when `y₁ ≠ a = y₂`.
    Repaired,
    /// `(x₁∗y₁, x₁∗y₁²∗a)` when `y₁ ≠ a = y₂`, which breaks the first
    /// pentagon law.
    AsPrinted,
}

/// The seven-element semigroup `S` on `a, b`.
pub fn seven_element_semigroup() -> Result<CayleyTable> {
    Ok(presented_semigroup(&two_generator_seven(), 4)?.table)
}

/// `S × S` with the rectangular band as dot and the case-split star,
/// without validation.
pub fn pair_algebra(variant: PairStar) -> Result<PentagonAlgebra> {
    let s = seven_element_semigroup()?;
    let n = s.n();
    let idx = |name: &str| {
        s.index_of(name)
            .ok_or_else(|| Error::InternalInconsistency(format!("{name} missing from S")))
    };
    let a = idx("a")?;
    let a3 = idx("a^3")?;
    let m = |x: usize, y: usize| s.op(x, y);
    let sq = |x: usize| m(x, x);
    let star = CayleyTable::from_fn(n * n, |x, y| {
        let (x1, x2, y1, y2) = (x / n, x % n, y / n, y % n);
        let (c1, c2) = match (y1 == a, y2 == a) {
            (true, true) => (m(m(x1, sq(x2)), a), m(x1, a3)),
            (false, true) => match variant {
                PairStar::Repaired => (m(x1, y1), m(x1, a3)),
                PairStar::AsPrinted => (m(x1, y1), m(m(x1, sq(y1)), a)),
            },
            (true, false) => (m(m(x1, sq(x2)), a), m(x1, y2)),
            (false, false) => (m(x1, y1), m(x1, y2)),
        };
        c1 * n + c2
    });
    let dot = rectangular_band(&s);
    let star = star.with_labels(dot.labels().expect("pair labels").to_vec())?;
    make_apa(dot, star)
}

/// The 49-element APA with band dot that is neither LTD nor RTD.
pub fn build_sec7_counterexample() -> Result<PentagonAlgebra> {
    let p = pair_algebra(PairStar::Repaired)?;
    if let Some((law, w)) = p.status().first_failure() {
        return Err(Error::InternalInconsistency(format!(
            "{law} fails at {w:?}"
        )));
    }
    let c = classify(&p, 2)?;
    if c.is_ltd || c.is_rtd {
        return Err(Error::InternalInconsistency(format!(
            "classified {}",
            c.cell()
        )));
    }
    translations(&p)?;
    Ok(p)
}

/// Example names accepted by [`build_named_example`].
pub const EXAMPLE_NAMES: [&str; 6] = [
    "ex_left_star",
    "ex_left_starprime",
    "prop_both",
    "left_triv",
    "pair49",
    "pair49_printed",
];

/// Builds a named example; `n` is used by the parametrized families.
pub fn build_named_example(name: &str, n: Option<usize>) -> Result<PentagonAlgebra> {
    match name {
        "ex_left_star" => ex_left_star(),
        "ex_left_starprime" => ex_left_starprime(),
        "prop_both" => prop_both(n.unwrap_or(5)),
        "left_triv" => left_triv(n.unwrap_or(3)),
        "pair49" => build_sec7_counterexample(),
        "pair49_printed" => pair_algebra(PairStar::AsPrinted),
        _ => Err(Error::InvalidArgument(format!(
            "unknown example {name}; expected one of {}",
            EXAMPLE_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ex_left() {
        let p = ex_left_star().unwrap();
        assert!(classify(&p, 4).unwrap().is_ltd);
        assert_eq!(structural_profile(p.dot()).left_annihilators, vec![0, 1]);
        assert!(ex_left_starprime().unwrap().is_apa());
    }

    #[test]
    fn gamma_checks() {
        let dot = CayleyTable::from_fn(2, |x, y| x.min(y));
        assert!(gamma(&dot, &[0, 0]).is_ok());
        assert!(gamma(&dot, &[0, 1]).is_ok());
        assert!(matches!(
            gamma(&dot, &[1, 0]),
            Err(Error::GammaNotIdempotentEndomorphism(_))
        ));
    }

    #[test]
    fn families() {
        for n in 2..=6 {
            let c = classify(&prop_both(n).unwrap(), 2).unwrap();
            assert!(c.determined_by.is_some());
            left_triv(n).unwrap();
        }
        assert!(prop_both(1).is_err());
        let t = translations(&left_triv(3).unwrap()).unwrap();
        assert_eq!(t.theta(2), t.theta(0));
        assert_eq!(t.compose(0, 0), t.compose(1, 1));
    }

    #[test]
    fn pair_values() {
        let p = build_sec7_counterexample().unwrap();
        assert_eq!(p.n(), 49);
        let e = |s: &str| p.dot().index_of(s).unwrap();
        let aa = e("(a,a)");
        assert_eq!(p.label(p.star().op(e("(a,b)"), aa)), "(aba,a^2)");
        assert_eq!(p.label(p.star().op(aa, aa)), "(a^2,a^2)");
        assert_eq!(p.label(p.star().op(e("(b,b)"), aa)), "(ba,a^3)");
    }

    #[test]
    fn printed_formula_fails_first_law() {
        let p = pair_algebra(PairStar::AsPrinted).unwrap();
        let (law, _) = p.status().first_failure().unwrap();
        assert_eq!(law, "(x∗y)·((x·y)∗z) = x∗(y·z)");
    }
}
