//! The `⊗` constructions that turn a star semigroup on generators into an
//! APA on a carrier generated by them.

use super::bounded::BoundedFreeSemigroup;
use super::freeband::FreeBand;
use super::word::{words_up_to, Word};
use crate::error::{Error, Result};
use crate::pentagon::{make_apa, PentagonAlgebra};
use crate::table::CayleyTable;
use crate::term::{check_identity, check_single, laws, Identity, Op, Term};

/// Longest words used by the representative-independence audit.
pub const AUDIT_WORD_LENGTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorMode {
    /// `x⊗y = ∏_j (x₁∗y_j)`.
    Ltd,
    /// `x⊗y = (x_last∗y₁)·∏_{j≥2} (y_{j−1}∗y_j)`.
    Rtd,
}

/// A semigroup generated by the elements of the star table, with a fixed
/// word for every element. Generator `g` is element `g`.
pub trait Carrier {
    fn generator_count(&self) -> usize;
    fn size(&self) -> usize;
    fn word(&self, x: usize) -> &Word;
    /// The element a word evaluates to, if it is in the carrier.
    fn element_of(&self, letters: &[usize]) -> Option<usize>;
    /// `x·y`, or `None` when the carrier cannot represent it.
    fn product(&self, x: usize, y: usize) -> Option<usize>;
    fn labels(&self) -> Vec<String>;
}

impl Carrier for FreeBand {
    fn generator_count(&self) -> usize {
        self.generators()
    }
    fn size(&self) -> usize {
        FreeBand::size(self)
    }
    fn word(&self, x: usize) -> &Word {
        &self.elements()[x]
    }
    fn element_of(&self, letters: &[usize]) -> Option<usize> {
        Some(FreeBand::element_of(self, letters))
    }
    fn product(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.table().op(x, y))
    }
    fn labels(&self) -> Vec<String> {
        self.table()
            .labels()
            .expect("free band is labeled")
            .to_vec()
    }
}

impl Carrier for BoundedFreeSemigroup {
    fn generator_count(&self) -> usize {
        self.generators()
    }
    fn size(&self) -> usize {
        BoundedFreeSemigroup::size(self)
    }
    fn word(&self, x: usize) -> &Word {
        &self.words()[x]
    }
    fn element_of(&self, letters: &[usize]) -> Option<usize> {
        BoundedFreeSemigroup::element_of(self, letters)
    }
    fn product(&self, x: usize, y: usize) -> Option<usize> {
        self.mul(x, y).ok()
    }
    fn labels(&self) -> Vec<String> {
        BoundedFreeSemigroup::labels(self)
    }
}

/// The letters of `x⊗y` computed from the given decompositions.
pub fn tensor_word(mode: TensorMode, star: &CayleyTable, x: &[usize], y: &[usize]) -> Vec<usize> {
    match mode {
        TensorMode::Ltd => y.iter().map(|&yj| star.op(x[0], yj)).collect(),
        TensorMode::Rtd => {
            let mut out = Vec::with_capacity(y.len());
            out.push(star.op(*x.last().expect("nonempty word"), y[0]));
            out.extend(y.windows(2).map(|p| star.op(p[0], p[1])));
            out
        }
    }
}

fn require_star(mode: TensorMode, star: &CayleyTable) -> Result<()> {
    if let Some(w) = star.is_associative().witness {
        return Err(Error::StarNotInVariety(format!("not associative at {w:?}")));
    }
    let required: Vec<(&str, Identity)> = match mode {
        TensorMode::Ltd => vec![("right-normal", laws::right_normal()), ("P_2", laws::p(2))],
        TensorMode::Rtd => vec![("Q_1", laws::q(1))],
    };
    for (name, law) in required {
        if let Some(w) = check_single(star, &law).witness {
            return Err(Error::StarNotInVariety(format!("{name} fails at {w:?}")));
        }
    }
    Ok(())
}

fn tensor_table<C: Carrier>(mode: TensorMode, star: &CayleyTable, c: &C) -> Result<CayleyTable> {
    if c.generator_count() != star.n() {
        return Err(Error::MismatchedCarrier(star.n(), c.generator_count()));
    }
    require_star(mode, star)?;
    let n = c.size();
    let mut cells = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let w = tensor_word(mode, star, c.word(x).letters(), c.word(y).letters());
            let e = c.element_of(&w).ok_or_else(|| {
                Error::ConstructionInconsistent(format!(
                    "{}⊗{} leaves the carrier",
                    c.word(x),
                    c.word(y)
                ))
            })?;
            cells.push(e);
        }
    }
    let t = CayleyTable::new(n, cells)?.with_labels(c.labels())?;
    audit(mode, star, c, &t)?;
    Ok(t)
}

/// Every short word must give the same `⊗` on both sides as the stored
/// word of the element it represents.
fn audit<C: Carrier>(mode: TensorMode, star: &CayleyTable, c: &C, t: &CayleyTable) -> Result<()> {
    for u in words_up_to(c.generator_count(), AUDIT_WORD_LENGTH) {
        let Some(e) = c.element_of(u.letters()) else {
            continue;
        };
        for w in 0..c.size() {
            let ww = c.word(w).letters();
            let left = c.element_of(&tensor_word(mode, star, u.letters(), ww));
            let right = c.element_of(&tensor_word(mode, star, ww, u.letters()));
            if left != Some(t.op(e, w)) {
                return Err(Error::ConstructionInconsistent(format!(
                    "{u}⊗{} depends on the representative of {}",
                    c.word(w),
                    c.word(e)
                )));
            }
            if right != Some(t.op(w, e)) {
                return Err(Error::ConstructionInconsistent(format!(
                    "{}⊗{u} depends on the representative of {}",
                    c.word(w),
                    c.word(e)
                )));
            }
        }
    }
    Ok(())
}

fn postconditions(mode: TensorMode) -> Vec<(&'static str, Identity)> {
    match mode {
        TensorMode::Ltd => vec![
            ("LTD", laws::ltd()),
            ("left distributivity", laws::left_distributive()),
            ("P_2", laws::p(2)),
            ("right-normal", laws::right_normal()),
        ],
        TensorMode::Rtd => vec![
            ("RTD", laws::rtd()),
            ("false distributivity", laws::false_distributive()),
            ("Q_1", laws::q(1)),
        ],
    }
}

fn build_total(
    mode: TensorMode,
    star: &CayleyTable,
    carrier: &FreeBand,
) -> Result<PentagonAlgebra> {
    let t = tensor_table(mode, star, carrier)?;
    let p = make_apa(carrier.table().clone(), t)?;
    if let Some((what, w)) = p.status().first_failure() {
        return Err(Error::ConstructionInconsistent(format!(
            "{what} fails at {w:?}"
        )));
    }
    for (name, law) in postconditions(mode) {
        if let Some(w) = check_identity(p.dot(), p.star(), &law)?.witness {
            return Err(Error::ConstructionInconsistent(format!(
                "{name} fails at {w:?}"
            )));
        }
    }
    Ok(p)
}

/// `(F, ·, ⊗)` with `⊗` built from a right-normal `P_2` star on the
/// generators of the free band `F`.
pub fn ltd_tensor(star: &CayleyTable, carrier: &FreeBand) -> Result<PentagonAlgebra> {
    build_total(TensorMode::Ltd, star, carrier)
}

/// `(F, ·, ⊗)` with `⊗` built from a `Q_1` star.
pub fn rtd_tensor(star: &CayleyTable, carrier: &FreeBand) -> Result<PentagonAlgebra> {
    build_total(TensorMode::Rtd, star, carrier)
}

/// `⊗` on a bounded free semigroup, where the dot is only partly defined.
#[derive(Debug, Clone)]
pub struct PartialTensor {
    pub mode: TensorMode,
    pub labels: Vec<String>,
    /// `dot[x*n + y]`, `None` past the length bound.
    pub dot: Vec<Option<usize>>,
    pub tensor: CayleyTable,
    /// Law instances with both sides defined, all of which hold.
    pub checked: usize,
    /// Law instances skipped because a dot product overflowed.
    pub skipped: usize,
}

fn eval_partial(
    t: &Term,
    dot: &[Option<usize>],
    star: &CayleyTable,
    env: &[usize],
) -> Option<usize> {
    let n = star.n();
    match t {
        Term::Var(i) => Some(env[*i]),
        Term::App(op, l, r) => {
            let a = eval_partial(l, dot, star, env)?;
            let b = eval_partial(r, dot, star, env)?;
            match op {
                Op::Dot => dot[a * n + b],
                Op::Star => Some(star.op(a, b)),
            }
        }
    }
}

/// `⊗` on words up to the carrier's length bound, with every APA law and
/// the mode's postconditions checked on all in-bounds assignments.
pub fn tensor_partial(
    mode: TensorMode,
    star: &CayleyTable,
    carrier: &BoundedFreeSemigroup,
) -> Result<PartialTensor> {
    let t = tensor_table(mode, star, carrier)?;
    let n = carrier.size();
    let dot: Vec<Option<usize>> = (0..n * n).map(|c| carrier.product(c / n, c % n)).collect();
    let mut identities = vec![
        ("dot associativity", laws::associative(Op::Dot)),
        ("star associativity", laws::associative(Op::Star)),
        ("first pentagon law", laws::first_pentagon()),
        ("second pentagon law", laws::second_pentagon()),
    ];
    identities.extend(postconditions(mode));
    let (mut checked, mut skipped) = (0, 0);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let env = [x, y, z];
                for (name, id) in &identities {
                    if env[id.nvars..].iter().any(|&v| v != 0) {
                        continue;
                    }
                    let l = eval_partial(&id.lhs, &dot, &t, &env);
                    let r = eval_partial(&id.rhs, &dot, &t, &env);
                    match (l, r) {
                        (Some(a), Some(b)) if a != b => {
                            return Err(Error::ConstructionInconsistent(format!(
                                "{name} fails at {:?}",
                                &env[..id.nvars]
                            )))
                        }
                        (Some(_), Some(_)) => checked += 1,
                        _ => skipped += 1,
                    }
                }
            }
        }
    }
    Ok(PartialTensor {
        mode,
        labels: carrier.labels(),
        dot,
        tensor: t,
        checked,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeobjects::{build_ak, build_bx, build_cn};
    use crate::pentagon::classify;

    fn x_band() -> FreeBand {
        FreeBand::with_names(vec!["x".into(), "x²".into()]).unwrap()
    }

    #[test]
    fn c1_table() {
        let c1 = build_cn(1).unwrap().table;
        let p = ltd_tensor(&c1, &x_band()).unwrap();
        let rx = [1, 0, 3, 2, 5, 4];
        let rx2 = [0, 1, 2, 3, 4, 5];
        for (x, row) in [rx, rx2, rx, rx2, rx, rx2].iter().enumerate() {
            let got: Vec<usize> = (0..6).map(|y| p.star().op(x, y)).collect();
            assert_eq!(&got, row, "row {}", p.label(x));
        }
        assert!(classify(&p, 4).unwrap().is_ltd);
    }

    #[test]
    fn bx_rtd_is_constant() {
        let b1 = build_bx(1).unwrap().table;
        let p = rtd_tensor(&b1, &x_band()).unwrap();
        assert!(p.star().cells().all(|v| v == 1));
        let c = classify(&p, 4).unwrap();
        assert!(c.is_rtd && c.tprofile.right_zero);
    }

    #[test]
    fn wrong_variety() {
        let b1 = build_bx(1).unwrap().table;
        // the star of B(X_1) is constant, hence right-normal and P_2
        assert!(ltd_tensor(&b1, &x_band()).is_ok());
        let c1 = build_cn(1).unwrap().table;
        assert!(matches!(
            rtd_tensor(&c1, &x_band()),
            Err(Error::StarNotInVariety(_))
        ));
    }

    #[test]
    fn bounded_rtd() {
        let b1 = build_bx(1).unwrap().table;
        let f = super::super::bounded::free_semigroup_bounded(2, 2, 4096).unwrap();
        let r = tensor_partial(TensorMode::Rtd, &b1, &f).unwrap();
        assert!(r.checked > 0 && r.skipped > 0);
    }

    #[test]
    fn ak_three_generators() {
        let a = build_ak(2, 1).unwrap().table;
        assert_eq!(a.n(), 3);
        let fb = FreeBand::new(3).unwrap();
        let p = ltd_tensor(&a, &fb).unwrap();
        assert_eq!(p.n(), 159);
    }
}
