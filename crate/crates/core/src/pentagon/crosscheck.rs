//! Implications known to hold on every APA, each checked by evaluating
//! its hypothesis and, when that holds, its conclusion.

use serde::Serialize;

use super::classify::{classify, ApaClassification};
use super::relations::derived_relations;
use super::translations::{compose, identity_map, is_bijective, translations, TranslationFamily};
use super::{solution_symmetries, PentagonAlgebra};
use crate::error::Result;
use crate::profile::{structural_profile, StructuralProfile};
use crate::table::CheckResult;
use crate::term::{check_identity, check_single, laws};

/// Largest `k` for which the `x∗y^k∗z = x∗z` family is examined.
pub const CROSSCHECK_MAX_K: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub implication: &'static str,
    pub detail: String,
}

/// The four conditions on identity translations, checked independently:
/// some `θ_xθ_x = id`; some `θ_a = id`; every `θ_xθ_x = id`; some `θ_a`
/// bijective. Holds iff all four agree. A failure's witness lists the four
/// truth values as 0/1.
pub fn lm_eq_equivalence(p: &PentagonAlgebra) -> CheckResult {
    let n = p.n();
    let id = identity_map(n);
    let th: Vec<&[u32]> = (0..n).map(|x| p.star().row(x)).collect();
    let sq = |x: usize| compose(th[x], th[x]) == id;
    let flags = [
        (0..n).any(sq),
        (0..n).any(|a| th[a] == id.as_slice()),
        (0..n).all(sq),
        (0..n).any(|a| is_bijective(th[a])),
    ];
    if flags.iter().all(|&f| f == flags[0]) {
        CheckResult::pass()
    } else {
        CheckResult::fail(flags.iter().map(|&f| f as usize).collect())
    }
}

struct Ctx<'a> {
    p: &'a PentagonAlgebra,
    dot: StructuralProfile,
    star: StructuralProfile,
    cls: ApaClassification,
    t: TranslationFamily,
}

fn require(
    out: &mut Vec<Violation>,
    implication: &'static str,
    hypothesis: bool,
    conclusion: bool,
    detail: impl FnOnce() -> String,
) {
    if hypothesis && !conclusion {
        out.push(Violation {
            implication,
            detail: detail(),
        });
    }
}

impl Ctx<'_> {
    fn all_rows_equal(&self) -> bool {
        self.cls.determined_by.is_some()
    }

    fn rows_equal_to(&self, x: usize) -> bool {
        let r = self.p.star().row(x);
        self.p.star().rows().all(|row| row == r)
    }
}

/// Returns every implication whose hypothesis holds on `p` but whose
/// conclusion fails. Empty on a correct implementation.
pub fn theorem_crosscheck(p: &PentagonAlgebra) -> Result<Vec<Violation>> {
    p.require_apa()?;
    let n = p.n();
    let c = Ctx {
        p,
        dot: structural_profile(p.dot()),
        star: structural_profile(p.star()),
        cls: classify(p, CROSSCHECK_MAX_K)?,
        t: translations(p)?,
    };
    let mut out = Vec::new();
    let (dot, star) = (p.dot(), p.star());
    let tp = c.t.profile.clone();
    let ltd = c.cls.is_ltd;
    let rtd = c.cls.is_rtd;
    let right_normal = c.star.right_normal;
    let p2 = c.cls.star_varieties.satisfies_p(2);
    let q1 = c.cls.star_varieties.q1;

    // dot monoid with identity 1: star determined by θ_1
    if let Some(one) = c.dot.identity() {
        let ok = c.rows_equal_to(one);
        require(
            &mut out,
            "dot monoid implies star determined by θ of the identity",
            true,
            ok,
            || format!("identity {one}"),
        );
    }
    let band = c.star.band;
    let rz = c.star.right_zero;
    require(
        &mut out,
        "star band implies star right-zero",
        band,
        rz,
        String::new,
    );

    let ok = tp.in_end_dot && tp.commutative;
    require(
        &mut out,
        "LTD implies T(S) ⊆ End(dot) and T(S) commutative",
        ltd,
        ok,
        || format!("{tp:?}"),
    );
    let ok = ltd && tp.commutative;
    require(
        &mut out,
        "T(S) cancellative implies LTD and T(S) commutative",
        tp.cancellative,
        ok,
        String::new,
    );
    let r = check_single(star, &laws::r()).holds;
    let ok = tp.elementary_abelian_2_group && r;
    require(
        &mut out,
        "T(S) a monoid implies elementary abelian 2-group and x∗x∗z = z",
        tp.contains_identity,
        ok,
        || format!("{tp:?}, R law {r}"),
    );
    let some_bijective = c.t.thetas.iter().any(|f| is_bijective(f));
    require(
        &mut out,
        "some θ_a bijective implies LTD",
        some_bijective,
        ltd,
        String::new,
    );
    let lm = lm_eq_equivalence(p);
    require(
        &mut out,
        "identity-translation conditions are equivalent",
        true,
        lm.holds,
        || format!("{lm}"),
    );

    let has_right_id = !c.dot.right_identities.is_empty();
    require(
        &mut out,
        "dot right identity implies T(S) commutative",
        has_right_id,
        tp.commutative,
        String::new,
    );
    require(
        &mut out,
        "dot right identity implies LTD",
        has_right_id,
        ltd,
        String::new,
    );
    let has_ann_l = !c.dot.left_annihilators.is_empty();
    require(
        &mut out,
        "dot left annihilator implies LTD",
        has_ann_l,
        ltd,
        || format!("Ann_l = {:?}", c.dot.left_annihilators),
    );
    if let Some(&zero) = c.dot.annihilators().first() {
        let ok = c.rows_equal_to(zero) && dot.is_endomorphism(star.row(zero));
        require(
            &mut out,
            "dot annihilator 0 implies star determined by θ_0 ∈ End(dot)",
            true,
            ok,
            || format!("annihilator {zero}"),
        );
    }
    let has_ann_r = !c.dot.right_annihilators.is_empty();
    require(
        &mut out,
        "dot right annihilator implies RTD",
        has_ann_r,
        rtd,
        String::new,
    );
    let has_left_id = !c.dot.left_identities.is_empty();
    require(
        &mut out,
        "dot left identity implies RTD",
        has_left_id,
        rtd,
        String::new,
    );

    require(
        &mut out,
        "RTD iff x∗y∗z = y∗z",
        true,
        rtd == q1,
        || format!("RTD {rtd}, Q1 {q1}"),
    );
    require(
        &mut out,
        "RTD iff T(S) right-zero",
        true,
        rtd == tp.right_zero,
        || format!("RTD {rtd}, right-zero {}", tp.right_zero),
    );
    require(
        &mut out,
        "RTD implies every θ_x idempotent",
        rtd,
        tp.all_idempotent,
        String::new,
    );
    let fd = check_identity(dot, star, &laws::false_distributive())?.holds;
    require(
        &mut out,
        "RTD implies x∗(y·z) = (x∗y)·(y∗z)",
        rtd,
        fd,
        String::new,
    );
    require(
        &mut out,
        "LTD iff star right-normal and x∗y∗y∗z = x∗z",
        true,
        ltd == (right_normal && p2),
        || format!("LTD {ltd}, right-normal {right_normal}, P2 {p2}"),
    );
    let det = c.all_rows_equal();
    require(
        &mut out,
        "LTD and RTD iff star determined by some γ",
        true,
        (ltd && rtd) == det,
        || format!("LTD {ltd}, RTD {rtd}, determined {det}"),
    );
    if let Some(g) = &c.cls.determined_by {
        let ok = dot.is_endomorphism(g) && g.iter().all(|&v| g[v as usize] == v);
        require(
            &mut out,
            "γ is an idempotent endomorphism of dot",
            true,
            ok,
            || format!("γ = {g:?}"),
        );
    }
    let semilattice = c.dot.semilattice;
    require(
        &mut out,
        "dot semilattice implies star determined by some γ",
        semilattice,
        det,
        String::new,
    );

    let clifford = c.dot.clifford;
    let e_dot = c.dot.idempotents.clone();
    let e_invariant = (0..n).all(|x| e_dot.iter().all(|&e| star.op(x, e) == star.op(x, e_dot[0])));
    let e_fixed = (0..n).all(|x| e_dot.iter().all(|&e| star.op(x, e) == e));
    let ok = e_dot.first().is_none_or(|&e| c.rows_equal_to(e));
    require(
        &mut out,
        "Clifford dot with E-invariant star implies star determined by θ_e",
        clifford && e_invariant,
        ok,
        String::new,
    );
    require(
        &mut out,
        "Clifford dot with E-fixed star implies RTD",
        clifford && e_fixed,
        rtd,
        String::new,
    );

    for &e in &e_dot {
        for x in 0..n {
            let v = star.op(dot.op(x, e), e);
            if dot.op(v, v) != v {
                require(
                    &mut out,
                    "(x·e)∗e is a dot idempotent",
                    true,
                    false,
                    || format!("x = {x}, e = {e}"),
                );
            }
        }
    }
    let mut both: Vec<usize> = e_dot
        .iter()
        .copied()
        .filter(|&e| star.op(e, e) == e)
        .collect();
    let mut squares: Vec<usize> = e_dot.iter().map(|&e| star.op(e, e)).collect();
    both.sort_unstable();
    squares.sort_unstable();
    squares.dedup();
    require(
        &mut out,
        "E(dot) ∩ E(star) = {e∗e : e ∈ E(dot)}",
        true,
        both == squares,
        || format!("{both:?} vs {squares:?}"),
    );

    let star_group = c.star.group;
    let two_abelian = c.star.commutative
        && (0..n).all(|x| {
            let sq = star.op(x, x);
            (0..n).all(|y| star.op(sq, y) == y)
        });
    let ok = c.dot.left_zero && two_abelian;
    require(
        &mut out,
        "star group implies dot left-zero and star elementary 2-abelian",
        star_group,
        ok,
        String::new,
    );

    let bij = p.solution_is_bijective();
    let ok = ltd && c.dot.left_group;
    require(
        &mut out,
        "bijective solution implies LTD and dot left group",
        bij,
        ok,
        String::new,
    );

    if dot.same_operation(star) {
        let ok =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| dot.op(dot.op(x, y), z) == dot.op(y, z))));
        require(
            &mut out,
            "star equal to dot implies x·y·z = y·z",
            true,
            ok,
            String::new,
        );
    }

    let rel = derived_relations(p)?;
    for (i, r) in rel.cubic.iter().enumerate() {
        let names = [
            "θ_e³ = θ_e for dot idempotents e",
            "θ_eθ_{e·x} = θ_{e·x}² for dot idempotents e",
            "θ_{e·x}θ_e = θ_e² for dot idempotents e",
            "θ_e = θ_{e·x·e} for dot idempotents e",
        ];
        require(&mut out, names[i], true, r.holds, || format!("{r}"));
    }
    if rel.theta_xyx.holds {
        let sq = rel.squares_equal.holds;
        require(
            &mut out,
            "if θ_x = θ_{x·y·x}: LTD iff all θ_x² equal",
            true,
            ltd == sq,
            || format!("LTD {ltd}, squares equal {sq}"),
        );
        let xx = rel.theta_xx_eq_theta_yx.holds;
        require(
            &mut out,
            "if θ_x = θ_{x·y·x}: RTD iff θ_{x·x} = θ_{y·x}",
            true,
            rtd == xx,
            || format!("RTD {rtd}, θ_xx = θ_yx {xx}"),
        );
    }

    let sym = solution_symmetries(p);
    let comm = sym.commutative.holds;
    let ok = ltd && c.dot.left_normal;
    require(
        &mut out,
        "commutative solution iff LTD and dot left-normal",
        true,
        comm == ok,
        || {
            format!(
                "commutative {comm}, LTD {ltd}, left-normal {}",
                c.dot.left_normal
            )
        },
    );
    let cocomm = sym.cocommutative.holds;
    let absorbs =
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| dot.op(x, y) == dot.op(x, star.op(z, y)))));
    let ok = absorbs && tp.commutative;
    require(
        &mut out,
        "cocommutative solution iff x·y = x·θ_z(y) and T(S) commutative",
        true,
        cocomm == ok,
        || {
            format!(
                "cocommutative {cocomm}, absorbs {absorbs}, T commutative {}",
                tp.commutative
            )
        },
    );
    require(
        &mut out,
        "cocommutative solution implies star right-normal",
        cocomm,
        right_normal,
        String::new,
    );
    require(
        &mut out,
        "QYBE solution implies RTD",
        sym.qybe.holds,
        rtd,
        String::new,
    );

    for k in 1..=CROSSCHECK_MAX_K {
        if right_normal && c.cls.star_varieties.satisfies_p(k) {
            let ok = tp.commutative && tp.cancellative;
            require(
                &mut out,
                "star in V_Pk implies T(S) commutative and cancellative",
                true,
                ok,
                || format!("k = {k}"),
            );
            let pc = check_single(star, &laws::power_collapse(k)).holds;
            require(
                &mut out,
                "star in V_Pk implies x^k∗z = z^(k+1)",
                true,
                pc,
                || format!("k = {k}"),
            );
        }
    }
    require(
        &mut out,
        "T(S) commutative iff star right-normal",
        true,
        tp.commutative == right_normal,
        String::new,
    );

    Ok(out)
}
