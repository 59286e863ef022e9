//! Relations among translations that hold on every APA, and conditional
//! ones reported as flags.

use serde::Serialize;

use super::translations::compose;
use super::PentagonAlgebra;
use crate::error::{Error, Result};
use crate::scan;
use crate::table::CheckResult;
use crate::term::{check_identity, laws};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedRelations {
    /// `θ_x = θ_yθ_xθ_{y·x}`; always holds.
    pub rel: CheckResult,
    /// `θ_{x·y}θ_z = θ_yθ_zθ_xθ_{y·z}`; always holds.
    pub rel4: CheckResult,
    /// `x∗(y·z) = (x∗y)·(y∗z)`.
    pub false_distributive: CheckResult,
    /// `θ_x = θ_{x·y·x}`.
    pub theta_xyx: CheckResult,
    /// `θ_xθ_x = θ_yθ_y`.
    pub squares_equal: CheckResult,
    /// `θ_{x·x} = θ_{y·x}`.
    pub theta_xx_eq_theta_yx: CheckResult,
    /// The four idempotent relations, over `e` idempotent for the dot and all `x`:
    /// `θ_e³ = θ_e`, `θ_eθ_{ex} = θ_{ex}²`, `θ_{ex}θ_e = θ_e²`, `θ_e = θ_{exe}`.
    pub cubic: [CheckResult; 4],
}

pub fn derived_relations(p: &PentagonAlgebra) -> Result<DerivedRelations> {
    p.require_apa()?;
    let n = p.n();
    let d = |x, y| p.dot().op(x, y);
    let th: Vec<&[u32]> = (0..n).map(|x| p.star().row(x)).collect();
    let c = |f: &[u32], g: &[u32]| compose(f, g);

    let rel = CheckResult::from_witness(
        scan::first_failing_pair(n, |x, y| c(th[y], &c(th[x], th[d(y, x)])) == th[x])
            .map(|(x, y)| vec![x, y]),
    );
    let rel4 = CheckResult::from_triple(scan::first_failing_triple(n, |x, y, z| {
        c(th[d(x, y)], th[z]) == c(&c(th[y], th[z]), &c(th[x], th[d(y, z)]))
    }));
    for (name, r) in [
        ("θ_x = θ_yθ_xθ_{y·x}", &rel),
        ("θ_{x·y}θ_z = θ_yθ_zθ_xθ_{y·z}", &rel4),
    ] {
        if let Some(w) = &r.witness {
            return Err(Error::InternalInconsistency(format!(
                "{name} fails at {w:?} on a validated APA"
            )));
        }
    }

    let pair = |f: &(dyn Fn(usize, usize) -> bool + Sync)| {
        CheckResult::from_witness(scan::first_failing_pair(n, f).map(|(x, y)| vec![x, y]))
    };
    let theta_xyx = pair(&|x, y| th[x] == th[d(d(x, y), x)]);
    let squares_equal = pair(&|x, y| c(th[x], th[x]) == c(th[y], th[y]));
    let theta_xx_eq_theta_yx = pair(&|x, y| th[d(x, x)] == th[d(y, x)]);

    let idem = p.dot().idempotents();
    let over_e = |f: &dyn Fn(usize, usize) -> bool| {
        let w = idem
            .iter()
            .find_map(|&e| (0..n).find(|&x| !f(e, x)).map(|x| vec![e, x]));
        CheckResult::from_witness(w)
    };
    let cubic = [
        over_e(&|e, _| c(th[e], &c(th[e], th[e])) == th[e]),
        over_e(&|e, x| c(th[e], th[d(e, x)]) == c(th[d(e, x)], th[d(e, x)])),
        over_e(&|e, x| c(th[d(e, x)], th[e]) == c(th[e], th[e])),
        over_e(&|e, x| th[e] == th[d(d(e, x), e)]),
    ];

    Ok(DerivedRelations {
        rel,
        rel4,
        false_distributive: check_identity(p.dot(), p.star(), &laws::false_distributive())?,
        theta_xyx,
        squares_equal,
        theta_xx_eq_theta_yx,
        cubic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pentagon::make_apa;
    use crate::table::CayleyTable;

    #[test]
    fn hold_on_basic_examples() {
        let dot = CayleyTable::from_rows(&[vec![0, 0, 0], vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
        let star = CayleyTable::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        let r = derived_relations(&make_apa(dot, star).unwrap()).unwrap();
        assert!(r.rel.holds && r.rel4.holds);
        assert!(r.cubic.iter().all(|c| c.holds));
    }

    #[test]
    fn rel_compares_maps_not_values() {
        // θ_y θ_x θ_{y·x} applied to z must equal θ_x(z) for every z
        let p = make_apa(CayleyTable::cyclic_group(2), CayleyTable::right_zero(2)).unwrap();
        assert!(derived_relations(&p).unwrap().rel.holds);
    }
}
