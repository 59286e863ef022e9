use serde::Serialize;

use super::translations::{translations, TProfile};
use super::PentagonAlgebra;
use crate::error::{Error, Result};
use crate::profile::structural_profile;
use crate::table::CheckResult;
use crate::term::{check_identity, check_single, laws};

/// Which star-side laws hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarVarieties {
    /// `(k, holds)` for `x∗y^k∗z = x∗z`, `k = 1..=K`.
    pub p: Vec<(usize, bool)>,
    pub q1: bool,
    pub r: bool,
    pub right_normal: bool,
    pub band: bool,
    pub group: bool,
}

impl StarVarieties {
    pub fn satisfies_p(&self, k: usize) -> bool {
        self.p.iter().any(|&(j, h)| j == k && h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApaClassification {
    pub is_ltd: bool,
    pub is_rtd: bool,
    pub ltd_witness: Option<Vec<usize>>,
    pub rtd_witness: Option<Vec<usize>>,
    /// `γ` with `x∗y = γ(y)` for all `x, y`, when it exists.
    pub determined_by: Option<Vec<u32>>,
    pub star_varieties: StarVarieties,
    pub tprofile: TProfile,
}

impl ApaClassification {
    pub fn cell(&self) -> &'static str {
        match (self.is_ltd, self.is_rtd) {
            (true, true) => "both",
            (true, false) => "ltd-only",
            (false, true) => "rtd-only",
            (false, false) => "neither",
        }
    }
}

/// Rows of the star table, if they are all equal.
pub fn common_row(p: &PentagonAlgebra) -> Option<Vec<u32>> {
    let first = p.star().row(0);
    p.star().rows().all(|r| r == first).then(|| first.to_vec())
}

pub fn classify(p: &PentagonAlgebra, max_k: usize) -> Result<ApaClassification> {
    p.require_apa()?;
    if max_k < 2 {
        return Err(Error::InvalidArgument(format!(
            "K must be at least 2, got {max_k}"
        )));
    }
    let (dot, star) = (p.dot(), p.star());
    let ltd: CheckResult = check_identity(dot, star, &laws::ltd())?;
    let rtd: CheckResult = check_identity(dot, star, &laws::rtd())?;

    let determined_by = common_row(p);
    if let Some(g) = &determined_by {
        let idempotent = g.iter().all(|&v| g[v as usize] == v);
        if !idempotent || !dot.is_endomorphism(g) {
            return Err(Error::InternalInconsistency(format!(
                "star is determined by {g:?}, which is not an idempotent endomorphism of the dot semigroup"
            )));
        }
    }

    let sp = structural_profile(star);
    let star_varieties = StarVarieties {
        p: (1..=max_k)
            .map(|k| (k, check_single(star, &laws::p(k)).holds))
            .collect(),
        q1: check_single(star, &laws::q(1)).holds,
        r: check_single(star, &laws::r()).holds,
        right_normal: sp.right_normal,
        band: sp.band,
        group: sp.group,
    };

    Ok(ApaClassification {
        is_ltd: ltd.holds,
        is_rtd: rtd.holds,
        ltd_witness: ltd.witness,
        rtd_witness: rtd.witness,
        determined_by,
        star_varieties,
        tprofile: translations(p)?.profile,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pentagon::make_apa;
    use crate::table::CayleyTable;

    #[test]
    fn right_zero_star_is_determined_by_identity() {
        let p = make_apa(CayleyTable::left_zero(3), CayleyTable::right_zero(3)).unwrap();
        let c = classify(&p, 4).unwrap();
        assert_eq!(c.determined_by, Some(vec![0, 1, 2]));
        assert!(c.is_ltd && c.is_rtd);
        assert_eq!(c.cell(), "both");
    }

    #[test]
    fn rejects_non_apa() {
        let p = make_apa(
            CayleyTable::left_zero(3),
            CayleyTable::from_fn(3, |x, y| (3 - x + y) % 3),
        )
        .unwrap();
        assert!(matches!(classify(&p, 2), Err(Error::NotAnApa(_))));
    }
}
