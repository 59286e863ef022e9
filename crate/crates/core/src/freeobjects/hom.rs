//! Extending generator images to homomorphisms out of the free objects.

use super::ak::AkElement;
use super::bx::BxElement;
use super::FreeObject;
use crate::error::{Error, Result};
use crate::scan;
use crate::table::{CayleyTable, CheckResult};
use crate::term::{check_single, laws};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomExtension {
    /// Image in the target of each source element.
    pub map: Vec<usize>,
    /// Whether `h(u∗v) = h(u)∗h(v)` for all pairs; witness `(u, v)`.
    pub check: CheckResult,
}

fn homomorphism_check(source: &CayleyTable, target: &CayleyTable, map: &[usize]) -> CheckResult {
    let w = scan::first_failing_pair(source.n(), |u, v| {
        map[source.op(u, v)] == target.op(map[u], map[v])
    });
    CheckResult::from_witness(w.map(|(u, v)| vec![u, v]))
}

fn check_images(n: usize, target: &CayleyTable, images: &[usize]) -> Result<()> {
    if images.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} images for {n} generators",
            images.len()
        )));
    }
    if let Some(&bad) = images.iter().find(|&&s| s >= target.n()) {
        return Err(Error::InvalidArgument(format!(
            "image {bad} outside a target of size {}",
            target.n()
        )));
    }
    Ok(())
}

fn require_law(target: &CayleyTable, name: &str, holds: CheckResult) -> Result<()> {
    match holds.witness {
        None => Ok(()),
        Some(w) => Err(Error::TargetNotInVariety(format!("{name} fails at {w:?}"))),
    }
    .and_then(|_| {
        target.is_associative().witness.map_or(Ok(()), |w| {
            Err(Error::TargetNotInVariety(format!(
                "not associative at {w:?}"
            )))
        })
    })
}

/// `h((f,y)) = s_1^{f(1)} ∗ … ∗ s_n^{f(n)} ∗ s_y`, zero exponents omitted;
/// a T-element with pointer `y` goes to `s_y^{k+1}`.
pub fn hom_extension_pk(
    k: usize,
    source: &FreeObject<AkElement>,
    target: &CayleyTable,
    images: &[usize],
) -> Result<HomExtension> {
    let n = source.elements[0].coords.len();
    check_images(n, target, images)?;
    require_law(
        target,
        "right-normality",
        check_single(target, &laws::right_normal()),
    )?;
    require_law(target, &format!("P_{k}"), check_single(target, &laws::p(k)))?;
    let map = source
        .elements
        .iter()
        .map(|e| {
            let y = images[e.pointer];
            if e.is_t(k) {
                return target.pow(y, k + 1);
            }
            let mut acc: Option<usize> = None;
            for (x, &f) in e.coords.iter().enumerate() {
                if f > 0 {
                    let p = target.pow(images[x], f);
                    acc = Some(acc.map_or(p, |a| target.op(a, p)));
                }
            }
            acc.map_or(y, |a| target.op(a, y))
        })
        .collect::<Vec<_>>();
    let check = homomorphism_check(&source.table, target, &map);
    Ok(HomExtension { map, check })
}

/// `h((a,b)) = s_a ∗ s_b` if `a ≠ 0`, else `s_b`.
pub fn hom_extension_q1(
    source: &FreeObject<BxElement>,
    target: &CayleyTable,
    images: &[usize],
) -> Result<HomExtension> {
    let n = source.elements.iter().map(|e| e.second).max().unwrap_or(0);
    check_images(n, target, images)?;
    require_law(target, "x∗y∗z = y∗z", check_single(target, &laws::q(1)))?;
    let map = source
        .elements
        .iter()
        .map(|e| {
            let sb = images[e.second - 1];
            if e.first != 0 {
                target.op(images[e.first - 1], sb)
            } else {
                sb
            }
        })
        .collect::<Vec<_>>();
    let check = homomorphism_check(&source.table, target, &map);
    Ok(HomExtension { map, check })
}
