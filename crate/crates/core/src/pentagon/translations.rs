//! Left star-translations `θ_x(y) = x∗y` and the semigroup they generate.

use std::collections::HashMap;

use serde::Serialize;

use super::PentagonAlgebra;
use crate::error::{Error, Result};

pub type Map = Vec<u32>;

/// `f∘g`, i.e. `g` applied first.
pub fn compose(f: &[u32], g: &[u32]) -> Map {
    g.iter().map(|&v| f[v as usize]).collect()
}

pub fn identity_map(n: usize) -> Map {
    (0..n as u32).collect()
}

pub fn is_bijective(f: &[u32]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter()
        .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TProfile {
    pub size: usize,
    pub commutative: bool,
    pub cancellative: bool,
    /// `θ_xθ_y = θ_y` for all `x, y`.
    pub right_zero: bool,
    pub contains_identity: bool,
    pub all_idempotent: bool,
    /// Every `θ_x` is an endomorphism of the dot semigroup.
    pub in_end_dot: bool,
    pub elementary_abelian_2_group: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationFamily {
    /// `thetas[x][y] = x∗y`.
    pub thetas: Vec<Map>,
    /// Distinct maps of the composition closure, in order of discovery.
    pub closure: Vec<Map>,
    /// Position of `θ_x` in `closure`.
    pub index_of: Vec<usize>,
    pub profile: TProfile,
}

impl TranslationFamily {
    pub fn theta(&self, x: usize) -> &[u32] {
        &self.thetas[x]
    }

    /// `θ_x` applied to `y`.
    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.thetas[x][y] as usize
    }

    /// `θ_x∘θ_y`.
    pub fn compose(&self, x: usize, y: usize) -> Map {
        compose(&self.thetas[x], &self.thetas[y])
    }
}

pub fn translations(p: &PentagonAlgebra) -> Result<TranslationFamily> {
    if let Some(w) = &p.status().star_associative.witness {
        return Err(Error::NotAssociative(w.clone()));
    }
    let n = p.n();
    let thetas: Vec<Map> = (0..n).map(|x| p.star().row(x).to_vec()).collect();

    let mut closure: Vec<Map> = Vec::new();
    let mut pos: HashMap<Map, usize> = HashMap::new();
    let mut index_of = Vec::with_capacity(n);
    for t in &thetas {
        let i = *pos.entry(t.clone()).or_insert_with(|| {
            closure.push(t.clone());
            closure.len() - 1
        });
        index_of.push(i);
    }
    let generated = closure.len();
    let mut frontier = 0;
    while frontier < closure.len() {
        let f = closure[frontier].clone();
        for t in &thetas {
            let g = compose(t, &f);
            if !pos.contains_key(&g) {
                pos.insert(g.clone(), closure.len());
                closure.push(g);
            }
        }
        frontier += 1;
    }
    if closure.len() != generated {
        return Err(Error::InternalInconsistency(format!(
            "translations of an associative star generate {} maps beyond the {} distinct θ_x",
            closure.len() - generated,
            generated
        )));
    }

    let profile = t_profile(p, &closure);
    Ok(TranslationFamily {
        thetas,
        closure,
        index_of,
        profile,
    })
}

fn t_profile(p: &PentagonAlgebra, t: &[Map]) -> TProfile {
    let n = p.n();
    let id = identity_map(n);
    let products: Vec<Vec<Map>> = t
        .iter()
        .map(|f| t.iter().map(|g| compose(f, g)).collect())
        .collect();
    let m = t.len();
    let commutative = (0..m).all(|i| (0..m).all(|j| products[i][j] == products[j][i]));
    let left_cancel =
        (0..m).all(|f| (0..m).all(|g| (g + 1..m).all(|h| products[f][g] != products[f][h])));
    let right_cancel =
        (0..m).all(|f| (0..m).all(|g| (g + 1..m).all(|h| products[g][f] != products[h][f])));
    let right_zero = (0..m).all(|i| (0..m).all(|j| products[i][j] == t[j]));
    let contains_identity = t.contains(&id);
    let all_idempotent = (0..m).all(|i| products[i][i] == t[i]);
    let in_end_dot = t.iter().all(|f| p.dot().is_endomorphism(f));
    let elementary_abelian_2_group =
        contains_identity && commutative && (0..m).all(|i| products[i][i] == id);
    TProfile {
        size: m,
        commutative,
        cancellative: left_cancel && right_cancel,
        right_zero,
        contains_identity,
        all_idempotent,
        in_end_dot,
        elementary_abelian_2_group,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pentagon::make_apa;
    use crate::table::CayleyTable;

    #[test]
    fn right_zero_star_gives_identity_only() {
        let p = make_apa(CayleyTable::cyclic_group(3), CayleyTable::right_zero(3)).unwrap();
        let t = translations(&p).unwrap();
        assert_eq!(t.closure, vec![identity_map(3)]);
        assert!(t.profile.contains_identity && t.profile.elementary_abelian_2_group);
    }

    #[test]
    fn equal_rows_share_a_map() {
        let dot = CayleyTable::from_rows(&[vec![0, 0, 0], vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
        let star = CayleyTable::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        let t = translations(&make_apa(dot, star).unwrap()).unwrap();
        assert_eq!(t.theta(0), t.theta(2));
        assert_eq!(t.closure.len(), 2);
        assert_eq!(t.index_of, vec![0, 1, 0]);
    }

    #[test]
    fn non_associative_star_rejected() {
        let p = make_apa(
            CayleyTable::left_zero(3),
            CayleyTable::from_fn(3, |x, y| (3 - x + y) % 3),
        )
        .unwrap();
        assert!(matches!(translations(&p), Err(Error::NotAssociative(_))));
    }
}
