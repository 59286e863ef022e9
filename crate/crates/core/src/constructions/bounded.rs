//! A finite window onto the free semigroup: all words up to a length bound.

use std::collections::HashMap;

use super::word::{letter_names, words_up_to, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct BoundedFreeSemigroup {
    m: usize,
    bound: usize,
    names: Vec<String>,
    words: Vec<Word>,
    index: HashMap<Vec<usize>, usize>,
}

pub fn free_semigroup_bounded(m: usize, bound: usize, cap: usize) -> Result<BoundedFreeSemigroup> {
    BoundedFreeSemigroup::with_names(letter_names(m), bound, cap)
}

impl BoundedFreeSemigroup {
    pub fn with_names(names: Vec<String>, bound: usize, cap: usize) -> Result<Self> {
        let m = names.len();
        if m == 0 || bound == 0 {
            return Err(Error::InvalidArgument(
                "need at least one generator and length bound ≥ 1".into(),
            ));
        }
        let mut size = 0usize;
        let mut layer = 1usize;
        for _ in 0..bound {
            layer = layer.saturating_mul(m);
            size = size.saturating_add(layer);
        }
        if size > cap {
            return Err(Error::SizeCap { size, cap });
        }
        let words = words_up_to(m, bound);
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters().to_vec(), i))
            .collect();
        Ok(BoundedFreeSemigroup {
            m,
            bound,
            names,
            words,
            index,
        })
    }

    pub fn generators(&self) -> usize {
        self.m
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn element_of(&self, letters: &[usize]) -> Option<usize> {
        self.index.get(letters).copied()
    }

    /// Concatenation, rejected when it exceeds the bound.
    pub fn mul(&self, x: usize, y: usize) -> Result<usize> {
        let (u, v) = (&self.words[x], &self.words[y]);
        if u.len() + v.len() > self.bound {
            return Err(Error::ProductOverflow {
                left: u.len(),
                right: v.len(),
                bound: self.bound,
            });
        }
        Ok(self.index[&u.concat(v).letters().to_vec()])
    }

    pub fn labels(&self) -> Vec<String> {
        self.words
            .iter()
            .map(|w| w.render(&self.names, "·"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(free_semigroup_bounded(2, 2, 4096).unwrap().size(), 6);
        assert_eq!(free_semigroup_bounded(3, 1, 4096).unwrap().size(), 3);
        assert_eq!(free_semigroup_bounded(2, 3, 4096).unwrap().size(), 14);
        assert_eq!(
            free_semigroup_bounded(2, 3, 10).unwrap_err(),
            Error::SizeCap { size: 14, cap: 10 }
        );
    }

    #[test]
    fn overflow() {
        let f = free_semigroup_bounded(2, 2, 4096).unwrap();
        assert_eq!(f.mul(0, 1).unwrap(), 3);
        assert!(matches!(
            f.mul(2, 0),
            Err(Error::ProductOverflow {
                left: 2,
                right: 1,
                bound: 2
            })
        ));
        let f1 = free_semigroup_bounded(3, 1, 4096).unwrap();
        assert!(f1.mul(0, 0).is_err());
    }
}
