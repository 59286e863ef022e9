//! Free bands on up to three generators.

use std::collections::HashMap;

use super::word::{letter_names, Word};
use crate::error::{Error, Result};
use crate::table::CayleyTable;

pub const MAX_FREE_BAND_GENERATORS: usize = 3;

fn content_size(w: &[usize]) -> usize {
    let mut seen = 0u64;
    for &g in w {
        seen |= 1 << g;
    }
    seen.count_ones() as usize
}

/// Normal form: `nf(p)·a·b·nf(s)` where `p` is the longest prefix missing
/// one letter of the content, `a` the letter after it, and `s`, `b` the
/// mirror images. Two words are equal in the free band iff their normal
/// forms coincide.
pub fn band_normal_form(w: &[usize], memo: &mut HashMap<Vec<usize>, Vec<usize>>) -> Vec<usize> {
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let c = content_size(w);
    let out = if c == 1 {
        vec![w[0]]
    } else {
        let mut seen = 0u64;
        let mut i = 0;
        while (seen | 1 << w[i]).count_ones() as usize != c {
            seen |= 1 << w[i];
            i += 1;
        }
        let (p, a) = (&w[..i], w[i]);
        let mut seen = 0u64;
        let mut j = w.len() - 1;
        while (seen | 1 << w[j]).count_ones() as usize != c {
            seen |= 1 << w[j];
            j -= 1;
        }
        let (b, s) = (w[j], &w[j + 1..]);
        let mut v = band_normal_form(p, memo);
        v.push(a);
        v.push(b);
        v.extend(band_normal_form(s, memo));
        v
    };
    memo.insert(w.to_vec(), out.clone());
    out
}

/// The free band on `m` generators with shortlex-least representatives.
#[derive(Debug, Clone)]
pub struct FreeBand {
    m: usize,
    names: Vec<String>,
    elements: Vec<Word>,
    index: HashMap<Vec<usize>, usize>,
    table: CayleyTable,
}

impl FreeBand {
    pub fn new(m: usize) -> Result<Self> {
        Self::with_names(letter_names(m))
    }

    /// Generators are named by `names`; element labels join them with `·`.
    pub fn with_names(names: Vec<String>) -> Result<Self> {
        let m = names.len();
        if m > MAX_FREE_BAND_GENERATORS {
            return Err(Error::TooManyGenerators(m));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("free band needs a generator".into()));
        }
        let mut memo = HashMap::new();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut elements: Vec<Word> = Vec::new();
        let mut frontier = 0;
        for g in 0..m {
            let nf = band_normal_form(&[g], &mut memo);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(nf) {
                e.insert(elements.len());
                elements.push(Word::letter(g));
            }
        }
        while frontier < elements.len() {
            let w = elements[frontier].clone();
            for g in 0..m {
                let cand = w.concat(&Word::letter(g));
                let nf = band_normal_form(cand.letters(), &mut memo);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(nf) {
                    e.insert(elements.len());
                    elements.push(cand);
                }
            }
            frontier += 1;
        }
        let size = elements.len();
        let cells: Vec<usize> = (0..size * size)
            .map(|c| {
                let w = elements[c / size].concat(&elements[c % size]);
                index[&band_normal_form(w.letters(), &mut memo)]
            })
            .collect();
        let labels = elements.iter().map(|w| w.render(&names, "·")).collect();
        let table = CayleyTable::new(size, cells)?.with_labels(labels)?;
        Ok(FreeBand {
            m,
            names,
            elements,
            index,
            table,
        })
    }

    pub fn generators(&self) -> usize {
        self.m
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// The element a word evaluates to.
    pub fn element_of(&self, letters: &[usize]) -> usize {
        let mut memo = HashMap::new();
        self.index[&band_normal_form(letters, &mut memo)]
    }

    pub fn content(&self, x: usize) -> Vec<usize> {
        let mut c = self.elements[x].letters().to_vec();
        c.sort_unstable();
        c.dedup();
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(FreeBand::new(1).unwrap().size(), 1);
        assert_eq!(FreeBand::new(2).unwrap().size(), 6);
        assert_eq!(FreeBand::new(3).unwrap().size(), 159);
        assert_eq!(FreeBand::new(4).unwrap_err(), Error::TooManyGenerators(4));
    }

    #[test]
    fn two_generator_listing() {
        let fb = FreeBand::with_names(vec!["x".into(), "x²".into()]).unwrap();
        assert_eq!(
            fb.table().labels().unwrap(),
            ["x", "x²", "x·x²", "x²·x", "x·x²·x", "x²·x·x²"]
        );
    }

    #[test]
    fn band_laws() {
        let fb = FreeBand::new(2).unwrap();
        let t = fb.table();
        assert!(t.is_associative().holds);
        assert_eq!(t.idempotents().len(), t.n());
        assert_eq!(
            fb.element_of(&[0, 1, 1, 0, 1, 0]),
            fb.element_of(&[0, 1, 0])
        );
    }
}
