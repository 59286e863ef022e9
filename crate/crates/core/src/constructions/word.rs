use std::fmt;

use crate::error::{Error, Result};

/// A nonempty sequence of generator indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument("words are nonempty".into()));
        }
        Ok(Word(letters))
    }

    pub fn letter(g: usize) -> Self {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letters joined by `sep`, each rendered with `names`.
    pub fn render(&self, names: &[String], sep: &str) -> String {
        self.0
            .iter()
            .map(|&g| names[g].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Shortlex comparison key.
    pub fn shortlex_key(&self) -> (usize, &[usize]) {
        (self.0.len(), &self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &g in &self.0 {
            match u8::try_from(g).ok().filter(|&b| b < 26) {
                Some(b) => write!(f, "{}", (b'a' + b) as char)?,
                None => write!(f, "[{g}]")?,
            }
        }
        Ok(())
    }
}

/// Default generator names `a, b, c, …`.
pub fn letter_names(m: usize) -> Vec<String> {
    (0..m)
        .map(|g| match u8::try_from(g).ok().filter(|&b| b < 26) {
            Some(b) => ((b'a' + b) as char).to_string(),
            None => format!("g{g}"),
        })
        .collect()
}

/// All words of length `1..=max_len` over `m` letters, length-then-lex.
pub fn words_up_to(m: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|w| {
                (0..m).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned().map(Word));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_rejected() {
        assert!(Word::new(vec![]).is_err());
    }

    #[test]
    fn enumeration_order() {
        let w: Vec<String> = words_up_to(2, 2).iter().map(|w| w.to_string()).collect();
        assert_eq!(w, ["a", "b", "aa", "ab", "ba", "bb"]);
    }
}
