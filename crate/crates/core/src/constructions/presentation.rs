//! Semigroups given by generators and length-reducing rewrite rules.

use std::collections::BTreeSet;

use super::word::{words_up_to, Word};
use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Rewriting steps allowed per reduction before giving up.
pub const DEFAULT_STEP_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

/// Deletes an occurrence of `factor` followed by at least `min_suffix`
/// letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixDelete {
    pub factor: Vec<usize>,
    pub min_suffix: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub rules: Vec<Rule>,
    pub prefix_deletes: Vec<PrefixDelete>,
    pub step_bound: usize,
}

fn shortlex_less(a: &[usize], b: &[usize]) -> bool {
    (a.len(), a) < (b.len(), b)
}

fn parse_letters(tok: &str, line: usize, col: usize) -> Result<Vec<usize>> {
    tok.chars()
        .map(|c| {
            if c.is_ascii_lowercase() {
                Ok(c as usize - 'a' as usize)
            } else {
                Err(Error::Syntax {
                    line,
                    col,
                    msg: format!("'{c}' is not a generator letter a-z"),
                })
            }
        })
        .collect()
}

impl Presentation {
    pub fn new(
        generators: usize,
        rules: Vec<Rule>,
        prefix_deletes: Vec<PrefixDelete>,
    ) -> Result<Self> {
        for r in &rules {
            if r.lhs.is_empty() || !shortlex_less(&r.rhs, &r.lhs) {
                return Err(Error::InvalidArgument(format!(
                    "rule {} -> {} does not decrease in shortlex order",
                    Word::new(r.lhs.clone())
                        .map(|w| w.to_string())
                        .unwrap_or_default(),
                    Word::new(r.rhs.clone())
                        .map(|w| w.to_string())
                        .unwrap_or_default(),
                )));
            }
        }
        if prefix_deletes.iter().any(|p| p.factor.is_empty()) {
            return Err(Error::InvalidArgument(
                "prefix-delete needs a nonempty word".into(),
            ));
        }
        let used = rules
            .iter()
            .flat_map(|r| r.lhs.iter().chain(&r.rhs))
            .chain(prefix_deletes.iter().flat_map(|p| &p.factor))
            .copied()
            .max();
        if used.is_some_and(|g| g >= generators) {
            return Err(Error::InvalidArgument(
                "rule uses an undeclared generator".into(),
            ));
        }
        Ok(Presentation {
            generators,
            rules,
            prefix_deletes,
            step_bound: DEFAULT_STEP_BOUND,
        })
    }

    /// Parses the line format:
    ///
    /// ```text
    /// # comment
    /// generators 2            (optional; default: highest letter used)
    /// aaaa -> aa
    /// prefix-delete aa minlen 2
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators = None;
        let mut rules = Vec::new();
        let mut deletes = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<(usize, &str)> = body
                .split_whitespace()
                .map(|t| (t.as_ptr() as usize - raw.as_ptr() as usize + 1, t))
                .collect();
            match toks.as_slice() {
                [] => {}
                [(_, "generators"), (col, n)] => {
                    generators = Some(n.parse::<usize>().map_err(|_| Error::Syntax {
                        line,
                        col: *col,
                        msg: format!("expected a generator count, found '{n}'"),
                    })?)
                }
                [(_, "prefix-delete"), (wc, w), (_, "minlen"), (kc, k)] => {
                    let min_suffix = k.parse::<usize>().map_err(|_| Error::Syntax {
                        line,
                        col: *kc,
                        msg: format!("expected a length, found '{k}'"),
                    })?;
                    deletes.push(PrefixDelete {
                        factor: parse_letters(w, line, *wc)?,
                        min_suffix,
                    });
                }
                [(lc, l), (_, "->"), (rc, r)] => rules.push(Rule {
                    lhs: parse_letters(l, line, *lc)?,
                    rhs: parse_letters(r, line, *rc)?,
                }),
                [(col, _), ..] => {
                    return Err(Error::Syntax {
                        line,
                        col: *col,
                        msg: "expected 'lhs -> rhs', 'prefix-delete <word> minlen <k>' or 'generators <n>'".into(),
                    })
                }
            }
        }
        let used = rules
            .iter()
            .flat_map(|r: &Rule| r.lhs.iter().chain(&r.rhs))
            .chain(deletes.iter().flat_map(|p: &PrefixDelete| &p.factor))
            .map(|&g| g + 1)
            .max()
            .unwrap_or(1);
        Presentation::new(generators.unwrap_or(used), rules, deletes)
    }

    /// One rewriting step at the leftmost position where anything applies.
    fn step(&self, w: &[usize]) -> Option<Vec<usize>> {
        for i in 0..w.len() {
            let rest = &w[i..];
            for r in &self.rules {
                if rest.starts_with(&r.lhs) {
                    let mut v = w[..i].to_vec();
                    v.extend_from_slice(&r.rhs);
                    v.extend_from_slice(&rest[r.lhs.len()..]);
                    return Some(v);
                }
            }
            for d in &self.prefix_deletes {
                if rest.starts_with(&d.factor) && rest.len() - d.factor.len() >= d.min_suffix {
                    let mut v = w[..i].to_vec();
                    v.extend_from_slice(&rest[d.factor.len()..]);
                    return Some(v);
                }
            }
        }
        None
    }

    pub fn reduce(&self, w: &[usize]) -> Result<Vec<usize>> {
        let mut cur = w.to_vec();
        for _ in 0..self.step_bound {
            match self.step(&cur) {
                Some(next) => cur = next,
                None => return Ok(cur),
            }
        }
        Err(Error::NonTerminating(format!(
            "{} steps from {}",
            self.step_bound,
            Word::new(w.to_vec())
                .map(|w| w.to_string())
                .unwrap_or_default()
        )))
    }
}

/// Renders a word with runs written as powers: `aab` ↦ `a^2b`.
pub fn power_label(w: &[usize]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        out.push_str(&Word::letter(w[i]).to_string());
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Normal forms and their multiplication table.
#[derive(Debug, Clone)]
pub struct PresentedSemigroup {
    pub normal_forms: Vec<Word>,
    pub table: CayleyTable,
}

impl PresentedSemigroup {
    pub fn index_of(&self, letters: &[usize]) -> Option<usize> {
        self.normal_forms
            .iter()
            .position(|w| w.letters() == letters)
    }
}

/// Reduces every word up to `length_bound`, takes the distinct results
/// (shortlex order) as elements, and multiplies by reducing concatenations.
pub fn presented_semigroup(p: &Presentation, length_bound: usize) -> Result<PresentedSemigroup> {
    let mut forms = BTreeSet::new();
    for w in words_up_to(p.generators, length_bound) {
        let r = p.reduce(w.letters())?;
        forms.insert((r.len(), r));
    }
    let normal_forms: Vec<Word> = forms
        .into_iter()
        .map(|(_, r)| Word::new(r))
        .collect::<Result<_>>()?;
    let n = normal_forms.len();
    let mut cells = Vec::with_capacity(n * n);
    for u in &normal_forms {
        for v in &normal_forms {
            let r = p.reduce(u.concat(v).letters())?;
            match normal_forms
                .iter()
                .position(|w| w.letters() == r.as_slice())
            {
                Some(i) => cells.push(i),
                None => return Err(Error::NotClosed(format!("{u}·{v}"))),
            }
        }
    }
    let table = CayleyTable::new(n, cells)?.with_labels(
        normal_forms
            .iter()
            .map(|w| power_label(w.letters()))
            .collect(),
    )?;
    if let Some(w) = table.is_associative().witness {
        return Err(Error::NotAssociative(w));
    }
    Ok(PresentedSemigroup {
        normal_forms,
        table,
    })
}

/// The seven-element semigroup on `a, b` with `a⁴ = a²`, `b² = b`,
/// `a²b = b`, `ba² = a²`, and `a²·x·y = b·x·y = x·y`.
pub const TWO_GENERATOR_SEVEN_TEXT: &str = "\
# seven-element semigroup on a, b
aaaa -> aa
bb -> b
aab -> b
baa -> aa
prefix-delete aa minlen 2
prefix-delete b minlen 2
";

pub fn two_generator_seven() -> Presentation {
    Presentation::parse(TWO_GENERATOR_SEVEN_TEXT).expect("built-in presentation parses")
}
