//! Finite binary operations stored as Cayley tables.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scan;

/// Outcome of an exhaustive law check.
///
/// `witness` is present exactly when the law fails and holds the first
/// falsifying assignment in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl CheckResult {
    pub fn pass() -> Self {
        CheckResult {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        CheckResult {
            holds: false,
            witness: Some(witness),
        }
    }

    pub fn from_witness(witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Self::pass(),
            Some(w) => Self::fail(w),
        }
    }

    pub fn from_triple(witness: Option<(usize, usize, usize)>) -> Self {
        Self::from_witness(witness.map(|(x, y, z)| vec![x, y, z]))
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "holds"),
            Some(w) => write!(f, "fails at {w:?}"),
        }
    }
}

/// A binary operation on `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl CayleyTable {
    /// Builds a table from row-major entries, validating shape and range.
    pub fn new(n: usize, cells: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("carrier must be non-empty".into()));
        }
        if cells.len() != n * n {
            return Err(Error::BadShape {
                n,
                expected: n * n,
                got: cells.len(),
            });
        }
        if let Some(pos) = cells.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: cells[pos],
                n,
            });
        }
        Ok(CayleyTable {
            n,
            cells: cells.into_iter().map(|v| v as u32).collect(),
            labels: None,
        })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::BadShape {
                n,
                expected: n,
                got: bad.len(),
            });
        }
        Self::new(n, rows.concat())
    }

    /// Tabulates `op` on every pair.
    ///
    /// # Panics
    /// If `op` returns an index outside the carrier.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = op(x, y);
                assert!(v < n, "op({x},{y}) = {v} is outside a carrier of size {n}");
                cells.push(v as u32);
            }
        }
        CayleyTable {
            n,
            cells,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::BadLabels(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::BadLabels("labels are not distinct".into()));
        }
        if labels
            .iter()
            .any(|l| l.is_empty() || l.chars().any(char::is_whitespace))
        {
            return Err(Error::BadLabels(
                "labels must be non-empty and contain no whitespace".into(),
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn right_zero(n: usize) -> Self {
        Self::from_fn(n, |_, y| y)
    }

    pub fn left_zero(n: usize) -> Self {
        Self::from_fn(n, |x, _| x)
    }

    /// Every product equals `c`.
    pub fn constant(n: usize, c: usize) -> Self {
        Self::from_fn(n, |_, _| c)
    }

    /// The cyclic group of order `n` under addition.
    pub fn cyclic_group(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x + y) % n)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.cells.chunks(self.n)
    }

    pub fn cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().map(|&v| v as usize)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of element `x`: its label, or the index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Index of the element labelled `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    /// `x^k` for `k >= 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(x, |acc, _| self.op(acc, x))
    }

    /// First `(x,y,z)` with `(xy)z != x(yz)`.
    pub fn is_associative(&self) -> CheckResult {
        CheckResult::from_triple(scan::first_failing_triple(self.n, |x, y, z| {
            self.op(self.op(x, y), z) == self.op(x, self.op(y, z))
        }))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (x..self.n).all(|y| self.op(x, y) == self.op(y, x)))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.op(x, x) == x).collect()
    }

    /// Applies the relabelling `x ↦ perm[x]` to the operation.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0; self.n];
        for (x, &px) in perm.iter().enumerate() {
            inv[px] = x;
        }
        let mut t = Self::from_fn(self.n, |a, b| perm[self.op(inv[a], inv[b])]);
        if let Some(labels) = &self.labels {
            t.labels = Some((0..self.n).map(|a| labels[inv[a]].clone()).collect());
        }
        t
    }

    /// The opposite operation `x ∘ y = y · x`.
    pub fn transpose(&self) -> Self {
        let mut t = Self::from_fn(self.n, |x, y| self.op(y, x));
        t.labels = self.labels.clone();
        t
    }

    /// True iff `map` is an endomorphism: `map(xy) = map(x) map(y)`.
    pub fn is_endomorphism(&self, map: &[u32]) -> bool {
        (0..self.n).all(|x| {
            (0..self.n)
                .all(|y| map[self.op(x, y)] as usize == self.op(map[x] as usize, map[y] as usize))
        })
    }

    /// Same operation, ignoring labels.
    pub fn same_operation(&self, other: &CayleyTable) -> bool {
        self.n == other.n && self.cells == other.cells
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
