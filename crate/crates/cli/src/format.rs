//! Line-oriented algebra files.
//!
//! ```text
//! # comment
//! n 3
//! elements a b c
//! dot
//! 0 0 0
//! 1 1 1
//! 0 0 0
//! star
//! 0 1 0
//! 1 0 1
//! 0 1 0
//! ```
//!
//! Either section may be omitted, not both. Entries are 0-based indices.

use apa_core::pentagon::{make_apa, PentagonAlgebra};
use apa_core::{CayleyTable, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub n: usize,
    pub labels: Option<Vec<String>>,
    pub dot: Option<CayleyTable>,
    pub star: Option<CayleyTable>,
}

impl AlgebraFile {
    pub fn pair(dot: &CayleyTable, star: &CayleyTable) -> Self {
        AlgebraFile {
            n: dot.n(),
            labels: dot.labels().map(<[String]>::to_vec),
            dot: Some(dot.clone()),
            star: Some(star.clone()),
        }
    }

    pub fn from_apa(p: &PentagonAlgebra) -> Self {
        Self::pair(p.dot(), p.star())
    }

    pub fn single_dot(t: &CayleyTable) -> Self {
        AlgebraFile {
            n: t.n(),
            labels: t.labels().map(<[String]>::to_vec),
            dot: Some(t.clone()),
            star: None,
        }
    }

    pub fn single_star(t: &CayleyTable) -> Self {
        AlgebraFile {
            star: Some(t.clone()),
            dot: None,
            ..Self::single_dot(t)
        }
    }

    /// Both operations as a pentagon algebra, validated but not required
    /// to be an APA.
    pub fn algebra(&self) -> Result<PentagonAlgebra> {
        match (&self.dot, &self.star) {
            (Some(d), Some(s)) => make_apa(d.clone(), s.clone()),
            _ => Err(Error::InvalidArgument(
                "file needs both a dot and a star section".into(),
            )),
        }
    }

    /// The star table, or the dot table when the file has only one.
    pub fn either(&self) -> &CayleyTable {
        self.star
            .as_ref()
            .or(self.dot.as_ref())
            .expect("at least one section")
    }
}

struct Line<'a> {
    no: usize,
    toks: Vec<(usize, &'a str)>,
}

fn tokens(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let toks: Vec<(usize, &str)> = body
                .split_whitespace()
                .map(|t| (t.as_ptr() as usize - raw.as_ptr() as usize + 1, t))
                .collect();
            (!toks.is_empty()).then_some(Line { no: i + 1, toks })
        })
        .collect()
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let lines = tokens(text);
    let mut it = lines.iter().peekable();
    let header = it
        .next()
        .ok_or_else(|| syntax(1, 1, "empty file, expected 'n <int>'"))?;
    let n = match header.toks.as_slice() {
        [(_, "n"), (col, v)] => v.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(|| {
            syntax(
                header.no,
                *col,
                format!("expected a positive size, found '{v}'"),
            )
        })?,
        [(col, _), ..] => return Err(syntax(header.no, *col, "expected 'n <int>'")),
        [] => unreachable!(),
    };
    let mut labels = None;
    if let Some(l) = it.peek() {
        if l.toks[0].1 == "elements" {
            if l.toks.len() != n + 1 {
                return Err(syntax(
                    l.no,
                    l.toks[0].0,
                    format!("expected {n} element names"),
                ));
            }
            labels = Some(
                l.toks[1..]
                    .iter()
                    .map(|t| t.1.to_string())
                    .collect::<Vec<_>>(),
            );
            it.next();
        }
    }
    let (mut dot, mut star) = (None, None);
    while let Some(l) = it.next() {
        let (col, name) = l.toks[0];
        if l.toks.len() != 1 || !(name == "dot" || name == "star") {
            return Err(syntax(
                l.no,
                col,
                format!("expected 'dot' or 'star', found '{name}'"),
            ));
        }
        let slot = if name == "dot" { &mut dot } else { &mut star };
        if slot.is_some() {
            return Err(syntax(l.no, col, format!("second '{name}' section")));
        }
        let mut cells = Vec::with_capacity(n * n);
        for r in 0..n {
            let row = it
                .next()
                .ok_or_else(|| syntax(l.no, col, format!("'{name}' has {r} rows, expected {n}")))?;
            if row.toks.len() != n {
                return Err(syntax(
                    row.no,
                    row.toks[0].0,
                    format!("expected {n} entries, found {}", row.toks.len()),
                ));
            }
            for &(c, t) in &row.toks {
                let v: usize = t
                    .parse()
                    .map_err(|_| syntax(row.no, c, format!("expected an index, found '{t}'")))?;
                if v >= n {
                    return Err(Error::Range {
                        line: row.no,
                        col: c,
                        value: v,
                        n,
                    });
                }
                cells.push(v);
            }
        }
        let mut t = CayleyTable::new(n, cells)?;
        if let Some(l) = &labels {
            t = t.with_labels(l.clone())?;
        }
        *slot = Some(t);
    }
    if dot.is_none() && star.is_none() {
        let line = lines.last().map_or(1, |l| l.no);
        return Err(syntax(line, 1, "expected a 'dot' or 'star' section"));
    }
    Ok(AlgebraFile {
        n,
        labels,
        dot,
        star,
    })
}

fn print_table(out: &mut String, name: &str, t: &CayleyTable) {
    out.push_str(name);
    out.push('\n');
    for r in t.rows() {
        let row: Vec<String> = r.iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Canonical text: header, labels if any, dot then star.
pub fn print_algebra(a: &AlgebraFile) -> String {
    let mut out = format!("n {}\n", a.n);
    if let Some(l) = &a.labels {
        out.push_str("elements ");
        out.push_str(&l.join(" "));
        out.push('\n');
    }
    if let Some(d) = &a.dot {
        print_table(&mut out, "dot", d);
    }
    if let Some(s) = &a.star {
        print_table(&mut out, "star", s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX_LEFT: &str = "# three elements\nn 3\nelements a b c\ndot\n0 0 0\n1 1 1\n0 0 0\nstar\n0 1 0\n1 0 1\n0 1 0\n";

    #[test]
    fn parses_ex_left() {
        let a = parse_algebra(EX_LEFT).unwrap();
        let p = a.algebra().unwrap();
        assert!(p.is_apa());
        assert_eq!(p.label(1), "b");
    }

    #[test]
    fn round_trip() {
        let once = print_algebra(&parse_algebra(EX_LEFT).unwrap());
        assert_eq!(print_algebra(&parse_algebra(&once).unwrap()), once);
        assert!(!once.contains('#'));
    }

    #[test]
    fn singleton() {
        let a = parse_algebra("n 1\ndot\n0\nstar\n0\n").unwrap();
        assert!(a.algebra().unwrap().is_apa());
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_algebra("n 3\ndot\n0 0 0\n0 3 0\n0 0 0\n").unwrap_err(),
            Error::Range {
                line: 4,
                col: 3,
                value: 3,
                n: 3
            }
        );
        assert!(matches!(
            parse_algebra("n 2\ndot\n0 0\n0\n").unwrap_err(),
            Error::Syntax {
                line: 4,
                col: 1,
                ..
            }
        ));
        assert!(matches!(
            parse_algebra("size 2\n").unwrap_err(),
            Error::Syntax {
                line: 1,
                col: 1,
                ..
            }
        ));
        assert!(matches!(
            parse_algebra("n 2\n").unwrap_err(),
            Error::Syntax { .. }
        ));
        assert!(matches!(
            parse_algebra("n 1\ndot\n0\nstar\nx\n").unwrap_err(),
            Error::Syntax {
                line: 5,
                col: 1,
                ..
            }
        ));
    }
}
