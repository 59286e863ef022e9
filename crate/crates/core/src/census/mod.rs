//! Exhaustive enumeration of APAs at small orders, with classification
//! counts and the implication crosscheck over everything found.

mod search;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

pub use search::{
    enumerate_semigroups, enumerate_stars, MAX_ISO_ORDER, MAX_LABELED_ORDER, MAX_STAR_ORDER,
};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::pentagon::CROSSCHECK_MAX_K;
use crate::pentagon::{
    classify, make_apa, theorem_crosscheck, triple_map_check, ApaClassification, PentagonAlgebra,
};
use crate::table::CayleyTable;

/// Where the dot semigroups come from.
#[derive(Debug, Clone)]
pub enum DotSource {
    Table(CayleyTable),
    /// Every labeled semigroup of the order, or one per isomorphism class
    /// when the query is up to isomorphism.
    AllOfOrder(usize),
}

/// Required values of classification flags; `None` accepts both.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PropertyFilter {
    pub ltd: Option<bool>,
    pub rtd: Option<bool>,
    pub star_p2: Option<bool>,
    pub star_q1: Option<bool>,
    pub star_r: Option<bool>,
}

impl PropertyFilter {
    pub fn accepts(&self, c: &ApaClassification) -> bool {
        let ok = |want: Option<bool>, got: bool| want.is_none_or(|w| w == got);
        ok(self.ltd, c.is_ltd)
            && ok(self.rtd, c.is_rtd)
            && ok(self.star_p2, c.star_varieties.satisfies_p(2))
            && ok(self.star_q1, c.star_varieties.q1)
            && ok(self.star_r, c.star_varieties.r)
    }
}

#[derive(Debug, Clone)]
pub struct CensusQuery {
    pub dots: DotSource,
    pub up_to_iso: bool,
    pub filter: PropertyFilter,
    pub crosscheck: bool,
}

impl CensusQuery {
    pub fn all(order: usize) -> Self {
        CensusQuery {
            dots: DotSource::AllOfOrder(order),
            up_to_iso: false,
            filter: PropertyFilter::default(),
            crosscheck: true,
        }
    }

    pub fn single(dot: CayleyTable) -> Self {
        CensusQuery {
            dots: DotSource::Table(dot),
            up_to_iso: false,
            filter: PropertyFilter::default(),
            crosscheck: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CellCounts {
    pub ltd_only: usize,
    pub rtd_only: usize,
    pub both: usize,
    pub neither: usize,
}

impl CellCounts {
    fn add(&mut self, cell: &str) {
        match cell {
            "both" => self.both += 1,
            "ltd-only" => self.ltd_only += 1,
            "rtd-only" => self.rtd_only += 1,
            _ => self.neither += 1,
        }
    }

    pub fn sum(&self) -> usize {
        self.ltd_only + self.rtd_only + self.both + self.neither
    }
}

/// One censused algebra, identified by its tables as digit rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub dot: String,
    pub star: String,
    pub canonical: Option<String>,
    pub cell: &'static str,
    pub gamma_determined: bool,
    pub star_p2: bool,
    pub star_q1: bool,
    pub star_r: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusViolation {
    pub dot: String,
    pub star: String,
    pub implication: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub order: usize,
    /// Dot semigroups scanned.
    pub dots: usize,
    /// Algebras found that pass the filter.
    pub total: usize,
    pub cells: CellCounts,
    pub gamma_determined: usize,
    /// Distinct isomorphism classes, when the query is up to isomorphism.
    pub iso_classes: Option<usize>,
    /// Every algebra found, or the first of each class up to isomorphism.
    pub entries: Vec<CensusEntry>,
    pub violations: Vec<CensusViolation>,
}

/// Rows as digit strings joined by `/`.
pub fn compact(t: &CayleyTable) -> String {
    t.rows()
        .map(|r| {
            r.iter()
                .map(|&v| char::from_digit(v, 36).expect("small entry"))
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("/")
}

struct Found {
    entry: CensusEntry,
    violations: Vec<CensusViolation>,
}

fn examine(p: &PentagonAlgebra, q: &CensusQuery) -> Result<Option<Found>> {
    let c = classify(p, CROSSCHECK_MAX_K)?;
    if !q.filter.accepts(&c) {
        return Ok(None);
    }
    let (dot, star) = (compact(p.dot()), compact(p.star()));
    let mut violations = Vec::new();
    if q.crosscheck {
        if let Some(w) = triple_map_check(p).witness {
            violations.push(CensusViolation {
                dot: dot.clone(),
                star: star.clone(),
                implication: "APA laws ⟺ s23 s13 s12 = s12 s23".into(),
                detail: format!("map check fails at {w:?}"),
            });
        }
        for v in theorem_crosscheck(p)? {
            violations.push(CensusViolation {
                dot: dot.clone(),
                star: star.clone(),
                implication: v.implication.into(),
                detail: v.detail,
            });
        }
    }
    let canonical = if q.up_to_iso {
        Some(canonical_form(p.dot(), Some(p.star()))?.to_text())
    } else {
        None
    };
    Ok(Some(Found {
        entry: CensusEntry {
            dot,
            star,
            canonical,
            cell: c.cell(),
            gamma_determined: c.determined_by.is_some(),
            star_p2: c.star_varieties.satisfies_p(2),
            star_q1: c.star_varieties.q1,
            star_r: c.star_varieties.r,
        },
        violations,
    }))
}

fn census_dot(dot: &CayleyTable, q: &CensusQuery) -> Result<Vec<Found>> {
    let stars = enumerate_stars(dot)?;
    let found: Vec<Option<Found>> = stars
        .into_par_iter()
        .map(|star| examine(&make_apa(dot.clone(), star)?, q))
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

pub fn run_census(q: &CensusQuery) -> Result<CensusReport> {
    let dots = match &q.dots {
        DotSource::Table(t) => vec![t.clone()],
        DotSource::AllOfOrder(n) => enumerate_semigroups(*n, q.up_to_iso)?,
    };
    let order = dots.first().map_or(0, CayleyTable::n);
    if order > MAX_STAR_ORDER
        || (matches!(q.dots, DotSource::AllOfOrder(_)) && order > MAX_ISO_ORDER)
    {
        return Err(Error::TooLarge {
            what: "census",
            n: order,
            bound: MAX_STAR_ORDER,
        });
    }
    let per_dot: Vec<Vec<Found>> = dots
        .par_iter()
        .map(|d| census_dot(d, q))
        .collect::<Result<_>>()?;

    let mut cells = CellCounts::default();
    let mut gamma_determined = 0;
    let mut entries = Vec::new();
    let mut violations = Vec::new();
    let mut classes = HashSet::new();
    let mut total = 0;
    for f in per_dot.into_iter().flatten() {
        total += 1;
        cells.add(f.entry.cell);
        gamma_determined += usize::from(f.entry.gamma_determined);
        violations.extend(f.violations);
        let new_class = match &f.entry.canonical {
            Some(c) => classes.insert(c.clone()),
            None => true,
        };
        if new_class {
            entries.push(f.entry);
        }
    }
    Ok(CensusReport {
        order,
        dots: dots.len(),
        total,
        cells,
        gamma_determined,
        iso_classes: q.up_to_iso.then_some(classes.len()),
        entries,
        violations,
    })
}
