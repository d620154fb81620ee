//! Bounded realization searches over small numerical semigroups.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, CatalogRecord};
use crate::error::{Error, Result};
use crate::lengths::{delta_bound, scan_delta, DeltaSet, LengthScanner, LengthSet};
use crate::semigroup::{gcd_all, NumericalSemigroup};

/// All minimal generating tuples with entries `<= max_gen` and between 2 and
/// `max_e` generators, in lexicographic order.
pub fn enumerate_semigroups(max_gen: u64, max_e: usize) -> Enumerate {
    let mut reach = vec![false; max_gen as usize + 1];
    reach[0] = true;
    Enumerate {
        max_gen,
        max_e,
        stack: vec![Frame {
            gens: Vec::new(),
            reach,
            next: 2,
        }],
    }
}

pub struct Enumerate {
    max_gen: u64,
    max_e: usize,
    stack: Vec<Frame>,
}

struct Frame {
    gens: Vec<u64>,
    /// Elements `<= max_gen` of the monoid generated by `gens`.
    reach: Vec<bool>,
    next: u64,
}

impl Iterator for Enumerate {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        loop {
            let top = self.stack.last_mut()?;
            if top.next > self.max_gen || top.gens.len() >= self.max_e {
                self.stack.pop();
                continue;
            }
            let g = top.next;
            top.next += 1;
            if top.reach[g as usize] {
                continue;
            }
            let mut gens = top.gens.clone();
            gens.push(g);
            let mut reach = top.reach.clone();
            for x in g as usize..reach.len() {
                reach[x] |= reach[x - g as usize];
            }
            let emit = gens.len() >= 2 && gcd_all(gens.iter().copied()) == 1;
            self.stack.push(Frame {
                gens: gens.clone(),
                reach,
                next: g + 1,
            });
            if emit {
                if let Ok(s) = NumericalSemigroup::new(&gens) {
                    return Some(s);
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetKind {
    DeltaOfSemigroup,
    DeltaOfElement,
    LengthSetOfElement,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    #[default]
    FirstHit,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchQuery {
    pub target_kind: TargetKind,
    pub target: Vec<u64>,
    pub max_gen: u64,
    pub max_e: usize,
    pub max_frobenius: Option<i64>,
    pub mode: SearchMode,
}

impl SearchQuery {
    pub fn new(target_kind: TargetKind, target: &[u64], max_gen: u64, max_e: usize) -> Self {
        let mut target = target.to_vec();
        target.sort_unstable();
        target.dedup();
        Self {
            target_kind,
            target,
            max_gen,
            max_e,
            max_frobenius: None,
            mode: SearchMode::FirstHit,
        }
    }

    pub fn exhaustive(mut self) -> Self {
        self.mode = SearchMode::Exhaustive;
        self
    }

    pub fn with_max_frobenius(mut self, max_frobenius: i64) -> Self {
        self.max_frobenius = Some(max_frobenius);
        self
    }

    /// Rejects targets that no semigroup can realize.
    pub fn precheck(&self) -> Result<()> {
        if self.target.contains(&0) {
            return Err(Error::BadParameters("targets hold positive integers".into()));
        }
        match self.target_kind {
            TargetKind::DeltaOfSemigroup => {
                if let Some(&min) = self.target.first() {
                    let g = gcd_all(self.target.iter().copied());
                    if min != g {
                        return Err(Error::UnrealizableByGcdTest { min, gcd: g });
                    }
                }
            }
            TargetKind::LengthSetOfElement => {
                if self.target.contains(&1) && self.target.len() > 1 {
                    return Err(Error::UnrealizableLengthOne);
                }
            }
            TargetKind::DeltaOfElement => {}
        }
        if self.target.is_empty() && self.target_kind != TargetKind::DeltaOfSemigroup {
            return Err(Error::BadParameters("element targets must be nonempty".into()));
        }
        Ok(())
    }
}

/// The two open targets shipped as predefined queries.
pub fn open_targets(max_gen: u64, max_e: usize) -> Vec<SearchQuery> {
    [vec![1, 3, 4, 5], vec![1, 3, 6]]
        .iter()
        .map(|t| SearchQuery::new(TargetKind::DeltaOfSemigroup, t, max_gen, max_e))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub generators: Vec<u64>,
    /// The least element realizing an element target.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<u64>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))?;
        if let Some(x) = self.element {
            write!(f, " at x = {x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub query: SearchQuery,
    pub candidates: usize,
    pub witnesses: Vec<Witness>,
}

impl SearchOutcome {
    pub fn summary(&self) -> String {
        if self.witnesses.is_empty() {
            format!(
                "no witness within bounds (max_gen {}, max_e {}, {} candidates)",
                self.query.max_gen, self.query.max_e, self.candidates
            )
        } else {
            let found: Vec<String> = self.witnesses.iter().map(Witness::to_string).collect();
            found.join("\n")
        }
    }
}

fn candidates(query: &SearchQuery) -> Vec<NumericalSemigroup> {
    enumerate_semigroups(query.max_gen, query.max_e)
        .filter(|s| query.max_frobenius.map_or(true, |f| s.frobenius() <= f))
        .collect()
}

/// Runs `query` on the current rayon pool. Results are ordered by generator
/// tuple regardless of thread count.
pub fn realize(query: &SearchQuery) -> Result<SearchOutcome> {
    realize_with_catalog(query, None, 0)
}

/// As [`realize`]; semigroup-delta queries answer cataloged tuples from the
/// catalog and append a record for every tuple they fully scan.
pub fn realize_with_catalog(
    query: &SearchQuery,
    catalog: Option<&mut Catalog>,
    ts: u64,
) -> Result<SearchOutcome> {
    query.precheck()?;
    let pool = candidates(query);
    let mut outcome = SearchOutcome {
        query: query.clone(),
        candidates: pool.len(),
        witnesses: Vec::new(),
    };
    if query.target.is_empty() {
        // every semigroup other than N has a nonempty delta set
        return Ok(outcome);
    }

    if let (TargetKind::DeltaOfSemigroup, Some(catalog)) = (query.target_kind, catalog) {
        let target = DeltaSet::new(query.target.clone());
        let fresh: Vec<&NumericalSemigroup> =
            pool.iter().filter(|s| catalog.get(s.generators()).is_none()).collect();
        let computed: Vec<CatalogRecord> = fresh
            .par_iter()
            .map(|s| CatalogRecord::compute(s, ts))
            .collect::<Result<_>>()?;
        for record in computed {
            catalog.append(record)?;
        }
        outcome.witnesses = pool
            .iter()
            .filter(|s| catalog.get(s.generators()).is_some_and(|r| r.delta == target))
            .map(|s| Witness {
                generators: s.generators().to_vec(),
                element: None,
            })
            .collect();
        if query.mode == SearchMode::FirstHit {
            outcome.witnesses.truncate(1);
        }
        return Ok(outcome);
    }

    let test = |s: &NumericalSemigroup| -> Result<Option<Witness>> {
        let element = match query.target_kind {
            TargetKind::DeltaOfSemigroup => {
                if !semigroup_matches(s, &query.target)? {
                    return Ok(None);
                }
                None
            }
            TargetKind::DeltaOfElement => match least_element_with_delta(s, &query.target)? {
                Some(x) => Some(x),
                None => return Ok(None),
            },
            TargetKind::LengthSetOfElement => match least_element_with_lengths(s, &query.target)? {
                Some(x) => Some(x),
                None => return Ok(None),
            },
        };
        Ok(Some(Witness {
            generators: s.generators().to_vec(),
            element,
        }))
    };

    outcome.witnesses = match query.mode {
        SearchMode::FirstHit => pool
            .par_iter()
            .map(test)
            .find_map_first(Result::transpose)
            .transpose()?
            .into_iter()
            .collect(),
        SearchMode::Exhaustive => pool
            .par_iter()
            .map(test)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect(),
    };
    Ok(outcome)
}

/// `Δ(S) = target`, via the rejection cascade: minimum, partial scan, full scan.
pub fn semigroup_matches(s: &NumericalSemigroup, target: &[u64]) -> Result<bool> {
    if target.first() != Some(&s.min_delta()?) {
        return Ok(false);
    }
    let full = delta_bound(s)?;
    let ne = *s.generators().last().expect("nonempty");
    let outside = |g: u64| target.binary_search(&g).is_err();
    let partial = full.min(10 * ne * ne);
    if partial < full && scan_delta(s, partial, outside)?.is_none() {
        return Ok(false);
    }
    Ok(scan_delta(s, full, outside)?.is_some_and(|d| d.as_slice() == target))
}

/// Least `x <= delta_bound(S)` with `Δ(x) = target`.
pub fn least_element_with_delta(s: &NumericalSemigroup, target: &[u64]) -> Result<Option<u64>> {
    let step = s.min_delta()?;
    if gcd_all(target.iter().copied()) % step != 0 {
        return Ok(None);
    }
    let mut scanner = LengthScanner::new(s, delta_bound(s)?);
    let mut gaps = Vec::new();
    while let Some((x, lengths)) = scanner.advance() {
        gaps.clear();
        lengths.for_each_gap(step, |g| gaps.push(g));
        gaps.sort_unstable();
        gaps.dedup();
        if gaps == target {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Least `x` with `L(x) = target`. A length `l` needs `l n1 <= x <= l ne`,
/// so only `x <= min(target) ne` can qualify.
pub fn least_element_with_lengths(s: &NumericalSemigroup, target: &[u64]) -> Result<Option<u64>> {
    let (Some(&lo), Some(&hi)) = (target.first(), target.last()) else {
        return Ok(None);
    };
    let ne = *s.generators().last().expect("nonempty");
    let bound = (lo * ne).min(delta_bound(s)?);
    let want = LengthSet::new(target.to_vec());
    let mut scanner = LengthScanner::new(s, bound);
    while let Some((x, lengths)) = scanner.advance() {
        if x >= hi * s.multiplicity() && lengths.to_length_set() == want {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(v: &[NumericalSemigroup]) -> Vec<Vec<u64>> {
        v.iter().map(|s| s.generators().to_vec()).collect()
    }

    #[test]
    fn enumeration_small() {
        let all = gens(&enumerate_semigroups(5, 2).collect::<Vec<_>>());
        assert_eq!(all, vec![vec![2, 3], vec![2, 5], vec![3, 4], vec![3, 5], vec![4, 5]]);
        assert_eq!(enumerate_semigroups(1, 4).count(), 0);
        assert!(enumerate_semigroups(16, 4).any(|s| s.generators() == [6, 13, 14, 16]));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let mut want = Vec::new();
        for mask in 1u32..(1 << 11) {
            let raw: Vec<u64> = (0..11).filter(|b| mask >> b & 1 == 1).map(|b| b + 2).collect();
            if raw.len() < 2 || raw.len() > 4 {
                continue;
            }
            if let Ok(c) = NumericalSemigroup::construct(&raw) {
                if c.input_was_minimal {
                    want.push(raw);
                }
            }
        }
        want.sort();
        assert_eq!(gens(&enumerate_semigroups(12, 4).collect::<Vec<_>>()), want);
    }

    #[test]
    fn prechecks() {
        let q = SearchQuery::new(TargetKind::DeltaOfSemigroup, &[2, 3], 10, 3);
        assert!(matches!(realize(&q), Err(Error::UnrealizableByGcdTest { min: 2, gcd: 1 })));
        let q = SearchQuery::new(TargetKind::LengthSetOfElement, &[1, 2], 10, 3);
        assert!(matches!(realize(&q), Err(Error::UnrealizableLengthOne)));
    }

    #[test]
    fn element_searches() {
        let s = NumericalSemigroup::new(&[4, 9, 11]).unwrap();
        assert_eq!(least_element_with_delta(&s, &[2, 3]).unwrap(), Some(36));
        assert_eq!(least_element_with_lengths(&s, &[4, 6, 9]).unwrap(), Some(36));
        let q = SearchQuery::new(TargetKind::LengthSetOfElement, &[2, 3], 6, 2);
        let out = realize(&q).unwrap();
        assert_eq!(out.witnesses.len(), 1);
        let w = &out.witnesses[0];
        let s = NumericalSemigroup::new(&w.generators).unwrap();
        let lengths = crate::lengths::length_set(&s, w.element.unwrap());
        assert_eq!(lengths.as_slice(), &[2, 3]);
    }

    #[test]
    fn semigroup_search_small() {
        let q = SearchQuery::new(TargetKind::DeltaOfSemigroup, &[2], 9, 3).exhaustive();
        let out = realize(&q).unwrap();
        assert!(!out.witnesses.is_empty());
        for w in &out.witnesses {
            let s = NumericalSemigroup::new(&w.generators).unwrap();
            let d = crate::lengths::delta_semigroup(&s, None).unwrap().delta;
            assert_eq!(d.as_slice(), &[2]);
        }
    }
}
