//! Sets of lengths and delta sets.
//!
//! Length sets of all elements up to a bound are produced by the recurrence
//! `L(0) = {0}`, `L(x) = ⋃ (1 + L(x - ni))`, with each `L(x)` stored as a
//! bitset indexed by length. Only the last `ne + 1` bitsets are kept, and for
//! each `x` only the words covering `[ceil(x / ne), floor(x / n1)]` are
//! touched, since every length of `x` lies in that interval.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Sorted distinct factorization lengths of one element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LengthSet(Vec<u64>);

/// Sorted distinct positive gaps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaSet(Vec<u64>);

macro_rules! sorted_set_impl {
    ($ty:ident) => {
        impl $ty {
            pub fn new(mut values: Vec<u64>) -> Self {
                values.sort_unstable();
                values.dedup();
                Self(values)
            }

            pub fn as_slice(&self) -> &[u64] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<u64> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, v: u64) -> bool {
                self.0.binary_search(&v).is_ok()
            }

            pub fn min(&self) -> Option<u64> {
                self.0.first().copied()
            }

            pub fn max(&self) -> Option<u64> {
                self.0.last().copied()
            }

            pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
                self.0.iter().copied()
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.iter().all(|&v| other.contains(v))
            }
        }

        impl From<Vec<u64>> for $ty {
            fn from(v: Vec<u64>) -> Self {
                Self::new(v)
            }
        }

        impl<const N: usize> From<[u64; N]> for $ty {
            fn from(v: [u64; N]) -> Self {
                Self::new(v.to_vec())
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (i, v) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "}}")
            }
        }
    };
}

sorted_set_impl!(LengthSet);
sorted_set_impl!(DeltaSet);

impl DeltaSet {
    /// Consecutive differences of a length set.
    pub fn of_lengths(lengths: &LengthSet) -> Self {
        Self::new(lengths.0.windows(2).map(|w| w[1] - w[0]).collect())
    }

    pub fn gcd(&self) -> u64 {
        crate::semigroup::gcd_all(self.iter())
    }
}

/// Outcome of a whole-semigroup delta scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaScan {
    pub delta: DeltaSet,
    pub bound: u64,
    /// True when the scan stopped below the guaranteed bound; `delta` is then
    /// only a subset of `Δ(S)`.
    pub partial: bool,
}

pub(crate) fn delta_bound_of(generators: &[u64]) -> Result<u64> {
    let e = generators.len() as u64;
    let n1 = generators[0];
    let n2 = generators[1];
    let ne = *generators.last().unwrap();
    let n = 2u64
        .checked_mul(e)
        .and_then(|v| v.checked_mul(n2))
        .and_then(|v| v.checked_mul(ne))
        .and_then(|v| v.checked_mul(ne))
        .and_then(|v| v.checked_add(n1.checked_mul(ne)?))
        .ok_or(Error::BoundOverflow)?;
    if n > i64::MAX as u64 {
        return Err(Error::BoundOverflow);
    }
    Ok(n)
}

/// `N = 2 e n2 ne^2 + n1 ne`; every element of `Δ(S)` already occurs in
/// `Δ(x)` for some `x <= N`.
pub fn delta_bound(semigroup: &NumericalSemigroup) -> Result<u64> {
    if semigroup.embedding_dimension() < 2 {
        return Err(Error::EmbeddingDimensionOne);
    }
    delta_bound_of(semigroup.generators())
}

/// Borrowed view of one length bitset.
#[derive(Clone, Copy)]
pub struct Lengths<'a> {
    words: &'a [u64],
    /// Bit index of `words[0]`.
    base: u64,
}

impl<'a> Lengths<'a> {
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, len: u64) -> bool {
        if len < self.base {
            return false;
        }
        let off = len - self.base;
        self.words
            .get((off / 64) as usize)
            .is_some_and(|w| w >> (off % 64) & 1 == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + 'a {
        let base = self.base;
        self.words.iter().enumerate().flat_map(move |(i, &w)| {
            let start = base + 64 * i as u64;
            BitIter(w).map(move |b| start + b)
        })
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn to_length_set(&self) -> LengthSet {
        LengthSet(self.iter().collect())
    }

    /// Reports every gap between consecutive lengths (possibly repeatedly).
    ///
    /// `step` must divide every gap; words that hold a full progression of
    /// difference `step` are then handled without visiting their bits.
    pub fn for_each_gap(&self, step: u64, mut report: impl FnMut(u64)) {
        let pattern = progression_mask(step);
        let mut last: Option<u64> = None;
        for (i, &w) in self.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let start = self.base + 64 * i as u64;
            let first = w.trailing_zeros();
            if let Some(mask) = pattern {
                if w == mask << first {
                    if let Some(prev) = last {
                        report(start + first as u64 - prev);
                    }
                    if w.count_ones() > 1 {
                        report(step);
                    }
                    last = Some(start + 63 - w.leading_zeros() as u64);
                    continue;
                }
            }
            for b in BitIter(w) {
                let pos = start + b;
                if let Some(prev) = last {
                    report(pos - prev);
                }
                last = Some(pos);
            }
        }
    }
}

fn progression_mask(step: u64) -> Option<u64> {
    if step == 0 || step >= 64 {
        return None;
    }
    let mut mask = 0u64;
    let mut b = 0;
    while b < 64 {
        mask |= 1 << b;
        b += step;
    }
    Some(mask)
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as u64;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Produces `L(0), L(1), ...` in order with a sliding window of `ne + 1`
/// bitsets.
pub struct LengthScanner<'s> {
    semigroup: &'s NumericalSemigroup,
    slots: Vec<Vec<u64>>,
    ranges: Vec<(usize, usize)>,
    next: u64,
    bound: u64,
}

impl<'s> LengthScanner<'s> {
    /// Scanner for all `x <= bound`.
    pub fn new(semigroup: &'s NumericalSemigroup, bound: u64) -> Self {
        let ne = *semigroup.generators().last().unwrap();
        let words = (bound / semigroup.multiplicity() / 64) as usize + 2;
        let window = ne as usize + 1;
        Self {
            semigroup,
            slots: vec![vec![0; words]; window],
            ranges: vec![(0, 0); window],
            next: 0,
            bound,
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Computes the next length set, or `None` once past the bound.
    pub fn advance(&mut self) -> Option<(u64, Lengths<'_>)> {
        let x = self.next;
        if x > self.bound {
            return None;
        }
        self.next += 1;
        let window = self.slots.len() as u64;
        let slot = (x % window) as usize;
        let mut dst = std::mem::take(&mut self.slots[slot]);
        let (old_lo, old_hi) = self.ranges[slot];
        dst[old_lo..=old_hi].fill(0);

        let (lo, hi) = if x == 0 {
            dst[0] = 1;
            (0, 0)
        } else {
            let gens = self.semigroup.generators();
            let ne = *gens.last().unwrap();
            let lo = (x.div_ceil(ne) / 64) as usize;
            let hi = (x / gens[0] / 64) as usize;
            if self.semigroup.contains(x) {
                for &n in gens.iter().take_while(|&&n| n <= x) {
                    let y = x - n;
                    if !self.semigroup.contains(y) {
                        continue;
                    }
                    let src = &self.slots[(y % window) as usize];
                    shift_or(&mut dst[lo..=hi], &src[lo..=hi], if lo > 0 { src[lo - 1] } else { 0 });
                }
            }
            (lo, hi)
        };
        self.slots[slot] = dst;
        self.ranges[slot] = (lo, hi);
        Some((
            x,
            Lengths {
                words: &self.slots[slot][lo..=hi],
                base: 64 * lo as u64,
            },
        ))
    }
}

/// `dst |= src << 1`, where `before` is the word preceding `src`.
#[inline]
fn shift_or(dst: &mut [u64], src: &[u64], before: u64) {
    let mut carry = before >> 63;
    for (d, &s) in dst.iter_mut().zip(src) {
        *d |= (s << 1) | carry;
        carry = s >> 63;
    }
}

/// `L(x)`, the set of factorization lengths of `x` (empty when `x ∉ S`).
pub fn length_set(semigroup: &NumericalSemigroup, x: u64) -> LengthSet {
    if !semigroup.contains(x) {
        return LengthSet::default();
    }
    let mut scanner = LengthScanner::new(semigroup, x);
    loop {
        let (y, lengths) = scanner.advance().expect("scan reaches x");
        if y == x {
            return lengths.to_length_set();
        }
    }
}

/// `Δ(x)`.
pub fn delta_of_element(semigroup: &NumericalSemigroup, x: u64) -> DeltaSet {
    DeltaSet::of_lengths(&length_set(semigroup, x))
}

/// `Δ(S)` as the union of `Δ(x)` over `x <= N`, or over `x <= bound_override`
/// (flagged partial when that is below `N`).
pub fn delta_semigroup(
    semigroup: &NumericalSemigroup,
    bound_override: Option<u64>,
) -> Result<DeltaScan> {
    let full = delta_bound(semigroup)?;
    let bound = bound_override.unwrap_or(full);
    let delta = scan_delta(semigroup, bound, |_| false)?.unwrap_or_default();
    Ok(DeltaScan {
        delta,
        bound,
        partial: bound < full,
    })
}

/// Union of `Δ(x)` for `x <= bound`, or `None` as soon as a gap satisfying
/// `reject` shows up.
pub(crate) fn scan_delta(
    semigroup: &NumericalSemigroup,
    bound: u64,
    reject: impl Fn(u64) -> bool,
) -> Result<Option<DeltaSet>> {
    let step = semigroup.min_delta()?;
    let mut seen = vec![false; (bound / semigroup.multiplicity()) as usize + 1];
    let mut rejected = false;
    let mut scanner = LengthScanner::new(semigroup, bound);
    while let Some((_, lengths)) = scanner.advance() {
        lengths.for_each_gap(step, |g| {
            if !seen[g as usize] {
                seen[g as usize] = true;
                rejected |= reject(g);
            }
        });
        if rejected {
            return Ok(None);
        }
    }
    let delta = seen
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(g, _)| g as u64)
        .collect();
    Ok(Some(DeltaSet(delta)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn element_lengths() {
        assert_eq!(length_set(&sg(&[4, 9, 11]), 36), LengthSet::from([4, 6, 9]));
        assert_eq!(length_set(&sg(&[7, 15, 17]), 49), LengthSet::from([3, 7]));
        assert_eq!(length_set(&sg(&[7, 15, 17]), 7), LengthSet::from([1]));
        assert_eq!(length_set(&sg(&[4, 9, 11]), 0), LengthSet::from([0]));
        assert!(length_set(&sg(&[4, 9, 11]), 14).is_empty());
    }

    #[test]
    fn element_deltas() {
        assert_eq!(delta_of_element(&sg(&[4, 9, 11]), 36), DeltaSet::from([2, 3]));
        assert_eq!(delta_of_element(&sg(&[6, 13, 14, 16]), 30), DeltaSet::from([3]));
        assert!(delta_of_element(&sg(&[6, 13, 14, 16]), 6).is_empty());
    }

    #[test]
    fn bounds() {
        assert_eq!(delta_bound(&sg(&[6, 13, 14, 16])).unwrap(), 26720);
        assert_eq!(delta_bound(&sg(&[7, 15, 17])).unwrap(), 26129);
        assert_eq!(delta_bound(&sg(&[2, 5])).unwrap(), 510);
        assert!(matches!(delta_bound(&sg(&[1])), Err(Error::EmbeddingDimensionOne)));
    }

    #[test]
    fn semigroup_deltas() {
        let d = delta_semigroup(&sg(&[6, 13, 14, 16]), None).unwrap();
        assert_eq!(d.delta, DeltaSet::from([1, 3]));
        assert_eq!(d.bound, 26720);
        assert!(!d.partial);
        assert_eq!(delta_semigroup(&sg(&[7, 15, 17]), None).unwrap().delta, DeltaSet::from([2, 4]));
        assert_eq!(
            delta_semigroup(&sg(&[5, 6, 19]), None).unwrap().delta,
            DeltaSet::from([1, 2, 3, 5])
        );
    }

    #[test]
    fn partial_scan_is_flagged() {
        let d = delta_semigroup(&sg(&[6, 13, 14, 16]), Some(100)).unwrap();
        assert!(d.partial);
        assert_eq!(d.bound, 100);
        let full = delta_semigroup(&sg(&[6, 13, 14, 16]), None).unwrap();
        assert!(d.delta.is_subset(&full.delta));
        let beyond = delta_semigroup(&sg(&[2, 5]), Some(1000)).unwrap();
        assert!(!beyond.partial);
    }

    #[test]
    fn embedding_dimension_one() {
        assert!(matches!(delta_semigroup(&sg(&[1]), None), Err(Error::EmbeddingDimensionOne)));
    }

    #[test]
    fn gap_reporting_fast_path_matches_bitwise() {
        // words with long runs (step 1) and progressions (step 3)
        let mut words = vec![0u64; 4];
        for b in 5..200 {
            words[b / 64] |= 1 << (b % 64);
        }
        words[3] |= 1 << 60;
        let view = Lengths { words: &words, base: 0 };
        let mut fast = std::collections::BTreeSet::new();
        view.for_each_gap(1, |g| {
            fast.insert(g);
        });
        let lens: Vec<u64> = view.iter().collect();
        let slow: std::collections::BTreeSet<u64> = lens.windows(2).map(|w| w[1] - w[0]).collect();
        assert_eq!(fast, slow);

        let mut words = vec![0u64; 5];
        for b in (7..250).step_by(3).chain([262, 301]) {
            words[b / 64] |= 1 << (b % 64);
        }
        let view = Lengths { words: &words, base: 128 };
        let mut fast = std::collections::BTreeSet::new();
        view.for_each_gap(3, |g| {
            fast.insert(g);
        });
        let lens: Vec<u64> = view.iter().collect();
        let slow: std::collections::BTreeSet<u64> = lens.windows(2).map(|w| w[1] - w[0]).collect();
        assert_eq!(fast, slow);
        assert!(view.contains(128 + 7) && !view.contains(128 + 8) && !view.contains(3));
    }
}
