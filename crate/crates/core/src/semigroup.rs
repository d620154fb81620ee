//! Numerical semigroups given by their minimal generating set.
//!
//! Membership is answered from the Apéry set with respect to the
//! multiplicity: `x ∈ S` iff `x >= w(x mod n1)`. The Apéry set is computed
//! once at construction by a shortest-path pass over the residues mod `n1`,
//! which also yields the Frobenius number.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_all<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(0, gcd)
}

/// A numerical semigroup `<n1, ..., ne>` with `n1 < ... < ne` minimal.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
}

/// Result of [`NumericalSemigroup::construct`].
#[derive(Clone, Debug)]
pub struct Construction {
    pub semigroup: NumericalSemigroup,
    /// Whether the raw input already was the sorted minimal generating set
    /// (up to order and duplicates).
    pub input_was_minimal: bool,
}

/// Frobenius number, gaps and genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapProfile {
    pub frobenius: i64,
    pub gaps: Vec<u64>,
    pub genus: usize,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, removing duplicates and
    /// redundant generators.
    pub fn construct(raw: &[u64]) -> Result<Construction> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::ContainsZero);
        }
        let g = gcd_all(raw.iter().copied());
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        // N >= n1 * ne > n1^2, so a huge multiplicity can never pass the
        // bound check; reject it before allocating residue tables.
        if sorted.len() >= 2 && sorted[0] > MAX_MULTIPLICITY {
            return Err(Error::BoundOverflow);
        }

        let generators = minimal_subset(&sorted);
        let input_was_minimal = generators.len() == sorted.len();
        let semigroup = Self::from_minimal(generators)?;
        Ok(Construction {
            semigroup,
            input_was_minimal,
        })
    }

    /// Shorthand for `construct(raw)?.semigroup`.
    pub fn new(raw: &[u64]) -> Result<Self> {
        Ok(Self::construct(raw)?.semigroup)
    }

    fn from_minimal(generators: Vec<u64>) -> Result<Self> {
        if generators.len() >= 2 {
            crate::lengths::delta_bound_of(&generators)?;
        }
        let apery = apery_by_shortest_paths(&generators, generators[0]);
        let max = *apery.iter().max().expect("apery set is nonempty");
        let frobenius = max as i64 - generators[0] as i64;
        Ok(Self {
            generators,
            apery,
            frobenius,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn is_whole_numbers(&self) -> bool {
        self.generators == [1]
    }

    pub fn contains(&self, x: u64) -> bool {
        let m = self.multiplicity();
        x >= self.apery[(x % m) as usize]
    }

    /// Membership for signed input; negative values are rejected.
    pub fn try_contains(&self, x: i64) -> Result<bool> {
        if x < 0 {
            return Err(Error::NegativeInput(x));
        }
        Ok(self.contains(x as u64))
    }

    /// Apéry set of `m`: entry `i` is the least element of `S` congruent to
    /// `i` modulo `m`.
    pub fn apery(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotAMember(m));
        }
        if m == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        Ok(apery_by_shortest_paths(&self.generators, m))
    }

    pub fn gap_profile(&self) -> GapProfile {
        let gaps: Vec<u64> = if self.frobenius < 0 {
            Vec::new()
        } else {
            (1..=self.frobenius as u64)
                .filter(|&x| !self.contains(x))
                .collect()
        };
        GapProfile {
            frobenius: self.frobenius,
            genus: gaps.len(),
            gaps,
        }
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        if self.frobenius < 0 {
            return Err(Error::WholeNumbersSemigroup);
        }
        let f = self.frobenius as u64;
        Ok((0..=f).all(|i| self.contains(i) != self.contains(f - i)))
    }

    /// `min Δ(S)`, the gcd of consecutive generator differences.
    pub fn min_delta(&self) -> Result<u64> {
        if self.embedding_dimension() < 2 {
            return Err(Error::EmbeddingDimensionOne);
        }
        Ok(gcd_all(self.generators.windows(2).map(|w| w[1] - w[0])))
    }

    /// Image of an exponent vector under the factorization homomorphism.
    pub fn evaluate(&self, exponents: &[u64]) -> u64 {
        exponents
            .iter()
            .zip(&self.generators)
            .map(|(a, n)| a * n)
            .sum()
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Parses `"6,13,14,16"` or `"<6, 13, 14, 16>"` into a raw generator list.
pub fn parse_generators(text: &str) -> Result<Vec<u64>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .unwrap_or(trimmed);
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {t:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|v| if v.is_empty() { Err(Error::EmptyInput) } else { Ok(v) })
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(&parse_generators(s)?)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<u64>::deserialize(deserializer)?;
        Self::new(&raw).map_err(serde::de::Error::custom)
    }
}

const MAX_MULTIPLICITY: u64 = 3_037_000_499;

/// Drops every generator that is a combination of smaller ones. `sorted`
/// must be ascending without duplicates.
fn minimal_subset(sorted: &[u64]) -> Vec<u64> {
    let m = sorted[0];
    let mut kept = vec![m];
    let mut least = apery_by_shortest_paths(&kept, m);
    for &g in &sorted[1..] {
        if g >= least[(g % m) as usize] {
            continue;
        }
        kept.push(g);
        least = apery_by_shortest_paths(&kept, m);
    }
    kept
}

/// Least element of `<generators>` in every residue class mod `m`.
fn apery_by_shortest_paths(generators: &[u64], m: u64) -> Vec<u64> {
    let m_usize = m as usize;
    let mut dist = vec![u64::MAX; m_usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in generators {
            let next = (r + (g % m) as usize) % m_usize;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_member(gens: &[u64], x: u64) -> bool {
        fn go(gens: &[u64], x: u64) -> bool {
            match gens.split_first() {
                None => x == 0,
                Some((&g, rest)) => (0..=x / g).any(|a| go(rest, x - a * g)),
            }
        }
        go(gens, x)
    }

    #[test]
    fn construct_examples() {
        let c = NumericalSemigroup::construct(&[6, 13, 14, 16]).unwrap();
        assert_eq!(c.semigroup.generators(), &[6, 13, 14, 16]);
        assert_eq!(c.semigroup.embedding_dimension(), 4);
        assert!(c.input_was_minimal);

        let c = NumericalSemigroup::construct(&[2, 5, 6]).unwrap();
        assert_eq!(c.semigroup.generators(), &[2, 5]);
        assert!(!c.input_was_minimal);

        let c = NumericalSemigroup::construct(&[1]).unwrap();
        assert_eq!(c.semigroup.generators(), &[1]);
        assert_eq!(c.semigroup.embedding_dimension(), 1);
    }

    #[test]
    fn construct_errors() {
        assert!(matches!(NumericalSemigroup::construct(&[]), Err(Error::EmptyInput)));
        assert!(matches!(NumericalSemigroup::construct(&[0, 3]), Err(Error::ContainsZero)));
        assert!(matches!(NumericalSemigroup::construct(&[4, 6]), Err(Error::GcdNotOne(2))));
    }

    #[test]
    fn duplicates_and_order_are_normalized() {
        let c = NumericalSemigroup::construct(&[16, 6, 14, 13, 6]).unwrap();
        assert_eq!(c.semigroup.generators(), &[6, 13, 14, 16]);
        assert!(c.input_was_minimal);
    }

    #[test]
    fn membership() {
        let s = NumericalSemigroup::new(&[4, 9, 11]).unwrap();
        assert!(s.contains(0));
        assert!(!s.contains(14));
        assert!(s.contains(36));
        assert!(matches!(s.try_contains(-1), Err(Error::NegativeInput(-1))));
        for x in 0..=3 * 14 {
            assert_eq!(s.contains(x), brute_member(&[4, 9, 11], x), "x = {x}");
        }
    }

    #[test]
    fn apery_examples() {
        let s = NumericalSemigroup::new(&[4, 9, 11]).unwrap();
        assert_eq!(s.apery(4).unwrap(), vec![0, 9, 18, 11]);
        assert!(matches!(s.apery(5), Err(Error::NotAMember(5))));
        let s = NumericalSemigroup::new(&[2, 5]).unwrap();
        assert_eq!(s.apery(2).unwrap(), vec![0, 5]);
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(n.apery(1).unwrap(), vec![0]);
        // non-multiplicity modulus
        let s = NumericalSemigroup::new(&[4, 9, 11]).unwrap();
        let w = s.apery(9).unwrap();
        assert_eq!(w.len(), 9);
        assert_eq!(w[0], 0);
        for (i, &v) in w.iter().enumerate() {
            assert_eq!(v % 9, i as u64);
            assert!(s.contains(v));
            assert!(v < 9 || !s.contains(v - 9));
        }
    }

    #[test]
    fn gap_profiles() {
        let s = NumericalSemigroup::new(&[4, 9, 11]).unwrap();
        let p = s.gap_profile();
        assert_eq!(p.frobenius, 14);
        assert_eq!(p.gaps, vec![1, 2, 3, 5, 6, 7, 10, 14]);
        assert_eq!(p.genus, 8);

        let p = NumericalSemigroup::new(&[2, 5]).unwrap().gap_profile();
        assert_eq!(p.frobenius, 3);
        assert_eq!(p.gaps, vec![1, 3]);

        let p = NumericalSemigroup::new(&[1]).unwrap().gap_profile();
        assert_eq!(p.frobenius, -1);
        assert!(p.gaps.is_empty());
    }

    #[test]
    fn symmetry() {
        assert!(NumericalSemigroup::new(&[2, 5]).unwrap().is_symmetric().unwrap());
        assert!(!NumericalSemigroup::new(&[4, 9, 11]).unwrap().is_symmetric().unwrap());
        assert!(NumericalSemigroup::new(&[8, 9, 15]).unwrap().is_symmetric().unwrap());
        assert!(NumericalSemigroup::new(&[4, 6, 9]).unwrap().is_symmetric().unwrap());
        assert!(matches!(
            NumericalSemigroup::new(&[1]).unwrap().is_symmetric(),
            Err(Error::WholeNumbersSemigroup)
        ));
    }

    #[test]
    fn min_delta_examples() {
        assert_eq!(NumericalSemigroup::new(&[7, 15, 17]).unwrap().min_delta().unwrap(), 2);
        assert_eq!(NumericalSemigroup::new(&[6, 13, 14, 16]).unwrap().min_delta().unwrap(), 1);
        assert_eq!(NumericalSemigroup::new(&[2, 5]).unwrap().min_delta().unwrap(), 3);
        assert!(matches!(
            NumericalSemigroup::new(&[1]).unwrap().min_delta(),
            Err(Error::EmbeddingDimensionOne)
        ));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_generators("6,13,14,16").unwrap(), vec![6, 13, 14, 16]);
        assert_eq!(parse_generators(" < 6, 13 ,14,16 > ").unwrap(), vec![6, 13, 14, 16]);
        assert!(parse_generators("6,-1").is_err());
        assert!(parse_generators("<>").is_err());
        let s: NumericalSemigroup = "<4,9,11>".parse().unwrap();
        assert_eq!(s.to_string(), "<4,9,11>");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[4,9,11]");
    }

    #[test]
    fn bound_overflow_rejected() {
        let big = 1u64 << 40;
        assert!(matches!(
            NumericalSemigroup::construct(&[big - 1, big]),
            Err(Error::BoundOverflow)
        ));
    }
}
