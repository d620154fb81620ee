//! Factorizations: exponent vectors over the minimal generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::semigroup::NumericalSemigroup;

/// An exponent vector `(a1, ..., ae)`; its image is `sum ai * ni`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factorization(Vec<u64>);

impl Factorization {
    pub fn new(exponents: Vec<u64>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn length(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn shares_support(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).any(|(&a, &b)| a != 0 && b != 0)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u64>> for Factorization {
    fn from(v: Vec<u64>) -> Self {
        Self(v)
    }
}

/// Backtracking enumerator of fibers `φ⁻¹(x)` for `x <= bound`.
///
/// `suffix[k][v]` records whether `v` is a combination of `n_k, ..., n_e`,
/// so every branch explored by the search ends in a factorization.
pub struct Factorizer<'a> {
    generators: &'a [u64],
    bound: u64,
    suffix: Vec<Vec<bool>>,
}

impl<'a> Factorizer<'a> {
    pub fn new(semigroup: &'a NumericalSemigroup, bound: u64) -> Self {
        let generators = semigroup.generators();
        let e = generators.len();
        let size = bound as usize + 1;
        let mut suffix = vec![vec![false; size]; e + 1];
        suffix[e][0] = true;
        for k in (0..e).rev() {
            let g = generators[k] as usize;
            let (done, todo) = suffix.split_at_mut(k + 1);
            let next = &todo[0];
            let cur = &mut done[k];
            for v in 0..size {
                cur[v] = next[v] || (v >= g && cur[v - g]);
            }
        }
        Self {
            generators,
            bound,
            suffix,
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Calls `visit` on every factorization of `x` in ascending
    /// lexicographic order. Stops early when `visit` returns `false`.
    pub fn for_each(&self, x: u64, mut visit: impl FnMut(&[u64]) -> bool) {
        assert!(x <= self.bound, "element {x} beyond factorizer bound {}", self.bound);
        if !self.suffix[0][x as usize] {
            return;
        }
        let mut exps = vec![0u64; self.generators.len()];
        self.descend(0, x, &mut exps, &mut visit);
    }

    fn descend(
        &self,
        k: usize,
        rest: u64,
        exps: &mut [u64],
        visit: &mut impl FnMut(&[u64]) -> bool,
    ) -> bool {
        let e = self.generators.len();
        let g = self.generators[k];
        if k + 1 == e {
            exps[k] = rest / g;
            return visit(exps);
        }
        for a in 0..=rest / g {
            let left = rest - a * g;
            if !self.suffix[k + 1][left as usize] {
                continue;
            }
            exps[k] = a;
            if !self.descend(k + 1, left, exps, visit) {
                return false;
            }
        }
        exps[k] = 0;
        true
    }

    pub fn factorizations(&self, x: u64) -> Vec<Factorization> {
        let mut out = Vec::new();
        self.for_each(x, |a| {
            out.push(Factorization(a.to_vec()));
            true
        });
        out
    }

    pub fn count(&self, x: u64) -> usize {
        let mut n = 0;
        self.for_each(x, |_| {
            n += 1;
            true
        });
        n
    }
}

/// All factorizations of `x`, in ascending lexicographic order. Empty iff
/// `x` is not in the semigroup.
pub fn factorizations_of(semigroup: &NumericalSemigroup, x: u64) -> Vec<Factorization> {
    if !semigroup.contains(x) {
        return Vec::new();
    }
    Factorizer::new(semigroup, x).factorizations(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    fn f(v: &[u64]) -> Factorization {
        Factorization(v.to_vec())
    }

    #[test]
    fn fiber_of_36() {
        let s = sg(&[4, 9, 11]);
        let got = factorizations_of(&s, 36);
        assert_eq!(got, vec![f(&[0, 4, 0]), f(&[4, 1, 1]), f(&[9, 0, 0])]);
    }

    #[test]
    fn fiber_of_32_three_factorizations() {
        let s = sg(&[6, 13, 14, 16]);
        let got = factorizations_of(&s, 32);
        assert_eq!(got, vec![f(&[0, 0, 0, 2]), f(&[1, 2, 0, 0]), f(&[3, 0, 1, 0])]);
    }

    #[test]
    fn zero_and_non_members() {
        let s = sg(&[4, 9, 11]);
        assert_eq!(factorizations_of(&s, 0), vec![f(&[0, 0, 0])]);
        assert!(factorizations_of(&s, 14).is_empty());
    }

    #[test]
    fn brute_force_agreement() {
        let s = sg(&[5, 7, 9]);
        let fz = Factorizer::new(&s, 120);
        for x in 0..=120u64 {
            let mut brute = Vec::new();
            for a in 0..=x / 5 {
                for b in 0..=x / 7 {
                    for c in 0..=x / 9 {
                        if 5 * a + 7 * b + 9 * c == x {
                            brute.push(f(&[a, b, c]));
                        }
                    }
                }
            }
            assert_eq!(fz.factorizations(x), brute, "x = {x}");
        }
    }

    #[test]
    fn factorization_accessors() {
        let a = f(&[4, 0, 1]);
        assert_eq!(a.length(), 5);
        assert_eq!(a.support(), vec![0, 2]);
        assert!(a.shares_support(&f(&[0, 0, 3])));
        assert!(!a.shares_support(&f(&[0, 3, 0])));
        assert_eq!(a.to_string(), "(4,0,1)");
    }
}
