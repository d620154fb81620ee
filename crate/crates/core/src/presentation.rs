//! R-classes, Betti elements and minimal presentations.
//!
//! Two factorizations of `n` are R-related when a chain of factorizations
//! with pairwise intersecting supports joins them; `n` is a Betti element
//! when its fiber splits into more than one R-class. Betti elements are
//! searched among `w + ni` with `w` a nonzero element of the Apéry set of the
//! multiplicity and `i >= 2`: some R-class of a Betti element avoids the
//! first generator, and removing any generator `ni` used there leaves an
//! element whose factorizations never use `n1`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::{Factorization, Factorizer};
use crate::lengths::delta_bound;
use crate::semigroup::NumericalSemigroup;
use crate::union_find::DisjointSets;

pub const DEFAULT_FACTORIZATION_CAP: usize = 1_000_000;

/// The R-classes of one fiber. Each class is sorted and classes are ordered
/// by their least member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RClassPartition {
    pub element: u64,
    pub classes: Vec<Vec<Factorization>>,
}

impl RClassPartition {
    pub fn factorization_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    fn class_index(&self) -> HashMap<&Factorization, usize> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |f| (f, i)))
            .collect()
    }
}

/// A pair of distinct factorizations of the same element. `left` is the
/// lexicographically smaller side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PresentationRelation {
    pub left: Factorization,
    pub right: Factorization,
    pub element: u64,
}

impl PresentationRelation {
    /// Builds a relation from two factorizations, checking that their images
    /// agree.
    pub fn new(semigroup: &NumericalSemigroup, a: Factorization, b: Factorization) -> Result<Self> {
        let e = semigroup.embedding_dimension();
        if a.exponents().len() != e || b.exponents().len() != e {
            return Err(Error::BadParameters(format!(
                "relation sides must have {e} entries"
            )));
        }
        let left = semigroup.evaluate(a.exponents());
        let right = semigroup.evaluate(b.exponents());
        if left != right {
            return Err(Error::InvalidRelation { left, right });
        }
        let (left_side, right_side) = if a <= b { (a, b) } else { (b, a) };
        Ok(Self {
            left: left_side,
            right: right_side,
            element: left,
        })
    }
}

impl fmt::Display for PresentationRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {} [{}]", self.left, self.right, self.element)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRecord {
    pub value: u64,
    pub partition: RClassPartition,
    pub factorization_count: usize,
}

/// Betti elements found up to `scan_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiScan {
    pub records: Vec<BettiRecord>,
    pub scan_bound: u64,
    /// Every candidate lies below the scan bound and the derived relations
    /// pass [`verify_presentation`] over it.
    pub complete: bool,
}

impl BettiScan {
    pub fn values(&self) -> Vec<u64> {
        self.records.iter().map(|r| r.value).collect()
    }

    /// `k - 1` relations per Betti element with `k` classes, chaining the
    /// least member of each class.
    pub fn relations(&self) -> Vec<PresentationRelation> {
        let mut out = Vec::new();
        for record in &self.records {
            let reps: Vec<&Factorization> =
                record.partition.classes.iter().map(|c| &c[0]).collect();
            for pair in reps.windows(2) {
                let (a, b) = (pair[0].clone(), pair[1].clone());
                let (left, right) = if a <= b { (a, b) } else { (b, a) };
                out.push(PresentationRelation {
                    left,
                    right,
                    element: record.value,
                });
            }
        }
        out
    }
}

fn partition_fiber(element: u64, fiber: Vec<Factorization>, e: usize) -> RClassPartition {
    let mut sets = DisjointSets::new(fiber.len());
    let mut first_with: Vec<Option<usize>> = vec![None; e];
    for (j, f) in fiber.iter().enumerate() {
        for i in f.support() {
            match first_with[i] {
                Some(k) => {
                    sets.union(k, j);
                }
                None => first_with[i] = Some(j),
            }
        }
    }
    // fiber is sorted, so classes come out sorted and ordered by least member
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<Factorization>> = Vec::new();
    for (j, f) in fiber.into_iter().enumerate() {
        let root = sets.find(j);
        let idx = *class_of_root.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(f);
    }
    RClassPartition { element, classes }
}

fn collect_fiber(factorizer: &Factorizer<'_>, n: u64, cap: usize) -> Result<Vec<Factorization>> {
    let mut fiber = Vec::new();
    let mut overflow = false;
    factorizer.for_each(n, |a| {
        if fiber.len() == cap {
            overflow = true;
            return false;
        }
        fiber.push(Factorization::new(a.to_vec()));
        true
    });
    if overflow {
        return Err(Error::TooManyFactorizations { element: n, cap });
    }
    Ok(fiber)
}

/// R-classes of `φ⁻¹(n)`, refusing fibers larger than
/// [`DEFAULT_FACTORIZATION_CAP`].
pub fn r_classes(semigroup: &NumericalSemigroup, n: u64) -> Result<RClassPartition> {
    r_classes_capped(semigroup, n, DEFAULT_FACTORIZATION_CAP)
}

pub fn r_classes_capped(
    semigroup: &NumericalSemigroup,
    n: u64,
    cap: usize,
) -> Result<RClassPartition> {
    if !semigroup.contains(n) {
        return Err(Error::NotAMember(n));
    }
    let factorizer = Factorizer::new(semigroup, n);
    let fiber = collect_fiber(&factorizer, n, cap)?;
    Ok(partition_fiber(n, fiber, semigroup.embedding_dimension()))
}

/// Elements that may be Betti elements: `w + ni`, `w ∈ Ap(S, n1) \ {0}`,
/// `i >= 2`. Sorted and deduplicated.
pub fn betti_candidates(semigroup: &NumericalSemigroup) -> Vec<u64> {
    let apery = semigroup
        .apery(semigroup.multiplicity())
        .expect("multiplicity is an element");
    let mut out: Vec<u64> = apery
        .iter()
        .filter(|&&w| w != 0)
        .flat_map(|&w| semigroup.generators()[1..].iter().map(move |&n| w + n))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn scan_betti(semigroup: &NumericalSemigroup, bound: u64) -> Result<(Vec<BettiRecord>, bool)> {
    let candidates = betti_candidates(semigroup);
    let covered = candidates.last().map_or(true, |&m| m <= bound);
    let in_range: Vec<u64> = candidates.into_iter().filter(|&c| c <= bound).collect();
    let top = in_range.last().copied().unwrap_or(0);
    let factorizer = Factorizer::new(semigroup, top);
    let e = semigroup.embedding_dimension();
    let mut records = Vec::new();
    for n in in_range {
        let fiber = collect_fiber(&factorizer, n, DEFAULT_FACTORIZATION_CAP)?;
        if fiber.len() < 2 {
            continue;
        }
        let partition = partition_fiber(n, fiber, e);
        if partition.classes.len() >= 2 {
            records.push(BettiRecord {
                value: n,
                factorization_count: partition.factorization_count(),
                partition,
            });
        }
    }
    Ok((records, covered))
}

/// Betti elements up to `scan_bound` (default: the delta bound `N`).
pub fn betti_elements(semigroup: &NumericalSemigroup, scan_bound: Option<u64>) -> Result<BettiScan> {
    let bound = match scan_bound {
        Some(b) => b,
        None => delta_bound(semigroup)?,
    };
    if semigroup.embedding_dimension() < 2 {
        return Err(Error::EmbeddingDimensionOne);
    }
    let (records, covered) = scan_betti(semigroup, bound)?;
    let mut scan = BettiScan {
        records,
        scan_bound: bound,
        complete: false,
    };
    scan.complete = covered && verify_presentation(semigroup, &scan.relations(), bound)?;
    Ok(scan)
}

/// One relation per adjacent pair of R-classes of every Betti element,
/// ordered by element.
pub fn minimal_presentation(semigroup: &NumericalSemigroup) -> Result<Vec<PresentationRelation>> {
    let scan = betti_elements(semigroup, None)?;
    if !scan.complete {
        return Err(Error::Internal(format!(
            "Betti scan of {semigroup} is not complete up to {}",
            scan.scan_bound
        )));
    }
    Ok(scan.relations())
}

/// True iff every Betti element has exactly two factorizations.
pub fn is_uniquely_presented(semigroup: &NumericalSemigroup) -> Result<bool> {
    let scan = betti_elements(semigroup, None)?;
    Ok(scan.records.iter().all(|r| r.factorization_count == 2))
}

/// Lower and upper bounds on the size of a minimal presentation:
/// `e - 1` and `(2 n1 - e + 1)(e - 2) / 2 + 1`.
pub fn presentation_size_bounds(semigroup: &NumericalSemigroup) -> (u64, u64) {
    let e = semigroup.embedding_dimension() as u64;
    let n1 = semigroup.multiplicity();
    let lower = e.saturating_sub(1);
    let upper = if e >= 2 { (2 * n1 + 1 - e) * (e - 2) / 2 + 1 } else { 0 };
    (lower, upper)
}

/// Checks that `relations` generate the kernel congruence on every fiber of
/// an element `<= bound`.
///
/// A move by a relation of degree `m < n` inside `φ⁻¹(n)` adds the same
/// nonzero vector to both sides, so it never leaves an R-class. Fiber
/// graphs are therefore connected up to `bound` exactly when, for each
/// Betti element `n <= bound`, the relations of degree `n` connect its
/// R-classes; that is what is tested here.
pub fn verify_presentation(
    semigroup: &NumericalSemigroup,
    relations: &[PresentationRelation],
    bound: u64,
) -> Result<bool> {
    let e = semigroup.embedding_dimension();
    let mut by_element: HashMap<u64, Vec<&PresentationRelation>> = HashMap::new();
    for r in relations {
        if r.left.exponents().len() != e || r.right.exponents().len() != e {
            return Err(Error::BadParameters(format!(
                "relation sides must have {e} entries"
            )));
        }
        let left = semigroup.evaluate(r.left.exponents());
        let right = semigroup.evaluate(r.right.exponents());
        if left != right {
            return Err(Error::InvalidRelation { left, right });
        }
        by_element.entry(left).or_default().push(r);
    }
    if e < 2 {
        return Ok(true);
    }
    let (records, _) = scan_betti(semigroup, bound)?;
    for record in &records {
        let index = record.partition.class_index();
        let mut sets = DisjointSets::new(record.partition.classes.len());
        for r in by_element.get(&record.value).into_iter().flatten() {
            sets.union(index[&r.left], index[&r.right]);
        }
        if sets.components() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
