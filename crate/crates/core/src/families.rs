//! Explicit families of numerical semigroups with predicted invariants.
//!
//! Each constructor returns the semigroup together with what is predicted
//! about it; [`verify_family`] recomputes every predicted invariant from
//! scratch and reports PASS/FAIL (theorems) or CONSISTENT/INCONSISTENT
//! (conjectures). Predictions are never fed back into other computations.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factorization::{Factorization, Factorizer};
use crate::lengths::{delta_semigroup, DeltaSet};
use crate::presentation::{betti_elements, r_classes, verify_presentation, PresentationRelation};
use crate::semigroup::{gcd, NumericalSemigroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyId {
    /// `<p^x - 2, 2(p^x - 2) + p^j for j in 0..x>`
    MinPres { p: u64, x: u32 },
    /// `<n, n + d, (d + 1) n - d>`
    Arith48 { n: u64, d: u64 },
    /// `<n, n + 1, n^2 - n - 1>`
    Gap49 { n: u64 },
    /// `<p^2, p^2 + 2pd, p^2 - (p - 2) d>`
    SymmetricD { d: u64, p: u64 },
    /// `<g, 2g + 2^j for j in 0..=m>` with `g = 3 * 2^(m+k) - 2^m`
    CompleteIntersection { m: u32, k: u32 },
    /// `<2^x, 2 * 2^x + 2^j for j in 0..x>`
    Con3A { x: u32 },
    /// `<g, 2g + 2^j for j in 0..=x-2>` with `g = 2^(x-1) - 1`
    Con3B { x: u32 },
    /// `<g, 2g + 2^j for j in 0..=x>` with `g = 2^(x+1) - 3`
    Con3C { x: u32 },
    /// `<g, 2g + 2^j for j in 0..=x+c-5>` with `g = 2^(x+c-3) - c`
    Con3D { c: u64, x: u32 },
    /// Con3D with multiplier `n` in place of 2.
    Con3DScaled { c: u64, x: u32, n: u64 },
    /// `<g, n g + 2^j for j in 0..=x+h>` with `g = 2^x - c`; only the
    /// endpoints `j = 0` and `j = x + h` when `three_generator` is set.
    PowerFamily {
        c: u64,
        h: i64,
        n: u64,
        x: u32,
        #[serde(default)]
        three_generator: bool,
    },
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::MinPres { p, x } => write!(f, "minpres(p={p}, x={x})"),
            FamilyId::Arith48 { n, d } => write!(f, "arith48(n={n}, d={d})"),
            FamilyId::Gap49 { n } => write!(f, "gap49(n={n})"),
            FamilyId::SymmetricD { d, p } => write!(f, "symmetric-d(d={d}, p={p})"),
            FamilyId::CompleteIntersection { m, k } => write!(f, "complete-intersection(m={m}, k={k})"),
            FamilyId::Con3A { x } => write!(f, "con3a(x={x})"),
            FamilyId::Con3B { x } => write!(f, "con3b(x={x})"),
            FamilyId::Con3C { x } => write!(f, "con3c(x={x})"),
            FamilyId::Con3D { c, x } => write!(f, "con3d(c={c}, x={x})"),
            FamilyId::Con3DScaled { c, x, n } => write!(f, "con3d(c={c}, x={x}, n={n})"),
            FamilyId::PowerFamily {
                c,
                h,
                n,
                x,
                three_generator,
            } => write!(
                f,
                "power(c={c}, h={h}, n={n}, x={x}{})",
                if *three_generator { ", three-generator" } else { "" }
            ),
        }
    }
}

/// Predicted fiber of one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPrediction {
    pub element: u64,
    pub count: usize,
    /// The complete fiber, when predicted.
    pub exact: Option<Vec<Factorization>>,
    /// Number of R-classes, when predicted.
    pub classes: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predictions {
    pub conjectural: bool,
    pub delta: Option<DeltaSet>,
    pub betti: Option<Vec<u64>>,
    pub presentation: Option<Vec<PresentationRelation>>,
    pub presentation_size: Option<usize>,
    pub uniquely_presented: Option<bool>,
    pub symmetric: Option<bool>,
    pub complete_intersection: Option<bool>,
    pub fibers: Vec<FiberPrediction>,
    /// `(lo, hi)`: no element of `Δ(S)` lies strictly between them.
    pub empty_interval: Option<(u64, u64)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub semigroup: NumericalSemigroup,
    pub predictions: Predictions,
}

fn pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::BadParameters(format!("{base}^{exp} overflows")))
}

fn minimal(raw: Vec<u64>) -> Result<NumericalSemigroup> {
    let c = NumericalSemigroup::construct(&raw).map_err(|e| match e {
        Error::GcdNotOne(_) | Error::ContainsZero => {
            Error::DegenerateParameters(format!("{raw:?} does not generate a numerical semigroup"))
        }
        other => other,
    })?;
    let mut sorted = raw.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if !c.input_was_minimal || sorted.len() != raw.len() {
        return Err(Error::DegenerateParameters(format!(
            "{raw:?} is not a minimal generating set (minimal: {})",
            c.semigroup
        )));
    }
    Ok(c.semigroup)
}

/// `base, mult * base + 2^j` for each `j` in `exponents`.
fn power_generators(base: u64, mult: u64, exponents: impl IntoIterator<Item = u32>) -> Result<Vec<u64>> {
    let mut out = vec![base];
    for j in exponents {
        let g = mult
            .checked_mul(base)
            .and_then(|v| v.checked_add(2u64.checked_pow(j)?))
            .ok_or_else(|| Error::BadParameters("generator overflows".into()))?;
        out.push(g);
    }
    Ok(out)
}

fn unit(len: usize, entries: &[(usize, u64)]) -> Factorization {
    let mut v = vec![0; len];
    for &(i, a) in entries {
        v[i] += a;
    }
    Factorization::new(v)
}

fn relation(s: &NumericalSemigroup, a: Factorization, b: Factorization) -> Result<PresentationRelation> {
    PresentationRelation::new(s, a, b)
}

fn sort_relations(mut rels: Vec<PresentationRelation>) -> Vec<PresentationRelation> {
    rels.sort_by(|x, y| x.element.cmp(&y.element).then_with(|| x.cmp(y)));
    rels
}

/// `<p^x - 2, 2(p^x - 2) + 1, 2(p^x - 2) + p, ..., 2(p^x - 2) + p^(x-1)>`.
pub fn family_minpres(p: u64, x: u32) -> Result<FamilyInstance> {
    if p < 2 || x < 2 {
        return Err(Error::BadParameters("p and x must be at least 2".into()));
    }
    if (p, x) == (2, 2) {
        return Err(Error::ExcludedParameters(
            "(p, x) = (2, 2) gives the non-minimal generating set {2, 5, 6}".into(),
        ));
    }
    let g0 = pow(p, x)? - 2;
    let mut raw = vec![g0];
    for j in 0..x {
        raw.push(2 * g0 + pow(p, j)?);
    }
    let s = minimal(raw)?;
    let e = x as usize + 1;
    let xs = x as u64;
    let top = 2 * xs * (p - 1) - 1;

    let mut rels = vec![
        relation(&s, unit(e, &[(0, 2 * p - 3), (1, 2)]), unit(e, &[(x as usize, p)]))?,
        relation(
            &s,
            unit(e, &[(0, top)]),
            Factorization::new(
                std::iter::once(0)
                    .chain(std::iter::once(p - 2))
                    .chain(std::iter::repeat(p - 1).take(x as usize - 1))
                    .collect(),
            ),
        )?,
    ];
    for i in 1..x as usize {
        rels.push(relation(&s, unit(e, &[(i, p)]), unit(e, &[(0, 2 * (p - 1)), (i + 1, 1)]))?);
    }

    let gens = s.generators().to_vec();
    let mut betti: Vec<u64> = (1..=x as usize).map(|i| p * gens[i]).collect();
    betti.push(top * g0);
    betti.sort_unstable();

    let mut fibers = Vec::new();
    for i in 1..x as usize {
        fibers.push(FiberPrediction {
            element: p * gens[i],
            count: 2,
            exact: Some(sorted(vec![unit(e, &[(i, p)]), unit(e, &[(0, 2 * (p - 1)), (i + 1, 1)])])),
            classes: Some(2),
        });
    }
    fibers.push(FiberPrediction {
        element: p * gens[x as usize],
        count: if p == 2 { 3 } else { 2 },
        exact: None,
        classes: Some(2),
    });
    fibers.push(FiberPrediction {
        element: top * g0,
        count: 2,
        exact: Some(sorted(vec![rels[1].left.clone(), rels[1].right.clone()])),
        classes: Some(2),
    });

    Ok(FamilyInstance {
        id: FamilyId::MinPres { p, x },
        predictions: Predictions {
            conjectural: false,
            delta: Some(DeltaSet::from([p - 1, (p - 1) * xs])),
            betti: Some(betti),
            presentation_size: Some(x as usize + 1),
            presentation: Some(sort_relations(rels)),
            uniquely_presented: Some(p > 2),
            fibers,
            empty_interval: Some((p - 1, xs * (p - 1))),
            ..Default::default()
        },
        semigroup: s,
    })
}

fn sorted(mut v: Vec<Factorization>) -> Vec<Factorization> {
    v.sort();
    v
}

/// `<n, n + d, (d + 1) n - d>` with `Δ = {d, 2d, ..., floor((n + d - 1) / (d + 2)) d}`.
pub fn family_arith48(n: u64, d: u64) -> Result<FamilyInstance> {
    if n < 3 || d < 1 {
        return Err(Error::BadParameters("need n >= 3 and d >= 1".into()));
    }
    if gcd(n, d) != 1 {
        return Err(Error::GcdViolation { n, d });
    }
    let s = minimal(vec![n, n + d, (d + 1) * n - d])?;
    let top = (n + d - 1) / (d + 2);
    Ok(FamilyInstance {
        id: FamilyId::Arith48 { n, d },
        semigroup: s,
        predictions: Predictions {
            delta: Some(DeltaSet::new((1..=top).map(|k| k * d).collect())),
            ..Default::default()
        },
    })
}

/// `<n, n + 1, n^2 - n - 1>` with `Δ = [1, n - 2] ∪ {2n - 5}`.
pub fn family_gap49(n: u64) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(Error::BadParameters("need n >= 3".into()));
    }
    let s = minimal(vec![n, n + 1, n * n - n - 1])?;
    let mut delta: Vec<u64> = (1..=n - 2).collect();
    delta.push(2 * n - 5);
    Ok(FamilyInstance {
        id: FamilyId::Gap49 { n },
        semigroup: s,
        predictions: Predictions {
            delta: Some(DeltaSet::new(delta)),
            ..Default::default()
        },
    })
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

fn symmetric_d_checks(d: u64, p: u64) -> Result<()> {
    if d < 1 {
        return Err(Error::BadParameters("need d >= 1".into()));
    }
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::BadPrime(p));
    }
    if d % p == 0 {
        return Err(Error::DividesD { p, d });
    }
    if (p - 2) * d >= p * p {
        return Err(Error::DegenerateParameters(format!(
            "p^2 - (p-2)d is not positive for p = {p}, d = {d}"
        )));
    }
    Ok(())
}

/// `<p^2, p^2 + 2pd, p^2 - (p - 2) d>`, symmetric with `Δ = {d, 2d}`.
pub fn family_symmetric_d(d: u64, p: u64) -> Result<FamilyInstance> {
    symmetric_d_checks(d, p)?;
    let s = minimal(vec![p * p, p * p + 2 * p * d, p * p - (p - 2) * d])?;
    Ok(FamilyInstance {
        id: FamilyId::SymmetricD { d, p },
        semigroup: s,
        predictions: Predictions {
            delta: Some(DeltaSet::from([d, 2 * d])),
            symmetric: Some(true),
            ..Default::default()
        },
    })
}

/// Two forms of the symmetric `{d, 2d}` family, computed side by side.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetricFormComparison {
    pub d: u64,
    pub p: u64,
    /// `<p^2, p^2 + 2pd, p^2 - (p - 2) d>`, matching `a = m1 = p`,
    /// `m2 = p + 2d`, `b = p - d - 1`, `c = 1`.
    pub decomposition_form: Vec<u64>,
    pub decomposition_delta: DeltaSet,
    pub decomposition_symmetric: bool,
    /// `<p^2, p^2 + 2d, p^2 - (p - 2) d>`, with `2d` in place of `2pd`.
    pub variant_form: Vec<u64>,
    pub variant_minimal: bool,
    pub variant_delta: Option<DeltaSet>,
    pub variant_symmetric: Option<bool>,
    /// True when the variant form does not have `Δ = {d, 2d}`.
    pub discrepancy: bool,
}

pub fn compare_symmetric_forms(d: u64, p: u64) -> Result<SymmetricFormComparison> {
    let family = family_symmetric_d(d, p)?;
    let s = &family.semigroup;
    let decomposition_delta = delta_semigroup(s, None)?.delta;
    let decomposition_symmetric = s.is_symmetric()?;

    let mut variant_form = vec![p * p, p * p + 2 * d, p * p - (p - 2) * d];
    variant_form.sort_unstable();
    let (variant_minimal, variant_delta, variant_symmetric) =
        match NumericalSemigroup::construct(&variant_form) {
            Ok(c) if c.input_was_minimal => {
                let delta = delta_semigroup(&c.semigroup, None)?.delta;
                (true, Some(delta), Some(c.semigroup.is_symmetric()?))
            }
            _ => (false, None, None),
        };
    let expected = DeltaSet::from([d, 2 * d]);
    Ok(SymmetricFormComparison {
        d,
        p,
        decomposition_form: s.generators().to_vec(),
        decomposition_delta,
        decomposition_symmetric,
        variant_form,
        variant_minimal,
        discrepancy: variant_delta.as_ref() != Some(&expected),
        variant_delta,
        variant_symmetric,
    })
}

fn complete_intersection(m: u32, k: u32) -> Result<FamilyInstance> {
    if m < 1 {
        return Err(Error::BadParameters("need m >= 1".into()));
    }
    let g = 3 * pow(2, m + k)? - pow(2, m)?;
    let s = minimal(power_generators(g, 2, 0..=m)?)?;
    let e = m as usize + 2;
    let pk = pow(2, k)?;
    let mut rels = vec![relation(
        &s,
        unit(e, &[(0, 6 * pk - 1)]),
        unit(e, &[(m as usize + 1, 3 * pk - 1)]),
    )?];
    for i in 1..=m as usize {
        rels.push(relation(&s, unit(e, &[(i, 2)]), unit(e, &[(0, 2), (i + 1, 1)]))?);
    }
    let top = 3 * pk;
    let removed: Vec<u64> = match m {
        1 => Vec::new(),
        2 => (0..)
            .map(|j: u64| (top + 1).checked_sub(3 * j))
            .take_while(Option::is_some)
            .flatten()
            .collect(),
        _ => [1u64, 2, 5]
            .iter()
            .flat_map(|&n| {
                (0..)
                    .map(move |j: u64| (top + n).checked_sub(7 * j))
                    .take_while(Option::is_some)
                    .flatten()
            })
            .collect(),
    };
    let delta = (1..=top).filter(|&v| v == 1 || !removed.contains(&v)).collect();
    Ok(FamilyInstance {
        id: FamilyId::CompleteIntersection { m, k },
        semigroup: s,
        predictions: Predictions {
            conjectural: true,
            delta: Some(DeltaSet::new(delta)),
            presentation_size: Some(e - 1),
            presentation: Some(sort_relations(rels)),
            complete_intersection: Some(true),
            ..Default::default()
        },
    })
}

/// `i_0 = 0`; `i_j = i_{j-1} + 1` for odd `j`, `+ 2` for `j ≡ 2 (mod 4)`,
/// `+ 3` for `j ≡ 0 (mod 4)`.
pub fn con3d_offsets(count: usize) -> Vec<u64> {
    let mut out = vec![0u64];
    for j in 1..count {
        let prev = out[j - 1];
        let step = if j % 2 == 1 {
            1
        } else if j % 4 == 2 {
            2
        } else {
            3
        };
        out.push(prev + step);
    }
    out
}

fn con3d(c: u64, x: u32, n: u64) -> Result<FamilyInstance> {
    if c < 4 || x < 2 || n < 2 {
        return Err(Error::BadParameters("need c >= 4, x >= 2, n >= 2".into()));
    }
    let exp = x + c as u32 - 3;
    let g = pow(2, exp)?
        .checked_sub(c)
        .filter(|&g| g > 0)
        .ok_or_else(|| Error::BadParameters("2^(x+c-3) - c must be positive".into()))?;
    let s = minimal(power_generators(g, n, 0..=exp - 2)?)?;
    let offsets = con3d_offsets(((c - 1) / 2) as usize + 1);
    let mut delta: Vec<u64> = (1..n).collect();
    delta.extend(offsets.iter().map(|i| (n - 1) * (x as u64 + i - 1) + 1));
    let id = if n == 2 {
        FamilyId::Con3D { c, x }
    } else {
        FamilyId::Con3DScaled { c, x, n }
    };
    Ok(FamilyInstance {
        id,
        semigroup: s,
        predictions: Predictions {
            conjectural: true,
            delta: Some(DeltaSet::new(delta)),
            ..Default::default()
        },
    })
}

fn power_family(c: u64, h: i64, n: u64, x: u32, three_generator: bool) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::BadParameters("need n >= 2".into()));
    }
    let top = x as i64 + h;
    if top < 0 {
        return Err(Error::BadParameters("x + h must be nonnegative".into()));
    }
    let top = top as u32;
    let g = pow(2, x)?
        .checked_sub(c)
        .filter(|&g| g > 0)
        .ok_or_else(|| Error::BadParameters("2^x - c must be positive".into()))?;
    let exps: Vec<u32> = if three_generator {
        vec![0, top]
    } else {
        (0..=top).collect()
    };
    let s = minimal(power_generators(g, n, exps.iter().copied())?)?;
    let base = minimal(power_generators(g, 2, exps.iter().copied())?)?;
    let base_delta = delta_semigroup(&base, None)?.delta;
    if base_delta.min() != Some(1) {
        return Err(Error::BadParameters(format!(
            "Δ of the n = 2 member is {base_delta}, which does not contain 1"
        )));
    }
    let mut delta: Vec<u64> = (1..n).collect();
    delta.extend(base_delta.iter().filter(|&v| v > 1).map(|v| (n - 1) * (v - 1) + 1));
    Ok(FamilyInstance {
        id: FamilyId::PowerFamily {
            c,
            h,
            n,
            x,
            three_generator,
        },
        semigroup: s,
        predictions: Predictions {
            conjectural: true,
            delta: Some(DeltaSet::new(delta)),
            ..Default::default()
        },
    })
}

fn conjectured_delta(s: NumericalSemigroup, id: FamilyId, delta: DeltaSet) -> FamilyInstance {
    FamilyInstance {
        id,
        semigroup: s,
        predictions: Predictions {
            conjectural: true,
            delta: Some(delta),
            ..Default::default()
        },
    }
}

/// Constructors for the conjectural families; theorem families are also
/// accepted and dispatched to their own constructors.
pub fn family_conjecture(id: &FamilyId) -> Result<FamilyInstance> {
    match *id {
        FamilyId::CompleteIntersection { m, k } => complete_intersection(m, k),
        FamilyId::Con3A { x } => {
            if x < 2 {
                return Err(Error::BadParameters("need x >= 2".into()));
            }
            let s = minimal(power_generators(pow(2, x)?, 2, 0..x)?)?;
            Ok(conjectured_delta(s, id.clone(), DeltaSet::from([1, 2, 3])))
        }
        FamilyId::Con3B { x } => {
            if x < 3 {
                return Err(Error::BadParameters("need x >= 3".into()));
            }
            let s = minimal(power_generators(pow(2, x - 1)? - 1, 2, 0..=x - 2)?)?;
            Ok(conjectured_delta(s, id.clone(), DeltaSet::from([1, 2, x as u64])))
        }
        FamilyId::Con3C { x } => {
            if x < 2 {
                return Err(Error::BadParameters("need x >= 2".into()));
            }
            let s = minimal(power_generators(pow(2, x + 1)? - 3, 2, 0..=x)?)?;
            let x = x as u64;
            Ok(conjectured_delta(s, id.clone(), DeltaSet::from([1, x, x + 1])))
        }
        FamilyId::Con3D { c, x } => con3d(c, x, 2),
        FamilyId::Con3DScaled { c, x, n } => con3d(c, x, n),
        FamilyId::PowerFamily {
            c,
            h,
            n,
            x,
            three_generator,
        } => power_family(c, h, n, x, three_generator),
        _ => FamilyInstance::build(id),
    }
}

impl FamilyInstance {
    pub fn build(id: &FamilyId) -> Result<Self> {
        match *id {
            FamilyId::MinPres { p, x } => family_minpres(p, x),
            FamilyId::Arith48 { n, d } => family_arith48(n, d),
            FamilyId::Gap49 { n } => family_gap49(n),
            FamilyId::SymmetricD { d, p } => family_symmetric_d(d, p),
            _ => family_conjecture(id),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Consistent,
    Inconsistent,
}

impl CheckStatus {
    fn from_outcome(ok: bool, conjectural: bool) -> Self {
        match (ok, conjectural) {
            (true, false) => CheckStatus::Pass,
            (false, false) => CheckStatus::Fail,
            (true, true) => CheckStatus::Consistent,
            (false, true) => CheckStatus::Inconsistent,
        }
    }

    pub fn is_ok(self) -> bool {
        matches!(self, CheckStatus::Pass | CheckStatus::Consistent)
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Consistent => "CONSISTENT",
            CheckStatus::Inconsistent => "INCONSISTENT",
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub expected: Value,
    pub computed: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: FamilyId,
    pub generators: Vec<u64>,
    pub conjectural: bool,
    pub checks: Vec<Check>,
}

impl FamilyReport {
    /// No check failed. Inconsistent conjectures do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn inconsistencies(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Inconsistent)
    }
}

/// Recomputes every predicted invariant of `family`.
pub fn verify_family(family: &FamilyInstance) -> Result<FamilyReport> {
    let s = &family.semigroup;
    let pred = &family.predictions;
    let conj = pred.conjectural;
    let mut checks = Vec::new();
    let mut push = |name: &str, ok: bool, expected: Value, computed: Value| {
        checks.push(Check {
            name: name.to_string(),
            status: CheckStatus::from_outcome(ok, conj),
            expected,
            computed,
        });
    };

    if pred.delta.is_some() || pred.empty_interval.is_some() {
        let delta = delta_semigroup(s, None)?.delta;
        if let Some(expected) = &pred.delta {
            push("delta", &delta == expected, json!(expected), json!(delta));
        }
        if let Some((lo, hi)) = pred.empty_interval {
            let inside: Vec<u64> = delta.iter().filter(|&v| v > lo && v < hi).collect();
            push(
                "no delta strictly inside interval",
                inside.is_empty(),
                json!([lo, hi]),
                json!(inside),
            );
        }
    }

    if pred.symmetric.is_some() {
        let symmetric = s.is_symmetric()?;
        push("symmetric", Some(symmetric) == pred.symmetric, json!(pred.symmetric), json!(symmetric));
    }

    let wants_betti = pred.betti.is_some()
        || pred.presentation.is_some()
        || pred.presentation_size.is_some()
        || pred.uniquely_presented.is_some()
        || pred.complete_intersection.is_some();
    if wants_betti {
        let scan = betti_elements(s, None)?;
        let scanned = scan.relations();
        if let Some(expected) = &pred.betti {
            let values = scan.values();
            push("betti elements", &values == expected, json!(expected), json!(values));
        }
        if let Some(size) = pred.presentation_size {
            push("presentation size", scanned.len() == size, json!(size), json!(scanned.len()));
        }
        if let Some(expected) = &pred.presentation {
            let exact = expected == &scanned;
            let generates = verify_presentation(s, expected, scan.scan_bound)?;
            let ok = scan.complete && expected.len() == scanned.len() && generates;
            push(
                "presentation",
                ok,
                json!(expected),
                json!({ "scanned": scanned, "exact_match": exact, "generates": generates }),
            );
        }
        if let Some(expected) = pred.uniquely_presented {
            let unique = scan.records.iter().all(|r| r.factorization_count == 2);
            push("uniquely presented", unique == expected, json!(expected), json!(unique));
        }
        if let Some(expected) = pred.complete_intersection {
            let ci = scanned.len() + 1 == s.embedding_dimension();
            push("complete intersection", ci == expected, json!(expected), json!(ci));
        }
    }

    if !pred.fibers.is_empty() {
        let top = pred.fibers.iter().map(|f| f.element).max().unwrap_or(0);
        let factorizer = Factorizer::new(s, top);
        for fp in &pred.fibers {
            let fiber = factorizer.factorizations(fp.element);
            let mut ok = fiber.len() == fp.count;
            if let Some(exact) = &fp.exact {
                ok &= &fiber == exact;
            }
            let classes = r_classes(s, fp.element)?.classes.len();
            if let Some(k) = fp.classes {
                ok &= classes == k;
            }
            push(
                &format!("fiber of {}", fp.element),
                ok,
                json!({ "count": fp.count, "exact": fp.exact, "classes": fp.classes }),
                json!({ "count": fiber.len(), "fiber": fiber, "classes": classes }),
            );
        }
    }

    Ok(FamilyReport {
        family: family.id.clone(),
        generators: s.generators().to_vec(),
        conjectural: conj,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minpres_constructors() {
        let f = family_minpres(2, 3).unwrap();
        assert_eq!(f.semigroup.generators(), &[6, 13, 14, 16]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 3])));
        assert_eq!(f.predictions.betti, Some(vec![26, 28, 30, 32]));
        assert_eq!(f.predictions.uniquely_presented, Some(false));

        let f = family_minpres(3, 2).unwrap();
        assert_eq!(f.semigroup.generators(), &[7, 15, 17]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([2, 4])));
        assert_eq!(f.predictions.betti, Some(vec![45, 49, 51]));
        assert_eq!(f.predictions.uniquely_presented, Some(true));
        assert_eq!(f.predictions.presentation.as_ref().unwrap().len(), 3);

        assert!(matches!(family_minpres(2, 2), Err(Error::ExcludedParameters(_))));
        assert!(matches!(family_minpres(1, 3), Err(Error::BadParameters(_))));
    }

    #[test]
    fn arith_and_gap_constructors() {
        let f = family_arith48(7, 1).unwrap();
        assert_eq!(f.semigroup.generators(), &[7, 8, 13]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2])));
        assert_eq!(family_arith48(5, 1).unwrap().predictions.delta, Some(DeltaSet::from([1])));
        let f = family_arith48(4, 3).unwrap();
        assert_eq!(f.semigroup.generators(), &[4, 7, 13]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([3])));
        assert!(matches!(family_arith48(4, 2), Err(Error::GcdViolation { n: 4, d: 2 })));

        let f = family_gap49(5).unwrap();
        assert_eq!(f.semigroup.generators(), &[5, 6, 19]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3, 5])));
        assert_eq!(family_gap49(6).unwrap().predictions.delta, Some(DeltaSet::from([1, 2, 3, 4, 7])));
        let f = family_gap49(3).unwrap();
        assert_eq!(f.semigroup.generators(), &[3, 4, 5]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1])));
    }

    #[test]
    fn symmetric_constructors() {
        let f = family_symmetric_d(1, 3).unwrap();
        assert_eq!(f.semigroup.generators(), &[8, 9, 15]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2])));
        assert!(matches!(family_symmetric_d(2, 3), Err(Error::DegenerateParameters(_))));
        assert_eq!(family_symmetric_d(1, 5).unwrap().semigroup.generators(), &[22, 25, 35]);
        assert!(matches!(family_symmetric_d(1, 9), Err(Error::BadPrime(9))));
        assert!(matches!(family_symmetric_d(1, 2), Err(Error::BadPrime(2))));
        assert!(matches!(family_symmetric_d(5, 5), Err(Error::DividesD { p: 5, d: 5 })));
    }

    #[test]
    fn conjecture_constructors() {
        let f = family_conjecture(&FamilyId::CompleteIntersection { m: 1, k: 0 }).unwrap();
        assert_eq!(f.semigroup.generators(), &[4, 9, 10]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3])));
        assert!(f.predictions.conjectural);
        let rels = f.predictions.presentation.unwrap();
        let s = &f.semigroup;
        let want = sort_relations(vec![
            relation(s, vec![5, 0, 0].into(), vec![0, 0, 2].into()).unwrap(),
            relation(s, vec![0, 2, 0].into(), vec![2, 0, 1].into()).unwrap(),
        ]);
        assert_eq!(rels, want);

        let f = family_conjecture(&FamilyId::Con3A { x: 2 }).unwrap();
        assert_eq!(f.semigroup.generators(), &[4, 9, 10]);
        let f = family_conjecture(&FamilyId::Con3B { x: 3 }).unwrap();
        assert_eq!(f.semigroup.generators(), &[3, 7, 8]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3])));
        let f = family_conjecture(&FamilyId::Con3C { x: 2 }).unwrap();
        assert_eq!(f.semigroup.generators(), &[5, 11, 12, 14]);
        let f = family_conjecture(&FamilyId::Con3D { c: 4, x: 2 }).unwrap();
        assert_eq!(f.semigroup.generators(), &[4, 9, 10]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3])));
        assert!(matches!(
            family_conjecture(&FamilyId::Con3B { x: 2 }),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn complete_intersection_delta_formulas() {
        // m = 2, k = 1: top 6, remove {7 - 3j} \ {1} = {7, 4}
        let f = complete_intersection(2, 1).unwrap();
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3, 5, 6])));
        // m = 3, k = 1: top 6, remove {7, 8, 11, 0+.., 1, 4} \ {1} -> {4}
        let f = complete_intersection(3, 1).unwrap();
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3, 5, 6])));
        let f = complete_intersection(1, 1).unwrap();
        assert_eq!(f.semigroup.generators(), &[10, 21, 22]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3, 4, 5, 6])));
    }

    #[test]
    fn offsets_recurrence() {
        assert_eq!(con3d_offsets(6), vec![0, 1, 3, 4, 7, 8]);
    }

    #[test]
    fn power_family_readings() {
        // Con3D(4, 2) is g = 4 with powers up to 2^1, i.e. x = 3, c = 4, h = -2
        let f = family_conjecture(&FamilyId::PowerFamily {
            c: 4,
            h: -2,
            n: 2,
            x: 3,
            three_generator: false,
        })
        .unwrap();
        assert_eq!(f.semigroup.generators(), &[4, 9, 10]);
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3])));
        let f = family_conjecture(&FamilyId::PowerFamily {
            c: 4,
            h: -2,
            n: 3,
            x: 3,
            three_generator: true,
        })
        .unwrap();
        assert_eq!(f.semigroup.generators(), &[4, 13, 14]);
        // Δ(S_2) = {1, 2, 3} -> {1, 2} ∪ {3, 5}
        assert_eq!(f.predictions.delta, Some(DeltaSet::from([1, 2, 3, 5])));
    }

    #[test]
    fn serde_round_trip_of_ids() {
        let id = FamilyId::MinPres { p: 3, x: 2 };
        let text = serde_json::to_string(&id).unwrap();
        assert_eq!(text, r#"{"family":"min_pres","p":3,"x":2}"#);
        assert_eq!(serde_json::from_str::<FamilyId>(&text).unwrap(), id);
    }

    #[test]
    fn verify_small_families() {
        let r = verify_family(&family_minpres(3, 2).unwrap()).unwrap();
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Pass), "{r:#?}");
        assert!(r.checks.len() >= 8);
        let r = verify_family(&family_gap49(5).unwrap()).unwrap();
        assert!(r.passed());
        let r = verify_family(&family_conjecture(&FamilyId::Con3A { x: 2 }).unwrap()).unwrap();
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Consistent));
    }

    #[test]
    fn failing_prediction_is_reported() {
        let mut f = family_gap49(5).unwrap();
        f.predictions.delta = Some(DeltaSet::from([1, 2]));
        let r = verify_family(&f).unwrap();
        assert!(!r.passed());
        f.predictions.conjectural = true;
        let r = verify_family(&f).unwrap();
        assert!(r.passed());
        assert_eq!(r.inconsistencies().count(), 1);
    }
}
