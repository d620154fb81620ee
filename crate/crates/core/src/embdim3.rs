//! Structure of three-generated numerical semigroups.
//!
//! Non-symmetric `<n1, n2, n3>`: each `ci * ni` (with `ci` minimal such that
//! `ci * ni ∈ <nj, nk>`) has exactly two factorizations, and the three
//! relations `ci * ei ~ rij * ej + rik * ek` form the unique minimal
//! presentation.
//!
//! Symmetric `<n1, n2, n3>`: the semigroup is `<a m1, a m2, b m1 + c m2>`
//! with `gcd(m1, m2) = 1 = gcd(a, b m1 + c m2)` and `a, b + c >= 2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::lengths::{delta_semigroup, DeltaSet, LengthSet};
use crate::presentation::PresentationRelation;
use crate::semigroup::{gcd, NumericalSemigroup};

fn require_ed3(semigroup: &NumericalSemigroup) -> Result<()> {
    let e = semigroup.embedding_dimension();
    if e != 3 {
        return Err(Error::WrongEmbeddingDimension { expected: 3, found: e });
    }
    Ok(())
}

/// `ci`, `rij` and the derived `δ1, δ2, δ3` of a non-symmetric semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ed3Invariants {
    pub c: [u64; 3],
    /// `r[i][j]` is the coefficient of `nj` in `ci * ni`; the diagonal is 0.
    pub r: [[u64; 3]; 3],
    pub delta1: i64,
    pub delta2: u64,
    pub delta3: i64,
}

impl Ed3Invariants {
    /// Sum of the three kernel vectors `ci ei - rij ej - rik ek`; always zero.
    pub fn kernel_sum(&self) -> [i64; 3] {
        let mut sum = [0i64; 3];
        for i in 0..3 {
            for (j, s) in sum.iter_mut().enumerate() {
                *s += if i == j { self.c[i] as i64 } else { -(self.r[i][j] as i64) };
            }
        }
        sum
    }

    pub fn betti_values(&self, semigroup: &NumericalSemigroup) -> [u64; 3] {
        let g = semigroup.generators();
        [self.c[0] * g[0], self.c[1] * g[1], self.c[2] * g[2]]
    }
}

pub fn ed3_invariants(semigroup: &NumericalSemigroup) -> Result<Ed3Invariants> {
    require_ed3(semigroup)?;
    if semigroup.is_symmetric()? {
        return Err(Error::SymmetricSemigroup);
    }
    let g = semigroup.generators();
    let mut c = [0u64; 3];
    let mut r = [[0u64; 3]; 3];
    for i in 0..3 {
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for multiple in 1.. {
            let target = multiple * g[i];
            let reps: Vec<(u64, u64)> = (0..=target / g[j])
                .filter(|&a| (target - a * g[j]) % g[k] == 0)
                .map(|a| (a, (target - a * g[j]) / g[k]))
                .collect();
            match reps.as_slice() {
                [] => continue,
                [(a, b)] => {
                    c[i] = multiple;
                    r[i][j] = *a;
                    r[i][k] = *b;
                    break;
                }
                _ => {
                    return Err(Error::Internal(format!(
                        "{target} has {} representations in <{}, {}> for non-symmetric {semigroup}",
                        reps.len(),
                        g[j],
                        g[k]
                    )))
                }
            }
        }
    }
    let delta1 = c[0] as i64 - (r[0][1] + r[0][2]) as i64;
    let delta2 = (c[1] as i64 - (r[1][0] + r[1][2]) as i64).unsigned_abs();
    let delta3 = (r[2][0] + r[2][1]) as i64 - c[2] as i64;
    Ok(Ed3Invariants {
        c,
        r,
        delta1,
        delta2,
        delta3,
    })
}

/// The three relations `((c1,0,0),(0,r12,r13))`, `((0,c2,0),(r21,0,r23))`,
/// `((0,0,c3),(r31,r32,0))`, oriented and ordered like
/// [`crate::minimal_presentation`].
pub fn nonsymmetric_presentation(semigroup: &NumericalSemigroup) -> Result<Vec<PresentationRelation>> {
    let inv = ed3_invariants(semigroup)?;
    let mut out = (0..3)
        .map(|i| {
            let mut pure = vec![0; 3];
            pure[i] = inv.c[i];
            let mut mixed = inv.r[i].to_vec();
            mixed[i] = 0;
            PresentationRelation::new(semigroup, Factorization::new(pure), Factorization::new(mixed))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|x, y| x.element.cmp(&y.element).then_with(|| x.cmp(y)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricDecomposition {
    pub a: u64,
    pub m1: u64,
    pub m2: u64,
    pub b: u64,
    pub c: u64,
    /// `floor(c / m1)`
    pub r: u64,
    /// `floor(b / m2)`
    pub s: u64,
    /// Positions of `a m1`, `a m2` and `b m1 + c m2` in the sorted
    /// generator list.
    pub order: [usize; 3],
}

fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (x as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

pub fn symmetric_decomposition(semigroup: &NumericalSemigroup) -> Result<SymmetricDecomposition> {
    require_ed3(semigroup)?;
    if !semigroup.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    let g = semigroup.generators();
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let a = gcd(g[i], g[j]);
        if a < 2 {
            continue;
        }
        let (m1, m2, third) = (g[i] / a, g[j] / a, g[k]);
        if gcd(m1, m2) != 1 || gcd(a, third) != 1 {
            continue;
        }
        let c = if m1 == 1 {
            0
        } else {
            match mod_inverse(m2 % m1, m1) {
                Some(inv) => (third % m1) * inv % m1,
                None => continue,
            }
        };
        if c * m2 > third {
            continue;
        }
        let b = (third - c * m2) / m1;
        if b + c < 2 {
            continue;
        }
        return Ok(SymmetricDecomposition {
            a,
            m1,
            m2,
            b,
            c,
            r: c / m1,
            s: b / m2,
            order: [i, j, k],
        });
    }
    Err(Error::DecompositionNotFound)
}

impl SymmetricDecomposition {
    fn to_sorted(&self, coords: [u64; 3]) -> Factorization {
        let mut out = vec![0; 3];
        for (slot, value) in self.order.iter().zip(coords) {
            out[*slot] = value;
        }
        Factorization::new(out)
    }

    /// `a (b m1 + c m2)`, the element whose length set is described by
    /// [`symmetric_key_length_set`].
    pub fn key_element(&self) -> u64 {
        self.a * (self.b * self.m1 + self.c * self.m2)
    }

    /// `{((m2,0,0),(0,m1,0)), ((0,0,a),(b,c,0))}` in sorted coordinates.
    pub fn presentation(&self, semigroup: &NumericalSemigroup) -> Result<Vec<PresentationRelation>> {
        let mut out = vec![
            PresentationRelation::new(
                semigroup,
                self.to_sorted([self.m2, 0, 0]),
                self.to_sorted([0, self.m1, 0]),
            )?,
            PresentationRelation::new(
                semigroup,
                self.to_sorted([0, 0, self.a]),
                self.to_sorted([self.b, self.c, 0]),
            )?,
        ];
        out.sort_by(|x, y| x.element.cmp(&y.element).then_with(|| x.cmp(y)));
        Ok(out)
    }

    /// True iff `a = b + c + k (m2 - m1)` for some `k ∈ [-s-1, r+1]`, the
    /// condition for `|Δ(S)| = 1`.
    pub fn predicts_single_delta(&self) -> bool {
        let step = self.m2 as i64 - self.m1 as i64;
        let base = (self.b + self.c) as i64;
        (-(self.s as i64) - 1..=self.r as i64 + 1).any(|k| self.a as i64 == base + k * step)
    }

    /// The element `a(b m1 + c m2) + a m1 m2` with its factorizations
    /// `(m2, 0, a)` and `(b - s m2, c + s m1 + m1, 0)` in sorted coordinates.
    pub fn shifted_pair(&self) -> (u64, Factorization, Factorization) {
        let element = self.key_element() + self.a * self.m1 * self.m2;
        (
            element,
            self.to_sorted([self.m2, 0, self.a]),
            self.to_sorted([self.b - self.s * self.m2, self.c + self.s * self.m1 + self.m1, 0]),
        )
    }
}

/// Lengths of `a (b m1 + c m2)`: `a` together with
/// `b + c + k (m2 - m1)` for `k ∈ [-s, r]`.
pub fn symmetric_key_length_set(d: &SymmetricDecomposition) -> LengthSet {
    let step = d.m2 as i64 - d.m1 as i64;
    let base = (d.b + d.c) as i64;
    let mut lengths: Vec<u64> = (-(d.s as i64)..=d.r as i64)
        .map(|k| (base + k * step) as u64)
        .collect();
    lengths.push(d.a);
    LengthSet::new(lengths)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltaShape {
    SizeOne,
    /// `Δ(S) = {d, 2d}`
    SizeTwoConforming,
    /// A two-element delta set other than `{d, 2d}`; never expected.
    SizeTwoViolation,
    SizeThreePlus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ed3Classification {
    pub kind: DeltaShape,
    pub d: u64,
    pub delta: DeltaSet,
}

/// Classifies an exact `Δ(S)` against the shape `{d, 2d}`.
pub fn classify_delta(delta: DeltaSet, d: u64) -> Ed3Classification {
    let kind = match delta.as_slice() {
        [_] => DeltaShape::SizeOne,
        [x, y] if *x == d && *y == 2 * d => DeltaShape::SizeTwoConforming,
        [_, _] => DeltaShape::SizeTwoViolation,
        _ => DeltaShape::SizeThreePlus,
    };
    Ed3Classification { kind, d, delta }
}

pub fn classify_two_element_delta(semigroup: &NumericalSemigroup) -> Result<Ed3Classification> {
    require_ed3(semigroup)?;
    let scan = delta_semigroup(semigroup, None)?;
    Ok(classify_delta(scan.delta, semigroup.min_delta()?))
}

/// Everything the `ed3` command prints.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Ed3Report {
    pub generators: Vec<u64>,
    pub symmetric: bool,
    pub invariants: Option<Ed3Invariants>,
    pub decomposition: Option<SymmetricDecomposition>,
    pub presentation: Vec<PresentationRelation>,
    pub classification: Ed3Classification,
}

pub fn ed3_report(semigroup: &NumericalSemigroup) -> Result<Ed3Report> {
    require_ed3(semigroup)?;
    let symmetric = semigroup.is_symmetric()?;
    let (invariants, decomposition, presentation) = if symmetric {
        let d = symmetric_decomposition(semigroup)?;
        let p = d.presentation(semigroup)?;
        (None, Some(d), p)
    } else {
        (
            Some(ed3_invariants(semigroup)?),
            None,
            nonsymmetric_presentation(semigroup)?,
        )
    };
    Ok(Ed3Report {
        generators: semigroup.generators().to_vec(),
        symmetric,
        invariants,
        decomposition,
        presentation,
        classification: classify_two_element_delta(semigroup)?,
    })
}
