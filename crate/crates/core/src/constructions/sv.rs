//! Partition-based combination of generators.
//!
//! Given `P = P0 ∪ ... ∪ Pr` with `|P0| = 1`, set `q_l = Σ_{p ∈ P_l} p^e(p)`.
//! Then `√(P) = √(q0, ..., qr)` provided that for every level `l ≥ 1` and
//! distinct `p, p'` in `P_l`:
//!
//! * [`SvVariant::Lemma1`]: `p*p' ∈ (p'')` for a single `p''` in some earlier
//!   level, or
//! * [`SvVariant::Lemma2`]: `p*p'` lies in the radical of the ideal generated
//!   by all earlier levels.
//!
//! The second condition is weaker, so it applies to more partitions.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{Counters, Engine};
use crate::ideal::Ideal;
use crate::membership::{MembershipCertificate, RadicalEquality};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SvVariant {
    Lemma1,
    #[default]
    Lemma2,
}

impl std::str::FromStr for SvVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma1" => Ok(SvVariant::Lemma1),
            "lemma2" => Ok(SvVariant::Lemma2),
            _ => Err(Error::MalformedPartition(format!("unknown variant `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SvElement {
    pub poly: Polynomial,
    pub exponent: u32,
}

impl SvElement {
    pub fn new(poly: Polynomial) -> Self {
        SvElement { poly, exponent: 1 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SvPartition {
    ring: Ring,
    subsets: Vec<Vec<SvElement>>,
    variant: SvVariant,
}

impl SvPartition {
    pub fn new(ring: &Ring, subsets: Vec<Vec<SvElement>>, variant: SvVariant) -> Result<Self> {
        match subsets.first() {
            None => return Err(Error::MalformedPartition("no subsets".into())),
            Some(p0) if p0.len() != 1 => {
                return Err(Error::MalformedPartition(format!(
                    "the first subset must have exactly one element, found {}",
                    p0.len()
                )))
            }
            _ => {}
        }
        for (l, subset) in subsets.iter().enumerate() {
            if subset.is_empty() {
                return Err(Error::MalformedPartition(format!("subset {l} is empty")));
            }
            for e in subset {
                if !same_ring(ring, e.poly.ring()) {
                    return Err(Error::ContextMismatch);
                }
                if e.exponent == 0 {
                    return Err(Error::MalformedPartition(
                        "exponents must be positive".into(),
                    ));
                }
                if e.poly.is_zero() {
                    return Err(Error::MalformedPartition(format!(
                        "subset {l} contains the zero polynomial"
                    )));
                }
            }
        }
        let all: Vec<&Polynomial> = subsets.iter().flatten().map(|e| &e.poly).collect();
        for (k, f) in all.iter().enumerate() {
            if all[..k].contains(f) {
                return Err(Error::MalformedPartition(format!(
                    "{f} appears more than once"
                )));
            }
        }
        Ok(SvPartition {
            ring: ring.clone(),
            subsets,
            variant,
        })
    }

    /// All exponents equal to one.
    pub fn from_polys(
        ring: &Ring,
        subsets: Vec<Vec<Polynomial>>,
        variant: SvVariant,
    ) -> Result<Self> {
        let subsets = subsets
            .into_iter()
            .map(|s| s.into_iter().map(SvElement::new).collect())
            .collect();
        SvPartition::new(ring, subsets, variant)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn subsets(&self) -> &[Vec<SvElement>] {
        &self.subsets
    }

    pub fn variant(&self) -> SvVariant {
        self.variant
    }

    pub fn with_variant(&self, variant: SvVariant) -> Self {
        SvPartition {
            variant,
            ..self.clone()
        }
    }

    /// Replaces every exponent, reading them level by level.
    pub fn with_exponents(&self, mut exps: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        let subsets = self
            .subsets
            .iter()
            .enumerate()
            .map(|(l, s)| {
                s.iter()
                    .enumerate()
                    .map(|(k, e)| SvElement {
                        poly: e.poly.clone(),
                        exponent: exps(l, k),
                    })
                    .collect()
            })
            .collect();
        SvPartition::new(&self.ring, subsets, self.variant)
    }

    /// The union of the subsets, level by level.
    pub fn generating_set(&self) -> Vec<Polynomial> {
        self.subsets.iter().flatten().map(|e| e.poly.clone()).collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generating_set()).expect("same ring")
    }

    /// True when the union of the subsets is exactly the generator set of `ideal`.
    pub fn covers(&self, ideal: &Ideal) -> bool {
        let set = self.generating_set();
        set.iter().all(|p| ideal.gens().contains(p)) && ideal.gens().iter().all(|g| set.contains(g))
    }

    /// Unordered pairs of elements per level `l ≥ 1`.
    fn pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (l, subset) in self.subsets.iter().enumerate().skip(1) {
            for a in 0..subset.len() {
                for b in a + 1..subset.len() {
                    out.push((l, a, b));
                }
            }
        }
        out
    }
}

/// A pair `(p, p')` at `level` that fails the condition.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub level: usize,
    pub first: Polynomial,
    pub second: Polynomial,
}

/// Outcome of a partition condition check.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub variant: SvVariant,
    pub holds: bool,
    /// Sorted by level, then by position within the level.
    pub violations: Vec<Violation>,
    /// One certificate per pair that satisfied the condition: the successful
    /// principal-ideal membership (`lemma1`) or radical membership (`lemma2`).
    pub witnesses: Vec<MembershipCertificate>,
    pub counters: Counters,
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.variant {
            SvVariant::Lemma1 => "lemma1",
            SvVariant::Lemma2 => "lemma2",
        };
        if self.holds {
            return write!(f, "{name} condition holds");
        }
        write!(
            f,
            "{name} condition fails for {} pair(s)",
            self.violations.len()
        )?;
        for v in &self.violations {
            write!(f, "\n  level {}: ({}) * ({})", v.level, v.first, v.second)?;
        }
        Ok(())
    }
}

/// Combined generators with the condition report and, unless forced, the
/// radical-equality certificate against the partition's ideal.
#[derive(Clone, Debug)]
pub struct SvCombination {
    pub generators: Vec<Polynomial>,
    pub condition: ConditionReport,
    pub certificate: Option<RadicalEquality>,
}

impl SvCombination {
    pub fn certified(&self) -> bool {
        self.certificate.as_ref().is_some_and(|c| c.equal)
    }
}

enum PairOutcome {
    Holds(MembershipCertificate, Counters),
    Fails(Counters),
}

impl Engine {
    pub fn check_sv_lemma1(&self, partition: &SvPartition) -> Result<ConditionReport> {
        let subsets = partition.subsets();
        let outcomes = partition
            .pairs()
            .par_iter()
            .map(|&(l, a, b)| {
                let product = &subsets[l][a].poly * &subsets[l][b].poly;
                let mut counters = Counters::default();
                for earlier in subsets[..l].iter().flatten() {
                    let principal = Ideal::new(partition.ring(), [earlier.poly.clone()])?;
                    let cert = self.ideal_member(&product, &principal)?;
                    counters += cert.counters;
                    if cert.holds() {
                        return Ok(PairOutcome::Holds(cert, counters));
                    }
                }
                Ok(PairOutcome::Fails(counters))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(report(partition, SvVariant::Lemma1, outcomes))
    }

    pub fn check_sv_lemma2(&self, partition: &SvPartition) -> Result<ConditionReport> {
        let subsets = partition.subsets();
        let outcomes = partition
            .pairs()
            .par_iter()
            .map(|&(l, a, b)| {
                let product = &subsets[l][a].poly * &subsets[l][b].poly;
                let earlier = Ideal::new(
                    partition.ring(),
                    subsets[..l].iter().flatten().map(|e| e.poly.clone()),
                )?;
                let cert = self.radical_member(&product, &earlier)?;
                let counters = cert.counters;
                Ok(if cert.holds() {
                    PairOutcome::Holds(cert, counters)
                } else {
                    PairOutcome::Fails(counters)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(report(partition, SvVariant::Lemma2, outcomes))
    }

    /// Checks the condition selected by the partition's variant.
    pub fn check_sv(&self, partition: &SvPartition) -> Result<ConditionReport> {
        match partition.variant() {
            SvVariant::Lemma1 => self.check_sv_lemma1(partition),
            SvVariant::Lemma2 => self.check_sv_lemma2(partition),
        }
    }

    /// `q_l = Σ_{p ∈ P_l} p^e(p)` for every level.
    ///
    /// Without `force`, a failing condition is an error and the output is
    /// certified against the partition's ideal. With `force` the sums are
    /// returned regardless and no certification is run.
    pub fn sv_combine(&self, partition: &SvPartition, force: bool) -> Result<SvCombination> {
        let condition = self.check_sv(partition)?;
        if !condition.holds && !force {
            return Err(Error::ConditionFailed(condition.to_string()));
        }
        let generators = sv_sums(partition);
        let certificate = if force {
            None
        } else {
            let combined = Ideal::new(partition.ring(), generators.clone())?;
            Some(self.radical_equal(&partition.ideal(), &combined)?)
        };
        Ok(SvCombination {
            generators,
            condition,
            certificate,
        })
    }
}

/// The level sums without any checks.
pub fn sv_sums(partition: &SvPartition) -> Vec<Polynomial> {
    partition
        .subsets()
        .iter()
        .map(|subset| {
            subset
                .iter()
                .fold(Polynomial::zero(partition.ring()), |acc, e| {
                    acc + e.poly.pow(e.exponent)
                })
        })
        .collect()
}

fn report(
    partition: &SvPartition,
    variant: SvVariant,
    outcomes: Vec<PairOutcome>,
) -> ConditionReport {
    let mut violations = Vec::new();
    let mut witnesses = Vec::new();
    let mut counters = Counters::default();
    for (&(l, a, b), outcome) in partition.pairs().iter().zip(outcomes) {
        match outcome {
            PairOutcome::Holds(cert, c) => {
                counters += c;
                witnesses.push(cert);
            }
            PairOutcome::Fails(c) => {
                counters += c;
                violations.push(Violation {
                    level: l,
                    first: partition.subsets()[l][a].poly.clone(),
                    second: partition.subsets()[l][b].poly.clone(),
                });
            }
        }
    }
    ConditionReport {
        variant,
        holds: violations.is_empty(),
        violations,
        witnesses,
        counters,
    }
}
