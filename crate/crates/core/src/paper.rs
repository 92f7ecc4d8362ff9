//! Registry of the worked examples: each ideal comes with its claimed prime
//! decomposition, quotient dimension, a construction recipe and, where
//! printed values exist, golden output polynomials.
//!
//! | id         | ring          | recipe         | outputs |
//! |------------|---------------|----------------|---------|
//! | `example1` | `K[x1..x6]`   | partition sums | 3       |
//! | `example2` | `K[x1..x5]`   | two-row matrix | 2       |
//! | `j6`       | `K[x1..x6]`   | recursion      | 3       |
//! | `in:<n>`   | `K[x1..xn]`   | recursion      | `n - 3` |

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{Prop1Input, SvPartition, SvVariant};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Counters, Engine};
use crate::ideal::Ideal;
use crate::membership::{CertificateRecord, RadicalEquality};
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingContext};

/// Largest family member certified by [`certify_all`] unless asked otherwise.
pub const DEFAULT_FAMILY_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    Example1,
    Example2,
    J6,
    /// `I_n` for `n >= 5`.
    Family(usize),
}

impl CaseId {
    /// File stem used in golden directories: `example1`, `in_7`, ...
    pub fn file_stem(&self) -> String {
        match self {
            CaseId::Family(n) => format!("in_{n}"),
            other => other.to_string(),
        }
    }

    /// The fixed cases followed by `in:5 ..= in:cap`.
    pub fn all(cap: usize) -> Vec<CaseId> {
        let mut ids = vec![CaseId::Example1, CaseId::Example2, CaseId::J6];
        ids.extend((5..=cap).map(CaseId::Family));
        ids
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::Example1 => f.write_str("example1"),
            CaseId::Example2 => f.write_str("example2"),
            CaseId::J6 => f.write_str("j6"),
            CaseId::Family(n) => write!(f, "in:{n}"),
        }
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(CaseId::Example1),
            "example2" => Ok(CaseId::Example2),
            "j6" => Ok(CaseId::J6),
            _ => {
                let n = s
                    .strip_prefix("in:")
                    .and_then(|n| n.parse::<usize>().ok())
                    .ok_or_else(|| Error::UnknownCase(s.to_string()))?;
                if n < 5 {
                    return Err(Error::UnknownCase(format!(
                        "{s} (the family starts at n = 5)"
                    )));
                }
                Ok(CaseId::Family(n))
            }
        }
    }
}

/// How a case builds its small generating set.
#[derive(Clone, Debug)]
pub enum Recipe {
    /// Level sums of a partition, checked with the given variant.
    Partition(SvPartition),
    /// `q1 = a1*p0 + b2*g`, `q2 = a2*p0 - b1*g`.
    TwoRow {
        a1: Polynomial,
        a2: Polynomial,
        b1: Polynomial,
        b2: Polynomial,
        g: Polynomial,
    },
    /// The recursive product-ideal construction.
    Recursive(Prop1Input),
}

impl Recipe {
    pub fn name(&self) -> &'static str {
        match self {
            Recipe::Partition(_) => "sv_combine",
            Recipe::TwoRow { .. } => "corollary1",
            Recipe::Recursive(_) => "prop1_construct",
        }
    }
}

/// A lower bound on the number of generators up to radical that the
/// library does not prove.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedLowerBound {
    pub value: usize,
    pub provenance: String,
}

const COHOMOLOGICAL: &str = "paper, cohomological argument, not machine-checked";
const HEIGHT: &str = "paper, height bound (ara >= height), not machine-checked";

#[derive(Clone, Debug)]
pub struct PaperCase {
    pub id: CaseId,
    pub ring: Ring,
    pub ideal: Ideal,
    /// Claimed prime components; their intersection should equal `ideal`.
    pub components: Vec<Ideal>,
    /// Claimed Krull dimension of the quotient.
    pub dimension: usize,
    pub recipe: Recipe,
    /// Expected outputs in canonical text form, if printed.
    pub golden: Option<Vec<String>>,
    pub claimed_lower_bound: ClaimedLowerBound,
}

const GOLDEN_EXAMPLE1: &[&str] = &["x1*x6", "x3*x6", "x1*x2 + x3*x4 + x5*x6"];
const GOLDEN_EXAMPLE2: &[&str] = &["x1*x2^2 + x2*x3*x4 + x3*x5", "x1*x2*x4 + x3*x4^2 - x1*x5"];
const GOLDEN_J6: &[&str] = &[
    "x1*x2^4 + x2^3*x3*x4 + x2^2*x3*x5 + x3*x6",
    "x1*x2*x4 + x3*x4^2 - x1*x5",
    "x1*x2^3*x4 + x2^2*x3*x4^2 + x1*x2^2*x5 + 2*x2*x3*x4*x5 + x3*x5^2 - x1*x6",
];

/// Built-in golden text for a case, if the worked example prints outputs.
pub fn builtin_golden(id: CaseId) -> Option<&'static [&'static str]> {
    match id {
        CaseId::Example1 => Some(GOLDEN_EXAMPLE1),
        CaseId::Example2 | CaseId::Family(5) => Some(GOLDEN_EXAMPLE2),
        CaseId::J6 | CaseId::Family(6) => Some(GOLDEN_J6),
        CaseId::Family(_) => None,
    }
}

fn parse_all(ring: &Ring, exprs: &[&str]) -> Result<Vec<Polynomial>> {
    exprs.iter().map(|e| Polynomial::parse(e, ring)).collect()
}

/// `I_n = (x1*x2 + x3*x4, x1*x5, ..., x1*xn, x3*x5, ..., x3*xn)`.
fn family(id: CaseId, n: usize, field: Field, order: MonomialOrder) -> Result<PaperCase> {
    let ring = RingContext::standard(field, n, order);
    let x = |i: usize| Polynomial::var(&ring, i - 1);
    let p0 = x(1) * x(2) + x(3) * x(4);
    let mut gens = vec![p0.clone()];
    gens.extend((5..=n).map(|j| x(1) * x(j)));
    gens.extend((5..=n).map(|j| x(3) * x(j)));
    let ideal = Ideal::new(&ring, gens)?;
    let mut first = vec![p0];
    first.extend((5..=n).map(x));
    let components = vec![Ideal::new(&ring, first)?, Ideal::new(&ring, [x(1), x(3)])?];
    let recipe = if id == CaseId::Example2 {
        Recipe::TwoRow {
            a1: x(2),
            a2: x(4),
            b1: x(1),
            b2: x(3),
            g: x(5),
        }
    } else {
        Recipe::Recursive(Prop1Input::new(
            x(2),
            x(4),
            x(1),
            x(3),
            (5..=n).map(x).collect(),
        )?)
    };
    let claimed_lower_bound = ClaimedLowerBound {
        value: n - 3,
        provenance: if n == 5 { HEIGHT } else { COHOMOLOGICAL }.to_string(),
    };
    Ok(PaperCase {
        id,
        ring: ring.clone(),
        ideal,
        components,
        dimension: n - 2,
        recipe,
        golden: builtin_golden(id).map(|g| g.iter().map(|s| s.to_string()).collect()),
        claimed_lower_bound,
    })
}

fn example1(field: Field, order: MonomialOrder) -> Result<PaperCase> {
    let ring = RingContext::standard(field, 6, order);
    let ideal = Ideal::parse(&ring, &["x1*x2 + x3*x4", "x1*x6", "x3*x6", "x5*x6"])?;
    let components = vec![
        Ideal::parse(&ring, &["x1*x2 + x3*x4", "x6"])?,
        Ideal::parse(&ring, &["x1", "x3", "x5"])?,
    ];
    let subsets = vec![
        parse_all(&ring, &["x1*x6"])?,
        parse_all(&ring, &["x3*x6"])?,
        parse_all(&ring, &["x1*x2 + x3*x4", "x5*x6"])?,
    ];
    let partition = SvPartition::from_polys(&ring, subsets, SvVariant::Lemma2)?;
    Ok(PaperCase {
        id: CaseId::Example1,
        ring: ring.clone(),
        ideal,
        components,
        dimension: 4,
        recipe: Recipe::Partition(partition),
        golden: Some(GOLDEN_EXAMPLE1.iter().map(|s| s.to_string()).collect()),
        claimed_lower_bound: ClaimedLowerBound {
            value: 3,
            provenance: COHOMOLOGICAL.to_string(),
        },
    })
}

/// Builds a case over `field` with monomial order `order`.
pub fn build_case_with(id: CaseId, field: Field, order: MonomialOrder) -> Result<PaperCase> {
    match id {
        CaseId::Example1 => example1(field, order),
        CaseId::Example2 => family(id, 5, field, order),
        CaseId::J6 => family(id, 6, field, order),
        CaseId::Family(n) if n >= 5 => family(id, n, field, order),
        CaseId::Family(n) => Err(Error::UnknownCase(format!("in:{n}"))),
    }
}

/// Builds a case over ℚ with grevlex.
pub fn build_case(id: CaseId) -> Result<PaperCase> {
    build_case_with(id, Field::Rational, MonomialOrder::Grevlex)
}

/// Outcome of checking `I = C_1 ∩ ... ∩ C_k`.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub holds: bool,
    pub intersection: Ideal,
    /// Generators of `I` not in the intersection.
    pub missing_from_intersection: Vec<Polynomial>,
    /// Generators of the intersection not in `I`.
    pub missing_from_ideal: Vec<Polynomial>,
    pub counters: Counters,
}

impl Engine {
    /// Exact ideal equality of `ideal` and the intersection of `components`,
    /// by membership of every generator in both directions.
    pub fn verify_decomposition(
        &self,
        ideal: &Ideal,
        components: &[Ideal],
    ) -> Result<DecompositionReport> {
        let (first, rest) = components
            .split_first()
            .ok_or_else(|| Error::MalformedInput("no components given".into()))?;
        let mut intersection = first.clone();
        for c in rest {
            intersection = self.intersect(&intersection, c)?;
        }
        if !crate::ring::same_ring(ideal.ring(), intersection.ring()) {
            return Err(Error::ContextMismatch);
        }
        let mut counters = Counters::default();
        let mut missing = |gens: &[Polynomial], target: &Ideal| -> Result<Vec<Polynomial>> {
            let mut out = Vec::new();
            for g in gens {
                let cert = self.ideal_member(g, target)?;
                counters += cert.counters;
                if !cert.holds() {
                    out.push(g.clone());
                }
            }
            Ok(out)
        };
        let missing_from_intersection = missing(ideal.gens(), &intersection)?;
        let missing_from_ideal = missing(intersection.gens(), ideal)?;
        Ok(DecompositionReport {
            holds: missing_from_intersection.is_empty() && missing_from_ideal.is_empty(),
            intersection,
            missing_from_intersection,
            missing_from_ideal,
            counters,
        })
    }
}

/// Settings for [`certify_case`].
#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub field: Field,
    pub order: MonomialOrder,
    pub engine: Engine,
    /// Directory of `<stem>.txt` golden files overriding the built-in values.
    pub golden_dir: Option<PathBuf>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            field: Field::Rational,
            order: MonomialOrder::Grevlex,
            engine: Engine::default(),
            golden_dir: None,
        }
    }
}

/// Per-claim verdicts. `None` means the claim is not declared for the case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub radical_equality: bool,
    pub decomposition: Option<bool>,
    pub dimension: Option<bool>,
    pub golden: Option<bool>,
    /// The recipe's own side conditions: the partition condition, or
    /// membership of every output in `(b1, b2)` with exact lifts.
    pub hypothesis: bool,
}

impl Verdicts {
    pub fn all_hold(&self) -> bool {
        self.radical_equality
            && self.hypothesis
            && self.decomposition != Some(false)
            && self.dimension != Some(false)
            && self.golden != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionClaim {
    pub claimed: usize,
    pub computed: Option<usize>,
}

/// Serializable certificate of one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub case_id: String,
    pub field: String,
    pub order: String,
    pub recipe: String,
    pub ideal: Vec<String>,
    pub generators: Vec<String>,
    pub verdicts: Verdicts,
    pub dimension: DimensionClaim,
    pub claimed_lower_bound: ClaimedLowerBound,
    pub membership_witnesses: Vec<CertificateRecord>,
    pub counters: Counters,
    /// Diagnostics for failed claims.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.verdicts.all_hold()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// A certificate with the live objects it was made from.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub case: PaperCase,
    pub generators: Vec<Polynomial>,
    pub radical: Option<RadicalEquality>,
    pub decomposition: Option<DecompositionReport>,
    pub certificate: Certificate,
}

/// Reads `<dir>/<stem>.txt`: one polynomial per line, `#` comments.
pub fn read_golden(dir: &Path, id: CaseId) -> Result<Option<Vec<String>>> {
    let path = dir.join(format!("{}.txt", id.file_stem()));
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(path)?;
    Ok(Some(
        text.lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect(),
    ))
}

struct RecipeRun {
    generators: Vec<Polynomial>,
    hypothesis: bool,
    counters: Counters,
    notes: Vec<String>,
}

fn run_recipe(engine: &Engine, recipe: &Recipe) -> Result<RecipeRun> {
    match recipe {
        Recipe::Partition(p) => {
            let report = engine.check_sv(p)?;
            let notes = if report.holds {
                vec![]
            } else {
                vec![report.to_string()]
            };
            Ok(RecipeRun {
                generators: crate::constructions::sv_sums(p),
                hypothesis: report.holds,
                counters: report.counters,
                notes,
            })
        }
        Recipe::TwoRow { a1, a2, b1, b2, g } => {
            let (q1, q2) = crate::constructions::Corollary1::generators(a1, a2, b1, b2, g)?;
            Ok(RecipeRun {
                generators: vec![q1, q2],
                hypothesis: true,
                counters: Counters::default(),
                notes: vec![],
            })
        }
        Recipe::Recursive(input) => match engine.prop1_outputs(input) {
            Ok((generators, membership)) => {
                let mut counters = Counters::default();
                for c in &membership {
                    counters += c.counters;
                }
                let hypothesis = membership.iter().all(|c| c.holds());
                Ok(RecipeRun {
                    generators,
                    hypothesis,
                    counters,
                    notes: vec![],
                })
            }
            Err(e @ Error::ResourceLimit { .. }) => Err(e),
            Err(e) => Ok(RecipeRun {
                generators: vec![],
                hypothesis: false,
                counters: Counters::default(),
                notes: vec![e.to_string()],
            }),
        },
    }
}

/// Runs the recipe of `id` and checks every claim attached to the case.
///
/// Failed claims show up as `false` verdicts; only resource limits and
/// invalid input are errors.
pub fn certify_case(id: CaseId, opts: &CertifyOptions) -> Result<CaseOutcome> {
    let case = build_case_with(id, opts.field, opts.order)?;
    let engine = &opts.engine;
    let run = run_recipe(engine, &case.recipe)?;
    let mut notes = run.notes;
    let mut counters = run.counters;

    let golden_text = match &opts.golden_dir {
        Some(dir) => read_golden(dir, id)?.or_else(|| case.golden.clone()),
        None => case.golden.clone(),
    };
    let golden = match &golden_text {
        Some(text) => {
            let expected: Result<Vec<Polynomial>> = text
                .iter()
                .map(|e| Polynomial::parse(e, &case.ring))
                .collect();
            let ok = expected.as_ref().is_ok_and(|e| *e == run.generators);
            if !ok {
                notes.push(format!(
                    "golden mismatch: expected [{}], got [{}]",
                    text.join(", "),
                    join(&run.generators)
                ));
            }
            Some(ok)
        }
        None => None,
    };

    let (radical, radical_ok) = if run.generators.is_empty() {
        (None, false)
    } else {
        let outputs = Ideal::new(&case.ring, run.generators.clone())?;
        let eq = engine.radical_equal(&case.ideal, &outputs)?;
        counters += eq.counters();
        let ok = eq.equal;
        if !ok {
            notes.push("radical equality fails".into());
        }
        (Some(eq), ok)
    };

    let decomposition = engine.verify_decomposition(&case.ideal, &case.components)?;
    counters += decomposition.counters;
    if !decomposition.holds {
        notes.push(format!(
            "decomposition fails: intersection is {}",
            decomposition.intersection
        ));
    }

    let computed = match engine.dimension(&case.ideal) {
        Ok(d) => Some(d),
        Err(Error::ImproperIdeal) => None,
        Err(e) => return Err(e),
    };
    let dimension_ok = computed == Some(case.dimension);
    if !dimension_ok {
        notes.push(format!(
            "dimension claimed {}, computed {computed:?}",
            case.dimension
        ));
    }

    let certificate = Certificate {
        case_id: id.to_string(),
        field: opts.field.to_string(),
        order: opts.order.name(),
        recipe: case.recipe.name().to_string(),
        ideal: case.ideal.gens().iter().map(ToString::to_string).collect(),
        generators: run.generators.iter().map(ToString::to_string).collect(),
        verdicts: Verdicts {
            radical_equality: radical_ok,
            decomposition: Some(decomposition.holds),
            dimension: Some(dimension_ok),
            golden,
            hypothesis: run.hypothesis,
        },
        dimension: DimensionClaim {
            claimed: case.dimension,
            computed,
        },
        claimed_lower_bound: case.claimed_lower_bound.clone(),
        membership_witnesses: radical
            .iter()
            .flat_map(|r| r.certificates().map(|c| c.record()))
            .collect(),
        counters,
        notes,
    };
    Ok(CaseOutcome {
        case,
        generators: run.generators,
        radical,
        decomposition: Some(decomposition),
        certificate,
    })
}

fn join(ps: &[Polynomial]) -> String {
    ps.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Certifies the given cases in parallel; results keep the input order.
pub fn certify_cases(ids: &[CaseId], opts: &CertifyOptions) -> Vec<Result<CaseOutcome>> {
    ids.par_iter().map(|&id| certify_case(id, opts)).collect()
}

/// Every fixed case plus `in:5 ..= in:cap`.
pub fn certify_all(cap: usize, opts: &CertifyOptions) -> Vec<Result<CaseOutcome>> {
    certify_cases(&CaseId::all(cap), opts)
}
