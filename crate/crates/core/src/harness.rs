//! Theorem suites: hypothesis gating, per-condition verdicts, exhaustive
//! runs over the catalog and constrained model search.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::congruences;
use crate::enumerate::{self, GenerationConfig, OrderMode};
use crate::error::Error;
use crate::predicates::{self, KernelProperty, Predicate, Readings};
use crate::relations::GreenKind;
use crate::structure::{OrderedSemigroup, StructureJson};
use crate::witness::{for_all, pairs_in, PredicateResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Thm2,
    Thm4,
    Thm5,
    Thm6,
    Thm7Open,
    Thm8,
    Thm51,
    ThmWc,
    Lemma3,
    Lemma7,
    Cor1,
    CorPiInverse,
    CorPiTSimple,
    CorHstar,
    CorCpr,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::Thm2,
        TheoremId::Thm4,
        TheoremId::Thm5,
        TheoremId::Thm6,
        TheoremId::Thm7Open,
        TheoremId::Thm8,
        TheoremId::Thm51,
        TheoremId::ThmWc,
        TheoremId::Lemma3,
        TheoremId::Lemma7,
        TheoremId::Cor1,
        TheoremId::CorPiInverse,
        TheoremId::CorPiTSimple,
        TheoremId::CorHstar,
        TheoremId::CorCpr,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm4 => "thm4",
            TheoremId::Thm5 => "thm5",
            TheoremId::Thm6 => "thm6",
            TheoremId::Thm7Open => "thm7-open",
            TheoremId::Thm8 => "thm8",
            TheoremId::Thm51 => "thm51",
            TheoremId::ThmWc => "thm-wc",
            TheoremId::Lemma3 => "lemma3",
            TheoremId::Lemma7 => "lemma7",
            TheoremId::Cor1 => "cor1",
            TheoremId::CorPiInverse => "cor-pi-inverse",
            TheoremId::CorPiTSimple => "cor-pi-t-simple",
            TheoremId::CorHstar => "cor-hstar",
            TheoremId::CorCpr => "cor-cpr",
        }
    }

    pub fn mode(self) -> SuiteMode {
        match self {
            TheoremId::ThmWc | TheoremId::CorPiTSimple => SuiteMode::Implication,
            TheoremId::Lemma3 | TheoremId::Lemma7 => SuiteMode::Property,
            _ => SuiteMode::Equivalence,
        }
    }

    /// Reading flags that can change this suite's conditions.
    fn readings(self) -> &'static [Reading] {
        match self {
            TheoremId::Thm5 => &[Reading::EveryInversePower, Reading::EveryGeneratorPower],
            TheoremId::Thm6 | TheoremId::Lemma7 | TheoremId::CorPiTSimple => &[Reading::EveryGeneratorPower],
            TheoremId::Thm4 | TheoremId::CorHstar => &[Reading::CompleteSemilattice],
            TheoremId::Thm8 | TheoremId::CorCpr => &[Reading::CompleteSemilattice, Reading::EveryGeneratorPower],
            _ => &[],
        }
    }

    /// Ids from a comma list, or every id for `all`.
    pub fn parse_list(list: &str) -> Result<Vec<TheoremId>, Error> {
        if list.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        list.split(',').map(str::parse).collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase();
        Self::ALL.into_iter().find(|t| t.id() == key).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteMode {
    /// All conditions agree whenever the hypothesis holds.
    Equivalence,
    /// Hypothesis holds (antecedent) implies the single condition holds.
    Implication,
    /// The single condition holds whenever the hypothesis does.
    Property,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    EveryInversePower,
    EveryGeneratorPower,
    CompleteSemilattice,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::EveryInversePower => "every_inverse_power",
            Reading::EveryGeneratorPower => "every_generator_power",
            Reading::CompleteSemilattice => "complete_semilattice",
        }
    }

    fn apply(self, mut r: Readings) -> Readings {
        match self {
            Reading::EveryInversePower => r.every_inverse_power = true,
            Reading::EveryGeneratorPower => r.every_generator_power = true,
            Reading::CompleteSemilattice => r.complete_semilattice = true,
        }
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "equivalent")]
    Equivalent,
    #[serde(rename = "hypothesis_not_met")]
    HypothesisNotMet,
    #[serde(rename = "DISCREPANCY")]
    Discrepancy,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equivalent => "equivalent",
            Verdict::HypothesisNotMet => "hypothesis_not_met",
            Verdict::Discrepancy => "DISCREPANCY",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub index: usize,
    pub label: &'static str,
    pub holds: bool,
    pub witness: PredicateResult,
}

/// The verdict a non-default reading would give, kept only when it differs
/// from the default in some condition or in the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReadingDivergence {
    pub reading: Reading,
    pub hypothesis: BTreeMap<&'static str, bool>,
    pub conditions: Vec<bool>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub theorem: TheoremId,
    pub structure_key: String,
    pub mode: SuiteMode,
    pub hypothesis: BTreeMap<&'static str, bool>,
    pub conditions: Vec<ConditionReport>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reading_divergences: Vec<ReadingDivergence>,
}

impl EquivalenceReport {
    pub fn condition_values(&self) -> Vec<bool> {
        self.conditions.iter().map(|c| c.holds).collect()
    }

    /// One line: id, verdict and the condition truth values.
    pub fn summary(&self) -> String {
        let bits: String = self.conditions.iter().map(|c| if c.holds { '1' } else { '0' }).collect();
        format!("{:<16} {:<19} [{}]", self.theorem.id(), self.verdict.as_str(), bits)
    }
}

struct Evaluated {
    hypothesis: Vec<(&'static str, bool)>,
    conditions: Vec<(&'static str, PredicateResult)>,
}

fn labelled(labels: &[&'static str], results: Vec<PredicateResult>) -> Vec<(&'static str, PredicateResult)> {
    debug_assert_eq!(labels.len(), results.len());
    labels.iter().copied().zip(results).collect()
}

const THM2_LABELS: [&str; 8] = [
    "left pi-t-simple",
    "pi-regular and E L*-unique",
    "pi-regular and L* universal",
    "a^m in (a^m S b]",
    "a^m in (a^m S b^n] for every n",
    "a^m in (a^m S b^m]",
    "pi-regular and left Archimedean",
    "nil-extension of a left simple pi-regular",
];

fn pi_regular_flag(an: &Analysis) -> Result<(&'static str, bool), Error> {
    Ok(("pi-regular", predicates::holds(an, Predicate::PiRegular)?))
}

fn evaluate_suite(an: &Analysis, id: TheoremId, readings: Readings) -> Result<Evaluated, Error> {
    let p = |pred| predicates::holds(an, pred);
    let rpi = || -> (&'static str, bool) { ("right-pi-inverse", predicates::right_pi_inverse_def(an, readings).holds) };
    let e = match id {
        TheoremId::Thm2 => Evaluated {
            hypothesis: vec![pi_regular_flag(an)?],
            conditions: labelled(&THM2_LABELS, predicates::theorem2_conditions(an)?),
        },
        TheoremId::Cor1 => {
            let mut c = predicates::theorem2_conditions(an)?.into_iter().map(Some).collect::<Vec<_>>();
            let mut take = |i: usize| c[i].take().expect("each condition used once");
            let results = vec![take(7), take(4), take(3), take(5), take(6)];
            Evaluated {
                hypothesis: vec![pi_regular_flag(an)?],
                conditions: labelled(
                    &[
                        "nil-extension of a left simple pi-regular",
                        "a^m in (a^m S b^n] for every n",
                        "a^m in (a^m S b]",
                        "a^m in (a^m S b^m]",
                        "left Archimedean and pi-regular",
                    ],
                    results,
                ),
            }
        }
        TheoremId::ThmWc => {
            let ante = predicates::weakly_commutative_antecedent(an)?;
            Evaluated {
                hypothesis: vec![
                    ("right-weakly-commutative", ante[0].holds),
                    ("right-archimedean", ante[1].holds),
                    ("l-star-unique-idempotent", ante[2].holds),
                ],
                conditions: vec![("left pi-t-simple", predicates::left_pi_t_simple_direct(an)?)],
            }
        }
        TheoremId::Thm4 => Evaluated {
            hypothesis: vec![pi_regular_flag(an)?],
            conditions: labelled(
                &[
                    "semilattice of left pi-t-simple",
                    "pi-regular and ab L* ba",
                    "pi-regular and right weakly commutative",
                    "(ab)^m in ((ab)^m S (ba)^(m+1)]",
                    "semilattice of nil-extensions of left simple pi-regular",
                ],
                predicates::theorem4_conditions(an, readings)?,
            ),
        },
        TheoremId::Thm5 => Evaluated {
            hypothesis: vec![pi_regular_flag(an)?],
            conditions: labelled(
                &[
                    "right pi-inverse",
                    "inverses of some a^m pairwise R-related",
                    "(ef)^n in (fSf]",
                    "((ef)^n S] inside (eS] and (fS]",
                    "x^m in (Se] gives V(x^m) inside (eS]",
                ],
                predicates::theorem5_conditions(an, readings),
            ),
        },
        TheoremId::Thm6 => Evaluated {
            hypothesis: vec![pi_regular_flag(an)?],
            conditions: vec![
                ("right pi-inverse", predicates::right_pi_inverse_def(an, readings)),
                ("e L* f implies e R* f", predicates::theorem6_condition(an)),
            ],
        },
        TheoremId::Thm51 => Evaluated {
            hypothesis: vec![("regular", p(Predicate::Regular)?)],
            conditions: labelled(
                &[
                    "right inverse",
                    "inverses pairwise R-related",
                    "ef in (fSeSf]",
                    "(eS] and (fS] meet in (efS]",
                    "x in (Se] gives V(x) inside (eS]",
                ],
                predicates::theorem51_conditions(an),
            ),
        },
        TheoremId::Thm7Open => {
            let lstar = an.starred(GreenKind::L);
            Evaluated {
                hypothesis: vec![("regular", p(Predicate::Regular)?)],
                conditions: vec![
                    (
                        "left simple and pi-regular",
                        PredicateResult::all(vec![
                            predicates::evaluate(an, Predicate::LeftSimple)?,
                            predicates::evaluate(an, Predicate::PiRegular)?,
                        ]),
                    ),
                    (
                        "e L* f for all ordered idempotents",
                        for_all(pairs_in(an.idempotents()), |i| lstar.related(i[0], i[1]).then(|| (None, vec![]))),
                    ),
                ],
            }
        }
        TheoremId::Lemma3 => Evaluated {
            hypothesis: vec![pi_regular_flag(an)?],
            conditions: vec![(
                "some (S a^m] generated by an ordered idempotent",
                predicates::idempotent_generated_left_ideals(an),
            )],
        },
        TheoremId::Lemma7 => Evaluated {
            hypothesis: vec![rpi()],
            conditions: vec![("a L* b gives a'a^m R* b'b^n", predicates::inverse_products_r_star(an))],
        },
        TheoremId::CorPiInverse => {
            let left = predicates::right_pi_inverse_def(an.opposite(), Readings::default());
            let right = predicates::right_pi_inverse_def(an, Readings::default());
            Evaluated {
                hypothesis: vec![pi_regular_flag(an)?],
                conditions: vec![
                    ("pi-inverse", predicates::pi_inverse(an)),
                    ("left and right pi-inverse", PredicateResult::all(vec![left, right])),
                ],
            }
        }
        TheoremId::CorPiTSimple => Evaluated {
            hypothesis: vec![rpi(), ("left-pi-t-simple", p(Predicate::LeftPiTSimple)?)],
            conditions: vec![(
                "pi-t-simple",
                predicates::subsemigroup_search(an, KernelProperty::TSimple)?,
            )],
        },
        TheoremId::Thm8 => Evaluated {
            hypothesis: vec![rpi()],
            conditions: labelled(
                &[
                    "R* congruence",
                    "L* inside R*",
                    "semilattice of right pi-t-simple",
                    "R* semilattice congruence",
                ],
                congruences::theorem8_conditions(an, readings)?,
            ),
        },
        TheoremId::CorHstar => Evaluated {
            hypothesis: vec![("pi-inverse", predicates::pi_inverse(an).holds)],
            conditions: labelled(
                &["H* congruence", "L* = R* = H*", "semilattice of pi-t-simple", "H* semilattice congruence"],
                congruences::hstar_conditions(an, readings)?,
            ),
        },
        TheoremId::CorCpr => Evaluated {
            hypothesis: vec![rpi(), ("left-pi-regular", p(Predicate::LeftPiRegular)?)],
            conditions: labelled(
                &[
                    "R* congruence",
                    "L* inside R*",
                    "semilattice of right pi-t-simple",
                    "completely pi-regular and left weakly commutative",
                ],
                congruences::completely_pi_regular_conditions(an, readings)?,
            ),
        },
    };
    Ok(e)
}

fn decide(mode: SuiteMode, hypothesis: &BTreeMap<&'static str, bool>, conditions: &[bool]) -> Verdict {
    if !hypothesis.values().all(|&h| h) {
        return Verdict::HypothesisNotMet;
    }
    let consistent = match mode {
        SuiteMode::Equivalence => conditions.windows(2).all(|w| w[0] == w[1]),
        SuiteMode::Implication | SuiteMode::Property => conditions.iter().all(|&c| c),
    };
    if consistent {
        Verdict::Equivalent
    } else {
        Verdict::Discrepancy
    }
}

/// Runs one suite on a prepared analysis under the default readings, and
/// records any alternative reading that changes the outcome.
pub fn verify_with(an: &Analysis, id: TheoremId) -> Result<EquivalenceReport, Error> {
    let base = Readings::default();
    let e = evaluate_suite(an, id, base)?;
    let hypothesis: BTreeMap<&'static str, bool> = e.hypothesis.into_iter().collect();
    let conditions: Vec<ConditionReport> = e
        .conditions
        .into_iter()
        .enumerate()
        .map(|(i, (label, r))| ConditionReport { index: i + 1, label, holds: r.holds, witness: r })
        .collect();
    let values: Vec<bool> = conditions.iter().map(|c| c.holds).collect();
    let verdict = decide(id.mode(), &hypothesis, &values);
    let mut reading_divergences = Vec::new();
    for &reading in id.readings() {
        let alt = evaluate_suite(an, id, reading.apply(base))?;
        let alt_h: BTreeMap<&'static str, bool> = alt.hypothesis.into_iter().collect();
        let alt_c: Vec<bool> = alt.conditions.iter().map(|(_, r)| r.holds).collect();
        let alt_v = decide(id.mode(), &alt_h, &alt_c);
        if alt_h != hypothesis || alt_c != values || alt_v != verdict {
            reading_divergences.push(ReadingDivergence { reading, hypothesis: alt_h, conditions: alt_c, verdict: alt_v });
        }
    }
    Ok(EquivalenceReport {
        theorem: id,
        structure_key: an.structure().key(),
        mode: id.mode(),
        hypothesis,
        conditions,
        verdict,
        reading_divergences,
    })
}

pub fn verify(s: &OrderedSemigroup, id: TheoremId) -> Result<EquivalenceReport, Error> {
    verify_with(&Analysis::new(s), id)
}

/// One block of structures fed to the suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Stage {
    Exhaustive { order: usize, orders: OrderMode },
    /// Uniform table, uniform non-discrete compatible order.
    SampledNontrivial { order: usize, count: usize, seed: u64 },
}

impl Stage {
    fn structures(&self) -> Result<Vec<OrderedSemigroup>, Error> {
        match *self {
            Stage::Exhaustive { order, orders } => {
                enumerate::enumerate_ordered_semigroups(&GenerationConfig::exhaustive(order, orders))
            }
            Stage::SampledNontrivial { order, count, seed } => enumerate::sample_nontrivial_orders(order, count, seed),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub theorems: Vec<TheoremId>,
    pub stages: Vec<Stage>,
    pub fail_fast: bool,
}

/// Default sample size for the order-4 nontrivial-order stage.
pub const DEFAULT_SAMPLES: usize = 10_000;

impl SuiteConfig {
    /// All orders up to 3, then discrete orders plus `samples` random
    /// non-discrete orders at 4.
    pub fn standard(theorems: Vec<TheoremId>, max_order: usize, samples: usize, seed: u64) -> Self {
        let mut stages: Vec<Stage> =
            (1..=max_order.min(3)).map(|order| Stage::Exhaustive { order, orders: OrderMode::AllPartialOrders }).collect();
        if max_order >= 4 {
            stages.push(Stage::Exhaustive { order: 4, orders: OrderMode::DiscreteOnly });
            if samples > 0 {
                stages.push(Stage::SampledNontrivial { order: 4, count: samples, seed });
            }
        }
        SuiteConfig { theorems, stages, fail_fast: false }
    }

    pub fn exhaustive(theorems: Vec<TheoremId>, max_order: usize, orders: OrderMode) -> Self {
        SuiteConfig {
            theorems,
            stages: (1..=max_order).map(|order| Stage::Exhaustive { order, orders }).collect(),
            fail_fast: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub equivalent: usize,
    pub hypothesis_not_met: usize,
    #[serde(rename = "DISCREPANCY")]
    pub discrepancy: usize,
}

impl Totals {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Equivalent => self.equivalent += 1,
            Verdict::HypothesisNotMet => self.hypothesis_not_met += 1,
            Verdict::Discrepancy => self.discrepancy += 1,
        }
    }

    pub fn sum(&self) -> usize {
        self.equivalent + self.hypothesis_not_met + self.discrepancy
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub structure: StructureJson,
    pub report: EquivalenceReport,
}

/// Structures on which a non-default reading changed a suite's outcome.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DivergenceSummary {
    pub structures: usize,
    /// Of those, how many would be DISCREPANCY under the alternative.
    pub alternative_discrepancies: usize,
    pub examples: Vec<String>,
}

const DIVERGENCE_EXAMPLES: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub structures: usize,
    pub stopped_early: bool,
    pub totals: BTreeMap<TheoremId, Totals>,
    pub discrepancies: Vec<Discrepancy>,
    /// Keyed `theorem/reading`.
    pub reading_divergences: BTreeMap<String, DivergenceSummary>,
    /// Wall time; never serialized so that reports stay byte-identical.
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    pub fn discrepancy_count(&self) -> usize {
        self.totals.values().map(|t| t.discrepancy).sum()
    }

    /// Human-readable table of totals.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<16} {:>10} {:>18} {:>11}\n",
            "theorem", "equivalent", "hypothesis_not_met", "DISCREPANCY"
        );
        for (id, t) in &self.totals {
            out += &format!("{:<16} {:>10} {:>18} {:>11}\n", id.id(), t.equivalent, t.hypothesis_not_met, t.discrepancy);
        }
        out += &format!("structures: {}\n", self.structures);
        for (key, d) in &self.reading_divergences {
            out += &format!(
                "reading divergence {key}: {} structures, {} alternative discrepancies\n",
                d.structures, d.alternative_discrepancies
            );
        }
        out
    }
}

fn verify_all(s: &OrderedSemigroup, ids: &[TheoremId]) -> Result<Vec<EquivalenceReport>, Error> {
    let an = Analysis::new(s);
    ids.iter().map(|&id| verify_with(&an, id)).collect()
}

const CHUNK: usize = 512;

/// Maps every suite over every structure of every stage. Output is
/// independent of the worker count: results are collected in enumeration
/// order and fail-fast stops at the first discrepancy in that order.
pub fn run_suite(config: &SuiteConfig, workers: Option<usize>) -> Result<SuiteReport, Error> {
    if config.theorems.is_empty() {
        return Err(Error::Config("no theorem ids given".into()));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Config(e.to_string()))?;
    let start = Instant::now();
    pool.install(|| {
        let mut report = SuiteReport {
            config: config.clone(),
            structures: 0,
            stopped_early: false,
            totals: config.theorems.iter().map(|&id| (id, Totals::default())).collect(),
            discrepancies: Vec::new(),
            reading_divergences: BTreeMap::new(),
            runtime: Duration::ZERO,
        };
        'stages: for stage in &config.stages {
            let structures = stage.structures()?;
            for chunk in structures.chunks(CHUNK) {
                let results: Vec<Vec<EquivalenceReport>> =
                    chunk.par_iter().map(|s| verify_all(s, &config.theorems)).collect::<Result<_, _>>()?;
                for (s, reports) in chunk.iter().zip(results) {
                    report.structures += 1;
                    let mut hit = false;
                    for r in reports {
                        report.totals.get_mut(&r.theorem).expect("known id").add(r.verdict);
                        for d in &r.reading_divergences {
                            let entry =
                                report.reading_divergences.entry(format!("{}/{}", r.theorem, d.reading.name())).or_default();
                            entry.structures += 1;
                            if d.verdict == Verdict::Discrepancy {
                                entry.alternative_discrepancies += 1;
                            }
                            if entry.examples.len() < DIVERGENCE_EXAMPLES {
                                entry.examples.push(r.structure_key.clone());
                            }
                        }
                        if r.verdict == Verdict::Discrepancy {
                            hit = true;
                            report.discrepancies.push(Discrepancy { structure: s.to_json(), report: r });
                        }
                    }
                    if hit && config.fail_fast {
                        report.stopped_early = true;
                        break 'stages;
                    }
                }
            }
        }
        report.runtime = start.elapsed();
        Ok(report)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found {
        order: usize,
        /// Position in the order-`n` enumeration.
        index: usize,
        key: String,
        structure: StructureJson,
        results: BTreeMap<String, PredicateResult>,
    },
    Exhausted {
        max_order: usize,
        examined: usize,
    },
}

/// First structure in enumeration order (smallest order first, all
/// compatible orders) satisfying every `satisfy` and failing every
/// `violate` predicate.
pub fn search_model(satisfy: &[Predicate], violate: &[Predicate], max_order: usize) -> Result<SearchOutcome, Error> {
    if max_order == 0 {
        return Err(Error::Config("max order must be at least 1".into()));
    }
    let matches = |s: &OrderedSemigroup| -> Result<bool, Error> {
        let an = Analysis::new(s);
        for &p in satisfy {
            if !predicates::holds(&an, p)? {
                return Ok(false);
            }
        }
        for &p in violate {
            if predicates::holds(&an, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut examined = 0;
    for order in 1..=max_order {
        let all = enumerate::enumerate_ordered_semigroups(&GenerationConfig::exhaustive(order, OrderMode::AllPartialOrders))?;
        let hit = all.par_iter().enumerate().find_map_first(|(i, s)| match matches(s) {
            Ok(true) => Some(Ok(i)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        });
        match hit {
            Some(Ok(index)) => {
                let s = &all[index];
                let an = Analysis::new(s);
                let mut results = BTreeMap::new();
                for &p in satisfy.iter().chain(violate) {
                    results.insert(p.name().to_string(), predicates::evaluate(&an, p)?);
                }
                return Ok(SearchOutcome::Found { order, index, key: s.key(), structure: s.to_json(), results });
            }
            Some(Err(e)) => return Err(e),
            None => examined += all.len(),
        }
    }
    Ok(SearchOutcome::Exhausted { max_order, examined })
}
