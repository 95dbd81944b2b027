//! Congruences, semilattice congruences and semilattice decompositions.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::Error;
use crate::predicates::{self, Predicate, Readings};
use crate::relations::{GreenKind, Partition};
use crate::structure::OrderedSemigroup;
use crate::witness::{Certificate, PredicateResult};

/// Partition enumeration is Bell-number sized.
pub const PARTITION_ENUM_MAX: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceCertificate {
    pub partition: Partition,
    pub is_left_congruence: bool,
    pub is_right_congruence: bool,
    pub is_congruence: bool,
    pub is_semilattice: bool,
    pub is_complete: bool,
    /// `(a, b, c)` with `a ~ b` but `ca !~ cb`.
    pub left_counterexample: Option<[usize; 3]>,
    /// `(a, b, c)` with `a ~ b` but `ac !~ bc`.
    pub right_counterexample: Option<[usize; 3]>,
    /// `(a, a)` for `a !~ a^2`, or `(a, b)` for `ab !~ ba`.
    pub semilattice_counterexample: Option<[usize; 2]>,
    /// `(a, b)` with `a <= b` and `a !~ ab`.
    pub complete_counterexample: Option<[usize; 2]>,
}

pub fn classify_partition(s: &OrderedSemigroup, p: &Partition) -> CongruenceCertificate {
    let n = s.order();
    let triples = || (0..n * n * n).map(move |i| [i / (n * n), (i / n) % n, i % n]);
    let left = triples().find(|&[a, b, c]| p.related(a, b) && !p.related(s.mul(c, a), s.mul(c, b)));
    let right = triples().find(|&[a, b, c]| p.related(a, b) && !p.related(s.mul(a, c), s.mul(b, c)));
    let square = (0..n).find(|&a| !p.related(a, s.mul(a, a))).map(|a| [a, a]);
    let semilattice = square.or_else(|| {
        (0..n * n).map(|i| [i / n, i % n]).find(|&[a, b]| !p.related(s.mul(a, b), s.mul(b, a)))
    });
    let complete = (0..n * n)
        .map(|i| [i / n, i % n])
        .find(|&[a, b]| s.leq(a, b) && !p.related(a, s.mul(a, b)));
    let is_congruence = left.is_none() && right.is_none();
    CongruenceCertificate {
        partition: p.clone(),
        is_left_congruence: left.is_none(),
        is_right_congruence: right.is_none(),
        is_congruence,
        is_semilattice: is_congruence && semilattice.is_none(),
        is_complete: is_congruence && semilattice.is_none() && complete.is_none(),
        left_counterexample: left,
        right_counterexample: right,
        semilattice_counterexample: semilattice,
        complete_counterexample: complete,
    }
}

/// All set partitions of `0..n` as restricted-growth strings, in lex order.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for label in 0..=max + 1 {
            prefix.push(label);
            go(prefix, max.max(label), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut prefix = vec![0];
    go(&mut prefix, 0, n, &mut out);
    out
}

/// Every semilattice congruence, coarsest first (by class count), then in
/// restricted-growth-string order.
pub fn enumerate_semilattice_congruences(s: &OrderedSemigroup) -> Result<Vec<Partition>, Error> {
    let n = s.order();
    if n > PARTITION_ENUM_MAX {
        return Err(Error::SizeCap { what: "partition enumeration", order: n, max: PARTITION_ENUM_MAX });
    }
    let mut found: Vec<(usize, Partition)> = restricted_growth_strings(n)
        .into_iter()
        .map(|rgs| Partition::from_labels(&rgs))
        .filter(|p| classify_partition(s, p).is_semilattice)
        .map(|p| (p.num_classes(), p))
        .collect();
    found.sort_by_key(|(k, _)| *k);
    Ok(found.into_iter().map(|(_, p)| p).collect())
}

/// Some semilattice congruence (complete, if asked) whose classes, each an
/// ordered subsemigroup in its own right, satisfy `class_ok`. The coarsest
/// such partition is the certificate.
pub fn semilattice_decomposition(
    an: &Analysis,
    complete: bool,
    class_ok: impl Fn(&Analysis) -> Result<bool, Error>,
) -> Result<PredicateResult, Error> {
    let s = an.structure();
    'partitions: for p in an.semilattice_congruences()? {
        if complete && !classify_partition(s, p).is_complete {
            continue;
        }
        for class in p.classes() {
            let Some((sub, _)) = s.induced(class) else {
                continue 'partitions;
            };
            if !class_ok(&Analysis::new(&sub))? {
                continue 'partitions;
            }
        }
        return Ok(PredicateResult::holds(Vec::new()).with_certificate(Certificate::Partition(p.clone())));
    }
    Ok(PredicateResult::fails(Vec::new()).with_note("no semilattice congruence with qualifying classes"))
}

fn congruence_result(cert: &CongruenceCertificate, semilattice: bool) -> PredicateResult {
    let ok = if semilattice { cert.is_semilattice } else { cert.is_congruence };
    if ok {
        return PredicateResult::holds(Vec::new()).with_certificate(Certificate::Partition(cert.partition.clone()));
    }
    let ce = cert
        .left_counterexample
        .or(cert.right_counterexample)
        .map(|t| t.to_vec())
        .or_else(|| cert.semilattice_counterexample.map(|t| t.to_vec()))
        .unwrap_or_default();
    PredicateResult::fails(ce)
}

fn refinement_result(finer: &Partition, coarser: &Partition) -> PredicateResult {
    match finer.first_unrelated_in(coarser) {
        None => PredicateResult::holds(Vec::new()),
        Some((a, b)) => PredicateResult::fails(vec![a, b]),
    }
}

/// Class test: all eight left pi-t-simple conditions on the opposite
/// structure, i.e. right pi-t-simple.
fn right_pi_t_simple_class(class: &Analysis) -> Result<bool, Error> {
    Ok(predicates::theorem2_conditions(class.opposite())?.iter().all(|r| r.holds))
}

/// The four conditions equivalent under right pi-inverse: R* congruence,
/// L* inside R*, semilattice of right pi-t-simple, R* semilattice congruence.
pub fn theorem8_conditions(an: &Analysis, readings: Readings) -> Result<Vec<PredicateResult>, Error> {
    let s = an.structure();
    let rstar = classify_partition(s, an.starred(GreenKind::R));
    Ok(vec![
        congruence_result(&rstar, false),
        refinement_result(an.starred(GreenKind::L), an.starred(GreenKind::R)),
        semilattice_decomposition(an, readings.complete_semilattice, right_pi_t_simple_class)?,
        congruence_result(&rstar, true),
    ])
}

/// Under pi-inverse: H* congruence, L* = R* = H*, semilattice of
/// pi-t-simple, H* semilattice congruence.
pub fn hstar_conditions(an: &Analysis, readings: Readings) -> Result<Vec<PredicateResult>, Error> {
    let s = an.structure();
    let hstar = classify_partition(s, an.starred(GreenKind::H));
    let (l, r, h) = (an.starred(GreenKind::L), an.starred(GreenKind::R), an.starred(GreenKind::H));
    let equal = PredicateResult::all(vec![refinement_result(l, h), refinement_result(r, h)]);
    Ok(vec![
        congruence_result(&hstar, false),
        equal,
        semilattice_decomposition(an, readings.complete_semilattice, |class| {
            predicates::holds(class, Predicate::PiTSimple)
        })?,
        congruence_result(&hstar, true),
    ])
}

/// Under right pi-inverse and left pi-regular: R* congruence, L* inside R*,
/// semilattice of right pi-t-simple, completely pi-regular and left weakly
/// commutative.
pub fn completely_pi_regular_conditions(an: &Analysis, readings: Readings) -> Result<Vec<PredicateResult>, Error> {
    let mut v = theorem8_conditions(an, readings)?;
    v.truncate(3);
    v.push(PredicateResult::all(vec![
        predicates::evaluate(an, Predicate::CompletelyPiRegular)?,
        predicates::evaluate(an, Predicate::LeftWeaklyCommutative)?,
    ]));
    Ok(v)
}
