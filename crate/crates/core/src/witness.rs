use serde::Serialize;

use crate::relations::Partition;
use crate::structure::SubsetMask;

/// Existential data for one universally quantified input tuple: the
/// exponent chosen and the mediating elements that make the inequality hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<usize>,
}

impl Witness {
    pub fn new(inputs: Vec<usize>, exponent: Option<usize>, elements: Vec<usize>) -> Self {
        Witness { inputs, exponent, elements }
    }
}

/// `K` is an ideal and every element has a power inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilExtensionWitness {
    pub kernel: SubsetMask,
    pub nil_exponents: Vec<usize>,
    pub kernel_property: String,
}

/// A product-closed `H` absorbing a power of every element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsemigroupWitness {
    pub subsemigroup: SubsetMask,
    pub exponents: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Subsemigroup(SubsemigroupWitness),
    NilExtension(NilExtensionWitness),
    Partition(Partition),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    /// The failing input tuple. Empty when the predicate is existential and
    /// nothing was found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PredicateResult {
    pub fn holds(witnesses: Vec<Witness>) -> Self {
        PredicateResult { holds: true, witnesses, counterexample: None, certificate: None, note: None }
    }

    pub fn fails(counterexample: Vec<usize>) -> Self {
        PredicateResult {
            holds: false,
            witnesses: Vec::new(),
            counterexample: Some(counterexample),
            certificate: None,
            note: None,
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Self::holds(Vec::new())
        } else {
            Self::fails(Vec::new())
        }
    }

    pub fn with_certificate(mut self, c: Certificate) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Conjunction. Witnesses are concatenated; the counterexample and note
    /// come from the first failing part.
    pub fn all(parts: Vec<PredicateResult>) -> Self {
        match parts.iter().position(|p| !p.holds) {
            Some(i) => {
                let mut bad = parts.into_iter().nth(i).expect("index in range");
                bad.witnesses.clear();
                bad.certificate = None;
                bad
            }
            None => {
                let mut witnesses = Vec::new();
                let mut certificate = None;
                for p in parts {
                    witnesses.extend(p.witnesses);
                    certificate = certificate.or(p.certificate);
                }
                PredicateResult { holds: true, witnesses, counterexample: None, certificate, note: None }
            }
        }
    }
}

/// Decides "for every input tuple, something exists". The closure returns
/// `(exponent, elements)` for a satisfied tuple, `None` for a failure; the
/// first failure in iteration order stops the scan.
pub fn for_all<I, F>(inputs: I, mut check: F) -> PredicateResult
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> Option<(Option<usize>, Vec<usize>)>,
{
    let mut witnesses = Vec::new();
    for input in inputs {
        match check(&input) {
            Some((exponent, elements)) => witnesses.push(Witness::new(input, exponent, elements)),
            None => return PredicateResult::fails(input),
        }
    }
    PredicateResult::holds(witnesses)
}

pub fn singles(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).map(|a| vec![a])
}

pub fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n * n).map(move |i| vec![i / n, i % n])
}

pub fn pairs_in(set: SubsetMask) -> impl Iterator<Item = Vec<usize>> {
    let members = set.to_vec();
    let k = members.len();
    (0..k * k).map(move |i| vec![members[i / k], members[i % k]])
}
