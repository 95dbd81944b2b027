//! Green's relations, their starred versions, ordered idempotents and
//! ordered inverses, and per-element regularity data.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::structure::{IdealKind, OrderedSemigroup, SubsetMask};
use crate::witness::PredicateResult;

/// An equivalence on `0..n`. Each class is named by its smallest member.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    /// Classes are the fibres of `key`.
    pub fn from_keys<K: PartialEq>(keys: &[K]) -> Self {
        let n = keys.len();
        let class_of = (0..n).map(|a| (0..=a).find(|&b| keys[b] == keys[a]).expect("a matches itself")).collect();
        Partition { class_of }
    }

    /// Accepts any labelling and canonicalises it.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_keys(labels)
    }

    pub fn discrete(n: usize) -> Self {
        Partition { class_of: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Partition { class_of: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_mask(&self, a: usize) -> SubsetMask {
        let c = self.class_of[a];
        SubsetMask::from_elements(self.len(), (0..self.len()).filter(|&x| self.class_of[x] == c))
    }

    /// Classes in order of their smallest members.
    pub fn classes(&self) -> Vec<SubsetMask> {
        (0..self.len()).filter(|&a| self.class_of[a] == a).map(|a| self.class_mask(a)).collect()
    }

    pub fn num_classes(&self) -> usize {
        (0..self.len()).filter(|&a| self.class_of[a] == a).count()
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let keys: Vec<(usize, usize)> = (0..self.len()).map(|a| (self.class_of[a], other.class_of[a])).collect();
        Partition::from_keys(&keys)
    }

    /// First pair `(a, b)` related here but not in `other`.
    pub fn first_unrelated_in(&self, other: &Partition) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| self.related(a, b) && !other.related(a, b))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let classes: Vec<Vec<usize>> = self.classes().iter().map(|c| c.to_vec()).collect();
        classes.serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GreenKind {
    L,
    R,
    J,
    H,
}

impl GreenKind {
    pub const ALL: [GreenKind; 4] = [GreenKind::L, GreenKind::R, GreenKind::J, GreenKind::H];

    fn ideal(self) -> Option<IdealKind> {
        match self {
            GreenKind::L => Some(IdealKind::Left),
            GreenKind::R => Some(IdealKind::Right),
            GreenKind::J => Some(IdealKind::TwoSided),
            GreenKind::H => None,
        }
    }
}

impl fmt::Display for GreenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GreenKind::L => "L",
            GreenKind::R => "R",
            GreenKind::J => "J",
            GreenKind::H => "H",
        };
        f.write_str(s)
    }
}

/// Relation induced by equality of principal ideals of the images `rep[a]`.
fn ideal_partition(s: &OrderedSemigroup, kind: GreenKind, rep: &dyn Fn(usize) -> usize) -> Partition {
    match kind.ideal() {
        Some(ideal) => {
            let keys: Vec<SubsetMask> = s.elements().map(|a| s.principal_ideal(rep(a), ideal)).collect();
            Partition::from_keys(&keys)
        }
        None => {
            let l = ideal_partition(s, GreenKind::L, rep);
            let r = ideal_partition(s, GreenKind::R, rep);
            l.meet(&r)
        }
    }
}

pub fn green(s: &OrderedSemigroup, kind: GreenKind) -> Partition {
    ideal_partition(s, kind, &|a| a)
}

/// `E(S) = {e : e <= e.e}`.
pub fn ordered_idempotents(s: &OrderedSemigroup) -> SubsetMask {
    SubsetMask::from_elements(s.order(), s.elements().filter(|&e| s.leq(e, s.mul(e, e))))
}

pub fn is_ordered_inverse(s: &OrderedSemigroup, a: usize, b: usize) -> bool {
    s.leq(a, s.mul3(a, b, a)) && s.leq(b, s.mul3(b, a, b))
}

/// `V(a) = {b : a <= aba and b <= bab}`.
pub fn ordered_inverses(s: &OrderedSemigroup, a: usize) -> SubsetMask {
    SubsetMask::from_elements(s.order(), s.elements().filter(|&b| is_ordered_inverse(s, a, b)))
}

/// Smallest `x` with `a <= a.x.a`.
pub fn regular_witness(s: &OrderedSemigroup, a: usize) -> Option<usize> {
    s.elements().find(|&x| s.leq(a, s.mul3(a, x, a)))
}

pub fn is_regular(s: &OrderedSemigroup, a: usize) -> bool {
    regular_witness(s, a).is_some()
}

/// Smallest `x` with `a <= a^2.x.a^2`.
pub fn completely_regular_witness(s: &OrderedSemigroup, a: usize) -> Option<usize> {
    let a2 = s.mul(a, a);
    s.elements().find(|&x| s.leq(a, s.mul3(a2, x, a2)))
}

/// Smallest `(x, y)` with `a <= x.a^2.y`.
pub fn intra_regular_witness(s: &OrderedSemigroup, a: usize) -> Option<(usize, usize)> {
    let a2 = s.mul(a, a);
    let n = s.order();
    (0..n * n).map(|i| (i / n, i % n)).find(|&(x, y)| s.leq(a, s.mul3(x, a2, y)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRegularity {
    pub element: usize,
    pub regular: bool,
    pub completely_regular: bool,
    pub intra_regular: bool,
    /// Smallest m >= 1 with `a^m` regular.
    pub smallest_regular_power: usize,
    /// The value `a^m` for that m.
    pub regular_power: usize,
    /// Smallest `x` with `a^m <= a^m.x.a^m`.
    pub witness: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityProfile {
    pub elements: Vec<ElementRegularity>,
}

impl RegularityProfile {
    pub fn smallest_regular_power(&self, a: usize) -> usize {
        self.elements[a].smallest_regular_power
    }

    pub fn regular_power(&self, a: usize) -> usize {
        self.elements[a].regular_power
    }

    pub fn regular_set(&self, n: usize) -> SubsetMask {
        SubsetMask::from_elements(n, self.elements.iter().filter(|e| e.regular).map(|e| e.element))
    }
}

/// Always succeeds on a finite structure: the idempotent power `a^k`
/// satisfies `a^k = a^k.a^k.a^k`, so the scan over distinct powers stops at
/// the latest there.
pub fn regularity_profile(s: &OrderedSemigroup) -> RegularityProfile {
    let elements = s
        .elements()
        .map(|a| {
            let profile = s.power_profile(a);
            let (m, value, witness) = profile
                .exponents()
                .find_map(|(m, p)| regular_witness(s, p).map(|x| (m, p, x)))
                .expect("finite ordered semigroups are pi-regular");
            ElementRegularity {
                element: a,
                regular: m == 1,
                completely_regular: completely_regular_witness(s, a).is_some(),
                intra_regular: intra_regular_witness(s, a).is_some(),
                smallest_regular_power: m,
                regular_power: value,
                witness,
            }
        })
        .collect();
    RegularityProfile { elements }
}

/// `a ~* b` iff `a^m ~ b^n` for the smallest regular powers `a^m`, `b^n`.
pub fn starred(s: &OrderedSemigroup, kind: GreenKind) -> Partition {
    let profile = regularity_profile(s);
    starred_with(s, &profile, kind)
}

pub fn starred_with(s: &OrderedSemigroup, profile: &RegularityProfile, kind: GreenKind) -> Partition {
    ideal_partition(s, kind, &|a| profile.regular_power(a))
}

/// All members of `subset` lie in one class of `partition`.
pub fn is_rho_unique(partition: &Partition, subset: SubsetMask) -> PredicateResult {
    let members = subset.to_vec();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !partition.related(a, b) {
                return PredicateResult::fails(vec![a, b]);
            }
        }
    }
    PredicateResult::holds(Vec::new())
}
