//! Derived data computed once per structure and shared by the predicate
//! batteries and theorem suites.

use std::cell::OnceCell;

use crate::error::Error;
use crate::relations::{self, GreenKind, Partition, RegularityProfile};
use crate::structure::{OrderedSemigroup, PowerProfile, SubsetMask};

pub struct Analysis {
    s: OrderedSemigroup,
    powers: Vec<PowerProfile>,
    idempotents: SubsetMask,
    regularity: RegularityProfile,
    green: [Partition; 4],
    starred: [Partition; 4],
    inverses: Vec<SubsetMask>,
    left_ideals: Vec<SubsetMask>,
    right_ideals: Vec<SubsetMask>,
    opposite: OnceCell<Box<Analysis>>,
    semilattice_congruences: OnceCell<Result<Vec<Partition>, Error>>,
}

fn kind_index(kind: GreenKind) -> usize {
    match kind {
        GreenKind::L => 0,
        GreenKind::R => 1,
        GreenKind::J => 2,
        GreenKind::H => 3,
    }
}

impl Analysis {
    pub fn new(s: &OrderedSemigroup) -> Self {
        let powers: Vec<PowerProfile> = s.elements().map(|a| s.power_profile(a)).collect();
        let regularity = relations::regularity_profile(s);
        let green = GreenKind::ALL.map(|k| relations::green(s, k));
        let starred = GreenKind::ALL.map(|k| relations::starred_with(s, &regularity, k));
        let full = s.full();
        // (Sa] and (aS]
        let left_ideals = s.elements().map(|a| s.downward_closure(s.subset_product(full, s.singleton(a)))).collect();
        let right_ideals = s.elements().map(|a| s.downward_closure(s.subset_product(s.singleton(a), full))).collect();
        Analysis {
            idempotents: relations::ordered_idempotents(s),
            inverses: s.elements().map(|a| relations::ordered_inverses(s, a)).collect(),
            s: s.clone(),
            powers,
            regularity,
            green,
            starred,
            left_ideals,
            right_ideals,
            opposite: OnceCell::new(),
            semilattice_congruences: OnceCell::new(),
        }
    }

    pub fn structure(&self) -> &OrderedSemigroup {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.order()
    }

    pub fn powers(&self, a: usize) -> &PowerProfile {
        &self.powers[a]
    }

    pub fn power(&self, a: usize, m: usize) -> usize {
        self.powers[a].power(m)
    }

    pub fn idempotents(&self) -> SubsetMask {
        self.idempotents
    }

    pub fn regularity(&self) -> &RegularityProfile {
        &self.regularity
    }

    pub fn is_regular_element(&self, a: usize) -> bool {
        !self.inverses[a].is_empty()
    }

    pub fn green(&self, kind: GreenKind) -> &Partition {
        &self.green[kind_index(kind)]
    }

    pub fn starred(&self, kind: GreenKind) -> &Partition {
        &self.starred[kind_index(kind)]
    }

    /// `V(a)`
    pub fn inverses(&self, a: usize) -> SubsetMask {
        self.inverses[a]
    }

    /// `(Sa]`
    pub fn left_ideal(&self, a: usize) -> SubsetMask {
        self.left_ideals[a]
    }

    /// `(aS]`
    pub fn right_ideal(&self, a: usize) -> SubsetMask {
        self.right_ideals[a]
    }

    /// The same analysis for the opposite semigroup `x *op y = y.x`, which
    /// turns every left notion into its right mirror.
    pub fn opposite(&self) -> &Analysis {
        self.opposite.get_or_init(|| Box::new(Analysis::new(&self.s.opposite())))
    }

    pub fn semilattice_congruences(&self) -> Result<&[Partition], Error> {
        self.semilattice_congruences
            .get_or_init(|| crate::congruences::enumerate_semilattice_congruences(&self.s))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }
}
