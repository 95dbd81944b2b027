//! Structure-level properties and the condition batteries characterising
//! left pi-t-simple and right pi-inverse ordered semigroups.
//!
//! Every "there is m" / "for every n" over powers of an element is decided
//! on the element's distinct powers (see [`PowerProfile`]). Where one
//! exponent is shared by several sequences the scan runs up to
//! [`joint_exponent_bound`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::error::Error;
use crate::relations::{is_rho_unique, GreenKind};
use crate::structure::{joint_exponent_bound, OrderedSemigroup, PowerProfile, SubsetMask};
use crate::witness::{
    for_all, pairs, pairs_in, singles, Certificate, NilExtensionWitness, PredicateResult, SubsemigroupWitness,
};

/// Subset searches (subsemigroups, ideals) are exponential in the order.
pub const SUBSET_SEARCH_MAX: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    Regular,
    CompletelyRegular,
    IntraRegular,
    PiRegular,
    CompletelyPiRegular,
    LeftPiRegular,
    RightPiRegular,
    LeftSimple,
    RightSimple,
    Simple,
    LeftArchimedean,
    RightArchimedean,
    Archimedean,
    LeftWeaklyCommutative,
    RightWeaklyCommutative,
    WeaklyCommutative,
    LeftPiTSimple,
    RightPiTSimple,
    PiTSimple,
    RightPiInverse,
    LeftPiInverse,
    PiInverse,
}

impl Predicate {
    /// The element-wise formulas.
    pub const STRUCTURE: [Predicate; 16] = [
        Predicate::Regular,
        Predicate::CompletelyRegular,
        Predicate::IntraRegular,
        Predicate::PiRegular,
        Predicate::CompletelyPiRegular,
        Predicate::LeftPiRegular,
        Predicate::RightPiRegular,
        Predicate::LeftSimple,
        Predicate::RightSimple,
        Predicate::Simple,
        Predicate::LeftArchimedean,
        Predicate::RightArchimedean,
        Predicate::Archimedean,
        Predicate::LeftWeaklyCommutative,
        Predicate::RightWeaklyCommutative,
        Predicate::WeaklyCommutative,
    ];

    /// Class-level notions built from the above.
    pub const COMPOSITE: [Predicate; 6] = [
        Predicate::LeftPiTSimple,
        Predicate::RightPiTSimple,
        Predicate::PiTSimple,
        Predicate::RightPiInverse,
        Predicate::LeftPiInverse,
        Predicate::PiInverse,
    ];

    pub fn all() -> impl Iterator<Item = Predicate> {
        Self::STRUCTURE.into_iter().chain(Self::COMPOSITE)
    }

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Regular => "regular",
            Predicate::CompletelyRegular => "completely-regular",
            Predicate::IntraRegular => "intra-regular",
            Predicate::PiRegular => "pi-regular",
            Predicate::CompletelyPiRegular => "completely-pi-regular",
            Predicate::LeftPiRegular => "left-pi-regular",
            Predicate::RightPiRegular => "right-pi-regular",
            Predicate::LeftSimple => "left-simple",
            Predicate::RightSimple => "right-simple",
            Predicate::Simple => "simple",
            Predicate::LeftArchimedean => "left-archimedean",
            Predicate::RightArchimedean => "right-archimedean",
            Predicate::Archimedean => "archimedean",
            Predicate::LeftWeaklyCommutative => "left-weakly-commutative",
            Predicate::RightWeaklyCommutative => "right-weakly-commutative",
            Predicate::WeaklyCommutative => "weakly-commutative",
            Predicate::LeftPiTSimple => "left-pi-t-simple",
            Predicate::RightPiTSimple => "right-pi-t-simple",
            Predicate::PiTSimple => "pi-t-simple",
            Predicate::RightPiInverse => "right-pi-inverse",
            Predicate::LeftPiInverse => "left-pi-inverse",
            Predicate::PiInverse => "pi-inverse",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().replace('_', "-").to_ascii_lowercase();
        Predicate::all().find(|p| p.name() == key).ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// Alternative quantifier readings. The defaults are the ones used for the
/// theorem suites; the others are evaluated alongside and any divergence is
/// reported, never silently resolved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Readings {
    /// Inverse-uniqueness condition must hold at every power, not just some.
    pub every_inverse_power: bool,
    /// Right pi-inverse: every power whose left ideal has idempotent
    /// generators must have R-related generators, not just some power.
    pub every_generator_power: bool,
    /// Semilattice decompositions must come from complete congruences.
    pub complete_semilattice: bool,
}

fn smallest(n: usize, f: impl Fn(usize) -> bool) -> Option<usize> {
    (0..n).find(|&x| f(x))
}

fn smallest_pair(n: usize, f: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    (0..n * n).map(|i| (i / n, i % n)).find(|&(x, y)| f(x, y))
}

/// First distinct power `a^m` for which `f` yields mediating elements.
fn first_power(p: &PowerProfile, f: impl Fn(usize) -> Option<Vec<usize>>) -> Option<(Option<usize>, Vec<usize>)> {
    p.exponents().find_map(|(m, am)| f(am).map(|els| (Some(m), els)))
}

pub fn structure_predicate(s: &OrderedSemigroup, name: &str) -> Result<PredicateResult, Error> {
    let p: Predicate = name.parse()?;
    evaluate(&Analysis::new(s), p)
}

pub fn evaluate(an: &Analysis, p: Predicate) -> Result<PredicateResult, Error> {
    let s = an.structure();
    let n = an.n();
    let one = |x: usize| Some(vec![x]);
    let r = match p {
        Predicate::Regular => for_all(singles(n), |i| {
            let a = i[0];
            smallest(n, |x| s.leq(a, s.mul3(a, x, a))).map(|x| (None, vec![x]))
        }),
        Predicate::CompletelyRegular => for_all(singles(n), |i| {
            let a = i[0];
            let a2 = s.mul(a, a);
            smallest(n, |x| s.leq(a, s.mul3(a2, x, a2))).map(|x| (None, vec![x]))
        }),
        Predicate::IntraRegular => for_all(singles(n), |i| {
            let a = i[0];
            let a2 = s.mul(a, a);
            smallest_pair(n, |x, y| s.leq(a, s.mul3(x, a2, y))).map(|(x, y)| (None, vec![x, y]))
        }),
        Predicate::PiRegular => for_all(singles(n), |i| {
            first_power(an.powers(i[0]), |am| smallest(n, |x| s.leq(am, s.mul3(am, x, am))).and_then(one))
        }),
        Predicate::CompletelyPiRegular => for_all(singles(n), |i| {
            first_power(an.powers(i[0]), |am| {
                let a2m = s.mul(am, am);
                smallest(n, |x| s.leq(am, s.mul3(a2m, x, a2m))).and_then(one)
            })
        }),
        Predicate::LeftPiRegular => for_all(singles(n), |i| {
            first_power(an.powers(i[0]), |am| {
                let a2m = s.mul(am, am);
                smallest(n, |x| s.leq(am, s.mul(x, a2m))).and_then(one)
            })
        }),
        Predicate::RightPiRegular => for_all(singles(n), |i| {
            first_power(an.powers(i[0]), |am| {
                let a2m = s.mul(am, am);
                smallest(n, |x| s.leq(am, s.mul(a2m, x))).and_then(one)
            })
        }),
        Predicate::LeftSimple => for_all(singles(n), |i| an.left_ideal(i[0]).is_full().then(|| (None, vec![]))),
        Predicate::RightSimple => for_all(singles(n), |i| an.right_ideal(i[0]).is_full().then(|| (None, vec![]))),
        Predicate::Simple => for_all(singles(n), |i| {
            let full = s.full();
            let sas = s.word_product(&[full, s.singleton(i[0]), full]);
            s.downward_closure(sas).is_full().then(|| (None, vec![]))
        }),
        Predicate::LeftArchimedean => for_all(pairs(n), |i| {
            let b = i[1];
            first_power(an.powers(i[0]), |an_| smallest(n, |x| s.leq(an_, s.mul(x, b))).and_then(one))
        }),
        Predicate::RightArchimedean => for_all(pairs(n), |i| {
            let b = i[1];
            first_power(an.powers(i[0]), |an_| smallest(n, |x| s.leq(an_, s.mul(b, x))).and_then(one))
        }),
        Predicate::Archimedean => for_all(pairs(n), |i| {
            let b = i[1];
            first_power(an.powers(i[0]), |an_| {
                smallest_pair(n, |x, y| s.leq(an_, s.mul3(x, b, y))).map(|(x, y)| vec![x, y])
            })
        }),
        Predicate::LeftWeaklyCommutative => for_all(pairs(n), |i| {
            let (a, b) = (i[0], i[1]);
            first_power(an.powers(s.mul(a, b)), |p| smallest(n, |x| s.leq(p, s.mul(b, x))).and_then(one))
        }),
        Predicate::RightWeaklyCommutative => for_all(pairs(n), |i| {
            let (a, b) = (i[0], i[1]);
            first_power(an.powers(s.mul(a, b)), |p| smallest(n, |x| s.leq(p, s.mul(x, a))).and_then(one))
        }),
        Predicate::WeaklyCommutative => for_all(pairs(n), |i| {
            let (a, b) = (i[0], i[1]);
            first_power(an.powers(s.mul(a, b)), |p| smallest(n, |x| s.leq(p, s.mul3(b, x, a))).and_then(one))
        }),
        Predicate::LeftPiTSimple => left_pi_t_simple_direct(an)?,
        Predicate::RightPiTSimple => left_pi_t_simple_direct(an.opposite())?,
        Predicate::PiTSimple => subsemigroup_search(an, KernelProperty::TSimple)?,
        Predicate::RightPiInverse => right_pi_inverse_def(an, Readings::default()),
        Predicate::LeftPiInverse => right_pi_inverse_def(an.opposite(), Readings::default()),
        Predicate::PiInverse => pi_inverse(an),
    };
    Ok(r)
}

pub(crate) fn holds(an: &Analysis, p: Predicate) -> Result<bool, Error> {
    evaluate(an, p).map(|r| r.holds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelProperty {
    LeftSimple,
    RightSimple,
    /// Left simple and right simple.
    TSimple,
    Simple,
}

impl KernelProperty {
    pub fn name(self) -> &'static str {
        match self {
            KernelProperty::LeftSimple => "left_simple",
            KernelProperty::RightSimple => "right_simple",
            KernelProperty::TSimple => "t_simple",
            KernelProperty::Simple => "simple",
        }
    }

    /// The property together with pi-regularity, on `k` as a structure in
    /// its own right.
    fn holds_on(self, k: &OrderedSemigroup) -> bool {
        let an = Analysis::new(k);
        let is = |p| holds(&an, p).unwrap_or(false);
        let simple = match self {
            KernelProperty::LeftSimple => is(Predicate::LeftSimple),
            KernelProperty::RightSimple => is(Predicate::RightSimple),
            KernelProperty::TSimple => is(Predicate::LeftSimple) && is(Predicate::RightSimple),
            KernelProperty::Simple => is(Predicate::Simple),
        };
        simple && is(Predicate::PiRegular)
    }
}

/// Non-empty subsets, smallest first, ties broken by bit pattern.
fn subsets_by_size(n: usize) -> Vec<SubsetMask> {
    let mut all: Vec<SubsetMask> = (1u64..(1 << n)).map(|b| SubsetMask::from_bits(n, b)).collect();
    all.sort_by_key(|m| (m.count(), m.bits()));
    all
}

/// Smallest exponent putting each element inside `set`, if all exist.
fn absorbing_exponents(an: &Analysis, set: SubsetMask) -> Option<Vec<usize>> {
    (0..an.n())
        .map(|a| an.powers(a).exponents().find(|&(_, p)| set.contains(p)).map(|(m, _)| m))
        .collect()
}

fn check_search_cap(n: usize) -> Result<(), Error> {
    if n > SUBSET_SEARCH_MAX {
        return Err(Error::SizeCap { what: "subset search", order: n, max: SUBSET_SEARCH_MAX });
    }
    Ok(())
}

/// A product-closed `H` with the kernel property (and pi-regular on its
/// own) such that every element has a power in `H`.
pub fn subsemigroup_search(an: &Analysis, property: KernelProperty) -> Result<PredicateResult, Error> {
    let s = an.structure();
    check_search_cap(s.order())?;
    for h in subsets_by_size(s.order()) {
        let Some(exponents) = absorbing_exponents(an, h) else { continue };
        let Some((sub, _)) = s.induced(h) else { continue };
        if property.holds_on(&sub) {
            let witness = SubsemigroupWitness { subsemigroup: h, exponents };
            return Ok(PredicateResult::holds(Vec::new()).with_certificate(Certificate::Subsemigroup(witness)));
        }
    }
    Ok(PredicateResult::fails(Vec::new()).with_note(format!("no {} pi-regular subsemigroup absorbs a power of every element", property.name())))
}

/// Left pi-t-simple by definition: some left simple, pi-regular ordered
/// subsemigroup contains a power of every element.
pub fn left_pi_t_simple_direct(an: &Analysis) -> Result<PredicateResult, Error> {
    subsemigroup_search(an, KernelProperty::LeftSimple)
}

/// An ideal `K` with the kernel property such that every element has a
/// power in `K`.
pub fn nil_extension_search(an: &Analysis, property: KernelProperty) -> Result<PredicateResult, Error> {
    let s = an.structure();
    check_search_cap(s.order())?;
    for k in subsets_by_size(s.order()) {
        if !s.is_ideal(k, crate::structure::IdealKind::TwoSided) {
            continue;
        }
        let Some(nil_exponents) = absorbing_exponents(an, k) else { continue };
        let (sub, _) = s.induced(k).expect("ideals are product closed");
        if property.holds_on(&sub) {
            let w = NilExtensionWitness { kernel: k, nil_exponents, kernel_property: property.name().to_string() };
            return Ok(PredicateResult::holds(Vec::new()).with_certificate(Certificate::NilExtension(w)));
        }
    }
    Ok(PredicateResult::fails(Vec::new()).with_note(format!("no {} pi-regular ideal absorbs a power of every element", property.name())))
}

fn l_star_unique_idempotent(an: &Analysis) -> PredicateResult {
    if an.idempotents().is_empty() {
        return PredicateResult::fails(Vec::new()).with_note("no ordered idempotent");
    }
    is_rho_unique(an.starred(GreenKind::L), an.idempotents())
}

fn pi_regular(an: &Analysis) -> PredicateResult {
    evaluate(an, Predicate::PiRegular).expect("element-wise predicates cannot fail")
}

/// The eight equivalent conditions for left pi-t-simplicity, in order.
pub fn theorem2_conditions(an: &Analysis) -> Result<Vec<PredicateResult>, Error> {
    let s = an.structure();
    let n = an.n();
    let c1 = left_pi_t_simple_direct(an)?;
    let c2 = PredicateResult::all(vec![pi_regular(an), l_star_unique_idempotent(an)]);
    let lstar = an.starred(GreenKind::L);
    let c3 = PredicateResult::all(vec![
        pi_regular(an),
        for_all(pairs(n), |i| lstar.related(i[0], i[1]).then(|| (None, vec![]))),
    ]);
    let c4 = for_all(pairs(n), |i| {
        let b = i[1];
        first_power(an.powers(i[0]), |am| smallest(n, |x| s.leq(am, s.mul3(am, x, b))).map(|x| vec![x]))
    });
    let c5 = for_all(pairs(n), |i| {
        let bp = an.powers(i[1]);
        first_power(an.powers(i[0]), |am| {
            bp.distinct_powers
                .iter()
                .map(|&bn| smallest(n, |x| s.leq(am, s.mul3(am, x, bn))))
                .collect::<Option<Vec<usize>>>()
        })
    });
    let c6 = for_all(pairs(n), |i| {
        let (pa, pb) = (an.powers(i[0]), an.powers(i[1]));
        (1..=joint_exponent_bound(&[pa, pb])).find_map(|m| {
            let (am, bm) = (pa.power(m), pb.power(m));
            smallest(n, |x| s.leq(am, s.mul3(am, x, bm))).map(|x| (Some(m), vec![x]))
        })
    });
    let c7 = PredicateResult::all(vec![pi_regular(an), evaluate(an, Predicate::LeftArchimedean)?]);
    let c8 = nil_extension_search(an, KernelProperty::LeftSimple)?;
    Ok(vec![c1, c2, c3, c4, c5, c6, c7, c8])
}

/// Right weakly commutative, right Archimedean, with an L*-unique ordered
/// idempotent. Sufficient for left pi-t-simplicity.
pub fn weakly_commutative_antecedent(an: &Analysis) -> Result<Vec<PredicateResult>, Error> {
    Ok(vec![
        evaluate(an, Predicate::RightWeaklyCommutative)?,
        evaluate(an, Predicate::RightArchimedean)?,
        l_star_unique_idempotent(an),
    ])
}

/// The five equivalent conditions for a semilattice of left pi-t-simple
/// ordered semigroups.
pub fn theorem4_conditions(an: &Analysis, readings: Readings) -> Result<Vec<PredicateResult>, Error> {
    let s = an.structure();
    let n = an.n();
    let complete = readings.complete_semilattice;
    let c1 = crate::congruences::semilattice_decomposition(an, complete, |class| {
        Ok(theorem2_conditions(class)?.iter().all(|r| r.holds))
    })?;
    let lstar = an.starred(GreenKind::L);
    let c2 = PredicateResult::all(vec![
        pi_regular(an),
        for_all(pairs(n), |i| {
            let (a, b) = (i[0], i[1]);
            lstar.related(s.mul(a, b), s.mul(b, a)).then(|| (None, vec![]))
        }),
    ]);
    let c3 = PredicateResult::all(vec![pi_regular(an), evaluate(an, Predicate::RightWeaklyCommutative)?]);
    let c4 = for_all(pairs(n), |i| {
        let (a, b) = (i[0], i[1]);
        let (pab, pba) = (an.powers(s.mul(a, b)), an.powers(s.mul(b, a)));
        (1..=joint_exponent_bound(&[pab, pba])).find_map(|m| {
            let (abm, bam1) = (pab.power(m), pba.power(m + 1));
            smallest(n, |x| s.leq(abm, s.mul3(abm, x, bam1))).map(|x| (Some(m), vec![x]))
        })
    });
    let c5 = crate::congruences::semilattice_decomposition(an, complete, |class| {
        Ok(nil_extension_search(class, KernelProperty::LeftSimple)?.holds)
    })?;
    Ok(vec![c1, c2, c3, c4, c5])
}

/// Ordered idempotents `e` with `(Se] = (Sa]`.
fn idempotent_generators(an: &Analysis, a: usize) -> SubsetMask {
    let target = an.left_ideal(a);
    SubsetMask::from_elements(an.n(), an.idempotents().iter().filter(|&e| an.left_ideal(e) == target))
}

fn generators_r_unique(an: &Analysis, a: usize) -> Option<SubsetMask> {
    let gens = idempotent_generators(an, a);
    let r = an.green(GreenKind::R);
    let first = gens.first()?;
    let unique = gens.iter().all(|e| r.related(first, e));
    unique.then_some(gens)
}

/// Right pi-inverse by definition: for each `a` some `(Sa^m]` is generated
/// by ordered idempotents, all of them R-related.
pub fn right_pi_inverse_def(an: &Analysis, readings: Readings) -> PredicateResult {
    let n = an.n();
    if readings.every_generator_power {
        let r = an.green(GreenKind::R);
        return for_all(singles(n), |i| {
            let p = an.powers(i[0]);
            let mut first = None;
            for (m, am) in p.exponents() {
                let gens = idempotent_generators(an, am);
                if let Some(g) = gens.first() {
                    if !gens.iter().all(|e| r.related(g, e)) {
                        return None;
                    }
                    first.get_or_insert((Some(m), gens.to_vec()));
                }
            }
            first
        });
    }
    for_all(singles(n), |i| first_power(an.powers(i[0]), |am| generators_r_unique(an, am).map(|g| g.to_vec())))
}

/// Right inverse: the same with `m = 1` only.
pub fn right_inverse_def(an: &Analysis) -> PredicateResult {
    for_all(singles(an.n()), |i| generators_r_unique(an, i[0]).map(|g| (None, g.to_vec())))
}

fn pairwise_related(set: SubsetMask, rel: &crate::relations::Partition) -> bool {
    match set.first() {
        Some(f) => set.iter().all(|x| rel.related(f, x)),
        None => true,
    }
}

/// For each `a`, some power `a^m` is regular and its ordered inverses are
/// pairwise related by `rel`; under `every_power`, all powers' inverses are.
fn inverses_unique_at_some_power(an: &Analysis, rel: GreenKind, every_power: bool) -> PredicateResult {
    let part = an.green(rel);
    for_all(singles(an.n()), |i| {
        let p = an.powers(i[0]);
        if every_power {
            let bad = p.exponents().any(|(_, am)| !pairwise_related(an.inverses(am), part));
            return (!bad).then(|| (None, vec![]));
        }
        first_power(p, |am| {
            let v = an.inverses(am);
            (!v.is_empty() && pairwise_related(v, part)).then(|| v.to_vec())
        })
    })
}

/// pi-inverse, decided independently of the one-sided notions: some regular
/// power of each element has pairwise H-related ordered inverses.
pub fn pi_inverse(an: &Analysis) -> PredicateResult {
    inverses_unique_at_some_power(an, GreenKind::H, false)
}

/// The five equivalent conditions for right pi-inverse.
pub fn theorem5_conditions(an: &Analysis, readings: Readings) -> Vec<PredicateResult> {
    let s = an.structure();
    let n = an.n();
    let e_set = an.idempotents();
    let c1 = right_pi_inverse_def(an, readings);
    let c2 = inverses_unique_at_some_power(an, GreenKind::R, readings.every_inverse_power);
    let c3 = for_all(pairs_in(e_set), |i| {
        let (e, f) = (i[0], i[1]);
        first_power(an.powers(s.mul(e, f)), |p| smallest(n, |x| s.leq(p, s.mul3(f, x, f))).map(|x| vec![x]))
    });
    let c4 = for_all(pairs_in(e_set), |i| {
        let (e, f) = (i[0], i[1]);
        let bound = an.right_ideal(e).intersection(an.right_ideal(f));
        first_power(an.powers(s.mul(e, f)), |p| s.right_multiples(p).is_subset(&bound).then(Vec::new))
    });
    let c5 = for_all(e_set.iter().map(|e| vec![e]), |i| {
        let e = i[0];
        let (se, es) = (an.left_ideal(e), an.right_ideal(e));
        let profiles: Vec<&PowerProfile> = (0..n).map(|x| an.powers(x)).collect();
        (1..=joint_exponent_bound(&profiles)).find_map(|m| {
            let ok = (0..n).all(|x| {
                let xm = an.power(x, m);
                !se.contains(xm) || an.inverses(xm).is_subset(&es)
            });
            ok.then(|| (Some(m), vec![]))
        })
    });
    vec![c1, c2, c3, c4, c5]
}

/// `e L* f => e R* f` for ordered idempotents.
pub fn theorem6_condition(an: &Analysis) -> PredicateResult {
    let (l, r) = (an.starred(GreenKind::L), an.starred(GreenKind::R));
    for_all(pairs_in(an.idempotents()), |i| (!l.related(i[0], i[1]) || r.related(i[0], i[1])).then(|| (None, vec![])))
}

/// The five equivalent conditions for right inverse, meaningful on regular
/// structures only.
pub fn theorem51_conditions(an: &Analysis) -> Vec<PredicateResult> {
    let s = an.structure();
    let n = an.n();
    let e_set = an.idempotents();
    let r = an.green(GreenKind::R);
    let c1 = right_inverse_def(an);
    let c2 = for_all(singles(n), |i| pairwise_related(an.inverses(i[0]), r).then(|| (None, vec![])));
    let c3 = for_all(pairs_in(e_set), |i| {
        let (e, f) = (i[0], i[1]);
        let ef = s.mul(e, f);
        smallest_pair(n, |x, y| s.leq(ef, s.mul(s.mul3(f, x, e), s.mul(y, f)))).map(|(x, y)| (None, vec![x, y]))
    });
    let c4 = for_all(pairs_in(e_set), |i| {
        let (e, f) = (i[0], i[1]);
        let lhs = an.right_ideal(e).intersection(an.right_ideal(f));
        (lhs == an.right_ideal(s.mul(e, f))).then(|| (None, vec![]))
    });
    let c5 = for_all(e_set.iter().map(|e| vec![e]), |i| {
        let e = i[0];
        let (se, es) = (an.left_ideal(e), an.right_ideal(e));
        let bad = (0..n).find(|&x| se.contains(x) && !an.inverses(x).is_subset(&es));
        bad.is_none().then(|| (None, vec![]))
    });
    vec![c1, c2, c3, c4, c5]
}

/// Lemma on idempotent generators: some `(Sa^m]` equals `(Se]` for an
/// ordered idempotent `e`.
pub fn idempotent_generated_left_ideals(an: &Analysis) -> PredicateResult {
    for_all(singles(an.n()), |i| first_power(an.powers(i[0]), |am| idempotent_generators(an, am).first().map(|e| vec![e])))
}

/// Under right pi-inverse: `a L* b` implies `a'a^m R* b'b^n` for all
/// ordered inverses `a'` of `a^m`, `b'` of `b^n` (smallest regular powers).
pub fn inverse_products_r_star(an: &Analysis) -> PredicateResult {
    let s = an.structure();
    let (l, r) = (an.starred(GreenKind::L), an.starred(GreenKind::R));
    let reg = an.regularity();
    for_all(pairs(an.n()), |i| {
        let (a, b) = (i[0], i[1]);
        if !l.related(a, b) {
            return Some((None, vec![]));
        }
        let (am, bn) = (reg.regular_power(a), reg.regular_power(b));
        for a1 in an.inverses(am).iter() {
            for b1 in an.inverses(bn).iter() {
                if !r.related(s.mul(a1, am), s.mul(b1, bn)) {
                    return None;
                }
            }
        }
        Some((None, vec![]))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DualPredicates {
    pub left_pi_inverse: PredicateResult,
    pub right_pi_t_simple: PredicateResult,
    pub pi_inverse: PredicateResult,
    pub pi_t_simple: PredicateResult,
}

/// Mirror notions, computed on the opposite semigroup, plus pi-inverse and
/// pi-t-simple.
pub fn dual_predicates(an: &Analysis) -> Result<DualPredicates, Error> {
    Ok(DualPredicates {
        left_pi_inverse: right_pi_inverse_def(an.opposite(), Readings::default()),
        right_pi_t_simple: left_pi_t_simple_direct(an.opposite())?,
        pi_inverse: pi_inverse(an),
        pi_t_simple: subsemigroup_search(an, KernelProperty::TSimple)?,
    })
}
