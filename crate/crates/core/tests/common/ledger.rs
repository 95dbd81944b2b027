//! The worked fixture examples. Every fact carries the expected value, the
//! value the brute-force oracle computes and the value the library reports.

use std::fmt::Debug;

use super::{naive_catalog, raw, Raw};
use ordsgp::congruences::{self, classify_partition, enumerate_semilattice_congruences};
use ordsgp::enumerate::{canonical_form, enumerate_compatible_orders, enumerate_ordered_semigroups, enumerate_tables};
use ordsgp::enumerate::{random_ordered_semigroup, GenerationConfig, OrderMode};
use ordsgp::harness::{verify, TheoremId, Verdict};
use ordsgp::predicates::{self, KernelProperty, Readings};
use ordsgp::relations::{is_rho_unique, Partition};
use ordsgp::structure::IdealKind;
use ordsgp::witness::{Certificate, PredicateResult};
use ordsgp::{fixtures, Analysis, GreenKind, Predicate};

pub struct Fact {
    pub name: &'static str,
    pub expected: String,
    pub oracle: String,
    pub library: String,
}

impl Fact {
    pub fn confirmed(&self) -> bool {
        self.oracle == self.expected
    }

    pub fn agrees(&self) -> bool {
        self.library == self.expected
    }
}

fn fact<T: Debug + PartialEq>(name: &'static str, expected: T, oracle: T, library: T) -> Fact {
    Fact { name, expected: format!("{expected:?}"), oracle: format!("{oracle:?}"), library: format!("{library:?}") }
}

pub fn sl2() -> Raw {
    raw(&[&[0, 0], &[0, 1]], &[(0, 1)])
}

pub fn lz2() -> Raw {
    raw(&[&[0, 0], &[1, 1]], &[])
}

pub fn rz2() -> Raw {
    raw(&[&[0, 1], &[0, 1]], &[])
}

pub fn n2() -> Raw {
    raw(&[&[0, 0], &[0, 0]], &[])
}

pub fn t1() -> Raw {
    raw(&[&[0]], &[])
}

// oracle-side helpers built from the primitives in the parent module

fn opp(r: &Raw) -> Raw {
    let t = (0..r.n).map(|a| (0..r.n).map(|b| r.m(b, a)).collect()).collect();
    Raw { n: r.n, t, le: r.le.clone() }
}

fn sub(r: &Raw, h: &[usize]) -> Raw {
    let idx = |x: usize| h.iter().position(|&y| y == x).unwrap();
    Raw {
        n: h.len(),
        t: h.iter().map(|&a| h.iter().map(|&b| idx(r.m(a, b))).collect()).collect(),
        le: h.iter().map(|&a| h.iter().map(|&b| r.le[a][b]).collect()).collect(),
    }
}

fn classes(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        match out.iter_mut().find(|c| labels[c[0]] == l) {
            Some(c) => c.push(i),
            None => out.push(vec![i]),
        }
    }
    out
}

/// Coarsest semilattice congruence whose classes are closed and satisfy
/// `ok`, as its number of classes.
fn decomposition(r: &Raw, ok: impl Fn(&Raw) -> bool) -> Option<usize> {
    r.semilattice_congruences()
        .iter()
        .map(|l| classes(l))
        .filter(|cs| cs.iter().all(|c| r.closed(c) && ok(&sub(r, c))))
        .map(|cs| cs.len())
        .min()
}

fn inverses_pairwise(r: &Raw, x: usize, kind: char) -> bool {
    let v = r.inverses(x);
    v.iter().all(|&a| v.iter().all(|&b| r.green(kind, a, b)))
}

fn pi_inverse(r: &Raw) -> bool {
    (0..r.n).all(|a| r.exists_m(|m| !r.inverses(r.pow(a, m)).is_empty() && inverses_pairwise(r, r.pow(a, m), 'H')))
}

fn pi_t_simple(r: &Raw) -> bool {
    let o = opp(r);
    r.subsets()
        .iter()
        .any(|h| r.closed(h) && r.absorbs_powers(h) && r.left_simple_pi_regular_on(h) && o.left_simple_pi_regular_on(h))
}

fn right_inverse(r: &Raw) -> bool {
    let e = r.idempotents();
    (0..r.n).all(|a| {
        let gens: Vec<usize> = e.iter().copied().filter(|&f| r.sa(f) == r.sa(a)).collect();
        !gens.is_empty() && gens.iter().all(|&g| gens.iter().all(|&h| r.green('R', g, h)))
    })
}

fn thm4(r: &Raw) -> Vec<bool> {
    let pairs = r.pairs();
    let c4 = pairs.iter().all(|&(a, b)| {
        r.exists_m(|m| {
            let abm = r.pow(r.m(a, b), m);
            let bam1 = r.pow(r.m(b, a), m + 1);
            (0..r.n).any(|x| r.le[abm][r.m(r.m(abm, x), bam1)])
        })
    });
    vec![
        decomposition(r, Raw::left_pi_t_simple).is_some(),
        r.pi_regular() && pairs.iter().all(|&(a, b)| r.star('L', r.m(a, b), r.m(b, a))),
        r.pi_regular() && r.right_weakly_commutative(),
        c4,
        decomposition(r, |c| c.nil_extension_kernel().is_some()).is_some(),
    ]
}

fn in_right(r: &Raw, e: usize, xs: &[usize]) -> bool {
    let es = r.as_(e);
    xs.iter().all(|x| es.contains(x))
}

fn thm5(r: &Raw) -> Vec<bool> {
    let e = r.idempotents();
    let c2 = (0..r.n).all(|a| {
        r.exists_m(|m| {
            let am = r.pow(a, m);
            !r.inverses(am).is_empty() && inverses_pairwise(r, am, 'R')
        })
    });
    let c4 = e.iter().all(|&x| {
        e.iter().all(|&y| {
            r.exists_m(|k| {
                let p = r.pow(r.m(x, y), k);
                let bound: Vec<usize> = r.as_(x).into_iter().filter(|z| r.as_(y).contains(z)).collect();
                r.closure(&r.prod(&[p], &r.all())).iter().all(|z| bound.contains(z))
            })
        })
    });
    let c5 = e.iter().all(|&f| {
        r.exists_m(|m| (0..r.n).all(|x| !r.sa(f).contains(&r.pow(x, m)) || in_right(r, f, &r.inverses(r.pow(x, m)))))
    });
    vec![r.right_pi_inverse(), c2, r.thm5_c3(), c4, c5]
}

fn thm51(r: &Raw) -> Vec<bool> {
    let e = r.idempotents();
    let c3 = e.iter().all(|&x| {
        e.iter().all(|&y| {
            let xy = r.m(x, y);
            (0..r.n).any(|p| (0..r.n).any(|q| r.le[xy][r.m(r.m(r.m(r.m(y, p), x), q), y)]))
        })
    });
    let c4 = e.iter().all(|&x| {
        e.iter().all(|&y| {
            let meet: Vec<usize> = r.as_(x).into_iter().filter(|z| r.as_(y).contains(z)).collect();
            meet == r.as_(r.m(x, y))
        })
    });
    let c5 = e.iter().all(|&f| (0..r.n).all(|x| !r.sa(f).contains(&x) || in_right(r, f, &r.inverses(x))));
    vec![right_inverse(r), (0..r.n).all(|a| inverses_pairwise(r, a, 'R')), c3, c4, c5]
}

/// Labels of a starred relation, smallest member naming each class.
fn star_labels(r: &Raw, kind: char) -> Vec<usize> {
    (0..r.n).map(|a| (0..r.n).find(|&b| r.star(kind, a, b)).unwrap()).collect()
}

fn congruence(r: &Raw, labels: &[usize]) -> bool {
    let rel = |a: usize, b: usize| labels[a] == labels[b];
    r.pairs()
        .iter()
        .all(|&(a, b)| !rel(a, b) || (0..r.n).all(|c| rel(r.m(c, a), r.m(c, b)) && rel(r.m(a, c), r.m(b, c))))
}

fn semilattice(r: &Raw, labels: &[usize]) -> bool {
    let rel = |a: usize, b: usize| labels[a] == labels[b];
    congruence(r, labels)
        && (0..r.n).all(|a| rel(a, r.m(a, a)))
        && r.pairs().iter().all(|&(a, b)| rel(r.m(a, b), r.m(b, a)))
}

fn complete(r: &Raw, labels: &[usize]) -> bool {
    semilattice(r, labels) && r.pairs().iter().all(|&(a, b)| !r.le[a][b] || labels[a] == labels[r.m(a, b)])
}

fn refines(r: &Raw, finer: char, coarser: char) -> bool {
    r.pairs().iter().all(|&(a, b)| !r.star(finer, a, b) || r.star(coarser, a, b))
}

fn thm8(r: &Raw) -> Vec<bool> {
    let rs = star_labels(r, 'R');
    vec![
        congruence(r, &rs),
        refines(r, 'L', 'R'),
        decomposition(r, |c| opp(c).left_pi_t_simple()).is_some(),
        semilattice(r, &rs),
    ]
}

fn hstar(r: &Raw) -> Vec<bool> {
    let hs = star_labels(r, 'H');
    vec![
        congruence(r, &hs),
        refines(r, 'L', 'H') && refines(r, 'R', 'H'),
        decomposition(r, pi_t_simple).is_some(),
        semilattice(r, &hs),
    ]
}

fn cpr(r: &Raw) -> Vec<bool> {
    let mut v = thm8(r);
    v.truncate(3);
    v.push(r.completely_pi_regular() && r.left_weakly_commutative());
    v
}

fn first_nonassociative(r: &Raw) -> Option<[usize; 3]> {
    let n = r.n;
    (0..n * n * n).map(|i| [i / (n * n), (i / n) % n, i % n]).find(|&[a, b, c]| r.m(r.m(a, b), c) != r.m(a, r.m(b, c)))
}

fn isomorphic(x: &Raw, y: &Raw) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    x.n == y.n
        && perms(x.n).iter().any(|p| {
            x.pairs().iter().all(|&(a, b)| p[x.m(a, b)] == y.m(p[a], p[b]) && x.le[a][b] == y.le[p[a]][p[b]])
        })
}

fn orders_of(r: &Raw) -> usize {
    naive_catalog(r.n).iter().filter(|c| c.t == r.t).count()
}

// library-side helpers

fn lib(r: &Raw) -> Analysis {
    Analysis::new(&r.to_structure())
}

fn truth(v: &[PredicateResult]) -> Vec<bool> {
    v.iter().map(|p| p.holds).collect()
}

fn partition_classes(p: &PredicateResult) -> Option<usize> {
    match (&p.certificate, p.holds) {
        (Some(Certificate::Partition(part)), true) => Some(part.num_classes()),
        _ => None,
    }
}

fn kernel(an: &Analysis, prop: KernelProperty) -> Option<Vec<usize>> {
    match predicates::nil_extension_search(an, prop).unwrap().certificate {
        Some(Certificate::NilExtension(w)) => Some(w.kernel.to_vec()),
        _ => None,
    }
}

fn subsemigroup(an: &Analysis) -> Option<(Vec<usize>, Vec<usize>)> {
    match predicates::left_pi_t_simple_direct(an).unwrap().certificate {
        Some(Certificate::Subsemigroup(w)) => Some((w.subsemigroup.to_vec(), w.exponents)),
        _ => None,
    }
}

fn pi_t_simple_subsemigroup(r: &Raw) -> Option<(Vec<usize>, Vec<usize>)> {
    let h = r
        .subsets()
        .into_iter()
        .filter(|h| r.closed(h) && r.absorbs_powers(h) && r.left_simple_pi_regular_on(h))
        .min_by_key(|h| (h.len(), h.iter().map(|&i| 1u32 << i).sum::<u32>()))?;
    let exps = (0..r.n).map(|a| (1..=r.bound()).find(|&m| h.contains(&r.pow(a, m))).unwrap()).collect();
    Some((h, exps))
}

fn right_decomposition(an: &Analysis) -> Option<usize> {
    let p = congruences::semilattice_decomposition(an, false, |c| Ok(predicates::left_pi_t_simple_direct(c.opposite())?.holds));
    partition_classes(&p.unwrap())
}

fn left_decomposition(an: &Analysis) -> Option<usize> {
    let p = congruences::semilattice_decomposition(an, false, |c| Ok(predicates::left_pi_t_simple_direct(c)?.holds));
    partition_classes(&p.unwrap())
}

fn verify_outcome(r: &Raw, id: TheoremId) -> (Vec<bool>, Vec<bool>, Verdict) {
    let rep = verify(&r.to_structure(), id).unwrap();
    (rep.hypothesis.values().copied().collect(), rep.condition_values(), rep.verdict)
}

pub fn facts() -> Vec<Fact> {
    let (sl2, lz2, rz2, n2, t1) = (sl2(), lz2(), rz2(), n2(), t1());
    let (a_sl2, a_lz2, a_rz2, a_n2) = (lib(&sl2), lib(&lz2), lib(&rz2), lib(&n2));
    let d = Readings::default();
    let mut out = Vec::new();

    out.push(fact(
        "fixtures module matches the hand-written tables",
        true,
        true,
        [fixtures::sl2(), fixtures::lz2(), fixtures::rz2(), fixtures::n2(), fixtures::t1()].iter().map(Raw::of).collect::<Vec<_>>()
            == vec![sl2.clone(), lz2.clone(), rz2.clone(), n2.clone(), t1.clone()],
    ));

    let lz2_up = raw(&[&[0, 0], &[1, 1]], &[(0, 1)]);
    out.push(fact(
        "left-zero table with 0<=1 passes every axiom",
        true,
        naive_catalog(2).contains(&lz2_up),
        ordsgp::check(&lz2_up.t, &lz2_up.le).unwrap().ok,
    ));
    let bad = raw(&[&[1, 0], &[0, 0]], &[]);
    let report = ordsgp::check(&bad.t, &bad.le).unwrap();
    out.push(fact(
        "non-associative table fails first at (0,0,1)",
        Some([0, 0, 1]),
        first_nonassociative(&bad),
        report.violations.iter().find(|v| v.axiom == ordsgp::structure::Axiom::Associativity).map(|v| v.witness),
    ));

    let s_lz2 = lz2.to_structure();
    out.push(fact(
        "LZ2: S.{0} = S",
        vec![0, 1],
        lz2.prod(&lz2.all(), &[0]),
        s_lz2.subset_product(s_lz2.full(), s_lz2.singleton(0)).to_vec(),
    ));
    out.push(fact(
        "LZ2: left principal ideals are S",
        vec![vec![0, 1], vec![0, 1]],
        vec![lz2.principal(0, 'L'), lz2.principal(1, 'L')],
        (0..2).map(|a| s_lz2.principal_ideal(a, IdealKind::Left).to_vec()).collect(),
    ));
    let s_rz2 = rz2.to_structure();
    out.push(fact(
        "RZ2: left principal ideals are singletons",
        vec![vec![0], vec![1]],
        vec![rz2.principal(0, 'L'), rz2.principal(1, 'L')],
        (0..2).map(|a| s_rz2.principal_ideal(a, IdealKind::Left).to_vec()).collect(),
    ));
    out.push(fact("LZ2: L has one class", true, lz2.green('L', 0, 1), a_lz2.green(GreenKind::L).related(0, 1)));
    out.push(fact("RZ2: L is the identity", false, rz2.green('L', 0, 1), a_rz2.green(GreenKind::L).related(0, 1)));

    out.push(fact("SL2: V(1) = {1}", vec![1], sl2.inverses(1), a_sl2.inverses(1).to_vec()));
    out.push(fact("N2: V(1) is empty", Vec::<usize>::new(), n2.inverses(1), a_n2.inverses(1).to_vec()));
    out.push(fact("LZ2: V(0) = {0,1}", vec![0, 1], lz2.inverses(0), a_lz2.inverses(0).to_vec()));
    out.push(fact(
        "N2: smallest regular powers are 1 and 2",
        vec![1, 2],
        vec![n2.smallest_regular_power(0), n2.smallest_regular_power(1)],
        (0..2).map(|a| a_n2.regularity().smallest_regular_power(a)).collect(),
    ));
    out.push(fact("N2: L* has one class", true, n2.star('L', 0, 1), a_n2.starred(GreenKind::L).related(0, 1)));
    out.push(fact("RZ2: R* has one class", true, rz2.star('R', 0, 1), a_rz2.starred(GreenKind::R).related(0, 1)));

    let rho = |an: &Analysis| {
        let r = is_rho_unique(an.starred(GreenKind::L), an.idempotents());
        (r.holds, r.counterexample)
    };
    out.push(fact("LZ2: ordered idempotents are L*-unique", (true, None), (lz2.star('L', 0, 1), None), rho(&a_lz2)));
    out.push(fact(
        "SL2: ordered idempotents are not L*-unique, pair (0,1)",
        (false, Some(vec![0, 1])),
        (sl2.star('L', 0, 1), (!sl2.star('L', 0, 1)).then(|| vec![0, 1])),
        rho(&a_sl2),
    ));

    let eval = |an: &Analysis, p| predicates::evaluate(an, p).unwrap();
    out.push(fact("LZ2: left simple", true, lz2.left_simple(), eval(&a_lz2, Predicate::LeftSimple).holds));
    out.push(fact(
        "SL2: not left simple, counterexample 0 with (S0] = {0}",
        (false, Some(vec![0]), vec![0]),
        (sl2.left_simple(), (0..2).find(|&a| sl2.sa(a).len() < 2).map(|a| vec![a]), sl2.sa(0)),
        (eval(&a_sl2, Predicate::LeftSimple).holds, eval(&a_sl2, Predicate::LeftSimple).counterexample, a_sl2.left_ideal(0).to_vec()),
    ));
    out.push(fact(
        "N2: left archimedean with largest exponent 2",
        (true, Some(2)),
        (
            n2.left_archimedean(),
            n2.pairs()
                .iter()
                .map(|&(a, b)| (1..=n2.bound()).find(|&m| n2.in_closure(n2.pow(a, m), &n2.prod(&n2.all(), &[b]))).unwrap())
                .max(),
        ),
        {
            let r = eval(&a_n2, Predicate::LeftArchimedean);
            (r.holds, r.witnesses.iter().filter_map(|w| w.exponent).max())
        },
    ));

    out.push(fact(
        "LZ2: left pi-t-simple with H = S",
        Some((vec![0, 1], vec![1, 1])),
        pi_t_simple_subsemigroup(&lz2),
        subsemigroup(&a_lz2),
    ));
    out.push(fact(
        "N2: left pi-t-simple with H = {0}, exponents 1 and 2",
        Some((vec![0], vec![1, 2])),
        pi_t_simple_subsemigroup(&n2),
        subsemigroup(&a_n2),
    ));
    out.push(fact("SL2: not left pi-t-simple", None, pi_t_simple_subsemigroup(&sl2), subsemigroup(&a_sl2)));

    let t2 = |an: &Analysis| truth(&predicates::theorem2_conditions(an).unwrap());
    let t2_oracle = |r: &Raw| {
        vec![
            r.left_pi_t_simple(),
            r.pi_regular() && r.l_star_universal(),
            r.pi_regular() && r.l_star_universal(),
            r.thm2_c4(),
            r.thm2_c5(),
            r.thm2_c6(),
            r.thm2_c7(),
            r.nil_extension_kernel().is_some(),
        ]
    };
    out.push(fact("N2: the eight left pi-t-simple conditions hold", vec![true; 8], t2_oracle(&n2), t2(&a_n2)));
    out.push(fact("SL2: the eight left pi-t-simple conditions fail", vec![false; 8], t2_oracle(&sl2), t2(&a_sl2)));
    out.push(fact(
        "SL2: a^m in (a^m S b] fails at (1,0)",
        Some(vec![1, 0]),
        sl2.pairs().iter().find(|&&(a, b)| !(1..=sl2.bound()).any(|m| {
            let am = sl2.pow(a, m);
            (0..2).any(|x| sl2.le[am][sl2.m(sl2.m(am, x), b)])
        })).map(|&(a, b)| vec![a, b]),
        predicates::theorem2_conditions(&a_sl2).unwrap()[3].counterexample.clone(),
    ));

    out.push(fact("N2: nil-extension kernel {0}", Some(vec![0]), n2.nil_extension_kernel(), kernel(&a_n2, KernelProperty::LeftSimple)));
    out.push(fact("LZ2: nil-extension kernel S", Some(vec![0, 1]), lz2.nil_extension_kernel(), kernel(&a_lz2, KernelProperty::LeftSimple)));
    out.push(fact(
        "LZ2: no t-simple nil-extension kernel",
        false,
        lz2.right_simple(),
        kernel(&a_lz2, KernelProperty::TSimple).is_some(),
    ));

    let t4 = |an: &Analysis| truth(&predicates::theorem4_conditions(an, d).unwrap());
    out.push(fact("SL2: the five semilattice conditions hold", vec![true; 5], thm4(&sl2), t4(&a_sl2)));
    out.push(fact(
        "SL2: left pi-t-simple decomposition has singleton classes",
        Some(2),
        decomposition(&sl2, Raw::left_pi_t_simple),
        partition_classes(&predicates::theorem4_conditions(&a_sl2, d).unwrap()[0]),
    ));
    out.push(fact("LZ2: the five semilattice conditions hold", vec![true; 5], thm4(&lz2), t4(&a_lz2)));
    out.push(fact(
        "LZ2: left pi-t-simple decomposition has one class",
        Some(1),
        decomposition(&lz2, Raw::left_pi_t_simple),
        partition_classes(&predicates::theorem4_conditions(&a_lz2, d).unwrap()[0]),
    ));
    out.push(fact("RZ2: ab L* ba fails", false, thm4(&rz2)[1], t4(&a_rz2)[1]));

    out.push(fact("SL2: right pi-inverse", true, sl2.right_pi_inverse(), predicates::right_pi_inverse_def(&a_sl2, d).holds));
    out.push(fact("LZ2: not right pi-inverse", false, lz2.right_pi_inverse(), predicates::right_pi_inverse_def(&a_lz2, d).holds));
    out.push(fact("T1: right pi-inverse", true, t1.right_pi_inverse(), predicates::right_pi_inverse_def(&lib(&t1), d).holds));

    let t5 = |an: &Analysis| truth(&predicates::theorem5_conditions(an, d));
    out.push(fact("SL2: the five right pi-inverse conditions hold", vec![true; 5], thm5(&sl2), t5(&a_sl2)));
    out.push(fact("LZ2: the five right pi-inverse conditions fail", vec![false; 5], thm5(&lz2), t5(&a_lz2)));
    out.push(fact(
        "LZ2: (ef)^n in (fSf] fails at (0,1)",
        Some(vec![0, 1]),
        lz2.pairs().iter().find(|&&(e, f)| {
            !(1..=lz2.bound()).any(|k| (0..2).any(|z| lz2.le[lz2.pow(lz2.m(e, f), k)][lz2.m(lz2.m(f, z), f)]))
        }).map(|&(e, f)| vec![e, f]),
        predicates::theorem5_conditions(&a_lz2, d)[2].counterexample.clone(),
    ));
    out.push(fact("SL2: L* implies R* on idempotents", true, sl2.thm6_condition(), predicates::theorem6_condition(&a_sl2).holds));
    out.push(fact("LZ2: L* does not imply R* on idempotents", false, lz2.thm6_condition(), predicates::theorem6_condition(&a_lz2).holds));

    let duals = |an: &Analysis| predicates::dual_predicates(an).unwrap();
    out.push(fact("RZ2: right pi-t-simple", true, opp(&rz2).left_pi_t_simple(), duals(&a_rz2).right_pi_t_simple.holds));
    out.push(fact("LZ2: left pi-inverse", true, opp(&lz2).right_pi_inverse(), duals(&a_lz2).left_pi_inverse.holds));
    out.push(fact(
        "SL2: pi-inverse, equal to left and right pi-inverse together",
        (true, true),
        (pi_inverse(&sl2), sl2.right_pi_inverse() && opp(&sl2).right_pi_inverse()),
        {
            let dp = duals(&a_sl2);
            (dp.pi_inverse.holds, dp.left_pi_inverse.holds && predicates::right_pi_inverse_def(&a_sl2, d).holds)
        },
    ));

    let t51 = |an: &Analysis| truth(&predicates::theorem51_conditions(an));
    out.push(fact("SL2: the five right inverse conditions hold", vec![true; 5], thm51(&sl2), t51(&a_sl2)));
    out.push(fact("LZ2: the five right inverse conditions fail", vec![false; 5], thm51(&lz2), t51(&a_lz2)));

    let cert = |r: &Raw, labels: &[usize]| {
        let c = classify_partition(&r.to_structure(), &Partition::from_labels(labels));
        (c.is_congruence, c.is_semilattice, c.is_complete)
    };
    out.push(fact(
        "SL2 singletons: congruence, semilattice, complete",
        (true, true, true),
        (congruence(&sl2, &[0, 1]), semilattice(&sl2, &[0, 1]), complete(&sl2, &[0, 1])),
        cert(&sl2, &[0, 1]),
    ));
    out.push(fact(
        "LZ2 singletons: congruence, not semilattice",
        (true, false),
        (congruence(&lz2, &[0, 1]), semilattice(&lz2, &[0, 1])),
        {
            let c = cert(&lz2, &[0, 1]);
            (c.0, c.1)
        },
    ));
    let slc = |r: &Raw| {
        let mut v: Vec<Vec<usize>> =
            enumerate_semilattice_congruences(&r.to_structure()).unwrap().iter().map(|p| p.labels().to_vec()).collect();
        v.sort();
        v
    };
    out.push(fact("LZ2: only the one-class semilattice congruence", vec![vec![0, 0]], lz2.semilattice_congruences(), slc(&lz2)));
    out.push(fact(
        "SL2: both partitions are semilattice congruences",
        vec![vec![0, 0], vec![0, 1]],
        sl2.semilattice_congruences(),
        slc(&sl2),
    ));
    out.push(fact(
        "SL2: decomposes into singleton left pi-t-simple classes",
        Some(2),
        decomposition(&sl2, Raw::left_pi_t_simple),
        left_decomposition(&a_sl2),
    ));
    out.push(fact(
        "LZ2: decomposes into one left pi-t-simple class",
        Some(1),
        decomposition(&lz2, Raw::left_pi_t_simple),
        left_decomposition(&a_lz2),
    ));
    out.push(fact(
        "LZ2: no right pi-t-simple decomposition",
        None,
        decomposition(&lz2, |c| opp(c).left_pi_t_simple()),
        right_decomposition(&a_lz2),
    ));

    let t8 = |an: &Analysis| truth(&congruences::theorem8_conditions(an, d).unwrap());
    out.push(fact(
        "SL2: right pi-inverse and the four R* conditions hold",
        (true, vec![true; 4]),
        (sl2.right_pi_inverse(), thm8(&sl2)),
        (predicates::right_pi_inverse_def(&a_sl2, d).holds, t8(&a_sl2)),
    ));
    out.push(fact(
        "LZ2: hypothesis fails, R* congruence holds, R* semilattice fails",
        (false, true, false),
        (lz2.right_pi_inverse(), thm8(&lz2)[0], thm8(&lz2)[3]),
        {
            let v = t8(&a_lz2);
            (predicates::right_pi_inverse_def(&a_lz2, d).holds, v[0], v[3])
        },
    ));
    out.push(fact(
        "T1: the four R* conditions hold",
        vec![true; 4],
        thm8(&t1),
        t8(&lib(&t1)),
    ));
    out.push(fact(
        "SL2: pi-inverse suite, all four H* conditions hold",
        (vec![true], vec![true; 4], Verdict::Equivalent),
        (vec![pi_inverse(&sl2)], hstar(&sl2), Verdict::Equivalent),
        verify_outcome(&sl2, TheoremId::CorHstar),
    ));
    out.push(fact(
        "N2: completely pi-regular suite, hypotheses and conditions hold",
        (vec![true, true], vec![true; 4], Verdict::Equivalent),
        (vec![n2.left_pi_regular(), n2.right_pi_inverse()], cpr(&n2), Verdict::Equivalent),
        verify_outcome(&n2, TheoremId::CorCpr),
    ));
    out.push(fact(
        "N2: left pi-t-simple suite is equivalent",
        (vec![true; 8], Verdict::Equivalent),
        (t2_oracle(&n2), Verdict::Equivalent),
        {
            let (_, c, v) = verify_outcome(&n2, TheoremId::Thm2);
            (c, v)
        },
    ));

    let discrete = |n: usize| naive_catalog(n).iter().filter(|r| (0..n).all(|a| (0..n).all(|b| r.le[a][b] == (a == b)))).count();
    out.push(fact("2-element tables: 8", 8, discrete(2), enumerate_tables(2).unwrap().len()));
    out.push(fact("3-element tables: 113", 113, discrete(3), enumerate_tables(3).unwrap().len()));
    out.push(fact(
        "LZ2 table admits 3 compatible orders",
        3,
        orders_of(&lz2),
        enumerate_compatible_orders(&s_lz2).unwrap().len(),
    ));
    out.push(fact(
        "N2 table admits 3 compatible orders",
        3,
        orders_of(&n2),
        enumerate_compatible_orders(&n2.to_structure()).unwrap().len(),
    ));
    let all2 = enumerate_ordered_semigroups(&GenerationConfig::exhaustive(2, OrderMode::AllPartialOrders)).unwrap().len();
    out.push(fact("order 2, all orders: 20 structures", 20, naive_catalog(2).len(), all2));
    let disc3 = enumerate_ordered_semigroups(&GenerationConfig::exhaustive(3, OrderMode::DiscreteOnly)).unwrap().len();
    out.push(fact("order 3, discrete: 113 structures", 113, discrete(3), disc3));
    out.push(fact(
        "LZ2 and RZ2 get different canonical keys",
        false,
        isomorphic(&lz2, &rz2),
        canonical_form(&s_lz2).unwrap() == canonical_form(&s_rz2).unwrap(),
    ));
    let random = random_ordered_semigroup(2, 7).unwrap();
    out.push(fact(
        "random order-2 structure re-validates",
        true,
        naive_catalog(2).contains(&Raw::of(&random)),
        ordsgp::check(&random.table_rows(), &random.leq_rows()).unwrap().ok,
    ));
    out
}
