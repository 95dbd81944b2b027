//! Exhaustive and random generation of finite ordered semigroups.

use std::collections::HashSet;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::structure::OrderedSemigroup;

/// Largest order for exhaustive table enumeration.
pub const EXHAUSTIVE_MAX: usize = 4;
/// Largest order for brute-force canonical forms and poset enumeration.
pub const CANONICAL_MAX: usize = 6;
/// Largest order accepted by the random generator.
pub const RANDOM_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderMode {
    AllPartialOrders,
    DiscreteOnly,
}

impl FromStr for OrderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" | "all_partial_orders" => Ok(OrderMode::AllPartialOrders),
            "discrete" | "discrete_only" => Ok(OrderMode::DiscreteOnly),
            other => Err(Error::Config(format!("unknown order mode `{other}` (expected all|discrete)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationConfig {
    pub order: usize,
    pub up_to_iso: bool,
    pub orders: OrderMode,
    /// Draw `limit` random structures from this seed instead of enumerating.
    pub seed: Option<u64>,
    pub limit: Option<usize>,
}

impl GenerationConfig {
    pub fn exhaustive(order: usize, orders: OrderMode) -> Self {
        GenerationConfig { order, up_to_iso: false, orders, seed: None, limit: None }
    }

    pub fn check(&self) -> Result<(), Error> {
        if self.order == 0 {
            return Err(Error::Config("order must be at least 1".into()));
        }
        if self.limit == Some(0) {
            return Err(Error::Config("limit must be at least 1".into()));
        }
        if self.seed.is_some() && self.limit.is_none() {
            return Err(Error::Config("random generation needs a limit".into()));
        }
        Ok(())
    }
}

fn cap(what: &'static str, order: usize, max: usize) -> Result<(), Error> {
    if order > max {
        return Err(Error::SizeCap { what, order, max });
    }
    Ok(())
}

/// Checks every triple whose four lookups are already assigned.
fn consistent_so_far(n: usize, t: &[u8], assigned: usize) -> bool {
    const UNSET: u8 = u8::MAX;
    let get = |a: usize, b: usize| {
        let idx = a * n + b;
        if idx < assigned {
            t[idx]
        } else {
            UNSET
        }
    };
    // only triples touching the newest cell can be newly violated
    let newest = assigned - 1;
    let (p, q) = (newest / n, newest % n);
    let check = |a: usize, b: usize, c: usize| {
        let ab = get(a, b);
        let bc = get(b, c);
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let l = get(ab as usize, c);
        let r = get(a, bc as usize);
        l == UNSET || r == UNSET || l == r
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let touches = (a == p && b == q)
                    || (b == p && c == q)
                    || (get(a, b) as usize == p && c == q)
                    || (a == p && get(b, c) as usize == q);
                if touches && !check(a, b, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every associative table on `0..n` (row-major, `t[a*n+b] = a.b`), in
/// lexicographic order.
pub fn enumerate_tables(n: usize) -> Result<Vec<Vec<u8>>, Error> {
    if n == 0 {
        return Err(Error::Empty);
    }
    cap("exhaustive table enumeration", n, EXHAUSTIVE_MAX)?;
    fn go(n: usize, t: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if t.len() == n * n {
            out.push(t.clone());
            return;
        }
        for v in 0..n as u8 {
            t.push(v);
            if consistent_so_far(n, t, t.len()) {
                go(n, t, out);
            }
            t.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n * n), &mut out);
    Ok(out)
}

/// Naive generator: all `n^(n^2)` tables filtered by a full associativity
/// check. Only for cross-checking small orders.
pub fn enumerate_tables_naive(n: usize) -> Vec<Vec<u8>> {
    assert!(n <= 3, "naive enumeration is n^(n^2)");
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0u8; cells];
            for cell in (0..cells).rev() {
                t[cell] = (code % n) as u8;
                code /= n;
            }
            t
        })
        .filter(|t| {
            let m = |a: usize, b: usize| t[a * n + b] as usize;
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
        })
        .collect()
}

/// Partial orders on `0..n` as `above` bitmasks (`bit j of row i` means
/// `i <= j`). Discrete order first.
fn labeled_posets(n: usize) -> &'static [Vec<u64>] {
    static CACHE: [OnceLock<Vec<Vec<u64>>>; CANONICAL_MAX + 1] = [const { OnceLock::new() }; CANONICAL_MAX + 1];
    CACHE[n].get_or_init(|| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut out = Vec::new();
        let mut rel: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        fn go(k: usize, pairs: &[(usize, usize)], rel: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if k == pairs.len() {
                let n = rel.len();
                let transitive = (0..n).all(|a| {
                    (0..n).all(|b| rel[a] & (1 << b) == 0 || rel[b] & !rel[a] == 0)
                });
                if transitive {
                    out.push(rel.clone());
                }
                return;
            }
            let (i, j) = pairs[k];
            go(k + 1, pairs, rel, out);
            rel[i] |= 1 << j;
            go(k + 1, pairs, rel, out);
            rel[i] &= !(1 << j);
            rel[j] |= 1 << i;
            go(k + 1, pairs, rel, out);
            rel[j] &= !(1 << i);
        }
        go(0, &pairs, &mut rel, &mut out);
        out
    })
}

fn compatible(n: usize, t: &[u8], above: &[u64]) -> bool {
    let le = |a: usize, b: usize| above[a] & (1 << b) != 0;
    for a in 0..n {
        for b in 0..n {
            if a == b || !le(a, b) {
                continue;
            }
            for x in 0..n {
                if !le(t[x * n + a] as usize, t[x * n + b] as usize) || !le(t[a * n + x] as usize, t[b * n + x] as usize)
                {
                    return false;
                }
            }
        }
    }
    true
}

fn orders_for_table(n: usize, t: &[u8], mode: OrderMode) -> Vec<Vec<u64>> {
    match mode {
        OrderMode::DiscreteOnly => vec![(0..n).map(|i| 1 << i).collect()],
        OrderMode::AllPartialOrders => labeled_posets(n).iter().filter(|p| compatible(n, t, p)).cloned().collect(),
    }
}

/// Every partial order compatible with the multiplication of `s` (its own
/// order is ignored). The discrete order is always first.
pub fn enumerate_compatible_orders(s: &OrderedSemigroup) -> Result<Vec<Vec<Vec<bool>>>, Error> {
    let n = s.order();
    cap("compatible order enumeration", n, CANONICAL_MAX)?;
    Ok(orders_for_table(n, s.raw_table(), OrderMode::AllPartialOrders)
        .into_iter()
        .map(|above| (0..n).map(|a| (0..n).map(|b| above[a] & (1 << b) != 0).collect()).collect())
        .collect())
}

/// Tables x compatible orders, optionally one per isomorphism class (the
/// first in enumeration order is kept). Random mode draws `limit`
/// structures from consecutive seeds.
pub fn enumerate_ordered_semigroups(config: &GenerationConfig) -> Result<Vec<OrderedSemigroup>, Error> {
    config.check()?;
    let n = config.order;
    if let Some(seed) = config.seed {
        let limit = config.limit.expect("checked");
        let mut out = Vec::with_capacity(limit);
        for i in 0..limit as u64 {
            let mut s = random_ordered_semigroup(n, seed.wrapping_add(i))?;
            if config.orders == OrderMode::DiscreteOnly && !s.is_discrete() {
                s = OrderedSemigroup::with_discrete_order(&s.table_rows())?;
            }
            out.push(s);
        }
        return dedupe(out, config.up_to_iso);
    }
    let tables = enumerate_tables(n)?;
    let per_table: Vec<Vec<OrderedSemigroup>> = tables
        .par_iter()
        .map(|t| {
            orders_for_table(n, t, config.orders)
                .into_iter()
                .map(|above| OrderedSemigroup::from_trusted(n, t.clone(), &above))
                .collect()
        })
        .collect();
    let mut all: Vec<OrderedSemigroup> = per_table.into_iter().flatten().collect();
    all = dedupe(all, config.up_to_iso)?;
    if let Some(limit) = config.limit {
        all.truncate(limit);
    }
    Ok(all)
}

fn dedupe(all: Vec<OrderedSemigroup>, up_to_iso: bool) -> Result<Vec<OrderedSemigroup>, Error> {
    if !up_to_iso {
        return Ok(all);
    }
    let keys: Vec<String> = all.par_iter().map(canonical_form).collect::<Result<_, _>>()?;
    let mut seen = HashSet::new();
    Ok(all.into_iter().zip(keys).filter(|(_, k)| seen.insert(k.clone())).map(|(s, _)| s).collect())
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) {
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
    out
}

/// Lexicographically smallest key over all relabellings. Equal keys mean
/// isomorphic as ordered semigroups.
pub fn canonical_form(s: &OrderedSemigroup) -> Result<String, Error> {
    let n = s.order();
    cap("canonical form", n, CANONICAL_MAX)?;
    Ok(permutations(n).iter().map(|perm| s.relabel(perm).key()).min().expect("at least one permutation"))
}

/// Seeded random structure: a random associative table found by randomised
/// backtracking with associativity pruning, then a random compatible order
/// grown by closing random comparabilities.
pub fn random_ordered_semigroup(n: usize, seed: u64) -> Result<OrderedSemigroup, Error> {
    if n == 0 {
        return Err(Error::Empty);
    }
    cap("random generation", n, RANDOM_MAX)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const RESTARTS: usize = 64;
    for _ in 0..RESTARTS {
        if let Some(t) = random_table(n, &mut rng, 200_000) {
            let above = random_compatible_order(n, &t, &mut rng);
            return Ok(OrderedSemigroup::from_trusted(n, t, &above));
        }
    }
    Err(Error::SamplingExhausted { attempts: RESTARTS })
}

fn random_table(n: usize, rng: &mut ChaCha8Rng, budget: usize) -> Option<Vec<u8>> {
    let choices: Vec<Vec<u8>> = (0..n * n)
        .map(|_| {
            let mut v: Vec<u8> = (0..n as u8).collect();
            v.shuffle(rng);
            v
        })
        .collect();
    let mut t: Vec<u8> = Vec::with_capacity(n * n);
    let mut next = vec![0usize; n * n];
    let mut nodes = 0;
    loop {
        let cell = t.len();
        if cell == n * n {
            return Some(t);
        }
        if next[cell] == n {
            next[cell] = 0;
            t.pop()?;
            continue;
        }
        nodes += 1;
        if nodes > budget {
            return None;
        }
        t.push(choices[cell][next[cell]]);
        next[cell] += 1;
        if !consistent_so_far(n, &t, t.len()) {
            t.pop();
        }
    }
}

/// Smallest relation containing `rel` and `a <= b` that is transitive and
/// compatible, or `None` if that breaks antisymmetry.
fn close_with(n: usize, t: &[u8], rel: &[u64], a: usize, b: usize) -> Option<Vec<u64>> {
    let mut r = rel.to_vec();
    let mut pending = vec![(a, b)];
    while let Some((x, y)) = pending.pop() {
        if r[x] & (1 << y) != 0 {
            continue;
        }
        if r[y] & (1 << x) != 0 {
            return None;
        }
        r[x] |= 1 << y;
        for z in 0..n {
            pending.push((t[z * n + x] as usize, t[z * n + y] as usize));
            pending.push((t[x * n + z] as usize, t[y * n + z] as usize));
            if r[z] & (1 << x) != 0 {
                pending.push((z, y));
            }
            if r[y] & (1 << z) != 0 {
                pending.push((x, z));
            }
        }
    }
    Some(r)
}

fn random_compatible_order(n: usize, t: &[u8], rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut rel: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    let mut candidates: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    candidates.shuffle(rng);
    for (a, b) in candidates {
        if rng.gen_bool(0.5) {
            if let Some(r) = close_with(n, t, &rel, a, b) {
                rel = r;
            }
        }
    }
    rel
}

/// `count` structures of order `n` with a non-discrete order, each a
/// uniformly chosen table (among those admitting one) with a uniformly
/// chosen non-discrete compatible order. Deterministic per seed.
pub fn sample_nontrivial_orders(n: usize, count: usize, seed: u64) -> Result<Vec<OrderedSemigroup>, Error> {
    let tables = enumerate_tables(n)?;
    let options: Vec<(usize, Vec<Vec<u64>>)> = tables
        .par_iter()
        .enumerate()
        .map(|(i, t)| (i, orders_for_table(n, t, OrderMode::AllPartialOrders).into_iter().skip(1).collect::<Vec<_>>()))
        .filter(|(_, orders)| !orders.is_empty())
        .collect();
    if options.is_empty() {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let (ti, orders) = &options[rng.gen_range(0..options.len())];
            let above = &orders[rng.gen_range(0..orders.len())];
            OrderedSemigroup::from_trusted(n, tables[*ti].clone(), above)
        })
        .collect())
}
