//! Finite ordered semigroups: the validated representation and the
//! closure/ideal calculus everything else is built on.
//!
//! Elements are the dense integers `0..n`. The order is kept as two families
//! of bitmasks (`below[j] = {x : x <= j}` and `above[i] = {y : i <= y}`), so
//! a downward closure is an OR over the members of a set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Largest carrier accepted by [`validate`]; subsets are stored in a `u64`.
pub const MAX_ORDER: usize = 64;

/// A subset of the carrier `0..len`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u64,
    len: u8,
}

impl SubsetMask {
    pub fn empty(len: usize) -> Self {
        debug_assert!(len <= MAX_ORDER);
        SubsetMask { bits: 0, len: len as u8 }
    }

    pub fn full(len: usize) -> Self {
        SubsetMask { bits: low_bits(len), len: len as u8 }
    }

    pub fn singleton(len: usize, a: usize) -> Self {
        debug_assert!(a < len);
        SubsetMask { bits: 1 << a, len: len as u8 }
    }

    /// Builds a mask from raw bits; bits at or above `len` are dropped.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        SubsetMask { bits: bits & low_bits(len), len: len as u8 }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(len: usize, elems: I) -> Self {
        let mut m = SubsetMask::empty(len);
        for a in elems {
            m.insert(a);
        }
        m
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == low_bits(self.len())
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.len() && self.bits & (1 << a) != 0
    }

    pub fn insert(&mut self, a: usize) {
        assert!(a < self.len(), "element {a} outside carrier of size {}", self.len);
        self.bits |= 1 << a;
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        SubsetMask { bits: self.bits | other.bits, len: self.len }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        SubsetMask { bits: self.bits & other.bits, len: self.len }
    }

    pub fn difference(self, other: Self) -> Self {
        SubsetMask { bits: self.bits & !other.bits, len: self.len }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(a)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

fn low_bits(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// The powers `a, a^2, ...` of one element up to the first repetition.
///
/// Every value `a^m` (m >= 1) is one of `distinct_powers`, so any condition
/// of the form "there is m with P(a^m)" or "for all n, P(a^n)" is decided by
/// scanning that list. When several elements share one exponent, the joint
/// sequence is periodic from the largest index on with the lcm of the periods
/// (see [`joint_exponent_bound`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerProfile {
    pub element: usize,
    pub index: usize,
    pub period: usize,
    pub distinct_powers: Vec<usize>,
}

impl PowerProfile {
    /// `a^m` for any m >= 1.
    pub fn power(&self, m: usize) -> usize {
        assert!(m >= 1, "exponents start at 1");
        if m < self.index + self.period {
            self.distinct_powers[m - 1]
        } else {
            let k = (m - self.index) % self.period;
            self.distinct_powers[self.index - 1 + k]
        }
    }

    /// Exponents `1..=index+period-1` paired with their values.
    pub fn exponents(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.distinct_powers.iter().enumerate().map(|(i, &p)| (i + 1, p))
    }

    /// The unique idempotent power `a^k` with k a multiple of the period and k >= index.
    pub fn idempotent_power(&self) -> (usize, usize) {
        let k = self.index.div_ceil(self.period) * self.period;
        (k, self.power(k))
    }
}

/// Largest exponent that needs checking when one shared exponent `m` drives
/// several power sequences (with optional fixed offsets added to `m`).
pub fn joint_exponent_bound(profiles: &[&PowerProfile]) -> usize {
    let mut max_index = 1;
    let mut lcm = 1;
    for p in profiles {
        max_index = max_index.max(p.index);
        lcm = lcm / gcd(lcm, p.period) * p.period;
    }
    max_index + lcm - 1
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Reflexivity,
    Antisymmetry,
    Transitivity,
    LeftCompatibility,
    RightCompatibility,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity: (ab)c = a(bc)",
            Axiom::Reflexivity => "reflexivity: a <= a",
            Axiom::Antisymmetry => "antisymmetry: a <= b, b <= a => a = b",
            Axiom::Transitivity => "transitivity: a <= b, b <= c => a <= c",
            Axiom::LeftCompatibility => "left compatibility: a <= b => ca <= cb",
            Axiom::RightCompatibility => "right compatibility: a <= b => ac <= bc",
        };
        f.write_str(s)
    }
}

/// One violated axiom with its lexicographically first witness triple and
/// the total number of failing triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: [usize; 3],
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "valid ordered semigroup");
        }
        writeln!(f, "invalid ordered semigroup:")?;
        for v in &self.violations {
            let [a, b, c] = v.witness;
            writeln!(f, "  {} fails at ({a}, {b}, {c}) [{} failing triples]", v.axiom, v.failures)?;
        }
        Ok(())
    }
}

/// The on-disk form: `{"order": n, "table": [[..]], "leq": [[..]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub leq: Vec<Vec<bool>>,
}

/// A multiplication table with a compatible partial order, checked on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedSemigroup {
    n: usize,
    table: Vec<u8>,
    below: Vec<u64>,
    above: Vec<u64>,
    // image of S.b and a.S, as masks
    col_image: Vec<u64>,
    row_image: Vec<u64>,
}

/// Checks shape, then reports on every axiom family without failing early.
pub fn check(table: &[Vec<usize>], leq: &[Vec<bool>]) -> Result<ValidationReport, Error> {
    let n = check_shape(table, leq)?;
    Ok(check_axioms(n, |a, b| table[a][b], |a, b| leq[a][b]))
}

/// Builds an [`OrderedSemigroup`] if the data satisfies every axiom.
pub fn validate(table: &[Vec<usize>], leq: &[Vec<bool>]) -> Result<OrderedSemigroup, Error> {
    let report = check(table, leq)?;
    if !report.ok {
        return Err(Error::Invalid(report));
    }
    Ok(OrderedSemigroup::assemble(table, leq))
}

fn check_shape(table: &[Vec<usize>], leq: &[Vec<bool>]) -> Result<usize, Error> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::SizeMismatch(format!("table row {i} has {} entries, expected {n}", row.len())));
        }
        if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::OutOfRange { row: i, col: j, value: v, order: n });
        }
    }
    if leq.len() != n {
        return Err(Error::SizeMismatch(format!("leq has {} rows, table has {n}", leq.len())));
    }
    for (i, row) in leq.iter().enumerate() {
        if row.len() != n {
            return Err(Error::SizeMismatch(format!("leq row {i} has {} entries, expected {n}", row.len())));
        }
    }
    Ok(n)
}

fn check_axioms(
    n: usize,
    mul: impl Fn(usize, usize) -> usize,
    leq: impl Fn(usize, usize) -> bool,
) -> ValidationReport {
    let mut found: Vec<Violation> = Vec::new();
    let mut record = |axiom: Axiom, w: [usize; 3]| match found.iter_mut().find(|v| v.axiom == axiom) {
        Some(v) => v.failures += 1,
        None => found.push(Violation { axiom, witness: w, failures: 1 }),
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    record(Axiom::Associativity, [a, b, c]);
                }
            }
        }
    }
    for a in 0..n {
        if !leq(a, a) {
            record(Axiom::Reflexivity, [a, a, a]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && leq(a, b) && leq(b, a) {
                record(Axiom::Antisymmetry, [a, b, b]);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if leq(a, b) && leq(b, c) && !leq(a, c) {
                    record(Axiom::Transitivity, [a, b, c]);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !leq(a, b) {
                continue;
            }
            for c in 0..n {
                if !leq(mul(c, a), mul(c, b)) {
                    record(Axiom::LeftCompatibility, [a, b, c]);
                }
                if !leq(mul(a, c), mul(b, c)) {
                    record(Axiom::RightCompatibility, [a, b, c]);
                }
            }
        }
    }
    found.sort_by_key(|v| v.axiom);
    ValidationReport { ok: found.is_empty(), violations: found }
}

impl OrderedSemigroup {
    fn assemble(table: &[Vec<usize>], leq: &[Vec<bool>]) -> Self {
        let n = table.len();
        let flat: Vec<u8> = table.iter().flat_map(|r| r.iter().map(|&v| v as u8)).collect();
        Self::from_parts(n, flat, |a, b| leq[a][b])
    }

    fn from_parts(n: usize, table: Vec<u8>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let mut below = vec![0u64; n];
        let mut above = vec![0u64; n];
        for (a, up) in above.iter_mut().enumerate() {
            for (b, down) in below.iter_mut().enumerate() {
                if leq(a, b) {
                    *down |= 1 << a;
                    *up |= 1 << b;
                }
            }
        }
        let mut col_image = vec![0u64; n];
        let mut row_image = vec![0u64; n];
        for a in 0..n {
            for b in 0..n {
                let p = table[a * n + b] as usize;
                col_image[b] |= 1 << p;
                row_image[a] |= 1 << p;
            }
        }
        OrderedSemigroup { n, table, below, above, col_image, row_image }
    }

    /// Validating constructor from a flat row-major table and a flat leq matrix.
    pub fn from_flat(n: usize, table: &[usize], leq: &[bool]) -> Result<Self, Error> {
        if table.len() != n * n || leq.len() != n * n {
            return Err(Error::SizeMismatch(format!(
                "expected {} entries, got table {} and leq {}",
                n * n,
                table.len(),
                leq.len()
            )));
        }
        let t: Vec<Vec<usize>> = table.chunks(n.max(1)).map(|r| r.to_vec()).collect();
        let l: Vec<Vec<bool>> = leq.chunks(n.max(1)).map(|r| r.to_vec()).collect();
        if n == 0 {
            return Err(Error::Empty);
        }
        validate(&t, &l)
    }

    /// Table with the discrete (equality) order.
    pub fn with_discrete_order(table: &[Vec<usize>]) -> Result<Self, Error> {
        let n = table.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        validate(table, &leq)
    }

    /// Skips validation. Callers must already know the axioms hold.
    pub(crate) fn from_trusted(n: usize, table: Vec<u8>, leq: &[u64]) -> Self {
        Self::from_parts(n, table, |a, b| leq[a] & (1 << b) != 0)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a] & (1 << b) != 0
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|a| self.above[a] == 1 << a)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn empty(&self) -> SubsetMask {
        SubsetMask::empty(self.n)
    }

    pub fn singleton(&self, a: usize) -> SubsetMask {
        SubsetMask::singleton(self.n, a)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn leq_rows(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.leq(a, b)).collect()).collect()
    }

    pub(crate) fn raw_table(&self) -> &[u8] {
        &self.table
    }

    /// Elements below `a` (including `a`).
    pub fn below(&self, a: usize) -> SubsetMask {
        SubsetMask::from_bits(self.n, self.below[a])
    }

    /// `(A] = {x : x <= a for some a in A}`.
    pub fn downward_closure(&self, set: SubsetMask) -> SubsetMask {
        let bits = set.iter().fold(0, |acc, a| acc | self.below[a]);
        SubsetMask::from_bits(self.n, bits)
    }

    /// `x in (A]`, without materialising the closure.
    #[inline]
    pub fn in_closure(&self, x: usize, set: SubsetMask) -> bool {
        self.above[x] & set.bits() != 0
    }

    /// `{a.b : a in A, b in B}`, not closed downward.
    pub fn subset_product(&self, left: SubsetMask, right: SubsetMask) -> SubsetMask {
        let mut bits = 0u64;
        if left.is_full() {
            for b in right.iter() {
                bits |= self.col_image[b];
            }
        } else if right.is_full() {
            for a in left.iter() {
                bits |= self.row_image[a];
            }
        } else {
            for a in left.iter() {
                for b in right.iter() {
                    bits |= 1 << self.mul(a, b);
                }
            }
        }
        SubsetMask::from_bits(self.n, bits)
    }

    /// Product of a word of sets, left to right.
    pub fn word_product(&self, word: &[SubsetMask]) -> SubsetMask {
        let mut it = word.iter();
        let first = *it.next().expect("non-empty word");
        it.fold(first, |acc, &m| self.subset_product(acc, m))
    }

    /// `S.b`
    pub fn left_multiples(&self, b: usize) -> SubsetMask {
        SubsetMask::from_bits(self.n, self.col_image[b])
    }

    /// `a.S`
    pub fn right_multiples(&self, a: usize) -> SubsetMask {
        SubsetMask::from_bits(self.n, self.row_image[a])
    }

    pub fn principal_ideal(&self, a: usize, kind: IdealKind) -> SubsetMask {
        let s = self.full();
        let a_set = self.singleton(a);
        let gens = match kind {
            IdealKind::Left => a_set.union(self.left_multiples(a)),
            IdealKind::Right => a_set.union(self.right_multiples(a)),
            IdealKind::TwoSided => a_set
                .union(self.left_multiples(a))
                .union(self.right_multiples(a))
                .union(self.word_product(&[s, a_set, s])),
            IdealKind::Bi => a_set.union(self.word_product(&[a_set, s, a_set])),
        };
        self.downward_closure(gens)
    }

    pub fn power_profile(&self, a: usize) -> PowerProfile {
        let mut seen = vec![usize::MAX; self.n];
        let mut powers = Vec::new();
        let mut cur = a;
        let mut exp = 1;
        loop {
            if seen[cur] != usize::MAX {
                let index = seen[cur];
                return PowerProfile { element: a, index, period: exp - index, distinct_powers: powers };
            }
            seen[cur] = exp;
            powers.push(cur);
            cur = self.mul(cur, a);
            exp += 1;
        }
    }

    pub fn power(&self, a: usize, m: usize) -> usize {
        assert!(m >= 1);
        (1..m).fold(a, |acc, _| self.mul(acc, a))
    }

    pub fn is_product_closed(&self, set: SubsetMask) -> bool {
        !set.is_empty() && self.subset_product(set, set).is_subset(&set)
    }

    pub fn is_downward_closed(&self, set: SubsetMask) -> bool {
        self.downward_closure(set) == set
    }

    /// `(A] = A`, `S.A` within `A` (left), `A.S` within `A` (right), or both.
    pub fn is_ideal(&self, set: SubsetMask, kind: IdealKind) -> bool {
        if set.is_empty() || !self.is_downward_closed(set) {
            return false;
        }
        let s = self.full();
        let left = || self.subset_product(s, set).is_subset(&set);
        let right = || self.subset_product(set, s).is_subset(&set);
        match kind {
            IdealKind::Left => left(),
            IdealKind::Right => right(),
            IdealKind::TwoSided => left() && right(),
            IdealKind::Bi => self.word_product(&[set, s, set]).is_subset(&set) && self.is_product_closed(set),
        }
    }

    /// The ordered subsemigroup on a product-closed subset, relabelled
    /// `0..k` in increasing element order. Also returns the relabelling.
    pub fn induced(&self, set: SubsetMask) -> Option<(OrderedSemigroup, Vec<usize>)> {
        if !self.is_product_closed(set) {
            return None;
        }
        let members = set.to_vec();
        let mut local = vec![usize::MAX; self.n];
        for (i, &a) in members.iter().enumerate() {
            local[a] = i;
        }
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        let mut leq = vec![0u64; k];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table.push(local[self.mul(a, b)] as u8);
                if self.leq(a, b) {
                    leq[i] |= 1 << j;
                }
            }
        }
        Some((OrderedSemigroup::from_trusted(k, table, &leq), members))
    }

    /// Applies a relabelling `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> OrderedSemigroup {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut table = vec![0u8; n * n];
        let mut leq = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = perm[self.mul(inv[i], inv[j])] as u8;
                if self.leq(inv[i], inv[j]) {
                    leq[i] |= 1 << j;
                }
            }
        }
        OrderedSemigroup::from_trusted(n, table, &leq)
    }

    /// Same carrier and order with `a *op b = b.a`.
    pub fn opposite(&self) -> OrderedSemigroup {
        let n = self.n;
        let table = (0..n * n).map(|i| self.table[(i % n) * n + i / n]).collect();
        OrderedSemigroup::from_trusted(n, table, &self.above)
    }

    /// Compact text key: `n:` then the table digits, `:` then the leq bits.
    pub fn key(&self) -> String {
        let mut s = format!("{}:", self.n);
        for &v in &self.table {
            s.push(char::from_digit(v as u32, 36).unwrap_or('?'));
        }
        s.push(':');
        for a in 0..self.n {
            for b in 0..self.n {
                s.push(if self.leq(a, b) { '1' } else { '0' });
            }
        }
        s
    }

    pub fn to_json(&self) -> StructureJson {
        StructureJson { order: self.n, table: self.table_rows(), leq: self.leq_rows() }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("structure serialises")
    }

    pub fn from_json(doc: &StructureJson) -> Result<Self, Error> {
        if doc.order != doc.table.len() {
            return Err(Error::SizeMismatch(format!(
                "order is {} but table has {} rows",
                doc.order,
                doc.table.len()
            )));
        }
        validate(&doc.table, &doc.leq)
    }

    pub fn from_json_str(text: &str) -> Result<Self, Error> {
        let doc: StructureJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&doc)
    }
}

impl fmt::Debug for OrderedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedSemigroup({})", self.key())
    }
}

impl fmt::Display for OrderedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.n)?;
        write!(f, "  .|")?;
        for b in 0..self.n {
            write!(f, " {b}")?;
        }
        writeln!(f)?;
        for a in 0..self.n {
            write!(f, "  {a}|")?;
            for b in 0..self.n {
                write!(f, " {}", self.mul(a, b))?;
            }
            writeln!(f)?;
        }
        write!(f, "  strict order:")?;
        let mut any = false;
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.leq(a, b) {
                    write!(f, " {a}<{b}")?;
                    any = true;
                }
            }
        }
        if !any {
            write!(f, " (discrete)")?;
        }
        Ok(())
    }
}

impl Serialize for OrderedSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
    Bi,
}
