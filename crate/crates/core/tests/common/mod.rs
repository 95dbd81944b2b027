//! Brute-force reference implementations working on raw tables. Nothing
//! here calls into the library except to convert structures in and out;
//! exponent quantifiers are plain loops up to a bound past every index and
//! period.

#![allow(dead_code)]

pub mod ledger;

use ordsgp::OrderedSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Raw {
    pub n: usize,
    pub t: Vec<Vec<usize>>,
    pub le: Vec<Vec<bool>>,
}

fn lcm_upto(n: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n).fold(1, |acc, k| acc / gcd(acc, k) * k)
}

impl Raw {
    pub fn of(s: &OrderedSemigroup) -> Raw {
        Raw { n: s.order(), t: s.table_rows(), le: s.leq_rows() }
    }

    pub fn to_structure(&self) -> OrderedSemigroup {
        ordsgp::validate(&self.t, &self.le).expect("oracle structures are valid")
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.t[a][b]
    }

    /// Any sequence of powers (or of a tuple of powers) repeats within this
    /// many steps.
    pub fn bound(&self) -> usize {
        self.n + lcm_upto(self.n)
    }

    pub fn all(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    pub fn pow(&self, a: usize, m: usize) -> usize {
        let mut x = a;
        for _ in 1..m {
            x = self.m(x, a);
        }
        x
    }

    pub fn closure(&self, set: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&x| set.iter().any(|&a| self.le[x][a])).collect()
    }

    pub fn in_closure(&self, x: usize, set: &[usize]) -> bool {
        set.iter().any(|&a| self.le[x][a])
    }

    pub fn prod(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.m(x, y)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// `(Sa]`
    pub fn sa(&self, a: usize) -> Vec<usize> {
        self.closure(&self.prod(&self.all(), &[a]))
    }

    /// `(aS]`
    pub fn as_(&self, a: usize) -> Vec<usize> {
        self.closure(&self.prod(&[a], &self.all()))
    }

    pub fn principal(&self, a: usize, kind: char) -> Vec<usize> {
        let all = self.all();
        let mut gens = vec![a];
        if kind == 'L' || kind == 'J' {
            gens.extend(self.prod(&all, &[a]));
        }
        if kind == 'R' || kind == 'J' {
            gens.extend(self.prod(&[a], &all));
        }
        if kind == 'J' {
            gens.extend(self.prod(&self.prod(&all, &[a]), &all));
        }
        if kind == 'B' {
            gens.extend(self.prod(&self.prod(&[a], &all), &[a]));
        }
        self.closure(&gens)
    }

    pub fn green(&self, kind: char, a: usize, b: usize) -> bool {
        match kind {
            'H' => self.green('L', a, b) && self.green('R', a, b),
            k => self.principal(a, k) == self.principal(b, k),
        }
    }

    pub fn regular_el(&self, a: usize) -> bool {
        (0..self.n).any(|x| self.le[a][self.m(self.m(a, x), a)])
    }

    pub fn smallest_regular_power(&self, a: usize) -> usize {
        (1..=self.bound()).find(|&m| self.regular_el(self.pow(a, m))).expect("finite means pi-regular")
    }

    pub fn star(&self, kind: char, a: usize, b: usize) -> bool {
        let ra = self.pow(a, self.smallest_regular_power(a));
        let rb = self.pow(b, self.smallest_regular_power(b));
        self.green(kind, ra, rb)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.le[e][self.m(e, e)]).collect()
    }

    pub fn inverses(&self, a: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| self.le[a][self.m(self.m(a, b), a)] && self.le[b][self.m(self.m(b, a), b)])
            .collect()
    }

    pub fn exists_m(&self, f: impl Fn(usize) -> bool) -> bool {
        (1..=self.bound()).any(f)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|a| (0..self.n).map(move |b| (a, b))).collect()
    }

    // element-wise predicates

    pub fn regular(&self) -> bool {
        (0..self.n).all(|a| self.regular_el(a))
    }

    pub fn pi_regular(&self) -> bool {
        (0..self.n).all(|a| self.exists_m(|m| self.regular_el(self.pow(a, m))))
    }

    pub fn completely_pi_regular(&self) -> bool {
        (0..self.n).all(|a| {
            self.exists_m(|m| {
                let am = self.pow(a, m);
                let a2m = self.pow(a, 2 * m);
                (0..self.n).any(|x| self.le[am][self.m(self.m(a2m, x), a2m)])
            })
        })
    }

    pub fn left_pi_regular(&self) -> bool {
        (0..self.n).all(|a| {
            self.exists_m(|m| (0..self.n).any(|x| self.le[self.pow(a, m)][self.m(x, self.pow(a, 2 * m))]))
        })
    }

    pub fn left_simple(&self) -> bool {
        (0..self.n).all(|a| self.sa(a).len() == self.n)
    }

    pub fn right_simple(&self) -> bool {
        (0..self.n).all(|a| self.as_(a).len() == self.n)
    }

    pub fn left_archimedean(&self) -> bool {
        self.pairs().iter().all(|&(a, b)| self.exists_m(|m| self.in_closure(self.pow(a, m), &self.prod(&self.all(), &[b]))))
    }

    pub fn right_archimedean(&self) -> bool {
        self.pairs().iter().all(|&(a, b)| self.exists_m(|m| self.in_closure(self.pow(a, m), &self.prod(&[b], &self.all()))))
    }

    pub fn right_weakly_commutative(&self) -> bool {
        self.pairs()
            .iter()
            .all(|&(a, b)| self.exists_m(|m| self.in_closure(self.pow(self.m(a, b), m), &self.prod(&self.all(), &[a]))))
    }

    pub fn left_weakly_commutative(&self) -> bool {
        self.pairs()
            .iter()
            .all(|&(a, b)| self.exists_m(|m| self.in_closure(self.pow(self.m(a, b), m), &self.prod(&[b], &self.all()))))
    }

    /// `a^m in (a^m S c]`
    fn absorbs(&self, am: usize, c: usize) -> bool {
        (0..self.n).any(|x| self.le[am][self.m(self.m(am, x), c)])
    }

    pub fn thm2_c4(&self) -> bool {
        self.pairs().iter().all(|&(a, b)| self.exists_m(|m| self.absorbs(self.pow(a, m), b)))
    }

    pub fn thm2_c5(&self) -> bool {
        self.pairs().iter().all(|&(a, b)| {
            self.exists_m(|m| (1..=self.bound()).all(|k| self.absorbs(self.pow(a, m), self.pow(b, k))))
        })
    }

    pub fn thm2_c6(&self) -> bool {
        self.pairs().iter().all(|&(a, b)| self.exists_m(|m| self.absorbs(self.pow(a, m), self.pow(b, m))))
    }

    pub fn thm2_c7(&self) -> bool {
        self.pi_regular() && self.left_archimedean()
    }

    pub fn l_star_universal(&self) -> bool {
        self.pairs().iter().all(|&(a, b)| self.star('L', a, b))
    }

    pub fn subsets(&self) -> Vec<Vec<usize>> {
        (1u32..(1 << self.n)).map(|bits| (0..self.n).filter(|&i| bits & (1 << i) != 0).collect()).collect()
    }

    /// `h` as an ordered semigroup in its own right: left simple and
    /// pi-regular.
    pub fn left_simple_pi_regular_on(&self, h: &[usize]) -> bool {
        let inside = |x: usize| h.contains(&x);
        let left_simple = h.iter().all(|&a| h.iter().all(|&x| h.iter().any(|&y| self.le[x][self.m(y, a)])));
        let pi_reg = h.iter().all(|&a| {
            self.exists_m(|m| {
                let am = self.pow(a, m);
                inside(am) && h.iter().any(|&y| self.le[am][self.m(self.m(am, y), am)])
            })
        });
        left_simple && pi_reg
    }

    pub fn closed(&self, h: &[usize]) -> bool {
        h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.m(a, b))))
    }

    pub fn absorbs_powers(&self, h: &[usize]) -> bool {
        (0..self.n).all(|a| self.exists_m(|m| h.contains(&self.pow(a, m))))
    }

    pub fn left_pi_t_simple(&self) -> bool {
        self.subsets().iter().any(|h| self.closed(h) && self.absorbs_powers(h) && self.left_simple_pi_regular_on(h))
    }

    /// Smallest kernel, by size then bits, of a nil-extension of a left
    /// simple pi-regular ideal.
    pub fn nil_extension_kernel(&self) -> Option<Vec<usize>> {
        let mut cands: Vec<Vec<usize>> = self
            .subsets()
            .into_iter()
            .filter(|k| {
                let ideal = self.closure(k).len() == k.len()
                    && self.prod(&self.all(), k).iter().all(|x| k.contains(x))
                    && self.prod(k, &self.all()).iter().all(|x| k.contains(x));
                ideal && self.absorbs_powers(k) && self.left_simple_pi_regular_on(k)
            })
            .collect();
        cands.sort_by_key(|k| (k.len(), k.iter().map(|&i| 1u32 << i).sum::<u32>()));
        cands.into_iter().next()
    }

    pub fn right_pi_inverse(&self) -> bool {
        let e = self.idempotents();
        (0..self.n).all(|a| {
            self.exists_m(|m| {
                let target = self.sa(self.pow(a, m));
                let gens: Vec<usize> = e.iter().copied().filter(|&f| self.sa(f) == target).collect();
                !gens.is_empty() && gens.iter().all(|&g| gens.iter().all(|&h| self.green('R', g, h)))
            })
        })
    }

    pub fn thm5_c3(&self) -> bool {
        let e = self.idempotents();
        e.iter().all(|&x| {
            e.iter().all(|&y| {
                self.exists_m(|k| {
                    let p = self.pow(self.m(x, y), k);
                    (0..self.n).any(|z| self.le[p][self.m(self.m(y, z), y)])
                })
            })
        })
    }

    pub fn thm6_condition(&self) -> bool {
        let e = self.idempotents();
        e.iter().all(|&x| e.iter().all(|&y| !self.star('L', x, y) || self.star('R', x, y)))
    }

    pub fn left_zero_like(&self) -> bool {
        self.pairs().iter().all(|&(a, b)| self.m(a, b) == a)
    }

    /// Set partitions of `0..n` that are semilattice congruences.
    pub fn semilattice_congruences(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::new();
        let total = n.pow(n as u32);
        for code in 0..total {
            let labels: Vec<usize> = (0..n).map(|i| (code / n.pow(i as u32)) % n).collect();
            // canonical: smallest member names the class
            let canon: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| labels[j] == labels[i]).unwrap()).collect();
            if out.contains(&canon) {
                continue;
            }
            let rel = |a: usize, b: usize| canon[a] == canon[b];
            let cong = self.pairs().iter().all(|&(a, b)| {
                !rel(a, b) || (0..n).all(|c| rel(self.m(c, a), self.m(c, b)) && rel(self.m(a, c), self.m(b, c)))
            });
            let semi = (0..n).all(|a| rel(a, self.m(a, a))) && self.pairs().iter().all(|&(a, b)| rel(self.m(a, b), self.m(b, a)));
            if cong && semi {
                out.push(canon);
            }
        }
        out.sort();
        out
    }
}

/// Every ordered semigroup of order `n` by filtering all tables and all
/// relations; independent of the library's enumerator.
pub fn naive_catalog(n: usize) -> Vec<Raw> {
    assert!(n <= 3);
    let cells = n * n;
    let mut out = Vec::new();
    for code in 0..n.pow(cells as u32) {
        let t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (code / n.pow((a * n + b) as u32)) % n).collect()).collect();
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        if !assoc {
            continue;
        }
        for bits in 0u32..(1 << cells) {
            let le: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| bits & (1 << (a * n + b)) != 0).collect()).collect();
            let refl = (0..n).all(|a| le[a][a]);
            let anti = (0..n).all(|a| (0..n).all(|b| a == b || !(le[a][b] && le[b][a])));
            let trans = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le[a][b] && le[b][c]) || le[a][c])));
            let compat = (0..n).all(|a| {
                (0..n).all(|b| !le[a][b] || (0..n).all(|x| le[t[x][a]][t[x][b]] && le[t[a][x]][t[b][x]]))
            });
            if refl && anti && trans && compat {
                out.push(Raw { n, t: t.clone(), le });
            }
        }
    }
    out.sort();
    out
}

pub fn raw(table: &[&[usize]], strict: &[(usize, usize)]) -> Raw {
    let n = table.len();
    let mut le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for &(a, b) in strict {
        le[a][b] = true;
    }
    Raw { n, t: table.iter().map(|r| r.to_vec()).collect(), le }
}
