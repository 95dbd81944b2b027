//! Small named structures used throughout the tests and docs.
//!
//! - `t1`: one element
//! - `lz2`: left zero, `x.y = x`, discrete order
//! - `rz2`: right zero, `x.y = y`, discrete order
//! - `sl2`: two-element chain semilattice, `x.y = min(x, y)`, `0 <= 1`
//! - `n2`: null semigroup, every product is 0, discrete order

use crate::structure::OrderedSemigroup;

fn build(table: Vec<Vec<usize>>, strict: &[(usize, usize)]) -> OrderedSemigroup {
    let n = table.len();
    let mut leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for &(a, b) in strict {
        leq[a][b] = true;
    }
    crate::structure::validate(&table, &leq).expect("fixture is a valid ordered semigroup")
}

pub fn t1() -> OrderedSemigroup {
    build(vec![vec![0]], &[])
}

pub fn lz2() -> OrderedSemigroup {
    build(vec![vec![0, 0], vec![1, 1]], &[])
}

pub fn rz2() -> OrderedSemigroup {
    build(vec![vec![0, 1], vec![0, 1]], &[])
}

pub fn sl2() -> OrderedSemigroup {
    build(vec![vec![0, 0], vec![0, 1]], &[(0, 1)])
}

pub fn n2() -> OrderedSemigroup {
    build(vec![vec![0, 0], vec![0, 0]], &[])
}

/// Looks a fixture up by its lowercase name.
pub fn by_name(name: &str) -> Option<OrderedSemigroup> {
    match name {
        "t1" => Some(t1()),
        "lz2" => Some(lz2()),
        "rz2" => Some(rz2()),
        "sl2" => Some(sl2()),
        "n2" => Some(n2()),
        _ => None,
    }
}

pub const NAMES: [&str; 5] = ["t1", "lz2", "rz2", "sl2", "n2"];
