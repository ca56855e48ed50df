//! Exponent vectors of fixed total degree, enumerated in colexicographic
//! order.
//!
//! A monomial in `v` variables of total degree `d` is written as an exponent
//! vector `alpha` with `|alpha| = d`. Dense coefficient arrays throughout the
//! crate are indexed by the *colex rank* of `alpha`: vectors are ordered by
//! comparing their entries from the last position backwards, so for `v = 2`,
//! `d = 2` the order is `(2,0), (1,1), (0,2)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Number of exponent vectors of total degree `d` in `v` variables,
/// `C(d + v - 1, v - 1)`.
pub fn count(vars: usize, degree: usize) -> usize {
    binomial((degree + vars - 1) as u128, (vars - 1) as u128) as usize
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `d! / (alpha_0! ... alpha_k!)` where `d = |alpha|`.
pub fn multinomial(alpha: &[u32]) -> u128 {
    let mut acc: u128 = 1;
    let mut seen: u128 = 0;
    for &a in alpha {
        for i in 1..=a as u128 {
            seen += 1;
            acc = acc * seen / i;
        }
    }
    acc
}

/// All exponent vectors of total degree `degree` in `vars` variables, in
/// colex order (ascending last entry outermost).
pub fn enumerate(vars: usize, degree: usize) -> Vec<Vec<u32>> {
    assert!(vars >= 1);
    let mut out = Vec::with_capacity(count(vars, degree));
    let mut cur = vec![0u32; vars];
    fill(&mut out, &mut cur, vars, degree);
    out
}

fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, vars: usize, rest: usize) {
    if vars == 1 {
        cur[0] = rest as u32;
        out.push(cur.clone());
        return;
    }
    for last in 0..=rest {
        cur[vars - 1] = last as u32;
        fill(out, cur, vars - 1, rest - last);
    }
}

/// Colex rank of `alpha` among all exponent vectors of the same total degree.
pub fn rank(alpha: &[u32]) -> usize {
    let vars = alpha.len();
    let mut degree: usize = alpha.iter().map(|&a| a as usize).sum();
    let mut r = 0usize;
    for pos in (1..vars).rev() {
        let last = alpha[pos] as usize;
        // all vectors whose entry at `pos` is below `last`
        for j in 0..last {
            r += count(pos, degree - j);
        }
        degree -= last;
    }
    r
}

/// Shared rank table for one `(vars, degree)` pair: the colex list together
/// with the inverse map.
pub struct IndexTable {
    pub list: Vec<Vec<u32>>,
    pub rank: HashMap<Vec<u32>, usize>,
}

type TableCache = HashMap<(usize, usize), Arc<IndexTable>>;

pub fn table(vars: usize, degree: usize) -> Arc<IndexTable> {
    static CACHE: OnceLock<Mutex<TableCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry((vars, degree))
        .or_insert_with(|| {
            let list = enumerate(vars, degree);
            let rank = list
                .iter()
                .enumerate()
                .map(|(i, a)| (a.clone(), i))
                .collect();
            Arc::new(IndexTable { list, rank })
        })
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_rank() {
        for vars in 1..=5 {
            for degree in 0..=6 {
                let list = enumerate(vars, degree);
                assert_eq!(list.len(), count(vars, degree));
                for (i, alpha) in list.iter().enumerate() {
                    assert_eq!(rank(alpha), i, "vars={vars} degree={degree} {alpha:?}");
                }
            }
        }
    }

    #[test]
    fn colex_order_for_two_vars() {
        assert_eq!(enumerate(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]],);
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 0]), 1);
        assert_eq!(multinomial(&[1, 1]), 2);
        assert_eq!(multinomial(&[2, 2, 2]), 90);
        assert_eq!(multinomial(&[0]), 1);
        assert_eq!(multinomial(&[5, 5, 5]), 756756);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(4, 5), 0);
    }
}
