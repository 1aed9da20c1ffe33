//! Exact partition counts from the first-jump decomposition.
//!
//! After a first jump of order `i` from `[n]` the order-1 jump set has
//! `n + 1 - 2i` elements, and the subtree below it is counted by
//! `P(s, t) = sum_{i=1}^{ceil(t/s)} P(s - 1, t - s(i - 1))`, `P(0, t) = 1`.
//! Summing `P(i, n + 1 - 2i)` over `i = 0..=n/2` gives `p(n)`.

use num_bigint::BigUint;
use num_traits::One;

/// Memo of `P(s, t)`. Row `s` holds `P(s, 1..=len)`; rows are filled bottom
/// up, and only ever grow, so a warm table answers any smaller query.
#[derive(Debug, Clone, Default)]
pub struct CountTable {
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of stored entries.
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, s: usize, t: usize) -> Option<&BigUint> {
        self.rows.get(s)?.get(t.checked_sub(1)?)
    }

    /// Makes `P(s', t')` available for every `s' <= s`, `1 <= t' <= t`.
    fn ensure(&mut self, s: usize, t: usize) {
        while self.rows.len() <= s {
            self.rows.push(Vec::new());
        }
        for row in 0..=s {
            let have = self.rows[row].len();
            for col in have + 1..=t {
                let value = if row == 0 {
                    BigUint::one()
                } else {
                    // ceil(col / row) terms; arguments col, col - row, ... stay >= 1.
                    let below = &self.rows[row - 1];
                    (0..col.div_ceil(row))
                        .map(|k| &below[col - row * k - 1])
                        .sum()
                };
                self.rows[row].push(value);
            }
        }
    }
}

/// `P(s, t)`, memoized in `memo`.
pub fn script_p(s: usize, t: usize, memo: &mut CountTable) -> BigUint {
    assert!(t >= 1, "t must be positive");
    memo.ensure(s, t);
    memo.rows[s][t - 1].clone()
}

/// `p(n)` using a caller-owned table, so sweeps over `n` share work.
pub fn p_with(n: u64, memo: &mut CountTable) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let n = usize::try_from(n).expect("n fits in usize");
    memo.ensure(n / 2, n + 1);
    (0..=n / 2).map(|i| &memo.rows[i][n + 1 - 2 * i - 1]).sum()
}

/// Number of partitions of `n`; `p(0) = 1`.
pub fn p(n: u64) -> BigUint {
    p_with(n, &mut CountTable::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn script_p_examples() {
        let mut memo = CountTable::new();
        assert_eq!(script_p(0, 8, &mut memo), big(1));
        assert_eq!(script_p(1, 6, &mut memo), big(6));
        assert_eq!(script_p(2, 4, &mut memo), big(6));
        assert_eq!(memo.get(0, 8), Some(&big(1)));
        assert!(memo.get(3, 1).is_none());
    }

    #[test]
    fn s_equal_one_is_t() {
        let mut memo = CountTable::new();
        for t in 1..200 {
            assert_eq!(script_p(1, t, &mut memo), big(t as u64));
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(p(0), big(1));
        assert_eq!(p(1), big(1));
        assert_eq!(p(7), big(15));
        assert_eq!(p(15), big(176));
    }

    #[test]
    fn warm_and_cold_tables_agree() {
        let mut warm = CountTable::new();
        p_with(120, &mut warm);
        for n in (0..=120).rev() {
            assert_eq!(p_with(n, &mut warm), p(n));
        }
    }

    #[test]
    fn exceeds_64_bits() {
        // p(417) is the first value above u64::MAX.
        assert!(p(417) > big(u64::MAX));
        assert!(p(416) <= big(u64::MAX));
    }
}
