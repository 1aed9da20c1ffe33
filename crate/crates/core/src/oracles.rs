//! Classical reference implementations used for differential testing.
//! Nothing here touches the jump machinery.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `p(n)` from Euler's pentagonal number recurrence.
pub fn p_pentagonal(n: u64) -> BigUint {
    let n = n as usize;
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[m - g1].clone();
            if g2 <= m {
                term += &table[m - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        table.push(acc);
    }
    table
        .swap_remove(n)
        .to_biguint()
        .expect("partition counts are positive")
}

/// All partitions of `n` as non-increasing term lists.
pub fn partitions_bruteforce(n: u64) -> BTreeSet<Vec<u64>> {
    fn descend(rest: u64, cap: u64, prefix: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
        if rest == 0 {
            out.insert(prefix.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            prefix.push(part);
            descend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = BTreeSet::new();
    descend(n, n, &mut Vec::new(), &mut out);
    out
}

/// Divisor count and divisor sum by trial division up to `sqrt(n)`.
pub fn divisor_stats_trial(n: u64) -> (u64, u64) {
    assert!(n >= 1);
    let (mut count, mut sum) = (0, 0);
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            let other = n / k;
            count += 1;
            sum += k;
            if other != k {
                count += 1;
                sum += other;
            }
        }
        k += 1;
    }
    (count, sum)
}

/// All sets of distinct positive integers summing to `n`, each listed in
/// increasing order.
pub fn distinct_partitions_bruteforce(n: u64) -> BTreeSet<Vec<u64>> {
    fn extend(rest: u64, min: u64, prefix: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
        if rest == 0 {
            out.insert(prefix.clone());
            return;
        }
        for part in min..=rest {
            prefix.push(part);
            extend(rest - part, part + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = BTreeSet::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out
}
