//! Jumps on partitions kept in jump form.
//!
//! A partition in jump form lists its largest term first, followed by the
//! remaining terms in non-descending order, e.g. `3 1 1 2` for 2+1+1+3.
//! A jump of order `r` splits the first term `a` into `a - r` and `r`,
//! inserting `r` as the new second term.

use std::fmt;

use crate::error::{Error, JumpViolation, Result};

/// Order of a jump. Always at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JumpOrder(u64);

impl JumpOrder {
    pub fn new(r: u64) -> Option<Self> {
        (r >= 1).then_some(JumpOrder(r))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// A partition of `n` stored in jump form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    terms: Vec<u64>,
}

/// Result of stepping back from a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predecessor {
    /// Single-term partitions are where every jump sequence starts.
    Root,
    Partition(Partition),
}

impl Partition {
    /// The single-term partition `[n]`.
    pub fn single(n: u64) -> Self {
        assert!(n >= 1, "partitions of {n} are not supported");
        Partition { terms: vec![n] }
    }

    /// Wraps terms that are already in jump form.
    pub fn from_jump_form(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() || terms.contains(&0) || !is_jump_form(&terms) {
            return Err(Error::InvalidPartition(format_terms(&terms)));
        }
        Ok(Partition { terms })
    }

    /// Builds the jump-form representation of an arbitrary multiset of
    /// positive terms: sort ascending, then rotate the largest to the front.
    pub fn from_multiset(mut terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() || terms.contains(&0) {
            return Err(Error::InvalidPartition(format_terms(&terms)));
        }
        terms.sort_unstable();
        terms.rotate_right(1);
        Ok(Partition { terms })
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<u64>) -> Self {
        debug_assert!(is_jump_form(&terms));
        Partition { terms }
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<u64> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The number being partitioned.
    pub fn sum(&self) -> u64 {
        self.terms.iter().sum()
    }

    pub fn first(&self) -> u64 {
        self.terms[0]
    }

    pub fn last(&self) -> u64 {
        *self.terms.last().expect("partitions are never empty")
    }

    /// Terms sorted in non-increasing order; handy for comparing against
    /// other representations of the same multiset.
    pub fn sorted_desc(&self) -> Vec<u64> {
        let mut v = self.terms.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Checks that `a2 .. am a1` is non-descending.
    pub fn is_canonical(&self) -> bool {
        is_jump_form(&self.terms)
    }

    pub fn is_valid_jump(&self, r: JumpOrder) -> bool {
        self.jump_violation(r.get()).is_none()
    }

    fn jump_violation(&self, r: u64) -> Option<JumpViolation> {
        if r == 0 {
            return Some(JumpViolation::ZeroOrder);
        }
        if self.terms.len() > 1 && r > self.terms[1] {
            return Some(JumpViolation::ExceedsSecond);
        }
        let a1 = self.first();
        // For a single term the new last term is r itself.
        let last = if self.terms.len() == 1 { r } else { self.last() };
        if a1 < r || a1 - r < last {
            return Some(JumpViolation::FirstBelowLast);
        }
        None
    }

    /// Applies a jump of order `r`, producing `(a1 - r) r a2 ... am`.
    pub fn jump(&self, r: JumpOrder) -> Result<Partition> {
        let r = r.get();
        if let Some(reason) = self.jump_violation(r) {
            return Err(Error::InvalidJump {
                partition: self.to_string(),
                order: r,
                reason,
            });
        }
        let mut terms = Vec::with_capacity(self.terms.len() + 1);
        terms.push(self.first() - r);
        terms.push(r);
        terms.extend_from_slice(&self.terms[1..]);
        Ok(Partition { terms })
    }

    /// Undoes the last jump: `(a1 + a2) a3 ... am`. The jump that leads
    /// back here has order `a2`.
    pub fn predecessor(&self) -> Predecessor {
        if self.terms.len() == 1 {
            return Predecessor::Root;
        }
        let mut terms = Vec::with_capacity(self.terms.len() - 1);
        terms.push(self.terms[0] + self.terms[1]);
        terms.extend_from_slice(&self.terms[2..]);
        Predecessor::Partition(Partition { terms })
    }

    /// Size of the set reached by repeated order-1 jumps, the starting
    /// partition included: `a1 - am + 1`, with `am = a1` for a single term.
    pub fn jump_set_order1_size(&self) -> u64 {
        self.first() - self.last() + 1
    }
}

fn is_jump_form(terms: &[u64]) -> bool {
    match terms.split_first() {
        None => false,
        Some((first, rest)) => rest
            .iter()
            .chain(std::iter::once(first))
            .zip(rest.iter().skip(1).chain(std::iter::once(first)))
            .all(|(a, b)| a <= b),
    }
}

pub(crate) fn format_terms(terms: &[u64]) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&t.to_string());
    }
    s
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[u64]) -> Partition {
        Partition::from_jump_form(terms.to_vec()).unwrap()
    }

    fn r(order: u64) -> JumpOrder {
        JumpOrder::new(order).unwrap()
    }

    #[test]
    fn valid_jump_examples() {
        assert!(p(&[10, 4]).is_valid_jump(r(3)));
        assert!(!p(&[7]).is_valid_jump(r(4)));
        assert!(!Partition::from_multiset(vec![3, 1, 1, 2]).unwrap().is_valid_jump(r(2)));
        assert!(!p(&[3, 1, 1, 2]).is_valid_jump(r(2)));
    }

    #[test]
    fn jump_examples() {
        assert_eq!(p(&[15, 6]).jump(r(5)).unwrap(), p(&[10, 5, 6]));
        assert_eq!(p(&[5, 1, 3]).jump(r(1)).unwrap(), p(&[4, 1, 1, 3]));
        assert_eq!(p(&[7]).jump(r(1)).unwrap(), p(&[6, 1]));
        assert_eq!(p(&[10, 4]).jump(r(3)).unwrap(), p(&[7, 3, 4]));
    }

    #[test]
    fn invalid_jump_names_condition() {
        match p(&[7]).jump(r(4)) {
            Err(Error::InvalidJump { reason, .. }) => assert_eq!(reason, JumpViolation::FirstBelowLast),
            other => panic!("unexpected {other:?}"),
        }
        match p(&[3, 1, 1, 2]).jump(r(2)) {
            Err(Error::InvalidJump { reason, .. }) => assert_eq!(reason, JumpViolation::ExceedsSecond),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(p(&[4, 1, 1, 3]).predecessor(), Predecessor::Partition(p(&[5, 1, 3])));
        assert_eq!(p(&[5, 2]).predecessor(), Predecessor::Partition(p(&[7])));
        assert_eq!(p(&[9]).predecessor(), Predecessor::Root);
    }

    #[test]
    fn jump_set_sizes() {
        assert_eq!(p(&[10, 4]).jump_set_order1_size(), 7);
        assert_eq!(p(&[12]).jump_set_order1_size(), 1);
        assert_eq!(p(&[5, 2]).jump_set_order1_size(), 4);
    }

    #[test]
    fn multiset_construction() {
        assert_eq!(Partition::from_multiset(vec![2, 1, 3, 1]).unwrap().terms(), &[3, 1, 1, 2]);
        assert!(Partition::from_jump_form(vec![2, 3]).is_err());
        assert!(Partition::from_jump_form(vec![]).is_err());
        assert!(Partition::from_multiset(vec![0, 1]).is_err());
        assert!(JumpOrder::new(0).is_none());
    }

    fn canonical() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u64..20, 1..8).prop_map(|v| Partition::from_multiset(v).unwrap())
    }

    proptest! {
        #[test]
        fn jump_round_trips_and_stays_canonical(part in canonical(), order in 1u64..20) {
            let order = r(order);
            if part.is_valid_jump(order) {
                let next = part.jump(order).unwrap();
                prop_assert!(next.is_canonical());
                prop_assert_eq!(next.sum(), part.sum());
                prop_assert_eq!(next.predecessor(), Predecessor::Partition(part.clone()));
                if part.len() >= 2 {
                    prop_assert_eq!(
                        next.jump_set_order1_size(),
                        part.jump_set_order1_size() - order.get()
                    );
                }
            } else {
                prop_assert!(part.jump(order).is_err());
            }
        }

        #[test]
        fn single_term_validity(n in 1u64..200, order in 1u64..200) {
            prop_assert_eq!(Partition::single(n).is_valid_jump(r(order)), order <= n / 2);
        }
    }
}
