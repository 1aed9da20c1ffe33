//! The E-vector recurrence `E_n = A_{n,n-1} E_{n-1} + n I_n`.
//!
//! `E_n` has `t(n)` entries. The shift matrix `A_{i,j}` (`t(i) x t(j)`) has
//! `-1` on the diagonal and `+1` where `k - i = l`; it is never stored, only
//! applied as a two-term index transform. The last `n` entries of `E_n`
//! hold `d(n), d(n-1), ..., d(1)`.
//!
//! Interior entries grow quickly (they leave the `i64` range at `n = 228`),
//! so vectors are generic over the entry ring: checked `i64`, exact
//! `BigInt`, or `Wrapping<i64>` residues. The final block is small, so the
//! residue ring recovers it exactly at any size.

use std::fmt::Debug;
use std::num::Wrapping;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::network::Budget;

/// Vectors shorter than this are transformed on one thread.
#[cfg(feature = "parallel")]
const PARALLEL_MIN_LEN: usize = 1 << 14;

pub fn triangular(n: u64) -> u64 {
    n * (n + 1) / 2
}

fn tri(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Scalar type an [`EVector`] can hold.
pub trait Entry: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn from_u64(v: u64) -> Option<Self>;
    /// `plus - minus`, with either side possibly absent.
    fn shift_combine(minus: Option<&Self>, plus: Option<&Self>) -> Option<Self>;
    fn checked_add(&self, other: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn from_u64(v: u64) -> Option<Self> {
        i64::try_from(v).ok()
    }
    fn shift_combine(minus: Option<&Self>, plus: Option<&Self>) -> Option<Self> {
        let base = match minus {
            Some(m) => m.checked_neg()?,
            None => 0,
        };
        match plus {
            Some(p) => base.checked_add(*p),
            None => Some(base),
        }
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i64::checked_add(*self, *other)
    }
}

impl Entry for Wrapping<i64> {
    fn zero() -> Self {
        Wrapping(0)
    }
    fn from_u64(v: u64) -> Option<Self> {
        Some(Wrapping(v as i64))
    }
    fn shift_combine(minus: Option<&Self>, plus: Option<&Self>) -> Option<Self> {
        let mut acc = Wrapping(0);
        if let Some(m) = minus {
            acc -= m;
        }
        if let Some(p) = plus {
            acc += p;
        }
        Some(acc)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_u64(v: u64) -> Option<Self> {
        Some(BigInt::from(v))
    }
    fn shift_combine(minus: Option<&Self>, plus: Option<&Self>) -> Option<Self> {
        Some(match (minus, plus) {
            (Some(m), Some(p)) => p - m,
            (Some(m), None) => -m,
            (None, Some(p)) => p.clone(),
            (None, None) => <BigInt as Zero>::zero(),
        })
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
}

/// `E_n`, stored 0-based; [`EVector::get`] takes the 1-based index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EVector<T = i64> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Entry> EVector<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&T> {
        self.entries.get(index.checked_sub(1)?)
    }

    /// Entries `t(n-1)+1 ..= t(n)`.
    pub fn final_block(&self) -> &[T] {
        &self.entries[tri(self.n - 1)..]
    }
}

/// Block dimensions of a shift matrix `A_{i,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftMatrixSpec {
    pub i: usize,
    pub j: usize,
}

impl ShiftMatrixSpec {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1, "block indices start at 1");
        ShiftMatrixSpec { i, j }
    }

    pub fn rows(&self) -> usize {
        tri(self.i)
    }

    pub fn cols(&self) -> usize {
        tri(self.j)
    }

    /// Matrix entry at 1-based `(k, l)`.
    pub fn entry(&self, k: usize, l: usize) -> i64 {
        let mut e = 0;
        if k == l {
            e -= 1;
        }
        if k >= self.i && k - self.i == l {
            e += 1;
        }
        e
    }
}

/// `w = A_{i,j} v`: `w[k] = -v[k] + v[k - i]`, each term present only when
/// its index lies in `1..=t(j)`.
pub fn apply_shift_matrix<T: Entry>(spec: ShiftMatrixSpec, v: &[T]) -> Result<Vec<T>> {
    let cols = spec.cols();
    if v.len() != cols {
        return Err(Error::DimensionMismatch {
            expected: cols,
            actual: v.len(),
        });
    }
    let row = |k0: usize| {
        // k0 is the 0-based row; v[k - i] in 1-based terms is v[k0 - i] here.
        let minus = v.get(k0);
        let plus = k0.checked_sub(spec.i).and_then(|idx| v.get(idx));
        T::shift_combine(minus, plus)
    };
    let rows = spec.rows();
    #[cfg(feature = "parallel")]
    let out: Option<Vec<T>> = if rows >= PARALLEL_MIN_LEN {
        use rayon::prelude::*;
        (0..rows).into_par_iter().map(row).collect()
    } else {
        (0..rows).map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let out: Option<Vec<T>> = (0..rows).map(row).collect();
    out.ok_or(Error::Overflow("shift matrix product"))
}

/// Sequential version of [`apply_shift_matrix`], kept for benchmarking.
pub fn apply_shift_matrix_sequential<T: Entry>(spec: ShiftMatrixSpec, v: &[T]) -> Result<Vec<T>> {
    let cols = spec.cols();
    if v.len() != cols {
        return Err(Error::DimensionMismatch {
            expected: cols,
            actual: v.len(),
        });
    }
    (0..spec.rows())
        .map(|k0| {
            let plus = k0.checked_sub(spec.i).and_then(|idx| v.get(idx));
            T::shift_combine(v.get(k0), plus)
        })
        .collect::<Option<Vec<T>>>()
        .ok_or(Error::Overflow("shift matrix product"))
}

fn check_len(n: usize, budget: Budget) -> Result<()> {
    budget.check("E-vector", (n as u128) * (n as u128 + 1) / 2)
}

fn add_at<T: Entry>(v: &mut [T], index0: usize, amount: u64) -> Result<()> {
    let amount = T::from_u64(amount).ok_or(Error::Overflow("E-vector injection"))?;
    v[index0] = v[index0]
        .checked_add(&amount)
        .ok_or(Error::Overflow("E-vector injection"))?;
    Ok(())
}

/// `E_n` by the recurrence, in any entry ring.
pub fn e_vector_in<T: Entry>(n: usize, budget: Budget) -> Result<EVector<T>> {
    assert!(n >= 1, "n must be positive");
    check_len(n, budget)?;
    let mut entries = vec![T::from_u64(1).expect("one fits")];
    for m in 2..=n {
        entries = apply_shift_matrix(ShiftMatrixSpec::new(m, m - 1), &entries)?;
        add_at(&mut entries, tri(m - 1), m as u64)?;
    }
    Ok(EVector { n, entries })
}

/// `E_n` with checked `i64` entries; fails with `Overflow` from `n = 228`.
pub fn e_vector(n: usize) -> Result<EVector<i64>> {
    e_vector_in(n, Budget::default())
}

/// `E_n` with exact big-integer entries.
pub fn e_vector_exact(n: usize) -> Result<EVector<BigInt>> {
    e_vector_in(n, Budget::default())
}

/// `E_n` as the telescoped sum `sum_m m (A_{n,n-1} ... A_{m+1,m}) I_m`,
/// evaluating each term separately.
pub fn e_vector_closed_form_in<T: Entry>(n: usize, budget: Budget) -> Result<EVector<T>> {
    assert!(n >= 1, "n must be positive");
    check_len(n, budget)?;
    let term = |m: usize| -> Result<Vec<T>> {
        let mut v = vec![T::zero(); tri(m)];
        add_at(&mut v, tri(m - 1), m as u64)?;
        for step in m + 1..=n {
            v = apply_shift_matrix_sequential(ShiftMatrixSpec::new(step, step - 1), &v)?;
        }
        Ok(v)
    };
    #[cfg(feature = "parallel")]
    let terms: Vec<Vec<T>> = {
        use rayon::prelude::*;
        (1..=n).into_par_iter().map(term).collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let terms: Vec<Vec<T>> = (1..=n).map(term).collect::<Result<_>>()?;

    let mut entries = vec![T::zero(); tri(n)];
    for v in terms {
        for (acc, x) in entries.iter_mut().zip(&v) {
            *acc = acc.checked_add(x).ok_or(Error::Overflow("closed-form sum"))?;
        }
    }
    Ok(EVector { n, entries })
}

pub fn e_vector_closed_form(n: usize) -> Result<EVector<i64>> {
    e_vector_closed_form_in(n, Budget::default())
}

/// Reads `(d(1), ..., d(n))` off the reversed final block of `E_n`.
pub fn divisors_from_evector(n: usize) -> Result<Vec<u64>> {
    divisors_from_evector_with(n, Budget::default())
}

pub fn divisors_from_evector_with(n: usize, budget: Budget) -> Result<Vec<u64>> {
    let ev: EVector<Wrapping<i64>> = e_vector_in(n, budget)?;
    ev.final_block()
        .iter()
        .rev()
        .map(|w| u64::try_from(w.0).map_err(|_| Error::Overflow("E-vector final block")))
        .collect()
}
