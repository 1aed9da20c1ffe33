//! Differential sweep: every jump-based method against the classical
//! oracles, reporting the smallest counterexample per check.

use std::fmt;
use std::num::Wrapping;

use num_bigint::BigUint;

use crate::counting::{self, CountTable};
use crate::divisor::{self, distinct_partitions_with_first};
use crate::enumeration::enumerate_partitions;
use crate::error::Result;
use crate::evector::{self, EVector};
use crate::network::Budget;
use crate::oracles;
use crate::sigma;

/// Per-check upper limits applied on top of the requested maximum.
pub const ENUMERATION_CAP: u64 = 30;
pub const TRACE_CAP: u64 = 100;
pub const SIGMA_CAP: u64 = 80;
pub const EVECTOR_CAP: u64 = 1000;

type PFn = Box<dyn Fn(u64) -> BigUint + Send + Sync>;

/// The implementations under test. [`Methods::standard`] wires in the real
/// ones; [`Methods::with_fault`] swaps one for an off-by-one mutant so the
/// sweep itself can be checked.
pub struct Methods {
    pub p_recursive: PFn,
    pub p_pentagonal: PFn,
    pub p_enumerate: PFn,
    pub trace: Box<dyn Fn(u64) -> i64 + Send + Sync>,
    pub evector_divisors: Box<dyn Fn(usize) -> Result<Vec<u64>> + Send + Sync>,
    pub sigma: Box<dyn Fn(u64) -> u64 + Send + Sync>,
}

impl Default for Methods {
    fn default() -> Self {
        Self::standard()
    }
}

impl Methods {
    pub fn standard() -> Self {
        Methods {
            p_recursive: Box::new(counting::p),
            p_pentagonal: Box::new(oracles::p_pentagonal),
            p_enumerate: Box::new(|n| BigUint::from(enumerate_partitions(n).count())),
            trace: Box::new(divisor::trace),
            evector_divisors: Box::new(evector::divisors_from_evector),
            sigma: Box::new(sigma::sigma1),
        }
    }

    pub fn with_fault(fault: Fault) -> Self {
        let mut m = Self::standard();
        match fault {
            Fault::PRecursive => {
                // Stops one first-jump fan short.
                m.p_recursive = Box::new(|n| {
                    let mut memo = CountTable::new();
                    let n = n as usize;
                    (0..n / 2).fold(BigUint::from(1u8) * u8::from(n == 0), |acc, i| {
                        acc + counting::script_p(i, n + 1 - 2 * i, &mut memo)
                    })
                });
            }
            Fault::PEnumerate => {
                m.p_enumerate = Box::new(|n| BigUint::from(enumerate_partitions(n).skip(1).count()));
            }
            Fault::Trace => {
                // Largest part runs to n - 1 instead of n.
                m.trace = Box::new(|n| {
                    distinct_partitions_with_first(n, 1, n - 1)
                        .map(|t| t.value())
                        .sum()
                });
            }
            Fault::EVector => {
                // Final block read one position early.
                m.evector_divisors = Box::new(|n| {
                    let ev: EVector<Wrapping<i64>> = evector::e_vector_in(n, Budget::default())?;
                    let start = evector::triangular(n as u64 - 1) as usize - 1;
                    Ok(ev.entries()[start..start + n]
                        .iter()
                        .rev()
                        .map(|w| w.0 as u64)
                        .collect())
                });
            }
            Fault::Sigma => {
                // Inner sum starts at j = 0.
                m.sigma = Box::new(|n| {
                    let total: i64 = divisor::enumerate_distinct_partitions(n)
                        .map(|t| {
                            let (big, small) = (t.partition.largest(), t.smallest);
                            let inner = small * (big - small) + small * (small - 1) / 2;
                            t.sign * inner as i64
                        })
                        .sum();
                    total as u64
                });
            }
        }
        m
    }
}

/// Which method to mutate in a fault-injection run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    PRecursive,
    PEnumerate,
    Trace,
    EVector,
    Sigma,
}

impl Fault {
    pub const ALL: [Fault; 5] = [
        Fault::PRecursive,
        Fault::PEnumerate,
        Fault::Trace,
        Fault::EVector,
        Fault::Sigma,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Fault::PRecursive => "p-recursive",
            Fault::PEnumerate => "p-enumerate",
            Fault::Trace => "trace",
            Fault::EVector => "evector",
            Fault::Sigma => "sigma",
        }
    }

    pub fn parse(s: &str) -> Option<Fault> {
        Fault::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub first: u64,
    pub last: u64,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub max: u64,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatch.is_none())
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.mismatch.is_some())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify max={} caps: enumeration={} trace={} sigma={} evector={}",
            self.max, ENUMERATION_CAP, TRACE_CAP, SIGMA_CAP, EVECTOR_CAP
        )?;
        for c in &self.checks {
            match &c.mismatch {
                None => writeln!(f, "ok   {} n={}..={}", c.name, c.first, c.last)?,
                Some(m) => writeln!(
                    f,
                    "FAIL {} n={}..={}: counterexample n={} expected {} got {}",
                    c.name, c.first, c.last, m.n, m.expected, m.actual
                )?,
            }
        }
        Ok(())
    }
}

/// Smallest `n` in `first..=last` where `probe` reports a mismatch.
fn sweep<F>(first: u64, last: u64, probe: F) -> Option<Mismatch>
where
    F: Fn(u64) -> Option<Mismatch> + Sync + Send,
{
    if first > last {
        return None;
    }
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (first..=last)
            .into_par_iter()
            .filter_map(probe)
            .min_by_key(|m| m.n)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (first..=last).find_map(probe)
    }
}

fn compare<T: PartialEq + ToString>(n: u64, expected: T, actual: T) -> Option<Mismatch> {
    (expected != actual).then(|| Mismatch {
        n,
        expected: expected.to_string(),
        actual: actual.to_string(),
    })
}

/// Runs every check for sizes up to `max`, each clipped by its cap.
pub fn run(max: u64, methods: &Methods) -> Report {
    let mut checks = Vec::new();

    checks.push(CheckOutcome {
        name: "p recursive vs pentagonal",
        first: 0,
        last: max,
        mismatch: sweep(0, max, |n| compare(n, (methods.p_pentagonal)(n), (methods.p_recursive)(n))),
    });

    let cap = max.min(ENUMERATION_CAP);
    checks.push(CheckOutcome {
        name: "p enumeration count vs pentagonal",
        first: 1,
        last: cap,
        mismatch: sweep(1, cap, |n| compare(n, (methods.p_pentagonal)(n), (methods.p_enumerate)(n))),
    });

    let cap = max.min(TRACE_CAP);
    checks.push(CheckOutcome {
        name: "trace vs trial-division d",
        first: 1,
        last: cap,
        mismatch: sweep(1, cap, |n| {
            compare(n, oracles::divisor_stats_trial(n).0 as i64, (methods.trace)(n))
        }),
    });

    let cap = max.min(EVECTOR_CAP);
    let mismatch = if cap == 0 {
        None
    } else {
        match (methods.evector_divisors)(cap as usize) {
            Ok(ds) => (1..=cap).find_map(|k| {
                let got = ds.get(k as usize - 1).copied().unwrap_or(0);
                compare(k, oracles::divisor_stats_trial(k).0, got)
            }),
            Err(e) => Some(Mismatch {
                n: cap,
                expected: "an E-vector".to_string(),
                actual: e.to_string(),
            }),
        }
    };
    checks.push(CheckOutcome {
        name: "E-vector final block vs trial-division d",
        first: 1,
        last: cap,
        mismatch,
    });

    let cap = max.min(SIGMA_CAP);
    checks.push(CheckOutcome {
        name: "sigma trace vs trial-division sigma",
        first: 1,
        last: cap,
        mismatch: sweep(1, cap, |n| {
            compare(n, oracles::divisor_stats_trial(n).1, (methods.sigma)(n))
        }),
    });

    Report { max, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_sweep_passes() {
        let report = run(40, &Methods::standard());
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 5);
    }

    #[test]
    fn every_fault_is_caught() {
        for fault in Fault::ALL {
            let report = run(20, &Methods::with_fault(fault));
            let failure = report.first_failure().unwrap_or_else(|| panic!("{fault:?} not caught"));
            assert!(failure.mismatch.is_some());
            assert_eq!(Fault::parse(fault.as_str()), Some(fault));
        }
    }

    #[test]
    fn counterexample_is_smallest() {
        let report = run(20, &Methods::with_fault(Fault::PRecursive));
        let m = report.checks[0].mismatch.as_ref().unwrap();
        assert_eq!((m.n, m.expected.as_str(), m.actual.as_str()), (1, "1", "0"));
    }
}
