//! Parking functions: the two recognizers, enumeration and the closed-form count.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::pairs::{Odometer, PrefixOdometer};
use crate::parallel::run_partitioned;

/// Largest `n` accepted by [`enumerate_parking_functions`].
pub const DEFAULT_PF_CAP: usize = 7;

/// A certified parking function of length `n`, entries in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    entries: Vec<usize>,
}

impl ParkingFunction {
    /// Validates `entries` as a parking function.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let raw: Vec<i64> = entries.iter().map(|&e| e as i64).collect();
        validate(&raw)?;
        let n = entries.len();
        if let Some((position, &value)) = entries.iter().enumerate().find(|(_, &e)| e > n) {
            return Err(Error::EntryTooLarge {
                position: position + 1,
                value: value as i64,
                n,
            });
        }
        let outcome = check_by_simulation(&raw)?;
        match outcome.first_failed_car {
            None => Ok(Self { entries }),
            Some(car) => Err(Error::NotParking { car }),
        }
    }

    /// Converts a raw preference sequence, rejecting anything that does not park.
    pub fn from_signed(seq: &[i64]) -> Result<Self> {
        validate(seq)?;
        Self::new(seq.iter().map(|&e| e as usize).collect())
    }

    pub(crate) fn new_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(check_sorted(&entries));
        Self { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Result of driving the cars down the street.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingOutcome {
    pub success: bool,
    /// Spot taken by each car (1-based), present iff every car parked.
    pub assignment: Option<Vec<usize>>,
    /// 1-based index of the first car that ran off the end.
    pub first_failed_car: Option<usize>,
}

fn validate(seq: &[i64]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::Empty);
    }
    match seq.iter().position(|&e| e < 1) {
        Some(i) => Err(Error::NonPositive {
            position: i + 1,
            value: seq[i],
        }),
        None => Ok(()),
    }
}

/// Parks the cars one by one; each takes the first free spot at or after its
/// preference. Preferences above `n` are allowed and simply fail.
pub fn check_by_simulation(seq: &[i64]) -> Result<ParkingOutcome> {
    validate(seq)?;
    let n = seq.len();
    let mut taken = vec![false; n + 1];
    let mut assignment = Vec::with_capacity(n);
    for (car, &pref) in seq.iter().enumerate() {
        let start = pref as usize;
        match (start..=n).find(|&spot| !taken[spot]) {
            Some(spot) => {
                taken[spot] = true;
                assignment.push(spot);
            }
            None => {
                return Ok(ParkingOutcome {
                    success: false,
                    assignment: None,
                    first_failed_car: Some(car + 1),
                })
            }
        }
    }
    Ok(ParkingOutcome {
        success: true,
        assignment: Some(assignment),
        first_failed_car: None,
    })
}

/// Sorted criterion: `z_k <= k` for the ascending rearrangement `z`.
pub fn check_by_sort(seq: &[i64]) -> Result<bool> {
    validate(seq)?;
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().zip(1..).all(|(&z, k)| z <= k))
}

fn check_sorted(entries: &[usize]) -> bool {
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    sorted.iter().zip(1..).all(|(&z, k)| z >= 1 && z <= k)
}

/// `(n+1)^(n-1)`.
pub fn count_parking_functions(n: usize) -> BigUint {
    assert!(n >= 1, "n must be at least 1");
    BigUint::from(n + 1).pow((n - 1) as u32)
}

/// Lexicographic stream of every parking function of a fixed length.
#[derive(Debug, Clone)]
pub struct ParkingFunctions {
    candidates: PrefixOdometer,
}

impl Iterator for ParkingFunctions {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        for digits in self.candidates.by_ref() {
            let entries: Vec<usize> = digits.into_iter().map(|d| d + 1).collect();
            if check_sorted(&entries) {
                return Some(ParkingFunction { entries });
            }
        }
        None
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

pub fn enumerate_parking_functions(n: usize) -> Result<ParkingFunctions> {
    enumerate_parking_functions_capped(n, DEFAULT_PF_CAP)
}

pub fn enumerate_parking_functions_capped(n: usize, cap: usize) -> Result<ParkingFunctions> {
    check_cap(n, cap)?;
    Ok(ParkingFunctions {
        candidates: Odometer::with_prefix(n, n, &[]),
    })
}

/// Parking functions of length `n` whose first entry is `first`, in lexicographic order.
pub fn parking_functions_with_first(n: usize, first: usize) -> ParkingFunctions {
    ParkingFunctions {
        candidates: Odometer::with_prefix(n, n, &[first - 1]),
    }
}

/// Same output as [`enumerate_parking_functions`], computed on `jobs` workers
/// partitioned by first entry.
pub fn par_enumerate_parking_functions(n: usize, jobs: usize) -> Result<Vec<ParkingFunction>> {
    check_cap(n, DEFAULT_PF_CAP)?;
    run_partitioned((1..=n).collect(), jobs, |&first| {
        parking_functions_with_first(n, first).collect()
    })
}
