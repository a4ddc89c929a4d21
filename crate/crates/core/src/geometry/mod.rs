//! The Shi and braid arrangements in `R^n`, with exact rational arithmetic.

mod bounded;
mod feasibility;
mod system;

use std::fmt;

pub use bounded::{is_relatively_bounded, is_relatively_bounded_by_probe, is_relatively_bounded_in};
pub use feasibility::{feasible_interior, Infeasible, Witness};
pub use system::{system_of_sign_vector, DiffConstraint, DifferenceSystem, Relation};

use crate::error::{Error, Result};
use crate::pairs::{pair_count, Odometer, PairMap};
use crate::parallel::run_partitioned;
use crate::scalar::Scalar;

/// Largest `n` accepted by [`enumerate_regions`].
pub const DEFAULT_REGION_CAP: usize = 5;

/// Position of `x_j - x_k` relative to the two hyperplanes of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// `x_j - x_k < 0`
    Below,
    /// `0 < x_j - x_k < 1`
    Between,
    /// `x_j - x_k > 1`
    Above,
}

impl Sign {
    pub const ALL: [Sign; 3] = [Sign::Below, Sign::Between, Sign::Above];

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Below => "below",
            Sign::Between => "between",
            Sign::Above => "above",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "below" => Some(Sign::Below),
            "between" => Some(Sign::Between),
            "above" => Some(Sign::Above),
            _ => None,
        }
    }
}

/// Per-pair classification of a (candidate) Shi region.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionSignVector {
    signs: PairMap<Sign>,
}

impl RegionSignVector {
    pub fn new(signs: PairMap<Sign>) -> Result<Self> {
        if signs.n() == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(Self { signs })
    }

    pub fn from_signs(n: usize, signs: Vec<Sign>) -> Result<Self> {
        let found = signs.len();
        let map = PairMap::from_values(n, signs).ok_or(Error::LengthMismatch {
            expected: pair_count(n),
            found,
        })?;
        Self::new(map)
    }

    pub fn uniform(n: usize, sign: Sign) -> Self {
        assert!(n >= 1);
        Self {
            signs: PairMap::from_fn(n, |_, _| sign),
        }
    }

    /// Starts from all-`Between` (the central region) and overrides the listed pairs.
    pub fn with_signs(n: usize, overrides: &[(usize, usize, Sign)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let mut sv = Self::uniform(n, Sign::Between);
        for &(j, k, s) in overrides {
            if !(1 <= j && j < k && k <= n) {
                return Err(Error::Malformed(format!("pair ({j},{k}) is not 1 <= j < k <= {n}")));
            }
            sv.signs.set(j, k, s);
        }
        Ok(sv)
    }

    pub fn n(&self) -> usize {
        self.signs.n()
    }

    pub fn sign(&self, j: usize, k: usize) -> Sign {
        *self.signs.get(j, k)
    }

    pub fn signs(&self) -> &PairMap<Sign> {
        &self.signs
    }
}

impl fmt::Display for RegionSignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, ((j, k), s)) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{j}{k}: {}", s.as_str())?;
        }
        write!(f, "}}")
    }
}

/// A point of `R^n` with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    fn diff(&self, j: usize, k: usize) -> T {
        self.coords[j - 1].clone() - self.coords[k - 1].clone()
    }
}

impl<T: Scalar> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Region containing `p`, or the first pair (canonical order) whose
/// difference lies on one of its two hyperplanes.
pub fn sign_vector_of_point<T: Scalar>(p: &Point<T>) -> Result<RegionSignVector> {
    let n = p.n();
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let (zero, one) = (T::zero(), T::one());
    let mut signs = Vec::with_capacity(pair_count(n));
    for (j, k) in crate::pairs::pairs(n) {
        let d = p.diff(j, k);
        let s = if d == zero {
            return Err(Error::OnHyperplane { j, k, value: 0 });
        } else if d == one {
            return Err(Error::OnHyperplane { j, k, value: 1 });
        } else if d < zero {
            Sign::Below
        } else if d < one {
            Sign::Between
        } else {
            Sign::Above
        };
        signs.push(s);
    }
    RegionSignVector::from_signs(n, signs)
}

/// Braid chamber of `p` as the permutation `pi` with
/// `x_pi(1) > x_pi(2) > ... > x_pi(n)`.
pub fn braid_cell_of_point<T: Scalar>(p: &Point<T>) -> Result<Vec<usize>> {
    let n = p.n();
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if let Some((j, k)) = crate::pairs::pairs(n).find(|&(j, k)| p.diff(j, k).is_zero()) {
        return Err(Error::OnHyperplane { j, k, value: 0 });
    }
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&a, &b| p.coords[b - 1].cmp(&p.coords[a - 1]));
    Ok(order)
}

/// Representative of `p + R(1,...,1)` with coordinate sum zero.
pub fn project_to_sum_zero<T: Scalar>(p: &Point<T>) -> Point<T> {
    if p.n() == 0 {
        return p.clone();
    }
    let sum = p.coords.iter().fold(T::zero(), |acc, c| acc + c.clone());
    let mean = sum / T::from_int(p.n() as i64);
    Point::new(p.coords.iter().map(|c| c.clone() - mean.clone()).collect())
}

/// Every sign vector on `[n]`, first pair most significant, `Below < Between < Above`.
pub fn all_sign_vectors(n: usize) -> impl Iterator<Item = RegionSignVector> {
    Odometer::new(pair_count(n), 3).map(move |d| sign_vector_of_digits(n, d))
}

fn sign_vector_of_digits(n: usize, digits: Vec<usize>) -> RegionSignVector {
    RegionSignVector {
        signs: PairMap::from_values(n, digits.into_iter().map(|d| Sign::ALL[d]).collect())
            .expect("odometer length matches pair count"),
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

fn region_of<T: Scalar>(sv: RegionSignVector) -> Option<(RegionSignVector, Witness<T>)> {
    let w = feasible_interior(&system_of_sign_vector::<T>(&sv)).ok()?;
    Some((sv, w))
}

/// Every region of the Shi arrangement with a verified interior witness.
pub fn enumerate_regions(n: usize) -> Result<impl Iterator<Item = (RegionSignVector, Witness<crate::Rational>)>> {
    enumerate_regions_in::<crate::Rational>(n, DEFAULT_REGION_CAP)
}

pub fn enumerate_regions_in<T: Scalar>(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = (RegionSignVector, Witness<T>)>> {
    check_cap(n, cap)?;
    Ok(all_sign_vectors(n).filter_map(region_of::<T>))
}

/// Same output as [`enumerate_regions`], partitioned over two-pair sign prefixes.
pub fn par_enumerate_regions(n: usize, jobs: usize) -> Result<Vec<(RegionSignVector, Witness<crate::Rational>)>> {
    check_cap(n, DEFAULT_REGION_CAP)?;
    let m = pair_count(n);
    let width = m.min(2);
    let prefixes: Vec<Vec<usize>> = Odometer::new(width, 3).collect();
    run_partitioned(prefixes, jobs, |prefix| {
        Odometer::with_prefix(m, 3, prefix)
            .map(|d| sign_vector_of_digits(n, d))
            .filter_map(region_of::<crate::Rational>)
            .collect()
    })
}
