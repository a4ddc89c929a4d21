use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{RegionSignVector, Sign};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Greater,
    Less,
}

/// Strict constraint `x_j - x_k (>|<) bound`, 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffConstraint<T> {
    pub j: usize,
    pub k: usize,
    pub relation: Relation,
    pub bound: T,
}

impl<T: Scalar> DiffConstraint<T> {
    pub fn greater(j: usize, k: usize, bound: T) -> Self {
        Self {
            j,
            k,
            relation: Relation::Greater,
            bound,
        }
    }

    pub fn less(j: usize, k: usize, bound: T) -> Self {
        Self {
            j,
            k,
            relation: Relation::Less,
            bound,
        }
    }

    pub fn holds_strictly(&self, coords: &[T]) -> bool {
        let diff = coords[self.j - 1].clone() - coords[self.k - 1].clone();
        match self.relation {
            Relation::Greater => diff > self.bound,
            Relation::Less => diff < self.bound,
        }
    }
}

impl<T: fmt::Display> fmt::Display for DiffConstraint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.relation {
            Relation::Greater => '>',
            Relation::Less => '<',
        };
        write!(f, "x{} - x{} {op} {}", self.j, self.k, self.bound)
    }
}

/// A conjunction of strict difference constraints on `R^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSystem<T> {
    n: usize,
    constraints: Vec<DiffConstraint<T>>,
}

impl<T: Scalar> DifferenceSystem<T> {
    pub fn new(n: usize, constraints: Vec<DiffConstraint<T>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        for c in &constraints {
            if c.j == c.k || c.j == 0 || c.k == 0 || c.j > n || c.k > n {
                return Err(Error::Malformed(format!(
                    "constraint on x{} - x{} is not a difference of two coordinates of R^{n}",
                    c.j, c.k
                )));
            }
        }
        Ok(Self { n, constraints })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[DiffConstraint<T>] {
        &self.constraints
    }

    /// Adds a constraint, returning the enlarged system.
    pub fn with(mut self, c: DiffConstraint<T>) -> Result<Self> {
        self.constraints.push(c);
        Self::new(self.n, self.constraints)
    }

    pub fn holds_strictly(&self, coords: &[T]) -> bool {
        coords.len() == self.n && self.constraints.iter().all(|c| c.holds_strictly(coords))
    }
}

impl<T: fmt::Display> fmt::Display for DifferenceSystem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.constraints.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Open interior of the region: each pair contributes one or two strict constraints.
pub fn system_of_sign_vector<T: Scalar>(sv: &RegionSignVector) -> DifferenceSystem<T> {
    let mut constraints = Vec::with_capacity(2 * sv.signs().values().len());
    for ((j, k), sign) in sv.signs().iter() {
        match sign {
            Sign::Above => constraints.push(DiffConstraint::greater(j, k, T::one())),
            Sign::Between => {
                constraints.push(DiffConstraint::greater(j, k, T::zero()));
                constraints.push(DiffConstraint::less(j, k, T::one()));
            }
            Sign::Below => constraints.push(DiffConstraint::less(j, k, T::zero())),
        }
    }
    DifferenceSystem { n: sv.n(), constraints }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;
    use Sign::*;

    type Q = Rational64;

    #[test]
    fn translation_examples() {
        let sys = system_of_sign_vector::<Q>(&RegionSignVector::with_signs(2, &[(1, 2, Between)]).unwrap());
        assert_eq!(
            sys.constraints(),
            &[
                DiffConstraint::greater(1, 2, Q::from(0)),
                DiffConstraint::less(1, 2, Q::from(1))
            ]
        );

        let central = system_of_sign_vector::<Q>(&RegionSignVector::uniform(3, Between));
        assert_eq!(central.constraints().len(), 6);

        let sv = RegionSignVector::with_signs(3, &[(1, 2, Between), (1, 3, Above), (2, 3, Between)]).unwrap();
        let sys = system_of_sign_vector::<Q>(&sv);
        assert_eq!(
            sys.to_string(),
            "{x1 - x2 > 0, x1 - x2 < 1, x1 - x3 > 1, x2 - x3 > 0, x2 - x3 < 1}"
        );
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(DifferenceSystem::new(2, vec![DiffConstraint::less(1, 1, Q::from(0))]).is_err());
        assert!(DifferenceSystem::new(2, vec![DiffConstraint::less(1, 3, Q::from(0))]).is_err());
        assert!(DifferenceSystem::<Q>::new(0, vec![]).is_err());
    }
}
