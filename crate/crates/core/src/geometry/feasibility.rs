//! Exact nonemptiness test for open difference-constraint polyhedra.
//!
//! Every strict constraint `x_v - x_u < c` is tightened to `x_v - x_u <= c - eps`
//! with `eps` a symbolic positive infinitesimal. Values `a + b*eps` compare
//! lexicographically, so the open system is nonempty iff the constraint graph
//! has no negative cycle under that order. Shortest-path potentials give a
//! symbolic solution; a concrete rational `eps` is then substituted and
//! halved until every strict inequality re-verifies exactly.

use std::fmt;
use std::ops::Add;

use crate::geometry::system::{DiffConstraint, DifferenceSystem, Relation};
use crate::geometry::Point;
use crate::scalar::Scalar;

/// `real + eps * infinitesimal`, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct EpsValue<T> {
    real: T,
    eps: T,
}

impl<T: Scalar> EpsValue<T> {
    fn zero() -> Self {
        Self {
            real: T::zero(),
            eps: T::zero(),
        }
    }

    fn at(&self, eps: &T) -> T {
        self.real.clone() + self.eps.clone() * eps.clone()
    }
}

impl<T: Scalar> Add for &EpsValue<T> {
    type Output = EpsValue<T>;

    fn add(self, rhs: Self) -> EpsValue<T> {
        EpsValue {
            real: self.real.clone() + rhs.real.clone(),
            eps: self.eps.clone() + rhs.eps.clone(),
        }
    }
}

/// `x[to] - x[from] <= weight`, remembering the constraint it came from.
struct Arc<T> {
    from: usize,
    to: usize,
    weight: EpsValue<T>,
    origin: usize,
}

fn arcs_of<T: Scalar>(sys: &DifferenceSystem<T>) -> Vec<Arc<T>> {
    let minus_one = -T::one();
    sys.constraints()
        .iter()
        .enumerate()
        .map(|(origin, c)| {
            let (j, k) = (c.j - 1, c.k - 1);
            match c.relation {
                // x_k - x_j < -b
                Relation::Greater => Arc {
                    from: j,
                    to: k,
                    weight: EpsValue {
                        real: -c.bound.clone(),
                        eps: minus_one.clone(),
                    },
                    origin,
                },
                // x_j - x_k < b
                Relation::Less => Arc {
                    from: k,
                    to: j,
                    weight: EpsValue {
                        real: c.bound.clone(),
                        eps: minus_one.clone(),
                    },
                    origin,
                },
            }
        })
        .collect()
}

/// A point strictly inside a difference system, re-checked by substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<T> {
    point: Point<T>,
    verified: bool,
}

impl<T: Scalar> Witness<T> {
    /// Wraps a point without checking it.
    pub fn unverified(point: Point<T>) -> Self {
        Self { point, verified: false }
    }

    /// Substitutes the point into `sys`; sets the flag iff every constraint
    /// holds strictly.
    pub fn verify(&mut self, sys: &DifferenceSystem<T>) -> bool {
        self.verified = sys.holds_strictly(self.point.coords());
        self.verified
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn point(&self) -> &Point<T> {
        &self.point
    }

    pub fn into_point(self) -> Point<T> {
        self.point
    }
}

/// Certificate of emptiness: constraints around a cycle whose bounds add up to
/// a contradiction of the form `0 < 0` or `0 < -c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Infeasible<T> {
    pub cycle: Vec<DiffConstraint<T>>,
}

impl<T: Scalar> Infeasible<T> {
    /// Re-derives the contradiction: walking the cycle, the implied upper
    /// bounds on `sum (x_to - x_from) = 0` add up to something `<= 0` while
    /// at least one of them is strict.
    pub fn is_valid(&self) -> bool {
        if self.cycle.is_empty() {
            return false;
        }
        let arcs: Vec<(usize, usize, T)> = self
            .cycle
            .iter()
            .map(|c| match c.relation {
                Relation::Greater => (c.j, c.k, -c.bound.clone()),
                Relation::Less => (c.k, c.j, c.bound.clone()),
            })
            .collect();
        let closed = arcs.iter().zip(arcs.iter().cycle().skip(1)).all(|(a, b)| a.1 == b.0);
        let total = arcs.iter().fold(T::zero(), |acc, a| acc + a.2.clone());
        closed && total <= T::zero()
    }
}

impl<T: Scalar> fmt::Display for Infeasible<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "contradictory cycle [")?;
        for (i, c) in self.cycle.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Nonempty: a verified witness. Empty: the negative cycle found.
pub fn feasible_interior<T: Scalar>(sys: &DifferenceSystem<T>) -> Result<Witness<T>, Infeasible<T>> {
    let n = sys.n();
    let arcs = arcs_of(sys);
    // Implicit source joined to every vertex by a zero arc.
    let mut dist = vec![EpsValue::<T>::zero(); n];
    let mut pred: Vec<Option<usize>> = vec![None; n];

    let mut last_relaxed = None;
    for _round in 0..n {
        last_relaxed = None;
        for (idx, arc) in arcs.iter().enumerate() {
            let candidate = &dist[arc.from] + &arc.weight;
            if candidate < dist[arc.to] {
                dist[arc.to] = candidate;
                pred[arc.to] = Some(idx);
                last_relaxed = Some(arc.to);
            }
        }
        if last_relaxed.is_none() {
            break;
        }
    }

    if let Some(mut v) = last_relaxed {
        // Still relaxing after n rounds: a negative cycle is reachable via pred.
        for _ in 0..n {
            v = arcs[pred[v].expect("relaxed vertex has a predecessor")].from;
        }
        let start = v;
        let mut cycle = Vec::new();
        loop {
            let idx = pred[v].expect("cycle vertex has a predecessor");
            cycle.push(sys.constraints()[arcs[idx].origin].clone());
            v = arcs[idx].from;
            if v == start {
                break;
            }
        }
        cycle.reverse();
        return Err(Infeasible { cycle });
    }

    let mut eps = T::one() / T::from_int(2 * n as i64);
    let two = T::from_int(2);
    loop {
        let mut coords: Vec<T> = dist.iter().map(|d| d.at(&eps)).collect();
        let anchor = coords[n - 1].clone();
        for c in coords.iter_mut() {
            *c = c.clone() - anchor.clone();
        }
        let mut witness = Witness::unverified(Point::new(coords));
        if witness.verify(sys) {
            return Ok(witness);
        }
        // Symbolic slack is positive, so a small enough eps always verifies.
        eps = eps / two.clone();
    }
}
