//! Boundedness of Shi regions modulo the line `R(1,...,1)`.

use crate::error::{Error, Result};
use crate::geometry::{feasible_interior, system_of_sign_vector, DiffConstraint, RegionSignVector, Sign};
use crate::scalar::Scalar;

/// Bounded modulo `(1,...,1)` iff the recession order digraph is strongly
/// connected. Arc `u -> v` stands for `y_u <= y_v` on recession directions:
/// `Above` gives `y_k <= y_j`, `Below` gives `y_j <= y_k`, `Between` gives both.
pub fn is_relatively_bounded(sv: &RegionSignVector) -> Result<bool> {
    is_relatively_bounded_in::<crate::Rational>(sv)
}

pub fn is_relatively_bounded_in<T: Scalar>(sv: &RegionSignVector) -> Result<bool> {
    require_feasible::<T>(sv)?;
    let n = sv.n();
    let mut out = vec![Vec::new(); n];
    let mut inc = vec![Vec::new(); n];
    let mut arc = |u: usize, v: usize| {
        out[u - 1].push(v - 1);
        inc[v - 1].push(u - 1);
    };
    for ((j, k), s) in sv.signs().iter() {
        match s {
            Sign::Above => arc(k, j),
            Sign::Below => arc(j, k),
            Sign::Between => {
                arc(j, k);
                arc(k, j);
            }
        }
    }
    Ok(reaches_all(&out) && reaches_all(&inc))
}

fn reaches_all(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn require_feasible<T: Scalar>(sv: &RegionSignVector) -> Result<()> {
    feasible_interior(&system_of_sign_vector::<T>(sv))
        .map(|_| ())
        .map_err(|cert| Error::Infeasible(cert.to_string()))
}

/// Solver-based second opinion: the region is unbounded modulo `(1,...,1)`
/// iff some pair difference `x_j - x_k` can exceed `10 n` inside it.
pub fn is_relatively_bounded_by_probe(sv: &RegionSignVector) -> Result<bool> {
    type Q = crate::Rational;
    let sys = system_of_sign_vector::<Q>(sv);
    feasible_interior(&sys).map_err(|cert| Error::Infeasible(cert.to_string()))?;
    let n = sv.n();
    let big = Q::from_int(10 * n as i64);
    for j in 1..=n {
        for k in 1..=n {
            if j == k {
                continue;
            }
            let probe = sys.clone().with(DiffConstraint::greater(j, k, big.clone()))?;
            if feasible_interior(&probe).is_ok() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
