//! Bijections between parking graphs, parking functions and Shi regions.
//!
//! `phi` reads off mixed in-degrees; `phi_inverse` rebuilds the graph with the
//! up-step/down-step algorithm; `psi` and `psi_inverse` translate edge kinds to
//! pair signs (`Down <-> Above`, `Downish <-> Between`, `Up <-> Below`).

use crate::error::{Error, Result};
use crate::geometry::{
    feasible_interior, sign_vector_of_point, system_of_sign_vector, Point, RegionSignVector, Sign, Witness,
};
use crate::mixed::{check_source_sink, in_degrees_mixed, EdgeKind, MixedGraph, ParkingGraph};
use crate::pairs::{pair_count, pair_index, pairs, PairMap};
use crate::pf::ParkingFunction;
use crate::scalar::Scalar;

pub fn sign_of_kind(kind: EdgeKind) -> Sign {
    match kind {
        EdgeKind::Down => Sign::Above,
        EdgeKind::Downish => Sign::Between,
        EdgeKind::Up => Sign::Below,
    }
}

pub fn kind_of_sign(sign: Sign) -> EdgeKind {
    match sign {
        Sign::Above => EdgeKind::Down,
        Sign::Between => EdgeKind::Downish,
        Sign::Below => EdgeKind::Up,
    }
}

/// Pairwise translation, no certification either way.
pub fn sign_vector_of_graph(g: &MixedGraph) -> RegionSignVector {
    RegionSignVector::new(g.kinds().map(|&k| sign_of_kind(k))).expect("graph has n >= 1")
}

pub fn graph_of_sign_vector(sv: &RegionSignVector) -> MixedGraph {
    MixedGraph::new(sv.signs().map(|&s| kind_of_sign(s))).expect("sign vector has n >= 1")
}

/// Mixed in-degrees plus one.
pub fn phi(p: &ParkingGraph) -> ParkingFunction {
    let entries = in_degrees_mixed(p).into_iter().map(|d| d + 1).collect();
    ParkingFunction::new_unchecked(entries)
}

/// Terminal `y` of the inverse algorithm; a permutation of `-1..=-n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SourcePriorityVector {
    values: Vec<i64>,
}

impl SourcePriorityVector {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `|s_i|`, 1-based.
    pub fn priority(&self, i: usize) -> u64 {
        self.values[i - 1].unsigned_abs()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Up {
        feeder: usize,
        targets: Vec<usize>,
    },
    Down {
        feeder: usize,
        targets: Vec<usize>,
        /// Every down-feeder candidate at this step.
        candidates: Vec<usize>,
    },
    Finalize {
        downish: Vec<(usize, usize)>,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgorithmTrace {
    pub events: Vec<TraceEvent>,
    /// Down-step targets skipped because the pair already carried an edge.
    pub guard_activations: usize,
}

impl AlgorithmTrace {
    pub fn up_feeders(&self) -> impl Iterator<Item = usize> + '_ {
        self.events.iter().filter_map(|e| match e {
            TraceEvent::Up { feeder, .. } => Some(*feeder),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiInverse {
    pub graph: ParkingGraph,
    pub priority: SourcePriorityVector,
    pub trace: AlgorithmTrace,
}

struct Builder {
    n: usize,
    y: Vec<i64>,
    kinds: Vec<Option<EdgeKind>>,
    trace: AlgorithmTrace,
}

impl Builder {
    fn has_edge(&self, a: usize, b: usize) -> bool {
        let (j, k) = if a < b { (a, b) } else { (b, a) };
        self.kinds[pair_index(self.n, j, k)].is_some()
    }

    fn introduce(&mut self, j: usize, k: usize, kind: EdgeKind) -> Result<()> {
        let slot = &mut self.kinds[pair_index(self.n, j, k)];
        if let Some(existing) = slot {
            return Err(Error::AlgorithmInvariant(format!(
                "pair ({j},{k}) already carries a {} edge",
                existing.as_str()
            )));
        }
        *slot = Some(kind);
        Ok(())
    }

    fn y(&self, v: usize) -> i64 {
        self.y[v - 1]
    }

    /// Feeder: the largest index with `y = 0`.
    fn up_step(&mut self, feeder: usize) -> Result<()> {
        let was_negative: Vec<bool> = self.y.iter().map(|&v| v < 0).collect();
        let targets: Vec<usize> = (feeder + 1..=self.n).filter(|&k| self.y(k) > 0).collect();
        for &k in &targets {
            self.introduce(feeder, k, EdgeKind::Up)?;
            self.y[k - 1] -= 1;
        }
        self.y[feeder - 1] = -1;
        for (v, neg) in self.y.iter_mut().zip(was_negative) {
            if neg {
                *v -= 1;
            }
        }
        self.trace.events.push(TraceEvent::Up { feeder, targets });
        Ok(())
    }

    fn down_step(&mut self) -> Result<()> {
        let candidates: Vec<usize> = (1..=self.n)
            .filter(|&j| (1..j).any(|k| self.y(k) > 0 && !self.has_edge(k, j)))
            .collect();
        let min = candidates
            .iter()
            .map(|&j| self.y(j))
            .min()
            .ok_or_else(|| Error::AlgorithmInvariant("down step without a feeder candidate".into()))?;
        let tied: Vec<usize> = candidates.iter().copied().filter(|&j| self.y(j) == min).collect();
        if tied.len() != 1 {
            return Err(Error::AlgorithmInvariant(format!(
                "down feeder not unique: candidates {tied:?} share y = {min}"
            )));
        }
        let feeder = tied[0];
        if min >= 0 {
            return Err(Error::AlgorithmInvariant(format!(
                "down feeder {feeder} has y = {min}, expected negative"
            )));
        }
        let mut targets = Vec::new();
        for k in 1..feeder {
            if self.y(k) <= 0 {
                continue;
            }
            if self.has_edge(k, feeder) {
                self.trace.guard_activations += 1;
                continue;
            }
            self.introduce(k, feeder, EdgeKind::Down)?;
            self.y[k - 1] -= 1;
            targets.push(k);
        }
        self.trace.events.push(TraceEvent::Down {
            feeder,
            targets,
            candidates,
        });
        Ok(())
    }

    fn finalize(&mut self) {
        let mut downish = Vec::new();
        for (idx, (j, k)) in pairs(self.n).enumerate() {
            if self.kinds[idx].is_none() {
                self.kinds[idx] = Some(EdgeKind::Downish);
                downish.push((j, k));
            }
        }
        self.trace.events.push(TraceEvent::Finalize { downish });
    }
}

/// Runs the up-step/down-step construction on a parking function.
pub fn phi_inverse(x: &ParkingFunction) -> Result<PhiInverse> {
    let n = x.n();
    let mut b = Builder {
        n,
        y: x.entries().iter().map(|&e| e as i64 - 1).collect(),
        kinds: vec![None; pair_count(n)],
        trace: AlgorithmTrace::default(),
    };
    loop {
        if let Some(feeder) = (1..=n).rev().find(|&k| b.y(k) == 0) {
            b.up_step(feeder)?;
        } else if b.y.iter().any(|&v| v > 0) {
            b.down_step()?;
        } else {
            b.finalize();
            break;
        }
    }

    let mut sorted: Vec<i64> = b.y.iter().map(|v| -v).collect();
    sorted.sort_unstable();
    if sorted != (1..=n as i64).collect::<Vec<_>>() {
        return Err(Error::AlgorithmInvariant(format!(
            "terminal y {:?} is not a permutation of -1..-{n}",
            b.y
        )));
    }

    let kinds: Vec<EdgeKind> = b.kinds.into_iter().map(|k| k.expect("finalized")).collect();
    let graph = MixedGraph::new(PairMap::from_values(n, kinds).expect("one kind per pair"))?;
    let degrees = in_degrees_mixed(&graph);
    if degrees.iter().zip(x.entries()).any(|(&d, &e)| d + 1 != e) {
        return Err(Error::AlgorithmInvariant(format!(
            "constructed in-degrees {degrees:?} do not match {x}"
        )));
    }
    let graph =
        check_source_sink(&graph).map_err(|v| Error::AlgorithmInvariant(format!("constructed graph fails: {v}")))?;
    Ok(PhiInverse {
        graph,
        priority: SourcePriorityVector { values: b.y },
        trace: b.trace,
    })
}

/// Region of a parking graph with a verified interior witness.
pub fn psi(p: &ParkingGraph) -> Result<(RegionSignVector, Witness<crate::Rational>)> {
    psi_in::<crate::Rational>(p)
}

pub fn psi_in<T: Scalar>(p: &ParkingGraph) -> Result<(RegionSignVector, Witness<T>)> {
    let sv = sign_vector_of_graph(p);
    match feasible_interior(&system_of_sign_vector::<T>(&sv)) {
        Ok(w) => Ok((sv, w)),
        Err(cert) => Err(Error::Invariant(format!(
            "parking graph {} maps to an empty region: {cert}",
            p.graph()
        ))),
    }
}

/// Parking graph of a region given by its sign vector.
pub fn psi_inverse(sv: &RegionSignVector) -> Result<ParkingGraph> {
    feasible_interior(&system_of_sign_vector::<crate::Rational>(sv))
        .map_err(|cert| Error::Infeasible(cert.to_string()))?;
    certify(graph_of_sign_vector(sv))
}

/// Parking graph of the region containing a point off every hyperplane.
pub fn psi_inverse_point<T: Scalar>(p: &Point<T>) -> Result<ParkingGraph> {
    let sv = sign_vector_of_point(p)?;
    certify(graph_of_sign_vector(&sv))
}

fn certify(g: MixedGraph) -> Result<ParkingGraph> {
    check_source_sink(&g).map_err(|v| Error::Invariant(format!("region maps to a non-parking graph {g}: {v}")))
}

/// Pak-Stanley label of a region: `phi(psi_inverse(region))`.
pub fn pak_stanley_label(sv: &RegionSignVector) -> Result<ParkingFunction> {
    Ok(phi(&psi_inverse(sv)?))
}

pub fn pak_stanley_label_of_point<T: Scalar>(p: &Point<T>) -> Result<ParkingFunction> {
    Ok(phi(&psi_inverse_point(p)?))
}
