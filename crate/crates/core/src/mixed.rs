//! Complete mixed graphs on `[n]`, their associated digraphs and the
//! source-sink condition.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::pairs::{pair_count, Odometer, PairMap};
use crate::parallel::run_partitioned;

/// Largest `n` accepted by [`enumerate_parking_graphs`].
pub const DEFAULT_GRAPH_CAP: usize = 6;

/// Kind of the edge on a pair `j < k`.
///
/// The declaration order `Up < Downish < Down` is the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// `j -> k`
    Up,
    /// undirected `jk`, oriented `k -> j` in the associated digraph
    Downish,
    /// `j <- k`
    Down,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 3] = [EdgeKind::Up, EdgeKind::Downish, EdgeKind::Down];

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Up => "up",
            EdgeKind::Downish => "downish",
            EdgeKind::Down => "down",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "up" => Some(EdgeKind::Up),
            "downish" => Some(EdgeKind::Downish),
            "down" => Some(EdgeKind::Down),
            _ => None,
        }
    }

    /// Arc `(tail, head)` this kind contributes to the associated digraph.
    pub fn arc(self, j: usize, k: usize) -> (usize, usize) {
        match self {
            EdgeKind::Up => (j, k),
            EdgeKind::Downish | EdgeKind::Down => (k, j),
        }
    }
}

/// A mixed graph whose underlying graph is `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedGraph {
    kinds: PairMap<EdgeKind>,
}

impl MixedGraph {
    pub fn new(kinds: PairMap<EdgeKind>) -> Result<Self> {
        if kinds.n() == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(Self { kinds })
    }

    /// Builds from kinds listed in canonical pair order.
    pub fn from_kinds(n: usize, kinds: Vec<EdgeKind>) -> Result<Self> {
        let found = kinds.len();
        let map = PairMap::from_values(n, kinds).ok_or(Error::LengthMismatch {
            expected: pair_count(n),
            found,
        })?;
        Self::new(map)
    }

    pub fn uniform(n: usize, kind: EdgeKind) -> Self {
        assert!(n >= 1);
        Self {
            kinds: PairMap::from_fn(n, |_, _| kind),
        }
    }

    /// Starts from an all-`Downish` graph and overrides the listed pairs.
    pub fn with_edges(n: usize, edges: &[(usize, usize, EdgeKind)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let mut g = Self::uniform(n, EdgeKind::Downish);
        for &(j, k, kind) in edges {
            if !(1 <= j && j < k && k <= n) {
                return Err(Error::Malformed(format!("pair ({j},{k}) is not 1 <= j < k <= {n}")));
            }
            g.kinds.set(j, k, kind);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.kinds.n()
    }

    pub fn kind(&self, j: usize, k: usize) -> EdgeKind {
        *self.kinds.get(j, k)
    }

    pub fn kinds(&self) -> &PairMap<EdgeKind> {
        &self.kinds
    }

    /// Arc between two distinct vertices in the associated digraph, as `(tail, head)`.
    fn arc_between(&self, a: usize, b: usize) -> (usize, usize) {
        let (j, k) = if a < b { (a, b) } else { (b, a) };
        self.kind(j, k).arc(j, k)
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, ((j, k), kind)) in self.kinds.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{j}{k}: {}", kind.as_str())?;
        }
        write!(f, "}}")
    }
}

/// A mixed graph certified to satisfy the source-sink condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingGraph(MixedGraph);

impl ParkingGraph {
    pub fn graph(&self) -> &MixedGraph {
        &self.0
    }

    pub fn into_graph(self) -> MixedGraph {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn kind(&self, j: usize, k: usize) -> EdgeKind {
        self.0.kind(j, k)
    }
}

impl std::ops::Deref for ParkingGraph {
    type Target = MixedGraph;

    fn deref(&self) -> &MixedGraph {
        &self.0
    }
}

impl TryFrom<MixedGraph> for ParkingGraph {
    type Error = Violation;

    fn try_from(g: MixedGraph) -> Result<Self, Violation> {
        check_source_sink(&g)
    }
}

/// A plain digraph on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        Self { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, head) in &self.arcs {
            deg[head - 1] += 1;
        }
        deg
    }

    /// Kahn's algorithm: acyclic iff every vertex gets removed.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = self.in_degrees();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(tail, head) in &self.arcs {
            out[tail - 1].push(head - 1);
        }
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        removed == self.n
    }
}

/// The associated digraph: every downish edge `jk` becomes `j <- k`.
pub fn orient(g: &MixedGraph) -> Digraph {
    Digraph {
        n: g.n(),
        arcs: g.kinds.iter().map(|((j, k), kind)| kind.arc(j, k)).collect(),
    }
}

/// In-degrees counting only the directed (up and down) edges.
pub fn in_degrees_mixed(g: &MixedGraph) -> Vec<usize> {
    let mut deg = vec![0; g.n()];
    for ((j, k), kind) in g.kinds.iter() {
        match kind {
            EdgeKind::Up => deg[k - 1] += 1,
            EdgeKind::Down => deg[j - 1] += 1,
            EdgeKind::Downish => {}
        }
    }
    deg
}

pub fn in_degrees_oriented(g: &MixedGraph) -> Vec<usize> {
    orient(g).in_degrees()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// The triangle is a coherently oriented 3-cycle.
    Cycle,
    /// The triangle has a down and a downish edge, and its source and sink are
    /// joined by a downish edge.
    DownishSourceSink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Triangle vertices, increasing.
    pub vertices: (usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.vertices;
        match self.kind {
            ViolationKind::Cycle => write!(f, "triangle {{{a},{b},{c}}} is a directed cycle"),
            ViolationKind::DownishSourceSink => write!(
                f,
                "triangle {{{a},{b},{c}}} has a downish edge between its source and sink"
            ),
        }
    }
}

impl std::error::Error for Violation {}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::SourceSink(v)
    }
}

fn triangle_violation(g: &MixedGraph, a: usize, b: usize, c: usize) -> Option<ViolationKind> {
    let verts = [a, b, c];
    let mut indeg = [0usize; 3];
    for (x, y) in [(0, 1), (0, 2), (1, 2)] {
        let (_, head) = g.arc_between(verts[x], verts[y]);
        let slot = if head == verts[x] { x } else { y };
        indeg[slot] += 1;
    }
    if indeg == [1, 1, 1] {
        return Some(ViolationKind::Cycle);
    }
    let kinds = [g.kind(a, b), g.kind(a, c), g.kind(b, c)];
    let mixed = kinds.contains(&EdgeKind::Down) && kinds.contains(&EdgeKind::Downish);
    if !mixed {
        return None;
    }
    let source = verts[indeg.iter().position(|&d| d == 0)?];
    let sink = verts[indeg.iter().position(|&d| d == 2)?];
    let (lo, hi) = if source < sink { (source, sink) } else { (sink, source) };
    (g.kind(lo, hi) == EdgeKind::Downish).then_some(ViolationKind::DownishSourceSink)
}

fn triangles(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n).flat_map(move |a| (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| (a, b, c))))
}

/// True iff no triangle of the associated digraph is a directed 3-cycle.
pub fn is_acyclic_by_triangles(g: &MixedGraph) -> bool {
    triangles(g.n()).all(|(a, b, c)| {
        let ab = g.arc_between(a, b);
        let bc = g.arc_between(b, c);
        let ca = g.arc_between(c, a);
        let forward = ab == (a, b) && bc == (b, c) && ca == (c, a);
        let backward = ab == (b, a) && bc == (c, b) && ca == (a, c);
        !(forward || backward)
    })
}

/// Every offending triangle, in lexicographic order.
pub fn source_sink_violations(g: &MixedGraph) -> Vec<Violation> {
    triangles(g.n())
        .filter_map(|(a, b, c)| {
            triangle_violation(g, a, b, c).map(|kind| Violation {
                kind,
                vertices: (a, b, c),
            })
        })
        .collect()
}

/// Certifies `g` as a parking graph or reports the lexicographically least
/// offending triangle.
pub fn check_source_sink(g: &MixedGraph) -> Result<ParkingGraph, Violation> {
    for (a, b, c) in triangles(g.n()) {
        if let Some(kind) = triangle_violation(g, a, b, c) {
            return Err(Violation {
                kind,
                vertices: (a, b, c),
            });
        }
    }
    Ok(ParkingGraph(g.clone()))
}

fn graph_of_digits(n: usize, digits: Vec<usize>) -> MixedGraph {
    MixedGraph {
        kinds: PairMap::from_values(n, digits.into_iter().map(|d| EdgeKind::ALL[d]).collect())
            .expect("odometer length matches pair count"),
    }
}

/// Every mixed graph on `[n]` in enumeration order (Up < Downish < Down,
/// first canonical pair most significant).
pub fn all_mixed_graphs(n: usize) -> impl Iterator<Item = MixedGraph> {
    Odometer::new(pair_count(n), 3).map(move |d| graph_of_digits(n, d))
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

pub fn enumerate_parking_graphs(n: usize) -> Result<impl Iterator<Item = ParkingGraph>> {
    enumerate_parking_graphs_capped(n, DEFAULT_GRAPH_CAP)
}

pub fn enumerate_parking_graphs_capped(n: usize, cap: usize) -> Result<impl Iterator<Item = ParkingGraph>> {
    check_cap(n, cap)?;
    Ok(all_mixed_graphs(n).filter_map(|g| check_source_sink(&g).ok()))
}

/// Same output as [`enumerate_parking_graphs`], partitioned by the kind of the
/// first pair.
pub fn par_enumerate_parking_graphs(n: usize, jobs: usize) -> Result<Vec<ParkingGraph>> {
    check_cap(n, DEFAULT_GRAPH_CAP)?;
    let m = pair_count(n);
    let prefixes: Vec<Vec<usize>> = if m == 0 {
        vec![vec![]]
    } else {
        (0..3).map(|d| vec![d]).collect()
    };
    run_partitioned(prefixes, jobs, |prefix| {
        Odometer::with_prefix(m, 3, prefix)
            .map(|d| graph_of_digits(n, d))
            .filter_map(|g| check_source_sink(&g).ok())
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeKind::*;

    fn coherent_triangle() -> MixedGraph {
        MixedGraph::with_edges(3, &[(1, 2, Down), (1, 3, Up), (2, 3, Downish)]).unwrap()
    }

    fn worked_example() -> MixedGraph {
        MixedGraph::with_edges(
            4,
            &[
                (1, 2, Downish),
                (1, 3, Down),
                (1, 4, Down),
                (2, 3, Downish),
                (2, 4, Downish),
                (3, 4, Up),
            ],
        )
        .unwrap()
    }

    /// Same in-degrees as the worked example, but broken in two triangles.
    fn rejected_twin() -> MixedGraph {
        MixedGraph::with_edges(
            4,
            &[
                (1, 2, Downish),
                (1, 3, Down),
                (1, 4, Down),
                (2, 3, Downish),
                (2, 4, Up),
                (3, 4, Downish),
            ],
        )
        .unwrap()
    }

    #[test]
    fn orient_examples() {
        let mut arcs = orient(&coherent_triangle()).arcs().to_vec();
        arcs.sort();
        assert_eq!(arcs, vec![(1, 3), (2, 1), (3, 2)]);
        assert!(!orient(&coherent_triangle()).is_acyclic());

        let mut arcs = orient(&MixedGraph::uniform(3, Downish)).arcs().to_vec();
        arcs.sort();
        assert_eq!(arcs, vec![(2, 1), (3, 1), (3, 2)]);

        let mut arcs = orient(&MixedGraph::uniform(3, Up)).arcs().to_vec();
        arcs.sort();
        assert_eq!(arcs, vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(in_degrees_mixed(&worked_example()), vec![2, 0, 0, 1]);
        assert_eq!(in_degrees_mixed(&MixedGraph::uniform(5, Downish)), vec![0; 5]);
        assert_eq!(in_degrees_mixed(&MixedGraph::uniform(3, Down)), vec![2, 1, 0]);

        assert_eq!(in_degrees_oriented(&MixedGraph::uniform(3, Downish)), vec![2, 1, 0]);
        assert_eq!(in_degrees_oriented(&coherent_triangle()), vec![1, 1, 1]);
        let mut d = in_degrees_oriented(&worked_example());
        d.sort();
        assert_eq!(d, vec![0, 1, 2, 3]);
    }

    #[test]
    fn triangle_acyclicity() {
        assert!(!is_acyclic_by_triangles(&coherent_triangle()));
        assert!(is_acyclic_by_triangles(&MixedGraph::uniform(4, Up)));
    }

    #[test]
    fn source_sink_examples() {
        let all = source_sink_violations(&rejected_twin());
        assert_eq!(
            all,
            vec![
                Violation {
                    kind: ViolationKind::DownishSourceSink,
                    vertices: (1, 2, 4)
                },
                Violation {
                    kind: ViolationKind::Cycle,
                    vertices: (2, 3, 4)
                },
            ]
        );
        assert_eq!(check_source_sink(&rejected_twin()).unwrap_err(), all[0]);
        assert_eq!(in_degrees_mixed(&rejected_twin()), vec![2, 0, 0, 1]);

        for n in 1..6 {
            assert!(check_source_sink(&MixedGraph::uniform(n, Downish)).is_ok());
        }
        assert!(check_source_sink(&worked_example()).is_ok());
        assert_eq!(
            check_source_sink(&coherent_triangle()).unwrap_err().kind,
            ViolationKind::Cycle
        );
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_parking_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_parking_graphs(2).unwrap().count(), 3);
        assert_eq!(all_mixed_graphs(3).count(), 27);
        assert_eq!(enumerate_parking_graphs(3).unwrap().count(), 16);
        assert_eq!(enumerate_parking_graphs(4).unwrap().count(), 125);
        assert!(matches!(
            enumerate_parking_graphs(7).err(),
            Some(Error::CapExceeded { n: 7, cap: 6 })
        ));
    }

    #[test]
    fn triangle_check_matches_topological_sort() {
        for n in 1..=5 {
            for g in all_mixed_graphs(n) {
                assert_eq!(is_acyclic_by_triangles(&g), orient(&g).is_acyclic(), "{g}");
            }
        }
    }

    #[test]
    fn degree_invariants() {
        for n in 1..=5 {
            for g in all_mixed_graphs(n) {
                let mixed = in_degrees_mixed(&g);
                let oriented = in_degrees_oriented(&g);
                assert!(mixed.iter().zip(&oriented).all(|(m, o)| m <= o));
                if check_source_sink(&g).is_ok() {
                    let mut sorted = oriented.clone();
                    sorted.sort();
                    assert_eq!(sorted, (0..n).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn parallel_order_is_stable() {
        for n in 1..=4 {
            let seq: Vec<_> = enumerate_parking_graphs(n).unwrap().collect();
            assert_eq!(par_enumerate_parking_graphs(n, 4).unwrap(), seq);
        }
    }
}
