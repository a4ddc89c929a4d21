//! Labeled trees, Prüfer codes and the Pollak/Foata-Riordan correspondence
//! with parking functions.
//!
//! A Pollak residue `r` in `0..=n` is identified with the tree label `r + 1`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::pf::{check_by_sort, ParkingFunction};

/// A tree on the vertex labels `1..=n_vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    n_vertices: usize,
    /// Normalized as `(a, b)` with `a < b`.
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledTree {
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n_vertices < 2 {
            return Err(Error::InvalidTree(format!(
                "need at least 2 vertices, got {n_vertices}"
            )));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n_vertices || b > n_vertices {
                return Err(Error::InvalidTree(format!("bad edge {a}-{b}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidTree(format!("duplicate edge {a}-{b}")));
            }
        }
        if set.len() != n_vertices - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges on {n_vertices} vertices",
                set.len()
            )));
        }
        // n - 1 edges and connected implies acyclic
        let mut parent: Vec<usize> = (0..=n_vertices).collect();
        fn root(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(a, b) in &set {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidTree(format!("edge {a}-{b} closes a cycle")));
            }
            parent[ra] = rb;
        }
        Ok(Self { n_vertices, edges: set })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}

/// Prüfer code of a tree on `n_vertices` labels: length `n_vertices - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferCode {
    n_vertices: usize,
    labels: Vec<usize>,
}

impl PruferCode {
    pub fn new(n_vertices: usize, labels: Vec<usize>) -> Result<Self> {
        if n_vertices < 2 || labels.len() != n_vertices - 2 {
            return Err(Error::InvalidCode(format!(
                "a Prüfer code for {n_vertices} vertices has length {}, got {}",
                n_vertices.saturating_sub(2),
                labels.len()
            )));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > n_vertices) {
            return Err(Error::InvalidCode(format!("label {bad} outside 1..={n_vertices}")));
        }
        Ok(Self { n_vertices, labels })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

/// Consecutive differences of a parking function of length `n`, mod `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PollakCode {
    n: usize,
    residues: Vec<usize>,
}

impl PollakCode {
    pub fn new(n: usize, residues: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        if residues.len() != n - 1 {
            return Err(Error::InvalidCode(format!(
                "a Pollak code for n = {n} has length {}, got {}",
                n - 1,
                residues.len()
            )));
        }
        if let Some(&bad) = residues.iter().find(|&&r| r > n) {
            return Err(Error::InvalidCode(format!("residue {bad} outside 0..={n}")));
        }
        Ok(Self { n, residues })
    }

    /// `n` is recovered as `len + 1`.
    pub fn from_residues(residues: Vec<usize>) -> Result<Self> {
        Self::new(residues.len() + 1, residues)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    /// Residue `r` becomes label `r + 1` on `n + 1` vertices.
    pub fn to_prufer(&self) -> PruferCode {
        PruferCode {
            n_vertices: self.n + 1,
            labels: self.residues.iter().map(|r| r + 1).collect(),
        }
    }

    pub fn from_prufer(code: &PruferCode) -> Self {
        Self {
            n: code.n_vertices - 1,
            residues: code.labels.iter().map(|l| l - 1).collect(),
        }
    }
}

/// Repeatedly records the neighbour of the lowest-labeled leaf and deletes
/// the leaf, until a single edge is left.
pub fn prufer_encode(t: &LabeledTree) -> PruferCode {
    let nv = t.n_vertices;
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nv + 1];
    for (a, b) in t.edges() {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=nv).filter(|&v| adj[v].len() == 1).map(Reverse).collect();
    let mut labels = Vec::with_capacity(nv - 2);
    while labels.len() < nv - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree with 3+ vertices has a leaf");
        let neighbour = *adj[leaf].iter().next().expect("leaf has a neighbour");
        labels.push(neighbour);
        adj[neighbour].remove(&leaf);
        adj[leaf].clear();
        if adj[neighbour].len() == 1 {
            leaves.push(Reverse(neighbour));
        }
    }
    PruferCode { n_vertices: nv, labels }
}

pub fn prufer_decode(c: &PruferCode) -> LabeledTree {
    let nv = c.n_vertices;
    let mut deg = vec![1usize; nv + 1];
    for &l in &c.labels {
        deg[l] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=nv).filter(|&v| deg[v] == 1).map(Reverse).collect();
    let mut edges = BTreeSet::new();
    for &l in &c.labels {
        let Reverse(leaf) = leaves.pop().expect("code leaves a leaf available");
        edges.insert((leaf.min(l), leaf.max(l)));
        deg[leaf] -= 1;
        deg[l] -= 1;
        if deg[l] == 1 {
            leaves.push(Reverse(l));
        }
    }
    let last: Vec<usize> = (1..=nv).filter(|&v| deg[v] == 1).collect();
    debug_assert_eq!(last.len(), 2);
    edges.insert((last[0], last[1]));
    LabeledTree { n_vertices: nv, edges }
}

/// `(x_2 - x_1, ..., x_n - x_{n-1}) mod (n + 1)`.
pub fn pollak(x: &ParkingFunction) -> PollakCode {
    let n = x.n();
    let m = (n + 1) as i64;
    let residues = x
        .entries()
        .windows(2)
        .map(|w| (w[1] as i64 - w[0] as i64).rem_euclid(m) as usize)
        .collect();
    PollakCode { n, residues }
}

/// Every candidate first entry `x_1` in `1..=n+1` with its reconstructed sequence.
pub fn pollak_candidates(c: &PollakCode) -> Vec<Vec<usize>> {
    let n = c.n;
    let m = n + 1;
    (1..=m)
        .map(|x1| {
            let mut v = x1 - 1;
            let mut seq = vec![x1];
            for &r in &c.residues {
                v = (v + r) % m;
                seq.push(v + 1);
            }
            seq
        })
        .collect()
}

/// The unique parking function with the given Pollak code.
pub fn pollak_inverse(c: &PollakCode) -> Result<ParkingFunction> {
    let parking: Vec<Vec<usize>> = pollak_candidates(c)
        .into_iter()
        .filter(|seq| {
            let raw: Vec<i64> = seq.iter().map(|&e| e as i64).collect();
            check_by_sort(&raw).unwrap_or(false)
        })
        .collect();
    match parking.as_slice() {
        [only] => ParkingFunction::new(only.clone()),
        _ => Err(Error::Invariant(format!(
            "{} candidate first entries park for code {:?}, expected exactly one",
            parking.len(),
            c.residues
        ))),
    }
}

pub fn tree_of_parking_function(x: &ParkingFunction) -> LabeledTree {
    prufer_decode(&pollak(x).to_prufer())
}

pub fn parking_function_of_tree(t: &LabeledTree) -> Result<ParkingFunction> {
    pollak_inverse(&PollakCode::from_prufer(&prufer_encode(t)))
}

/// Every Prüfer code on `n_vertices` labels, lexicographic.
pub fn all_prufer_codes(n_vertices: usize) -> impl Iterator<Item = PruferCode> {
    crate::pairs::Odometer::new(n_vertices.saturating_sub(2), n_vertices).map(move |d| PruferCode {
        n_vertices,
        labels: d.into_iter().map(|v| v + 1).collect(),
    })
}

/// Every Pollak code for length-`n` parking functions, lexicographic.
pub fn all_pollak_codes(n: usize) -> impl Iterator<Item = PollakCode> {
    crate::pairs::Odometer::new(n.saturating_sub(1), n + 1).map(move |d| PollakCode { n, residues: d })
}
