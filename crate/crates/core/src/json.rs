//! Canonical JSON forms of every object family.
//!
//! Output is compact with keys sorted, and rationals in lowest terms, so equal
//! objects always serialize to identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bijection::{AlgorithmTrace, SourcePriorityVector, TraceEvent};
use crate::cayley::{LabeledTree, PollakCode};
use crate::error::{Error, Result};
use crate::geometry::{sign_vector_of_point, Point, RegionSignVector, Sign, Witness};
use crate::mixed::{EdgeKind, MixedGraph};
use crate::pairs::{pair_count, pair_index, PairMap};
use crate::pf::ParkingFunction;
use crate::scalar::Scalar;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PfJson {
    n: usize,
    pf: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    j: usize,
    k: usize,
    kind: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<EdgeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SignJson {
    j: usize,
    k: usize,
    s: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointJson {
    coords: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegionJson {
    n: usize,
    signs: Vec<SignJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<PointJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeJson {
    n_vertices: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeJson {
    code: Vec<usize>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

fn value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

/// Compact, key-sorted serialization.
pub fn canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

pub fn pf_to_json(x: &ParkingFunction) -> Value {
    value(&PfJson {
        n: x.n(),
        pf: x.entries().iter().map(|&e| e as i64).collect(),
    })
}

/// A preference sequence from pf JSON, not yet checked for parking.
pub fn sequence_from_json(text: &str) -> Result<Vec<i64>> {
    let raw: PfJson = parse(text)?;
    if raw.pf.len() != raw.n {
        return Err(Error::LengthMismatch {
            expected: raw.n,
            found: raw.pf.len(),
        });
    }
    Ok(raw.pf)
}

pub fn pf_from_json(text: &str) -> Result<ParkingFunction> {
    ParkingFunction::from_signed(&sequence_from_json(text)?)
}

/// Fills a pair table from `(j, k, value)` records, requiring every pair exactly once.
fn pair_table<V: Copy>(n: usize, records: impl IntoIterator<Item = (usize, usize, V)>) -> Result<PairMap<V>> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let mut slots: Vec<Option<V>> = vec![None; pair_count(n)];
    for (j, k, v) in records {
        if !(1 <= j && j < k && k <= n) {
            return Err(Error::Malformed(format!("pair ({j},{k}) is not 1 <= j < k <= {n}")));
        }
        let slot = &mut slots[pair_index(n, j, k)];
        if slot.is_some() {
            return Err(Error::Malformed(format!("pair ({j},{k}) listed twice")));
        }
        *slot = Some(v);
    }
    let values: Option<Vec<V>> = slots.into_iter().collect();
    let values =
        values.ok_or_else(|| Error::Malformed(format!("every one of the {} pairs must be listed", pair_count(n))))?;
    Ok(PairMap::from_values(n, values).expect("length checked"))
}

pub fn graph_to_json(g: &MixedGraph) -> Value {
    value(&GraphJson {
        n: g.n(),
        edges: g
            .kinds()
            .iter()
            .map(|((j, k), kind)| EdgeJson {
                j,
                k,
                kind: kind.as_str().to_string(),
            })
            .collect(),
    })
}

pub fn graph_from_json(text: &str) -> Result<MixedGraph> {
    let raw: GraphJson = parse(text)?;
    let mut records = Vec::with_capacity(raw.edges.len());
    for e in raw.edges {
        let kind =
            EdgeKind::parse(&e.kind).ok_or_else(|| Error::Malformed(format!("unknown edge kind {:?}", e.kind)))?;
        records.push((e.j, e.k, kind));
    }
    MixedGraph::new(pair_table(raw.n, records)?)
}

pub fn point_to_json<T: Scalar>(p: &Point<T>) -> Value {
    value(&point_json(p))
}

fn point_json<T: Scalar>(p: &Point<T>) -> PointJson {
    PointJson {
        coords: p.coords().iter().map(|c| c.to_string()).collect(),
    }
}

fn point_of_json<T: Scalar>(raw: &PointJson) -> Result<Point<T>> {
    if raw.coords.is_empty() {
        return Err(Error::ZeroLength);
    }
    let coords = raw.coords.iter().map(|s| T::parse(s)).collect::<Result<Vec<T>>>()?;
    Ok(Point::new(coords))
}

pub fn point_from_json<T: Scalar>(text: &str) -> Result<Point<T>> {
    point_of_json(&parse::<PointJson>(text)?)
}

pub fn region_to_json<T: Scalar>(sv: &RegionSignVector, witness: Option<&Witness<T>>) -> Value {
    value(&RegionJson {
        n: sv.n(),
        signs: sv
            .signs()
            .iter()
            .map(|((j, k), s)| SignJson {
                j,
                k,
                s: s.as_str().to_string(),
            })
            .collect(),
        witness: witness.map(|w| point_json(w.point())),
    })
}

/// Parses a region; a supplied witness must lie inside the listed region.
pub fn region_from_json(text: &str) -> Result<RegionSignVector> {
    let raw: RegionJson = parse(text)?;
    let mut records = Vec::with_capacity(raw.signs.len());
    for s in &raw.signs {
        let sign = Sign::parse(&s.s).ok_or_else(|| Error::Malformed(format!("unknown sign {:?}", s.s)))?;
        records.push((s.j, s.k, sign));
    }
    let sv = RegionSignVector::new(pair_table(raw.n, records)?)?;
    if let Some(w) = &raw.witness {
        let p = point_of_json::<crate::Rational>(w)?;
        if p.n() != sv.n() || sign_vector_of_point(&p)? != sv {
            return Err(Error::Malformed(format!("witness {p} is not inside the region")));
        }
    }
    Ok(sv)
}

pub fn tree_to_json(t: &LabeledTree) -> Value {
    value(&TreeJson {
        n_vertices: t.n_vertices(),
        edges: t.edges().map(|(a, b)| [a, b]).collect(),
    })
}

pub fn tree_from_json(text: &str) -> Result<LabeledTree> {
    let raw: TreeJson = parse(text)?;
    LabeledTree::new(raw.n_vertices, raw.edges.into_iter().map(|[a, b]| (a, b)))
}

pub fn code_to_json(c: &PollakCode) -> Value {
    value(&CodeJson {
        code: c.residues().to_vec(),
    })
}

pub fn code_from_json(text: &str) -> Result<PollakCode> {
    let raw: CodeJson = parse(text)?;
    PollakCode::from_residues(raw.code)
}

pub fn trace_to_json(trace: &AlgorithmTrace, s: &SourcePriorityVector) -> Value {
    let events: Vec<Value> = trace
        .events
        .iter()
        .map(|e| match e {
            TraceEvent::Up { feeder, targets } => {
                serde_json::json!({"type": "up", "feeder": feeder, "targets": targets})
            }
            TraceEvent::Down { feeder, targets, .. } => {
                serde_json::json!({"type": "down", "feeder": feeder, "targets": targets})
            }
            TraceEvent::Finalize { downish } => {
                let pairs: Vec<[usize; 2]> = downish.iter().map(|&(j, k)| [j, k]).collect();
                serde_json::json!({"type": "finalize", "pairs": pairs})
            }
        })
        .collect();
    serde_json::json!({"events": events, "s": s.values()})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::phi_inverse;
    use crate::Rational;

    #[test]
    fn pf_form() {
        let x = ParkingFunction::new(vec![3, 1, 1, 2]).unwrap();
        assert_eq!(canonical(&pf_to_json(&x)), r#"{"n":4,"pf":[3,1,1,2]}"#);
        assert_eq!(pf_from_json(r#"{"n": 4, "pf": [3,1,1,2]}"#).unwrap(), x);
        assert!(matches!(
            pf_from_json(r#"{"n": 3, "pf": [1,1]}"#),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        ));
        assert!(pf_from_json(r#"{"n": 2, "pf": [1,1], "extra": 0}"#).is_err());
    }

    #[test]
    fn graph_form() {
        let g = MixedGraph::with_edges(3, &[(1, 3, EdgeKind::Down)]).unwrap();
        let text = canonical(&graph_to_json(&g));
        assert_eq!(
            text,
            r#"{"edges":[{"j":1,"k":2,"kind":"downish"},{"j":1,"k":3,"kind":"down"},{"j":2,"k":3,"kind":"downish"}],"n":3}"#
        );
        assert_eq!(graph_from_json(&text).unwrap(), g);
        // missing pair, reversed pair, duplicate pair, bad kind
        assert!(graph_from_json(r#"{"n":2,"edges":[]}"#).is_err());
        assert!(graph_from_json(r#"{"n":2,"edges":[{"j":2,"k":1,"kind":"up"}]}"#).is_err());
        assert!(graph_from_json(r#"{"n":2,"edges":[{"j":1,"k":2,"kind":"up"},{"j":1,"k":2,"kind":"up"}]}"#).is_err());
        assert!(graph_from_json(r#"{"n":2,"edges":[{"j":1,"k":2,"kind":"sideways"}]}"#).is_err());
    }

    #[test]
    fn region_and_point_forms() {
        let p: Point<Rational> = point_from_json(r#"{"coords":["12/10","1/2","0"]}"#).unwrap();
        assert_eq!(canonical(&point_to_json(&p)), r#"{"coords":["6/5","1/2","0"]}"#);
        let sv = sign_vector_of_point(&p).unwrap();
        let text = canonical(&region_to_json::<Rational>(&sv, None));
        assert_eq!(
            text,
            r#"{"n":3,"signs":[{"j":1,"k":2,"s":"between"},{"j":1,"k":3,"s":"above"},{"j":2,"k":3,"s":"between"}]}"#
        );
        assert_eq!(region_from_json(&text).unwrap(), sv);
        let wrong = r#"{"n":3,"signs":[{"j":1,"k":2,"s":"between"},{"j":1,"k":3,"s":"above"},{"j":2,"k":3,"s":"between"}],"witness":{"coords":["0","0","0"]}}"#;
        assert!(region_from_json(wrong).is_err());
        assert!(point_from_json::<Rational>(r#"{"coords":["1/0"]}"#).is_err());
    }

    #[test]
    fn tree_code_and_trace_forms() {
        let t = tree_from_json(r#"{"n_vertices":4,"edges":[[2,1],[2,3],[3,4]]}"#).unwrap();
        assert_eq!(
            canonical(&tree_to_json(&t)),
            r#"{"edges":[[1,2],[2,3],[3,4]],"n_vertices":4}"#
        );
        let c = code_from_json(r#"{"code":[0,0]}"#).unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(canonical(&code_to_json(&c)), r#"{"code":[0,0]}"#);

        let out = phi_inverse(&ParkingFunction::new(vec![3, 1, 1, 2]).unwrap()).unwrap();
        let text = canonical(&trace_to_json(&out.trace, &out.priority));
        assert!(text.starts_with(
            r#"{"events":[{"feeder":3,"targets":[4],"type":"up"},{"feeder":4,"targets":[],"type":"up"},"#
        ));
        assert!(text.ends_with(r#""s":[-1,-2,-4,-3]}"#));
    }
}
