//! Conversions along the chain region - graph - pf - code - tree.

use clap::ValueEnum;
use serde_json::Value;
use shi_parking::cayley::{prufer_decode, prufer_encode, LabeledTree, PollakCode};
use shi_parking::geometry::{feasible_interior, system_of_sign_vector};
use shi_parking::json::{
    canonical, code_from_json, code_to_json, graph_from_json, graph_to_json, pf_from_json, pf_to_json,
    region_from_json, region_to_json, trace_to_json, tree_from_json, tree_to_json,
};
use shi_parking::mixed::check_source_sink;
use shi_parking::{
    cayley, phi, phi_inverse, psi, psi_inverse, Error, ParkingFunction, ParkingGraph, Rational, RationalWitness,
    RegionSignVector,
};

use crate::{parse_sequence, Failure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Kind {
    Region,
    Graph,
    Pf,
    Code,
    Tree,
}

enum Object {
    Region(RegionSignVector, RationalWitness),
    Graph(ParkingGraph),
    Pf(ParkingFunction),
    Code(PollakCode),
    Tree(LabeledTree),
}

impl Object {
    fn kind(&self) -> Kind {
        match self {
            Object::Region(..) => Kind::Region,
            Object::Graph(_) => Kind::Graph,
            Object::Pf(_) => Kind::Pf,
            Object::Code(_) => Kind::Code,
            Object::Tree(_) => Kind::Tree,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Object::Region(sv, w) => region_to_json(sv, Some(w)),
            Object::Graph(g) => graph_to_json(g),
            Object::Pf(x) => pf_to_json(x),
            Object::Code(c) => code_to_json(c),
            Object::Tree(t) => tree_to_json(t),
        }
    }
}

fn parse(text: &str, kind: Kind) -> Result<Object, Failure> {
    Ok(match kind {
        Kind::Region => {
            let sv = region_from_json(text)?;
            let w = feasible_interior(&system_of_sign_vector::<Rational>(&sv))
                .map_err(|cert| Error::Infeasible(cert.to_string()))?;
            Object::Region(sv, w)
        }
        Kind::Graph => Object::Graph(check_source_sink(&graph_from_json(text)?).map_err(Error::from)?),
        Kind::Pf => {
            if text.trim().starts_with('{') {
                Object::Pf(pf_from_json(text)?)
            } else {
                Object::Pf(ParkingFunction::from_signed(&parse_sequence(text)?)?)
            }
        }
        Kind::Code => Object::Code(code_from_json(text)?),
        Kind::Tree => Object::Tree(tree_from_json(text)?),
    })
}

/// One step toward `target`; the trace is recorded when `phi_inverse` runs.
fn step(obj: Object, target: Kind, trace: &mut Option<Value>) -> Result<Object, Failure> {
    let forward = target > obj.kind();
    Ok(match (obj, forward) {
        (Object::Region(sv, _), true) => Object::Graph(psi_inverse(&sv)?),
        (Object::Graph(g), true) => Object::Pf(phi(&g)),
        (Object::Graph(g), false) => {
            let (sv, w) = psi(&g)?;
            Object::Region(sv, w)
        }
        (Object::Pf(x), true) => Object::Code(cayley::pollak(&x)),
        (Object::Pf(x), false) => {
            let out = phi_inverse(&x)?;
            *trace = Some(trace_to_json(&out.trace, &out.priority));
            Object::Graph(out.graph)
        }
        (Object::Code(c), true) => Object::Tree(prufer_decode(&c.to_prufer())),
        (Object::Code(c), false) => Object::Pf(cayley::pollak_inverse(&c)?),
        (Object::Tree(t), false) => Object::Code(PollakCode::from_prufer(&prufer_encode(&t))),
        (Object::Region(..), false) | (Object::Tree(_), true) => unreachable!("no step past the ends of the chain"),
    })
}

/// Canonical JSON of the `to` object corresponding to the `from` object in `text`.
pub fn convert(text: &str, from: Kind, to: Kind, with_trace: bool) -> Result<String, Failure> {
    let mut obj = parse(text, from)?;
    let mut trace = None;
    while obj.kind() != to {
        obj = step(obj, to, &mut trace)?;
    }
    let mut out = obj.to_json();
    if let (true, Some(t), Value::Object(map)) = (with_trace, trace, &mut out) {
        map.insert("trace".into(), t);
    }
    Ok(canonical(&out))
}
