//! JSON shapes of the command reports.

use serde_json::{json, Map, Value};
use twincover::{
    Determination, Int, JsjGraph, JsjPiece, KnotPresentation, LiftResult, SfsInvariants, TwoBridge,
};

pub const SCHEMA: &str = "twin-cover/1";

/// Integers are emitted as JSON numbers of any size.
pub fn int<I: Int>(n: &I) -> Value {
    serde_json::from_str(&n.to_string()).expect("integer literal is valid JSON")
}

fn text<T: ToString>(x: Option<&T>) -> Value {
    x.map_or(Value::Null, |x| Value::String(x.to_string()))
}

pub fn report(fields: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), SCHEMA.into());
    if let Value::Object(m) = fields {
        out.extend(m);
    }
    Value::Object(out)
}

pub fn cover<I: Int>(c: &SfsInvariants<I>) -> Value {
    let fibers: Vec<Value> = c.fibers.iter().map(|f| json!([int(&f.alpha), int(&f.beta)])).collect();
    json!({ "fibers": fibers, "euler": c.euler.to_string() })
}

/// The knot or link whose exterior the piece is built from.
pub fn piece_knot<I: Int>(p: &JsjPiece<I>) -> String {
    match p {
        JsjPiece::TwoBridgeExterior(t) => t.to_string(),
        JsjPiece::TorusExteriorDoubleCover(t) | JsjPiece::TorusKnotExterior(t) => t.to_string(),
    }
}

pub fn jsj<I: Int>(g: &JsjGraph<I>) -> Value {
    let pieces: Vec<Value> = g
        .pieces
        .iter()
        .map(|p| json!({ "kind": p.kind(), "knot": piece_knot(p) }))
        .collect();
    let edges: Vec<Value> = g.edges.iter().map(|(a, b)| json!([a, b])).collect();
    json!({ "pieces": pieces, "edges": edges })
}

pub fn determination<I: Int>(k: &KnotPresentation<I>, d: &Determination<I>) -> Value {
    let ev = &d.evidence;
    report(json!({
        "presentation": k.to_string(),
        "family": k.family(),
        "verdict": d.verdict.as_str(),
        "twin": text(d.twin.as_ref()),
        "twin_class": d.twin_class.map_or(Value::Null, |c| c.as_str().into()),
        "identified_as": text(d.identified_as.as_ref()),
        "condition": ev.tag.as_str(),
        "cover": ev.cover.as_ref().map_or(Value::Null, cover),
        "jsj": ev.jsj.as_ref().map_or(Value::Null, jsj),
        "no_tn1_twin": ev.no_tn1_twin,
    }))
}

pub fn pair<I: Int>(t: &TwoBridge<I>) -> Value {
    json!([int(t.alpha()), int(t.beta())])
}

pub fn lift<I: Int>(link: &TwoBridge<I>, l: &LiftResult<I>) -> Value {
    let coefficients: Vec<Value> = l.expansion.coefficients().iter().map(int).collect();
    report(json!({
        "link": pair(link),
        "lifted": pair(&l.lifted),
        "components": l.components,
        "linking_parity": l.linking_parity,
        "hyperbolic": l.hyperbolic,
        "cf": coefficients,
    }))
}
