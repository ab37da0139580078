//! Text and JSON formats for graphs, height vectors, descriptions and points.
//!
//! Rationals travel as strings (`"3/2"`, `"-1"`) so nothing passes through a
//! float. Subsets appear both as integer masks and as sorted vertex lists.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::defcone::{ConeDescription, ConeStats, FormTag, HeightVector, LinearForm};
use crate::error::{Error, Result};
use crate::graphcore::{Graph, SubsetMask, MAX_VERTICES};
use crate::polyoracle::PointedConeRep;
use crate::Rational;

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.to_string())
}

/// A graph from either `{"n": 4, "edges": [[0,1], ...]}` or an edge list
/// with one `u v` pair per line (`#` starts a comment; `n` is one more than
/// the largest label).
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}

fn parse_graph_json(text: &str) -> Result<Graph> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse(1, "expected a non-negative integer field \"n\""))?;
    let n = usize::try_from(n).map_err(|_| Error::parse(1, "n is too large"))?;
    if n > MAX_VERTICES {
        return Err(Error::too_large("graph vertex count", n, MAX_VERTICES));
    }
    let edges = v
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(1, "expected an array field \"edges\""))?;
    let mut pairs = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .and_then(|p| Some((p[0].as_u64()? as usize, p[1].as_u64()? as usize)))
            .ok_or_else(|| Error::parse(1, format!("edge {i} is not a pair of vertex labels")))?;
        pairs.push(pair);
    }
    Graph::new(n, pairs)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(Error::parse(i + 1, format!("expected \"u v\", got {line:?}")));
        };
        let label = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(i + 1, format!("{s:?} is not a vertex label")))
        };
        let (u, v) = (label(a)?, label(b)?);
        if u.max(v) >= MAX_VERTICES {
            return Err(Error::parse(
                i + 1,
                format!("vertex labels must be below {MAX_VERTICES}"),
            ));
        }
        if u == v {
            return Err(Error::parse(i + 1, format!("self-loop at vertex {u}")));
        }
        n = n.max(u.max(v) + 1);
        pairs.push((u, v));
    }
    Graph::new(n, pairs)
}

pub fn graph_to_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>() })
}

pub fn subset_to_json(s: SubsetMask) -> Value {
    Value::from(s.vertices().collect::<Vec<_>>())
}

/// `"[0,2]"` for the subset `{0, 2}`.
pub fn subset_key(s: SubsetMask) -> String {
    let labels: Vec<String> = s.vertices().map(|v| v.to_string()).collect();
    format!("[{}]", labels.join(","))
}

/// Accepts an integer mask (`"5"`) or a vertex list (`"[0,2]"`).
pub fn parse_subset_key(key: &str, n: usize) -> Result<SubsetMask> {
    let key = key.trim();
    let mask = if let Some(inner) = key.strip_prefix('[').and_then(|k| k.strip_suffix(']')) {
        let mut s = SubsetMask::EMPTY;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let v: usize = part
                .parse()
                .map_err(|_| Error::parse(1, format!("bad vertex {part:?} in subset key {key:?}")))?;
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if s.contains(v) {
                return Err(Error::parse(1, format!("repeated vertex in subset key {key:?}")));
            }
            s = s.with(v);
        }
        s
    } else {
        let bits: u32 = key
            .parse()
            .map_err(|_| Error::parse(1, format!("bad subset key {key:?}")))?;
        SubsetMask::from_bits(bits)
    };
    if !mask.is_subset_of(SubsetMask::full(n)) {
        return Err(Error::parse(1, format!("subset key {key:?} exceeds {n} vertices")));
    }
    Ok(mask)
}

pub fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Rational::from_str(s.trim())
            .map_err(|_| Error::parse(1, format!("{s:?} is not a rational number"))),
        Value::Number(x) => x
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| Error::parse(1, format!("{x} is not an integer; write rationals as strings"))),
        other => Err(Error::parse(1, format!("expected a rational string, got {other}"))),
    }
}

/// Reads all `2^n` heights. Two layouts are accepted: a flat object from
/// subset keys to values, or the emitted form
/// `{"n": .., "heights": [{"mask": .., "set": [..], "value": ".."}]}`.
pub fn parse_heights(text: &str, n: usize) -> Result<HeightVector<Rational>> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse(1, "height vector must be a JSON object"))?;
    let mut values: BTreeMap<SubsetMask, Rational> = BTreeMap::new();
    let mut insert = |s: SubsetMask, q: Rational| -> Result<()> {
        if values.insert(s, q).is_some() {
            return Err(Error::parse(1, format!("subset {s} given twice")));
        }
        Ok(())
    };
    if let Some(entries) = obj.get("heights").and_then(Value::as_array) {
        if let Some(m) = obj.get("n").and_then(Value::as_u64) {
            if m as usize != n {
                return Err(Error::parse(1, format!("height vector is for n = {m}, graph has n = {n}")));
            }
        }
        for e in entries {
            let s = match (e.get("mask").and_then(Value::as_u64), e.get("set")) {
                (Some(bits), _) => parse_subset_key(&bits.to_string(), n)?,
                (None, Some(set)) => parse_subset_key(&set.to_string(), n)?,
                (None, None) => return Err(Error::parse(1, "entry without \"mask\" or \"set\"")),
            };
            let value = e
                .get("value")
                .ok_or_else(|| Error::parse(1, format!("entry for {s} has no \"value\"")))?;
            insert(s, parse_rational(value)?)?;
        }
    } else {
        for (key, value) in obj {
            insert(parse_subset_key(key, n)?, parse_rational(value)?)?;
        }
    }
    let mut out = Vec::with_capacity(1 << n);
    for s in SubsetMask::all(n) {
        out.push(values.remove(&s).ok_or(Error::MissingSubset { mask: s })?);
    }
    HeightVector::new(n, out)
}

pub fn heights_to_json(h: &HeightVector<Rational>) -> Value {
    let entries: Vec<Value> = h
        .iter()
        .map(|(s, q)| json!({ "mask": s.bits(), "set": subset_to_json(s), "value": q.to_string() }))
        .collect();
    json!({ "n": h.n(), "heights": entries })
}

pub fn tag_to_json(tag: FormTag) -> Value {
    match tag {
        FormTag::Apex => json!({ "kind": "apex" }),
        FormTag::NonClique { set, u, v } => json!({
            "kind": "non_clique",
            "set": subset_to_json(set),
            "pair": [u, v],
        }),
        FormTag::NonEdgeWall { u, v, rest } => json!({
            "kind": "non_edge_wall",
            "pair": [u, v],
            "rest": subset_to_json(rest),
        }),
        FormTag::EdgeWall { u, v, rest } => json!({
            "kind": "edge_wall",
            "pair": [u, v],
            "rest": subset_to_json(rest),
        }),
    }
}

pub fn form_to_json(f: &LinearForm) -> Value {
    let coeffs: Vec<Value> = f
        .coeffs()
        .iter()
        .map(|&(s, c)| json!({ "mask": s.bits(), "set": subset_to_json(s), "coeff": c }))
        .collect();
    json!({
        "tag": tag_to_json(f.tag()),
        "expression": f.to_expression(),
        "coeffs": coeffs,
    })
}

pub fn stats_to_json(s: &ConeStats) -> Value {
    json!({
        "dim": s.dim,
        "lineality": s.lineality,
        "facets": s.facets,
        "simplicial": s.simplicial,
    })
}

pub fn description_to_json(d: &ConeDescription) -> Value {
    json!({
        "n": d.n,
        "equations": d.equations.iter().map(form_to_json).collect::<Vec<_>>(),
        "inequalities": d.inequalities.iter().map(form_to_json).collect::<Vec<_>>(),
    })
}

pub fn rational_vector_to_json(x: &[Rational]) -> Value {
    Value::from(x.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn points_to_json(points: &[Vec<Rational>]) -> Value {
    Value::from(points.iter().map(|p| rational_vector_to_json(p)).collect::<Vec<_>>())
}

fn integer_to_json(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::from(x.to_string()), Value::from)
}

/// Rays (or any vectors) in clique coordinates, with the clique labels.
pub fn rays_to_json(rep: &PointedConeRep, rays: &[Vec<BigInt>]) -> Value {
    let mut m = Map::new();
    m.insert(
        "coordinates".into(),
        Value::from(rep.coords.iter().map(|&k| subset_to_json(k)).collect::<Vec<_>>()),
    );
    m.insert(
        "rays".into(),
        Value::from(
            rays.iter()
                .map(|r| Value::from(r.iter().map(integer_to_json).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        ),
    );
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_formats() {
        let g = parse_graph("{\"n\": 4, \"edges\": [[0,1],[1,2],[2,3],[3,0]]}").unwrap();
        assert_eq!(g, Graph::cycle(4));
        let g = parse_graph("# triangle\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(parse_graph(&graph_to_json(&g).to_string()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_graph("0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_graph("0 1\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph("0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_graph("{\"n\": 3,\n \"edges\": [[0,1],\n [1,]]}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn subset_keys() {
        assert_eq!(parse_subset_key("[0,2]", 3).unwrap(), SubsetMask::from_vertices([0, 2]));
        assert_eq!(parse_subset_key("[]", 3).unwrap(), SubsetMask::EMPTY);
        assert_eq!(parse_subset_key("5", 3).unwrap(), SubsetMask::from_vertices([0, 2]));
        assert!(parse_subset_key("8", 3).is_err());
        assert!(parse_subset_key("[3]", 3).is_err());
        assert_eq!(subset_key(SubsetMask::from_vertices([0, 2])), "[0,2]");
    }

    #[test]
    fn heights_round_trip() {
        let text = r#"{"0": "-1", "[0]": "3/2", "2": 0, "[0,1]": "-1/2"}"#;
        let h = parse_heights(text, 2).unwrap();
        assert_eq!(h[SubsetMask::singleton(0)], Rational::new(3.into(), 2.into()));
        let emitted = heights_to_json(&h).to_string();
        assert_eq!(parse_heights(&emitted, 2).unwrap(), h);
    }

    #[test]
    fn missing_and_repeated_subsets() {
        let err = parse_heights(r#"{"0": "0", "1": "0", "3": "0"}"#, 2).unwrap_err();
        assert_eq!(err, Error::MissingSubset { mask: SubsetMask::singleton(1) });
        assert!(parse_heights(r#"{"1": "0", "[0]": "0"}"#, 1).is_err());
        assert!(parse_heights(r#"{"0": "zero"}"#, 0).is_err());
    }
}
