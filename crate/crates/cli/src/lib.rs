//! Commands behind the `gzcone` binary. Each one returns a [`Report`] with a
//! JSON body, a text rendering and an exit code, so tests can call them
//! without spawning a process.

use std::fmt::Write as _;

use gzcone::defcone::{
    build_facet_witness, check_facet_witness, contains, decompose_in_clique_basis,
    generate_irredundant_description, generate_redundant_description, stats,
    triangle_free_decompose, ConeDescription, FormTag,
};
use gzcone::geometry::vertices;
use gzcone::graphcore::vertex_pairs;
use gzcone::io::{
    description_to_json, graph_to_json, points_to_json, stats_to_json, subset_to_json, tag_to_json,
};
use gzcone::polyoracle::{
    cones_equal, equation_matrix, inequality_facet_flags, pointed_facets_and_dim, Side,
};
use gzcone::{Error, Graph, HeightVectorQ, SubsetMask};
use rayon::prelude::*;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CERTIFICATION: i32 = 3;

/// `--all-n` walks every labeled graph; beyond five vertices that is 2^15 graphs.
pub const MAX_ALL_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            code: EXIT_OK,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

/// Exit code for a library error: failed membership is 1, bad input is 2,
/// a broken internal invariant is 3.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInSpan(_) | Error::NotInCone(_) | Error::NotTriangleFree => EXIT_FALSE,
        Error::Invariant(_) => EXIT_CERTIFICATION,
        _ => EXIT_INPUT,
    }
}

fn forms_text(out: &mut String, title: &str, forms: &[gzcone::defcone::LinearForm], op: &str) {
    let _ = writeln!(out, "{title} ({}):", forms.len());
    for f in forms {
        let _ = writeln!(out, "  {} {op} 0    [{}]", f.to_expression(), f.tag());
    }
}

pub fn cmd_describe(g: &Graph, redundant: bool) -> Result<Report, Error> {
    let desc = if redundant {
        generate_redundant_description(g)?
    } else {
        generate_irredundant_description(g)?
    };
    let s = stats(g)?;
    let mut json = description_to_json(&desc);
    json["graph"] = graph_to_json(g);
    json["redundant"] = Value::from(redundant);
    json["stats"] = stats_to_json(&s);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "dim {}  lineality {}  facets {}  simplicial {}",
        s.dim, s.lineality, s.facets, s.simplicial
    );
    forms_text(&mut text, "equations", &desc.equations, "=");
    forms_text(&mut text, "inequalities", &desc.inequalities, ">=");
    Ok(Report::ok(json, text))
}

fn tag_or_null(tag: Option<FormTag>) -> Value {
    tag.map_or(Value::Null, tag_to_json)
}

pub fn cmd_check(g: &Graph, h: &HeightVectorQ) -> Result<Report, Error> {
    let desc = generate_irredundant_description(g)?;
    let m = contains(&desc, h)?;
    let json = json!({
        "in_linear_span": m.in_linear_span,
        "in_cone": m.in_cone,
        "in_type_cone": m.in_type_cone,
        "first_violation": tag_or_null(m.first_violation),
        "first_tight": tag_or_null(m.first_tight),
    });
    let mut text = format!(
        "in_linear_span {}\nin_cone {}\nin_type_cone {}\n",
        m.in_linear_span, m.in_cone, m.in_type_cone
    );
    if let Some(t) = m.first_violation {
        let _ = writeln!(text, "first violation: {t}");
    }
    if let Some(t) = m.first_tight {
        let _ = writeln!(text, "first tight inequality: {t}");
    }
    Ok(Report {
        json,
        text,
        code: if m.in_cone { EXIT_OK } else { EXIT_FALSE },
    })
}

fn subset_text(s: SubsetMask) -> String {
    gzcone::io::subset_key(s)
}

pub fn cmd_decompose(g: &Graph, h: &HeightVectorQ, zonotopal: bool) -> Result<Report, Error> {
    let mut text = String::new();
    let json = if zonotopal {
        let z = triangle_free_decompose(g, h)?;
        let _ = writeln!(text, "translation {}", join(&z.translation));
        let edges: Vec<Value> = z
            .edges
            .iter()
            .map(|(&(u, v), c)| {
                let _ = writeln!(text, "edge [{u},{v}] {c}");
                json!({ "edge": [u, v], "value": c.to_string() })
            })
            .collect();
        json!({
            "translation": z.translation.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "edges": edges,
            "support": z.support().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        })
    } else {
        let y = decompose_in_clique_basis(g, h)?;
        let coefficients: Vec<Value> = y
            .iter()
            .map(|(&k, c)| {
                let _ = writeln!(text, "{} {c}", subset_text(k));
                json!({ "clique": subset_to_json(k), "mask": k.bits(), "value": c.to_string() })
            })
            .collect();
        json!({ "coefficients": coefficients })
    };
    Ok(Report::ok(json, text))
}

fn join(xs: &[gzcone::Rational]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn cmd_vertices(g: &Graph, h: &HeightVectorQ) -> Result<Report, Error> {
    let vs = vertices(g, h)?;
    let orientations = g.acyclic_orientations()?.len();
    let json = json!({
        "count": vs.len(),
        "acyclic_orientations": orientations,
        "vertices": points_to_json(vs.points()),
    });
    let mut text = format!("{} vertices, {orientations} acyclic orientations\n", vs.len());
    for p in vs.points() {
        let _ = writeln!(text, "({})", join(p).replace(' ', ", "));
    }
    Ok(Report::ok(json, text))
}

/// One named certification step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVerification {
    pub n: usize,
    pub edge_mask: u64,
    pub checks: Vec<Check>,
}

impl GraphVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "edge_mask": self.edge_mask,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    fn to_text(&self) -> String {
        let status = if self.passed() { "ok" } else { "FAILED" };
        let mut s = format!("n={} edges={:#x}: {status}\n", self.n, self.edge_mask);
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {}: {}", c.name, c.detail);
        }
        s
    }
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

fn failed(name: &'static str, e: &Error) -> Check {
    check(name, false, format!("error: {e}"))
}

/// Certifies the closed-form description of one graph against the oracle.
pub fn verify_graph(g: &Graph) -> GraphVerification {
    let mut checks = Vec::new();
    let descs = generate_redundant_description(g).and_then(|r| {
        generate_irredundant_description(g).map(|i| (r, i))
    });
    let (red, irr) = match descs {
        Ok(d) => d,
        Err(e) => {
            checks.push(failed("describe", &e));
            return GraphVerification {
                n: g.n(),
                edge_mask: g.edge_mask(),
                checks,
            };
        }
    };
    checks.push(match cones_equal(&red, &irr) {
        Ok(c) if c.equal => check(
            "cones_equal",
            c.irredundant_on(Side::B) && c.facets.len() == irr.inequalities.len(),
            format!(
                "redundant ({} inequalities) = irredundant, {} facets in a span of dimension {}",
                red.inequalities.len(),
                c.facets.len(),
                c.span_dim.unwrap_or(0)
            ),
        ),
        Ok(c) => check("cones_equal", false, format!("{:?}", c.mismatch)),
        Err(e) => failed("cones_equal", &e),
    });
    checks.push(facet_check(&irr));
    checks.push(witness_check(g, &irr));
    checks.push(stats_check(g, &red, &irr));
    GraphVerification {
        n: g.n(),
        edge_mask: g.edge_mask(),
        checks,
    }
}

fn facet_check(irr: &ConeDescription) -> Check {
    match inequality_facet_flags(irr) {
        Ok(flags) => {
            let good = flags.iter().filter(|&&f| f).count();
            let first_bad = flags
                .iter()
                .position(|f| !f)
                .map(|i| format!(", {} is not a facet", irr.inequalities[i].tag()))
                .unwrap_or_default();
            check(
                "is_facet",
                good == flags.len(),
                format!("{good}/{} facets certified{first_bad}", flags.len()),
            )
        }
        Err(e) => failed("is_facet", &e),
    }
}

fn witness_check(g: &Graph, irr: &ConeDescription) -> Check {
    let mut good = 0;
    let mut first_bad = None;
    for f in &irr.inequalities {
        let FormTag::EdgeWall { u, v, rest } = f.tag() else {
            continue;
        };
        let ok = build_facet_witness::<gzcone::Rational>(g, u, v, rest)
            .and_then(|w| check_facet_witness(g, u, v, rest, &w))
            .map(|r| r.holds())
            .unwrap_or(false);
        if ok {
            good += 1;
        } else {
            first_bad.get_or_insert(f.tag());
        }
    }
    let total = irr.inequalities.len();
    let tail = first_bad.map(|t| format!(", witness fails for {t}")).unwrap_or_default();
    check("witness", good == total, format!("{good}/{total} witnesses valid{tail}"))
}

fn stats_check(g: &Graph, red: &ConeDescription, irr: &ConeDescription) -> Check {
    let run = || -> Result<Check, Error> {
        let s = stats(g)?;
        let rank = equation_matrix(irr)?.rank();
        let independent = rank == irr.equations.len();
        let span = (1usize << g.n()) - rank;
        let (pointed_facets, pointed_dim) = pointed_facets_and_dim(red)?;
        let ok = independent
            && span == s.dim
            && s.facets == irr.inequalities.len()
            && pointed_facets == s.facets
            && pointed_dim + s.lineality == s.dim
            && s.simplicial == (pointed_facets == pointed_dim)
            && s.simplicial == g.is_triangle_free();
        Ok(check(
            "stats",
            ok,
            format!(
                "{} equations {}, dim {} (oracle {span}), facets {} (oracle {pointed_facets}), \
                 pointed dim {pointed_dim}, simplicial {}",
                irr.equations.len(),
                if independent { "independent" } else { "dependent" },
                s.dim,
                s.facets,
                s.simplicial
            ),
        ))
    };
    run().unwrap_or_else(|e| failed("stats", &e))
}

/// Every labeled graph on `n` vertices, ordered by edge mask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = vertex_pairs(n).len();
    (0..1u64 << pairs).map(move |m| Graph::from_edge_mask(n, m))
}

pub fn cmd_verify(graphs: &[Graph]) -> Report {
    let results: Vec<GraphVerification> = graphs.par_iter().map(verify_graph).collect();
    let passed = results.iter().filter(|r| r.passed()).count();
    let all = passed == results.len();
    let json = json!({
        "graphs": results.iter().map(GraphVerification::to_json).collect::<Vec<_>>(),
        "passed": passed,
        "total": results.len(),
    });
    let mut text: String = results.iter().map(GraphVerification::to_text).collect();
    let _ = writeln!(text, "{passed}/{} graphs passed", results.len());
    Report {
        json,
        text,
        code: if all { EXIT_OK } else { EXIT_CERTIFICATION },
    }
}

pub fn cmd_verify_all(n: usize) -> Result<Report, Error> {
    if n > MAX_ALL_N {
        return Err(Error::TooLarge {
            what: "--all-n",
            n,
            max: MAX_ALL_N,
        });
    }
    let graphs: Vec<Graph> = all_graphs(n).collect();
    Ok(cmd_verify(&graphs))
}
