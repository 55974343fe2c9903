//! JSON and plain-text renderings of analysis results.
//!
//! JSON objects are built as `serde_json::Value`, whose maps keep keys
//! sorted, so every rendering is byte-stable.

use std::fmt::Write as _;

use mixdim_core::{
    BoundReport, BruteForce, CycleInfo, Element, GeneratorCertificate, GraphClass, MdimReport,
    Verdict,
};
use serde_json::{json, Value};

pub fn element_json(x: Element) -> Value {
    match x {
        Element::Vertex(v) => json!({ "vertex": v }),
        Element::Edge(u, v) => json!({ "edge": [u, v] }),
    }
}

pub fn cycle_json(id: usize, c: &CycleInfo) -> Value {
    json!({
        "id": id,
        "ring": c.ring,
        "roots": c.root_vertices(),
        "rt": c.rt(),
    })
}

pub fn class_json(class: &GraphClass, cycles: &[CycleInfo]) -> Value {
    json!({
        "class": class.tag.as_str(),
        "cycle_count": class.cycle_count,
        "cycles": cycles.iter().enumerate().map(|(i, c)| cycle_json(i, c)).collect::<Vec<_>>(),
    })
}

pub fn mdim_json(r: &MdimReport) -> Value {
    let cycles: Vec<Value> = r
        .cycles
        .iter()
        .map(|t| json!({ "id": t.id, "rt": t.rt, "term": t.term, "needs_delta": t.needs_delta }))
        .collect();
    json!({ "l1": r.l1, "cycles": cycles, "delta": r.delta, "total": r.total })
}

pub fn certificate_json(c: &GeneratorCertificate) -> Value {
    let mut sb: Vec<usize> = c.sb.iter().flat_map(|(_, vs)| vs.iter().copied()).collect();
    sb.sort_unstable();
    let mut sc: Vec<usize> = c.sc.iter().map(|&(_, v)| v).collect();
    sc.sort_unstable();
    json!({ "set": c.set, "sa": c.sa, "sb": sb, "sc": sc, "verified": c.verified })
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "generator": v.generator,
        "failing_pair": v.failing_pair.map(|(a, b)| vec![element_json(a), element_json(b)]),
    })
}

pub fn oracle_json(b: &BruteForce) -> Value {
    json!({ "value": b.value, "witness": b.witness })
}

pub fn bound_json(b: &BoundReport, mdim: usize) -> Value {
    json!({ "bound": b.bound, "attained": b.attained, "mdim": mdim })
}

fn list(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// The formula instantiated term by term.
pub fn mdim_text(r: &MdimReport, cycles: &[CycleInfo]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "L1 = {}", r.l1);
    for (t, c) in r.cycles.iter().zip(cycles) {
        let _ = writeln!(
            s,
            "cycle {}: ring [{}], roots [{}], rt = {}, max{{3 - {}, 0}} = {}{}",
            t.id,
            list(&c.ring),
            list(&c.root_vertices()),
            t.rt,
            t.rt,
            t.term,
            if t.needs_delta {
                ", no geodesic triple of roots (+1 to delta)"
            } else {
                ""
            }
        );
    }
    let _ = writeln!(s, "delta = {}", r.delta);
    let terms: Vec<String> = std::iter::once(r.l1.to_string())
        .chain(r.cycles.iter().map(|t| t.term.to_string()))
        .chain(std::iter::once(r.delta.to_string()))
        .collect();
    let _ = writeln!(s, "mdim = {} = {}", terms.join(" + "), r.total);
    s
}

pub fn certificate_text(c: &GeneratorCertificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "generator: [{}] (size {})", list(&c.set), c.set.len());
    let _ = writeln!(s, "leaves: [{}]", list(&c.sa));
    for (id, vs) in &c.sb {
        let _ = writeln!(s, "cycle {id}: added non-root vertices [{}]", list(vs));
    }
    for (id, v) in &c.sc {
        let _ = writeln!(s, "cycle {id}: added triple-closing vertex {v}");
    }
    let _ = writeln!(s, "verified: {}", c.verified);
    s
}
