use std::fmt::Write;

use edgeset_core::claims::{ClaimVerdict, Status};
use edgeset_core::domination::CedReport;
use edgeset_core::edge_degree::EdgeDegreeReport;
use edgeset_core::esg::{DegreeProfile, DegreeSumComparison, EdgeSetGraph};
use edgeset_core::graph::Graph;
use edgeset_core::subset::{mask_to_index, EdgeMask};
use edgeset_core::Result;
use serde::Serialize;

#[derive(Serialize)]
pub struct Host {
    pub name: String,
    pub order: usize,
    pub size: usize,
    /// 1-based endpoints, in edge order.
    pub edges: Vec<[usize; 2]>,
}

impl Host {
    pub fn new(name: &str, g: &Graph) -> Self {
        Host {
            name: name.to_string(),
            order: g.order(),
            size: g.size(),
            edges: g.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }
}

#[derive(Serialize)]
struct Vertex {
    id: String,
    mask_hex: String,
    subset: String,
    s: usize,
    i: u64,
    degree: u64,
}

fn vertex(mask: EdgeMask, degree: u64) -> Vertex {
    let idx = mask_to_index(mask).expect("nonempty mask");
    Vertex {
        id: format!("v{}_{}", idx.size, idx.rank),
        mask_hex: mask.to_hex(),
        subset: mask.to_string(),
        s: idx.size,
        i: idx.rank,
        degree,
    }
}

/// Vertices of the edge-set graph in `(s, i)` order.
fn ordered_vertices(gamma: &EdgeSetGraph) -> Result<Vec<(EdgeMask, Vertex)>> {
    let mut out = Vec::new();
    for m in gamma.vertices() {
        out.push((m, vertex(m, gamma.degree(m)?)));
    }
    out.sort_by_key(|(_, v)| (v.s, v.i));
    Ok(out)
}

#[derive(Serialize)]
struct BuildJson {
    host: Host,
    epsilon: usize,
    vertex_count: u64,
    edge_count: usize,
    vertices: Vec<Vertex>,
    edges: Vec<[String; 2]>,
}

pub fn build_json(host: Host, gamma: &EdgeSetGraph) -> Result<String> {
    let (masks, vertices): (Vec<EdgeMask>, Vec<Vertex>) = ordered_vertices(gamma)?.into_iter().unzip();
    let mut edges = Vec::new();
    for (a, &ma) in masks.iter().enumerate() {
        for (b, &mb) in masks.iter().enumerate().skip(a + 1) {
            if gamma.adjacent(ma, mb)? {
                edges.push([vertices[a].id.clone(), vertices[b].id.clone()]);
            }
        }
    }
    let out = BuildJson {
        host,
        epsilon: gamma.epsilon(),
        vertex_count: gamma.vertex_count(),
        edge_count: edges.len(),
        vertices,
        edges,
    };
    Ok(to_json(&out))
}

pub fn build_table(host: &Host, gamma: &EdgeSetGraph) -> Result<String> {
    let vertices: Vec<Vertex> = ordered_vertices(gamma)?.into_iter().map(|(_, v)| v).collect();
    let edge_count = vertices.iter().map(|v| v.degree).sum::<u64>() / 2;
    let mut out = String::new();
    writeln!(out, "host {} (ν={}, ε={})", host.name, host.order, host.size).unwrap();
    writeln!(out, "{} vertices, {} edges", vertices.len(), edge_count).unwrap();
    write_vertex_rows(&mut out, &vertices);
    Ok(out)
}

fn write_vertex_rows(out: &mut String, vertices: &[Vertex]) {
    writeln!(out, "{:<8} {:<10} {:<24} {:>8}", "(s,i)", "mask", "subset", "degree").unwrap();
    for v in vertices {
        let coords = format!("({},{})", v.s, v.i);
        writeln!(out, "{:<8} {:<10} {:<24} {:>8}", coords, v.mask_hex, v.subset, v.degree).unwrap();
    }
}

#[derive(Serialize)]
struct ProfileJson {
    host: Host,
    epsilon: usize,
    delta: u64,
    #[serde(rename = "Delta")]
    max_delta: u64,
    max_count: u64,
    degree_sum: u64,
    eulerian: bool,
    degrees: Vec<Vertex>,
}

fn profile_vertices(profile: &DegreeProfile) -> Vec<Vertex> {
    let mut vertices: Vec<Vertex> = (1..=profile.degrees.len() as u64)
        .map(|bits| {
            let m = EdgeMask::new(bits, profile.epsilon).expect("in range");
            vertex(m, profile.degree(m))
        })
        .collect();
    vertices.sort_by_key(|v| (v.s, v.i));
    vertices
}

pub fn profile_json(host: Host, profile: &DegreeProfile) -> String {
    to_json(&ProfileJson {
        host,
        epsilon: profile.epsilon,
        delta: profile.min_degree,
        max_delta: profile.max_degree,
        max_count: profile.max_count,
        degree_sum: profile.degree_sum,
        eulerian: profile.eulerian,
        degrees: profile_vertices(profile),
    })
}

pub fn profile_table(host: &Host, profile: &DegreeProfile) -> String {
    let mut out = String::new();
    writeln!(out, "host {} (ν={}, ε={})", host.name, host.order, host.size).unwrap();
    writeln!(
        out,
        "δ={} Δ={} 𝔐={} degree sum={} eulerian={}",
        profile.min_degree, profile.max_degree, profile.max_count, profile.degree_sum, profile.eulerian
    )
    .unwrap();
    write_vertex_rows(&mut out, &profile_vertices(profile));
    out
}

#[derive(Serialize)]
struct CedJson<'a> {
    host: Host,
    #[serde(flatten)]
    report: &'a CedReport,
}

pub fn ced_json(host: Host, report: &CedReport) -> String {
    to_json(&CedJson { host, report })
}

pub fn ced_table(host: &Host, report: &CedReport) -> String {
    let mut out = String::new();
    writeln!(out, "host {} (ν={}, ε={})", host.name, host.order, host.size).unwrap();
    writeln!(out, "CED-number {}", report.ced_number).unwrap();
    writeln!(out, "CED-index  {}", report.ced_index).unwrap();
    if let Some(all) = report.all_ced_count {
        writeln!(out, "CED sets   {all}").unwrap();
    }
    for m in &report.smallest_sets {
        writeln!(out, "  {m}").unwrap();
    }
    out
}

#[derive(Serialize)]
struct EdgeDegreeJson<'a> {
    host: Host,
    #[serde(flatten)]
    report: &'a EdgeDegreeReport,
}

pub fn edge_degree_json(host: Host, report: &EdgeDegreeReport) -> String {
    to_json(&EdgeDegreeJson { host, report })
}

pub fn edge_degree_table(host: &Host, report: &EdgeDegreeReport) -> String {
    let mut out = String::new();
    writeln!(out, "host {} (ν={}, ε={})", host.name, host.order, host.size).unwrap();
    writeln!(out, "{:<6} {:<8} {:>10} {:>10} {:>10}", "edge", "ends", "at first", "at second", "general").unwrap();
    for (k, general) in report.general.iter().enumerate() {
        let [a, b] = host.edges[k];
        let first = &report.per_edge_at_endpoint[2 * k];
        let second = &report.per_edge_at_endpoint[2 * k + 1];
        let ends = format!("{a}-{b}");
        writeln!(
            out,
            "e{:<5} {:<8} {:>10} {:>10} {:>10}",
            general.index, ends, first.value, second.value, general.value
        )
        .unwrap();
    }
    for v in &report.per_vertex {
        writeln!(out, "vertex {}: {}", v.index, v.value).unwrap();
    }
    writeln!(out, "total {}", report.total).unwrap();
    out
}

#[derive(Serialize)]
struct CompareJson {
    host: Host,
    epsilon: usize,
    esg_sum: u64,
    set_graph_sum: u64,
    esg_exceeds: bool,
}

pub fn compare_json(host: Host, c: &DegreeSumComparison) -> String {
    let epsilon = host.size;
    to_json(&CompareJson {
        host,
        epsilon,
        esg_sum: c.esg_sum,
        set_graph_sum: c.set_graph_sum,
        esg_exceeds: c.esg_exceeds,
    })
}

pub fn compare_table(host: &Host, c: &DegreeSumComparison) -> String {
    let relation = if c.esg_exceeds { ">" } else { "≤" };
    format!(
        "host {} (ν={}, ε={})\nedge-set graph degree sum {} {} set-graph degree sum {}\n",
        host.name, host.order, host.size, c.esg_sum, relation, c.set_graph_sum
    )
}

pub fn verdicts_json(verdicts: &[ClaimVerdict]) -> String {
    to_json(&verdicts)
}

pub fn verdicts_table(verdicts: &[ClaimVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let marker = if v.verdict_only { " (verdict-only)" } else { "" };
        writeln!(out, "{:<14} {}{} [{}]", v.status, v.claim_id, marker, v.instance).unwrap();
        writeln!(out, "    expected: {}", v.expected).unwrap();
        writeln!(out, "    computed: {}", v.computed).unwrap();
        if !v.evidence.is_empty() {
            writeln!(out, "    evidence: {}", v.evidence).unwrap();
        }
    }
    let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
    let unexpected = verdicts.iter().filter(|v| v.is_unexpected_failure()).count();
    writeln!(
        out,
        "{} verdicts: {} PASS, {} FAIL ({} unexpected), {} NOT_APPLICABLE, {} GUARDED_OUT",
        verdicts.len(),
        count(Status::Pass),
        count(Status::Fail),
        unexpected,
        count(Status::NotApplicable),
        count(Status::GuardedOut)
    )
    .unwrap();
    out
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}
