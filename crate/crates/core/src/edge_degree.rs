//! Edge-degree of an edge at an endpoint, general edge-degree, edge-degree
//! of a vertex and total edge-degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edges other than `edge` incident with its endpoint `v`.
pub fn edge_degree_at_vertex(g: &Graph, edge: usize, v: usize) -> Result<usize> {
    let (a, b) = g.endpoints(edge)?;
    g.check_vertex(v)?;
    if v != a && v != b {
        return Err(Error::NotAnEndpoint { edge, vertex: v });
    }
    Ok(g.degree(v) - 1)
}

/// Number of edges adjacent to `edge`: `deg(u) + deg(v) - 2`.
pub fn general_edge_degree(g: &Graph, edge: usize) -> Result<usize> {
    let (a, b) = g.endpoints(edge)?;
    Ok(edge_degree_at_vertex(g, edge, a)? + edge_degree_at_vertex(g, edge, b)?)
}

/// Sum over the edges at `v` of their edge-degree at `v`.
pub fn edge_degree_of_vertex(g: &Graph, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    let mut total = 0;
    for (k, &(a, b)) in g.edges().iter().enumerate() {
        if a == v || b == v {
            total += edge_degree_at_vertex(g, k, v)?;
        }
    }
    Ok(total)
}

pub fn total_edge_degree(g: &Graph) -> usize {
    (0..g.order())
        .map(|v| edge_degree_of_vertex(g, v).expect("vertex in range"))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointDegree {
    pub edge: usize,
    pub vertex: usize,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexedValue {
    pub index: usize,
    pub value: usize,
}

/// All four edge-degree quantities, keyed by 1-based edge and vertex
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeDegreeReport {
    pub per_edge_at_endpoint: Vec<EndpointDegree>,
    pub general: Vec<IndexedValue>,
    pub per_vertex: Vec<IndexedValue>,
    pub total: usize,
}

pub fn edge_degree_report(g: &Graph) -> EdgeDegreeReport {
    let mut per_edge_at_endpoint = Vec::with_capacity(2 * g.size());
    let mut general = Vec::with_capacity(g.size());
    for (k, &(a, b)) in g.edges().iter().enumerate() {
        for v in [a, b] {
            per_edge_at_endpoint.push(EndpointDegree {
                edge: k + 1,
                vertex: v + 1,
                value: edge_degree_at_vertex(g, k, v).expect("endpoint"),
            });
        }
        general.push(IndexedValue {
            index: k + 1,
            value: general_edge_degree(g, k).expect("edge in range"),
        });
    }
    let per_vertex: Vec<IndexedValue> = (0..g.order())
        .map(|v| IndexedValue {
            index: v + 1,
            value: edge_degree_of_vertex(g, v).expect("vertex in range"),
        })
        .collect();
    let total = per_vertex.iter().map(|p| p.value).sum();
    EdgeDegreeReport {
        per_edge_at_endpoint,
        general,
        per_vertex,
        total,
    }
}
