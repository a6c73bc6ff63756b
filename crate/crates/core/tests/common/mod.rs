#![allow(dead_code)]

use std::sync::OnceLock;

use edgeset_core::graph::{enumerate_connected_graphs, Family, Graph};
use edgeset_core::oracle;

pub struct Host {
    pub name: String,
    pub graph: Graph,
    /// Brute-force degrees, indexed by `mask - 1`.
    pub degrees: Vec<u64>,
}

fn host(name: String, graph: Graph) -> Host {
    let degrees = oracle::esg_degrees(&graph).unwrap();
    Host { name, graph, degrees }
}

/// Every connected graph with at most ten edges, followed by the four
/// families up to ten edges.
pub fn hosts() -> &'static [Host] {
    static HOSTS: OnceLock<Vec<Host>> = OnceLock::new();
    HOSTS.get_or_init(|| {
        let mut out: Vec<Host> = enumerate_connected_graphs(11, 10, false)
            .unwrap()
            .into_iter()
            .map(|g| host(g.to_string(), g))
            .collect();
        for family in families(10) {
            out.push(host(family.symbol(), family.build().unwrap()));
        }
        out
    })
}

pub fn families(max_edges: usize) -> Vec<Family> {
    let mut out = Vec::new();
    out.extend((2..=max_edges + 1).map(Family::Path));
    out.extend((3..=max_edges).map(Family::Cycle));
    out.extend((1..=max_edges).map(Family::Star));
    out.extend((2..).take_while(|n| n * (n - 1) / 2 <= max_edges).map(Family::Complete));
    out
}

pub fn connected_up_to(max_edges: usize) -> Vec<Graph> {
    enumerate_connected_graphs(max_edges + 1, max_edges, false).unwrap()
}
