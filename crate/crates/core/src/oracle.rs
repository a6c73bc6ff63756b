//! Definitional brute force, kept apart from the closed forms it checks.
//!
//! Nothing here uses the neighborhood tables or degree formulas of the
//! production path: adjacency is decided by comparing edge endpoints pair by
//! pair, and degrees by testing partners one at a time.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subset::full_bits;

/// Largest host size for the quadratic-in-`2^ε` sweeps below.
pub const MAX_BRUTE_FORCE_EDGES: usize = 14;
/// Largest host for which the edge-set graph is listed edge by edge.
pub const MAX_BRUTE_FORCE_GRAPH_EDGES: usize = 10;

fn share_endpoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

/// `pairs[i][j]`: edges `i != j` share an endpoint.
fn edge_pairs(g: &Graph) -> Vec<Vec<bool>> {
    let edges = g.edges();
    (0..edges.len())
        .map(|i| {
            (0..edges.len())
                .map(|j| i != j && share_endpoint(edges[i], edges[j]))
                .collect()
        })
        .collect()
}

fn members(mut bits: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = 0;
    while bits != 0 {
        if bits & 1 == 1 {
            out.push(k);
        }
        bits >>= 1;
        k += 1;
    }
    out
}

/// Double loop over edge pairs: some `e` in `s` shares an endpoint with some
/// `f` in `t`.
pub fn esg_adjacent(g: &Graph, s: u64, t: u64) -> bool {
    let pairs = edge_pairs(g);
    cross(&pairs, &members(s), &members(t))
}

fn cross(pairs: &[Vec<bool>], s: &[usize], t: &[usize]) -> bool {
    s.iter().any(|&e| t.iter().any(|&f| pairs[e][f]))
}

/// Edges that share an endpoint with some edge of `s`, found pair by pair.
fn reach(g: &Graph, s: u64) -> u64 {
    let edges = g.edges();
    let mut out = 0;
    for e in members(s) {
        for (f, &other) in edges.iter().enumerate() {
            if f != e && share_endpoint(edges[e], other) {
                out |= 1 << f;
            }
        }
    }
    out
}

/// Degree of every vertex of the edge-set graph, indexed by `mask - 1`.
/// Each partner `T` is tested individually: it is adjacent to `S` iff it
/// holds an edge sharing an endpoint with an edge of `S`.
pub fn esg_degrees(g: &Graph) -> Result<Vec<u64>> {
    let epsilon = g.size();
    Error::limit("brute-force edge-set graph size", MAX_BRUTE_FORCE_EDGES, epsilon)?;
    let total = full_bits(epsilon);
    Ok((1..=total)
        .map(|s| {
            let r = reach(g, s);
            (1..=total).filter(|&t| t != s && t & r != 0).count() as u64
        })
        .collect())
}

/// Edge list of the edge-set graph; vertex `m - 1` is the subset with bits `m`.
pub fn esg_graph(g: &Graph) -> Result<Graph> {
    let epsilon = g.size();
    Error::limit("brute-force edge-set graph size", MAX_BRUTE_FORCE_GRAPH_EDGES, epsilon)?;
    let pairs = edge_pairs(g);
    let total = full_bits(epsilon) as usize;
    let lists: Vec<Vec<usize>> = (1..=total as u64).map(members).collect();
    let mut edges = Vec::new();
    for a in 0..total {
        for b in a + 1..total {
            if cross(&pairs, &lists[a], &lists[b]) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(total, edges)
}

/// Degrees of the set-graph on `n` elements by counting intersecting
/// partners, indexed by `mask - 1`.
pub fn set_graph_degrees(n: usize) -> Result<Vec<u64>> {
    Error::limit("brute-force set-graph size", MAX_BRUTE_FORCE_EDGES, n)?;
    let total = full_bits(n);
    Ok((1..=total)
        .map(|a| (1..=total).filter(|&b| b != a && a & b != 0).count() as u64)
        .collect())
}

/// Breadth-first connectivity of the edge-set graph, partners tested one
/// by one.
pub fn esg_connected(g: &Graph) -> Result<bool> {
    let epsilon = g.size();
    Error::limit("brute-force edge-set graph size", MAX_BRUTE_FORCE_EDGES, epsilon)?;
    let total = full_bits(epsilon);
    if total == 0 {
        return Ok(true);
    }
    let mut seen = vec![false; total as usize + 1];
    let mut queue = std::collections::VecDeque::from([1u64]);
    seen[1] = true;
    let mut reached = 1;
    while let Some(s) = queue.pop_front() {
        let r = reach(g, s);
        for t in 1..=total {
            if !seen[t as usize] && t & r != 0 {
                seen[t as usize] = true;
                reached += 1;
                queue.push_back(t);
            }
        }
    }
    Ok(reached == total)
}

/// Edge domination checked edge by edge: every edge outside `x` shares an
/// endpoint with an edge inside.
pub fn is_edge_dominating(g: &Graph, x: u64) -> bool {
    let edges = g.edges();
    let inside = members(x);
    (0..edges.len())
        .filter(|k| x >> k & 1 == 0)
        .all(|k| inside.iter().any(|&j| share_endpoint(edges[j], edges[k])))
}

/// Connectivity of the subgraph formed by the edges of `x` and their
/// endpoints, by union-find over vertices.
pub fn edges_connected(g: &Graph, x: u64) -> bool {
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        parent[v] = r;
        r
    }
    let chosen: Vec<(usize, usize)> = members(x).into_iter().map(|k| g.edges()[k]).collect();
    for &(u, v) in &chosen {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut roots: Vec<usize> = chosen
        .iter()
        .map(|&(u, _)| find(&mut parent, u))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() <= 1
}

pub fn is_ced(g: &Graph, x: u64) -> bool {
    x != 0 && is_edge_dominating(g, x) && edges_connected(g, x)
}

/// All connected edge dominating sets as raw masks, ascending.
pub fn all_ced_sets(g: &Graph) -> Result<Vec<u64>> {
    Error::limit("brute-force CED census size", 20, g.size())?;
    Ok((1..=full_bits(g.size())).filter(|&x| is_ced(g, x)).collect())
}
