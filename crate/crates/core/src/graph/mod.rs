//! Simple undirected graphs with a fixed edge order.
//!
//! Vertices and edges are stored 0-based. Edge `k` is reported as `e{k+1}`
//! everywhere a human reads it, and its position in [`Graph::edges`] is the
//! bit position used by [`crate::subset::EdgeMask`].

mod enumerate;
mod iso;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{enumerate_connected_graphs, MAX_ENUMERATION_EDGES, MAX_ENUMERATION_ORDER};
pub use iso::{are_isomorphic, canonical_code, Fingerprint, IsoOutcome, MAX_EXACT_ISO_ORDER};

/// Largest order accepted by [`count_hamiltonian_cycles`].
pub const MAX_HAMILTONIAN_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs. Each pair is stored with the
    /// smaller endpoint first; the edge order is kept as given.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); order];
        let mut stored = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            stored.push((u, v));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            order,
            edges: stored,
            adjacency,
        })
    }

    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); order],
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> Result<(usize, usize)> {
        self.edges.get(edge).copied().ok_or(Error::EdgeOutOfRange {
            index: edge,
            size: self.size(),
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        DegreeSequence(degrees)
    }

    /// Parses the edge-list text format: a header line `ν ε` followed by `ε`
    /// lines `u v` with 1-based vertex indices.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let [order, size] = parse_pair(header)?;
        let mut edges = Vec::with_capacity(size);
        for (n, line) in lines.enumerate() {
            if n >= size {
                return Err(Error::Parse(format!(
                    "more than the declared {size} edge lines"
                )));
            }
            let [u, v] = parse_pair(line)?;
            if u == 0 || v == 0 {
                return Err(Error::Parse(format!("vertex indices are 1-based: '{line}'")));
            }
            edges.push((u - 1, v - 1));
        }
        if edges.len() != size {
            return Err(Error::Parse(format!(
                "header declares {size} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(order, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order, self.size());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Same graph with edges listed in lexicographic endpoint order.
    pub fn with_sorted_edges(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph::new(self.order, edges).expect("edges already validated")
    }
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!("expected two integers, got '{line}'")));
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::Parse(format!("not a nonnegative integer: '{field}'")))?;
    }
    Ok(out)
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.order)?;
        for (k, (u, v)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "]")
    }
}

/// Vertex degrees sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Path `P_n`: `e_i = v_i v_{i+1}`, labeled left to right.
pub fn make_path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidOrder {
            family: "path",
            min: 2,
            got: n,
        });
    }
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))
}

/// Cycle `C_n`: `e_i = v_i v_{i+1}` with `e_n = v_n v_1`, labeled clockwise.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            family: "cycle",
            min: 3,
            got: n,
        });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star `K_{1,m}` with center `u` as vertex 0 and `e_i = u v_i`.
pub fn make_star(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidOrder {
            family: "star",
            min: 1,
            got: m,
        });
    }
    Graph::new(m + 1, (1..=m).map(|i| (0, i)))
}

/// Complete graph `K_n`, edges in lexicographic endpoint order.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidOrder {
            family: "complete",
            min: 1,
            got: n,
        });
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// A standard family with its parameter, as written `path:N`, `cycle:N`,
/// `star:M` or `complete:N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Path(n) => make_path(n),
            Family::Cycle(n) => make_cycle(n),
            Family::Star(m) => make_star(m),
            Family::Complete(n) => make_complete(n),
        }
    }

    /// Conventional name, e.g. `P_4` or `K_{1,3}`.
    pub fn symbol(self) -> String {
        match self {
            Family::Path(n) => format!("P_{n}"),
            Family::Cycle(n) => format!("C_{n}"),
            Family::Star(m) => format!("K_{{1,{m}}}"),
            Family::Complete(n) => format!("K_{n}"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(m) => write!(f, "star:{m}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected FAMILY:N, got '{s}'")))?;
        let n: usize = param
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad family parameter '{param}'")))?;
        match name.trim() {
            "path" => Ok(Family::Path(n)),
            "cycle" => Ok(Family::Cycle(n)),
            "star" => Ok(Family::Star(n)),
            "complete" => Ok(Family::Complete(n)),
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}

/// True iff distinct edges `i` and `j` share an endpoint.
pub fn edges_adjacent(g: &Graph, i: usize, j: usize) -> Result<bool> {
    let (a, b) = g.endpoints(i)?;
    let (c, d) = g.endpoints(j)?;
    if i == j {
        return Err(Error::SameEdge(i));
    }
    Ok(a == c || a == d || b == c || b == d)
}

/// Line graph: one vertex per edge of `g`, adjacent iff the edges are.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.size() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut edges = Vec::new();
    for i in 0..g.size() {
        for j in i + 1..g.size() {
            if edges_adjacent(g, i, j)? {
                edges.push((i, j));
            }
        }
    }
    Graph::new(g.size(), edges)
}

pub fn is_connected(g: &Graph) -> bool {
    if g.order() <= 1 {
        return true;
    }
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == g.order()
}

pub fn is_eulerian(g: &Graph) -> bool {
    is_connected(g) && (0..g.order()).all(|v| g.degree(v) % 2 == 0)
}

/// Number of distinct undirected Hamiltonian cycles.
///
/// Each cycle is counted once: it starts at vertex 0 and its second vertex
/// is smaller than its last.
pub fn count_hamiltonian_cycles(g: &Graph) -> Result<u64> {
    let n = g.order();
    Error::limit("hamiltonian enumeration order", MAX_HAMILTONIAN_ORDER, n)?;
    if n < 3 {
        return Ok(0);
    }
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], count: &mut u64) {
        let last = *path.last().unwrap();
        if path.len() == g.order() {
            if g.has_edge(last, 0) && path[1] < last {
                *count += 1;
            }
            return;
        }
        for &w in g.neighbors(last) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                extend(g, path, used, count);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut path = vec![0];
    let mut count = 0;
    extend(g, &mut path, &mut used, &mut count);
    Ok(count)
}

/// Random connected graph: a uniform random labeled tree on `order` vertices
/// plus `extra_edges` further distinct edges (capped by the complete graph).
/// Edge order is shuffled.
pub fn random_connected_graph<R: Rng + ?Sized>(
    rng: &mut R,
    order: usize,
    extra_edges: usize,
) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 1..order {
        let parent = rng.gen_range(0..v);
        edges.insert((parent, v));
    }
    let mut missing: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra_edges));
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.shuffle(rng);
    Graph::new(order, edges).expect("generated edges are simple")
}
