//! The edge-set graph, its degrees in closed form, and the companion
//! set-graph.
//!
//! A nonempty subset `S` is adjacent to exactly those `T != S` that meet
//! `N(S)`, the union of the edge neighborhoods of `S`. Of the `2^ε - 1`
//! nonempty subsets, `2^ε - 2^(ε - |N(S)|)` meet `N(S)`, and `S` itself is
//! among them iff `S` meets `N(S)`. So
//!
//! ```text
//! deg(S) = 2^ε - 2^(ε - |N(S)|) - [S ∩ N(S) ≠ ∅]
//! ```
//!
//! which for a singleton `{e}` is `2^ε - 2^(ε - d(e))`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::subset::{binomial, full_bits, mask_to_index, EdgeMask, NeighborhoodTable};

/// Largest host size for [`BuildMode::Explicit`].
pub const MAX_EXPLICIT_EDGES: usize = 16;
/// Largest host size for per-subset degree tables.
pub const MAX_PROFILE_EDGES: usize = 24;
/// Largest ground set for [`build_set_graph`].
pub const MAX_SET_GRAPH_ELEMENTS: usize = 16;
/// Largest edge-set graph (in host edges) converted to a [`Graph`].
pub const MAX_GRAPH_EXPORT_EDGES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    /// Adjacency stored as one bit row per subset.
    Explicit,
    /// Adjacency answered from neighborhood masks on demand.
    Implicit,
}

#[derive(Debug, Clone)]
pub struct EdgeSetGraph {
    host: Graph,
    table: NeighborhoodTable,
    rows: Option<Vec<Vec<u64>>>,
}

pub fn build_edge_set_graph(g: &Graph, mode: BuildMode) -> Result<EdgeSetGraph> {
    check_host(g)?;
    let table = NeighborhoodTable::new(g)?;
    let rows = match mode {
        BuildMode::Implicit => None,
        BuildMode::Explicit => {
            Error::limit("explicit edge-set graph size", MAX_EXPLICIT_EDGES, g.size())?;
            let count = full_bits(g.size()) as usize;
            let words = count.div_ceil(64);
            let rows = (1..=count as u64)
                .map(|s| {
                    let reach = table.of_bits(s);
                    let mut row = vec![0u64; words];
                    for t in 1..=count as u64 {
                        if t != s && reach & t != 0 {
                            let at = (t - 1) as usize;
                            row[at / 64] |= 1 << (at % 64);
                        }
                    }
                    row
                })
                .collect();
            Some(rows)
        }
    };
    Ok(EdgeSetGraph {
        host: g.clone(),
        table,
        rows,
    })
}

fn check_host(g: &Graph) -> Result<()> {
    if g.size() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

impl EdgeSetGraph {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn epsilon(&self) -> usize {
        self.host.size()
    }

    pub fn mode(&self) -> BuildMode {
        if self.rows.is_some() {
            BuildMode::Explicit
        } else {
            BuildMode::Implicit
        }
    }

    /// `2^ε - 1`.
    pub fn vertex_count(&self) -> u64 {
        full_bits(self.epsilon())
    }

    /// Vertices in mask order.
    pub fn vertices(&self) -> impl Iterator<Item = EdgeMask> + '_ {
        let epsilon = self.epsilon();
        (1..=full_bits(epsilon)).map(move |b| EdgeMask::from_bits_unchecked(b, epsilon))
    }

    fn check(&self, mask: EdgeMask) -> Result<()> {
        if mask.epsilon() != self.epsilon() {
            return Err(Error::HostMismatch(mask.epsilon(), self.epsilon()));
        }
        if mask.is_empty() {
            return Err(Error::EmptyMask);
        }
        Ok(())
    }

    /// Adjacency of two vertices; a vertex is not adjacent to itself.
    pub fn adjacent(&self, s: EdgeMask, t: EdgeMask) -> Result<bool> {
        self.check(s)?;
        self.check(t)?;
        if s == t {
            return Ok(false);
        }
        Ok(match &self.rows {
            Some(rows) => {
                let at = (t.bits() - 1) as usize;
                rows[(s.bits() - 1) as usize][at / 64] >> (at % 64) & 1 == 1
            }
            None => self.table.adjacent_bits(s.bits(), t.bits()),
        })
    }

    /// Stored row count in explicit mode, closed form in implicit mode.
    pub fn degree(&self, s: EdgeMask) -> Result<u64> {
        self.check(s)?;
        Ok(match &self.rows {
            Some(rows) => rows[(s.bits() - 1) as usize]
                .iter()
                .map(|w| u64::from(w.count_ones()))
                .sum(),
            None => degree_from_table(&self.table, s.bits()),
        })
    }

    /// Neighbors of `s` in mask order.
    pub fn neighbors(&self, s: EdgeMask) -> Result<Vec<EdgeMask>> {
        self.check(s)?;
        let mut out = Vec::new();
        for t in self.vertices() {
            if self.adjacent(s, t)? {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// Vertex `m - 1` of the result is the subset with bits `m`.
    pub fn to_graph(&self) -> Result<Graph> {
        Error::limit("edge-set graph export size", MAX_GRAPH_EXPORT_EDGES, self.epsilon())?;
        let count = self.vertex_count() as usize;
        let mut edges = Vec::new();
        for s in self.vertices() {
            for t in self.vertices().filter(|t| t.bits() > s.bits()) {
                if self.adjacent(s, t)? {
                    edges.push(((s.bits() - 1) as usize, (t.bits() - 1) as usize));
                }
            }
        }
        Graph::new(count, edges)
    }

    /// Subgraph induced on the singleton subsets `{e_1}, …, {e_ε}`.
    pub fn singleton_subgraph(&self) -> Result<Graph> {
        let epsilon = self.epsilon();
        let mut edges = Vec::new();
        for i in 0..epsilon {
            for j in i + 1..epsilon {
                let (s, t) = (EdgeMask::singleton(i, epsilon)?, EdgeMask::singleton(j, epsilon)?);
                if self.adjacent(s, t)? {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(epsilon, edges)
    }

    /// Graphviz rendering; vertices in `(s, i)` order, labeled with their
    /// subset and coordinates.
    pub fn to_dot(&self, name: &str) -> Result<String> {
        Error::limit("edge-set graph export size", MAX_GRAPH_EXPORT_EDGES, self.epsilon())?;
        let mut ordered: Vec<(crate::subset::SubsetIndex, EdgeMask)> = self
            .vertices()
            .map(|m| (mask_to_index(m).expect("nonempty"), m))
            .collect();
        ordered.sort();
        let id = |idx: crate::subset::SubsetIndex| format!("v{}_{}", idx.size, idx.rank);
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", name.replace('"', "'")).unwrap();
        for &(idx, mask) in &ordered {
            writeln!(out, "  {} [label=\"{}\\n{}\"];", id(idx), mask, idx).unwrap();
        }
        for (a, &(ia, ma)) in ordered.iter().enumerate() {
            for &(ib, mb) in &ordered[a + 1..] {
                if self.adjacent(ma, mb)? {
                    writeln!(out, "  {} -- {};", id(ia), id(ib)).unwrap();
                }
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

/// `2^ε - 2^(ε - |N(S)|) - [S ∩ N(S) ≠ ∅]`.
pub(crate) fn degree_from_table(table: &NeighborhoodTable, s: u64) -> u64 {
    let epsilon = table.epsilon();
    let reach = table.of_bits(s);
    let outside = epsilon - reach.count_ones() as usize;
    (1u64 << epsilon) - (1u64 << outside) - u64::from(reach & s != 0)
}

/// Degree of `s` in the edge-set graph of `g`, in closed form.
pub fn subset_degree(g: &Graph, s: EdgeMask) -> Result<u64> {
    let table = NeighborhoodTable::new(g)?;
    if s.epsilon() != table.epsilon() {
        return Err(Error::HostMismatch(s.epsilon(), table.epsilon()));
    }
    if s.is_empty() {
        return Err(Error::EmptyMask);
    }
    Ok(degree_from_table(&table, s.bits()))
}

/// `2^ε - 2^(ε - d(e))` for a singleton whose edge has general edge-degree `d`.
pub fn singleton_degree(epsilon: usize, edge_degree: usize) -> u64 {
    (1u64 << epsilon) - (1u64 << (epsilon - edge_degree))
}

/// `Δ = 2(2^(ε-1) - 1)` for a connected host with `ε >= 1`.
pub fn max_degree_formula(epsilon: usize) -> u64 {
    2 * ((1u64 << (epsilon - 1)) - 1)
}

/// Degrees of every vertex of the edge-set graph and their aggregates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub epsilon: usize,
    /// Indexed by `mask - 1`.
    pub degrees: Vec<u64>,
    pub min_degree: u64,
    pub max_degree: u64,
    /// Number of vertices of maximum degree.
    pub max_count: u64,
    pub degree_sum: u64,
    pub connected: bool,
    pub eulerian: bool,
}

impl DegreeProfile {
    pub fn degree(&self, s: EdgeMask) -> u64 {
        self.degrees[(s.bits() - 1) as usize]
    }

    pub fn masks_with_degree(&self, degree: u64) -> impl Iterator<Item = EdgeMask> + '_ {
        self.degrees
            .iter()
            .enumerate()
            .filter(move |&(_, &d)| d == degree)
            .map(|(k, _)| EdgeMask::from_bits_unchecked(k as u64 + 1, self.epsilon))
    }

    /// First vertex (in mask order) of odd degree.
    pub fn first_odd(&self) -> Option<(EdgeMask, u64)> {
        self.degrees
            .iter()
            .position(|d| d % 2 == 1)
            .map(|k| (EdgeMask::from_bits_unchecked(k as u64 + 1, self.epsilon), self.degrees[k]))
    }
}

pub fn degree_profile(g: &Graph) -> Result<DegreeProfile> {
    check_host(g)?;
    let epsilon = g.size();
    Error::limit("degree profile size", MAX_PROFILE_EDGES, epsilon)?;
    let table = NeighborhoodTable::new(g)?;
    let degrees: Vec<u64> = (1..=full_bits(epsilon))
        .map(|s| degree_from_table(&table, s))
        .collect();
    let min_degree = *degrees.iter().min().expect("at least one subset");
    let max_degree = *degrees.iter().max().expect("at least one subset");
    let max_count = degrees.iter().filter(|&&d| d == max_degree).count() as u64;
    let degree_sum = degrees.iter().sum();
    let connected = esg_connected(&table);
    let eulerian = connected && degrees.iter().all(|d| d % 2 == 0);
    Ok(DegreeProfile {
        epsilon,
        degrees,
        min_degree,
        max_degree,
        max_count,
        degree_sum,
        connected,
        eulerian,
    })
}

/// Connectivity of the edge-set graph. When no subset has an empty
/// neighborhood, every vertex other than `E(G)` is adjacent to `E(G)`.
fn esg_connected(table: &NeighborhoodTable) -> bool {
    let epsilon = table.epsilon();
    if epsilon <= 1 {
        return true;
    }
    if (0..epsilon).all(|k| table.edge_bits(k) != 0) {
        return true;
    }
    let count = full_bits(epsilon);
    let mut seen = vec![false; count as usize + 1];
    let mut queue = VecDeque::from([1u64]);
    seen[1] = true;
    let mut reached = 1;
    while let Some(s) = queue.pop_front() {
        for t in 1..=count {
            if !seen[t as usize] && table.adjacent_bits(s, t) {
                seen[t as usize] = true;
                reached += 1;
                queue.push_back(t);
            }
        }
    }
    reached == count
}

/// A singleton on an edge of minimum general edge-degree (lowest index on
/// ties) and its degree in the edge-set graph.
pub fn min_degree_witness(g: &Graph) -> Result<(EdgeMask, u64)> {
    if g.size() == 0 {
        return Err(Error::EmptyGraph);
    }
    let table = NeighborhoodTable::new(g)?;
    let edge = (0..g.size())
        .min_by_key(|&k| (table.edge_bits(k).count_ones(), k))
        .expect("nonempty");
    let mask = EdgeMask::singleton(edge, g.size())?;
    Ok((mask, degree_from_table(&table, mask.bits())))
}

/// True iff every two distinct vertices of the edge-set graph are adjacent.
pub fn is_complete_esg(g: &Graph) -> Result<bool> {
    let profile = degree_profile(g)?;
    Ok(profile.min_degree == (1u64 << profile.epsilon) - 2)
}

/// The set-graph on `{a_1, …, a_n}`: nonempty subsets, adjacent when they
/// intersect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetGraph {
    n: usize,
}

pub fn build_set_graph(n: usize) -> Result<SetGraph> {
    if n == 0 {
        return Err(Error::CardinalityOutOfRange { k: 0, n: 0 });
    }
    Error::limit("set-graph ground set", MAX_SET_GRAPH_ELEMENTS, n)?;
    Ok(SetGraph { n })
}

impl SetGraph {
    pub fn elements(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> u64 {
        full_bits(self.n)
    }

    pub fn adjacent(&self, a: u64, b: u64) -> bool {
        a != b && a & b != 0
    }

    /// Degree by counting intersecting partners.
    pub fn degree(&self, a: u64) -> u64 {
        (1..=self.vertex_count())
            .filter(|&b| self.adjacent(a, b))
            .count() as u64
    }

    /// Vertex `m - 1` is the subset with bits `m`.
    pub fn to_graph(&self) -> Result<Graph> {
        Error::limit("set-graph export size", MAX_GRAPH_EXPORT_EDGES, self.n)?;
        let count = self.vertex_count();
        let mut edges = Vec::new();
        for a in 1..=count {
            for b in a + 1..=count {
                if self.adjacent(a, b) {
                    edges.push(((a - 1) as usize, (b - 1) as usize));
                }
            }
        }
        Graph::new(count as usize, edges)
    }
}

/// Degree of a `k`-subset vertex of the set-graph on `n` elements, by
/// inclusion-exclusion over the families `S_j` of subsets containing `a_j`:
/// `|S_1 ∪ … ∪ S_k| - 1`.
pub fn set_graph_degree_inclusion_exclusion(n: usize, k: usize) -> Result<u64> {
    check_cardinality(n, k)?;
    let mut union: i128 = 0;
    for j in 1..=k {
        let term = i128::from(binomial(k, j)) << (n - j);
        union += if j % 2 == 1 { term } else { -term };
    }
    Ok((union - 1) as u64)
}

/// `2^n - 2^(n-k) - 1`.
pub fn set_graph_degree(n: usize, k: usize) -> Result<u64> {
    check_cardinality(n, k)?;
    Ok((1u64 << n) - (1u64 << (n - k)) - 1)
}

fn check_cardinality(n: usize, k: usize) -> Result<()> {
    Error::limit("set-graph ground set", crate::subset::MAX_MASK_EDGES, n)?;
    if k == 0 || k > n {
        return Err(Error::CardinalityOutOfRange { k, n });
    }
    Ok(())
}

/// `Σ_k C(n,k) (2^n - 2^(n-k) - 1)`.
pub fn set_graph_degree_sum(n: usize) -> Result<u64> {
    let mut sum = 0u64;
    for k in 1..=n {
        sum += binomial(n, k) * set_graph_degree(n, k)?;
    }
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSumComparison {
    pub esg_sum: u64,
    pub set_graph_sum: u64,
    pub esg_exceeds: bool,
}

/// Degree sum of the edge-set graph of `g` against that of the set-graph on
/// `ε` elements.
pub fn compare_degree_sums(g: &Graph) -> Result<DegreeSumComparison> {
    if g.size() < 2 {
        return Err(Error::CardinalityOutOfRange { k: g.size(), n: 2 });
    }
    let esg_sum = degree_profile(g)?.degree_sum;
    let set_graph_sum = set_graph_degree_sum(g.size())?;
    Ok(DegreeSumComparison {
        esg_sum,
        set_graph_sum,
        esg_exceeds: esg_sum > set_graph_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, make_complete, make_cycle, make_path, make_star};

    fn mask(edges: &[usize], epsilon: usize) -> EdgeMask {
        EdgeMask::from_edges(edges.iter().map(|k| k - 1), epsilon).unwrap()
    }

    #[test]
    fn small_edge_set_graphs() {
        let p3 = build_edge_set_graph(&make_path(3).unwrap(), BuildMode::Explicit).unwrap();
        assert_eq!(p3.vertex_count(), 3);
        let gamma = p3.to_graph().unwrap();
        assert!(are_isomorphic(&gamma, &make_cycle(3).unwrap()).is_isomorphic());
        for host in [make_cycle(3).unwrap(), make_star(3).unwrap()] {
            let gamma = build_edge_set_graph(&host, BuildMode::Explicit)
                .unwrap()
                .to_graph()
                .unwrap();
            assert!(are_isomorphic(&gamma, &make_complete(7).unwrap()).is_isomorphic());
        }
        let p2 = build_edge_set_graph(&make_path(2).unwrap(), BuildMode::Implicit).unwrap();
        assert_eq!(p2.to_graph().unwrap(), Graph::empty(1));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            build_edge_set_graph(&Graph::empty(2), BuildMode::Implicit).unwrap_err(),
            Error::EmptyGraph
        );
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            build_edge_set_graph(&split, BuildMode::Implicit).unwrap_err(),
            Error::Disconnected
        );
        let big = make_path(18).unwrap();
        assert!(build_edge_set_graph(&big, BuildMode::Explicit)
            .unwrap_err()
            .is_resource_limit());
        assert!(build_edge_set_graph(&big, BuildMode::Implicit).is_ok());
    }

    #[test]
    fn modes_agree() {
        let g = make_complete(4).unwrap();
        let explicit = build_edge_set_graph(&g, BuildMode::Explicit).unwrap();
        let implicit = build_edge_set_graph(&g, BuildMode::Implicit).unwrap();
        for s in explicit.vertices() {
            assert_eq!(explicit.degree(s).unwrap(), implicit.degree(s).unwrap());
            for t in explicit.vertices() {
                assert_eq!(explicit.adjacent(s, t).unwrap(), implicit.adjacent(s, t).unwrap());
            }
        }
    }

    #[test]
    fn closed_form_degrees() {
        let p4 = make_path(4).unwrap();
        assert_eq!(subset_degree(&p4, mask(&[2], 3)), Ok(6));
        assert_eq!(subset_degree(&p4, mask(&[1], 3)), Ok(4));
        assert_eq!(subset_degree(&p4, mask(&[1, 2], 3)), Ok(6));
        assert_eq!(subset_degree(&p4, EdgeMask::empty(3).unwrap()), Err(Error::EmptyMask));
        assert_eq!(singleton_degree(3, 2), 6);
        assert_eq!(max_degree_formula(1), 0);
        assert_eq!(max_degree_formula(4), 14);
    }

    #[test]
    fn profiles() {
        let p = degree_profile(&make_path(4).unwrap()).unwrap();
        let mut sorted = p.degrees.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![4, 4, 4, 6, 6, 6, 6]);
        assert_eq!((p.max_degree, p.min_degree, p.max_count, p.degree_sum), (6, 4, 4, 36));
        assert!(p.eulerian);

        let c3 = degree_profile(&make_cycle(3).unwrap()).unwrap();
        assert!(c3.degrees.iter().all(|&d| d == 6));
        assert_eq!(c3.max_count, 7);

        let s4 = degree_profile(&make_star(4).unwrap()).unwrap();
        assert!(s4.degrees.iter().all(|&d| d == 14));

        let p2 = degree_profile(&make_path(2).unwrap()).unwrap();
        assert_eq!(p2.degrees, vec![0]);
        assert!(p2.eulerian);
    }

    #[test]
    fn odd_degrees_appear_once_a_subset_touches_itself() {
        // {e1,e2} in P_5 reaches e1,e2,e3 but not e4: 16 - 2 - 1 = 13
        let p5 = make_path(5).unwrap();
        let profile = degree_profile(&p5).unwrap();
        assert_eq!(profile.degree(mask(&[1, 2], 4)), 13);
        assert_eq!(profile.first_odd(), Some((mask(&[1, 2], 4), 13)));
        assert!(profile.connected);
        assert!(!profile.eulerian);
    }

    #[test]
    fn witnesses() {
        assert_eq!(min_degree_witness(&make_path(5).unwrap()), Ok((mask(&[1], 4), 8)));
        let (_, d) = min_degree_witness(&make_cycle(6).unwrap()).unwrap();
        assert_eq!(d, 64 - 16);
        let (_, d) = min_degree_witness(&make_star(5).unwrap()).unwrap();
        assert_eq!(d, 30);
    }

    #[test]
    fn completeness() {
        assert_eq!(is_complete_esg(&make_star(5).unwrap()), Ok(true));
        assert_eq!(is_complete_esg(&make_cycle(4).unwrap()), Ok(false));
        for g in [make_path(3), make_cycle(3), make_star(3), make_path(2)] {
            assert_eq!(is_complete_esg(&g.unwrap()), Ok(true));
        }
    }

    #[test]
    fn set_graphs() {
        let sg = build_set_graph(2).unwrap();
        assert!(are_isomorphic(&sg.to_graph().unwrap(), &make_path(3).unwrap()).is_isomorphic());
        assert_eq!(build_set_graph(1).unwrap().to_graph().unwrap(), Graph::empty(1));
        assert_eq!(build_set_graph(3).unwrap().degree(0b111), 6);
        assert!(build_set_graph(17).unwrap_err().is_resource_limit());

        assert_eq!(set_graph_degree(3, 1), Ok(3));
        assert_eq!(set_graph_degree(3, 3), Ok(6));
        assert_eq!(set_graph_degree(4, 2), Ok(11));
        assert_eq!(set_graph_degree_inclusion_exclusion(4, 2), Ok(11));
        assert!(set_graph_degree(3, 4).is_err());
        assert!(set_graph_degree_inclusion_exclusion(3, 0).is_err());
    }

    #[test]
    fn degree_sums() {
        let c = compare_degree_sums(&make_path(3).unwrap()).unwrap();
        assert_eq!((c.esg_sum, c.set_graph_sum, c.esg_exceeds), (6, 4, true));
        assert!(compare_degree_sums(&make_path(2).unwrap()).is_err());
    }

    #[test]
    fn dot_export_labels() {
        let gamma = build_edge_set_graph(&make_path(4).unwrap(), BuildMode::Explicit).unwrap();
        let dot = gamma.to_dot("P_4").unwrap();
        assert!(dot.contains("v2_2 [label=\"{e1,e3}\\n(2,2)\"];"));
        assert!(!dot.contains("v1_1 -- v1_3;"));
        assert_eq!(dot.matches(" -- ").count(), 18);
    }
}
