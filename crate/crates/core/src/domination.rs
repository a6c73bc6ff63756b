//! Edge domination, connected edge dominating (CED) sets, the CED-number
//! and CED-index, and the maximum-degree count of the edge-set graph.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::esg::{degree_profile, DegreeProfile};
use crate::graph::{is_connected, Graph};
use crate::subset::{full_bits, EdgeMask, NeighborhoodTable};

/// Largest host for the layered minimum-CED search.
pub const MAX_CED_SEARCH_EDGES: usize = 20;
/// Largest host for a census of every CED set.
pub const MAX_CED_CENSUS_EDGES: usize = 16;

fn check_mask(g: &Graph, x: EdgeMask) -> Result<()> {
    if x.epsilon() != g.size() {
        return Err(Error::HostMismatch(x.epsilon(), g.size()));
    }
    if x.is_empty() {
        return Err(Error::EmptyMask);
    }
    Ok(())
}

/// Every edge outside `x` is adjacent to an edge of `x`.
pub fn is_edge_dominating(g: &Graph, x: EdgeMask) -> Result<bool> {
    check_mask(g, x)?;
    let table = NeighborhoodTable::new(g)?;
    Ok(dominates(&table, x.bits()))
}

/// Edge dominating and the edges of `x` form a connected subgraph.
pub fn is_ced(g: &Graph, x: EdgeMask) -> Result<bool> {
    check_mask(g, x)?;
    let table = NeighborhoodTable::new(g)?;
    Ok(ced_bits(&table, x.bits()))
}

fn dominates(table: &NeighborhoodTable, x: u64) -> bool {
    let outside = !x & full_bits(table.epsilon());
    outside & !table.of_bits(x) == 0
}

fn edges_connected(table: &NeighborhoodTable, x: u64) -> bool {
    if x == 0 {
        return true;
    }
    let mut reached = x & x.wrapping_neg();
    loop {
        let grown = reached | (table.of_bits(reached) & x);
        if grown == reached {
            return reached == x;
        }
        reached = grown;
    }
}

fn ced_bits(table: &NeighborhoodTable, x: u64) -> bool {
    x != 0 && edges_connected(table, x) && dominates(table, x)
}

/// Minimum CED sets and counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CedReport {
    pub ced_number: usize,
    /// Number of CED sets of minimum cardinality.
    pub ced_index: u64,
    /// In lexicographic order of their sorted edge lists.
    #[serde(serialize_with = "serialize_masks")]
    pub smallest_sets: Vec<EdgeMask>,
    /// Number of all CED sets; only computed up to [`MAX_CED_CENSUS_EDGES`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_ced_count: Option<u64>,
}

fn serialize_masks<S: Serializer>(masks: &[EdgeMask], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(masks.iter().map(|m| m.to_string()))
}

pub fn ced_report(g: &Graph) -> Result<CedReport> {
    let epsilon = g.size();
    if epsilon == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Error::limit("CED search size", MAX_CED_SEARCH_EDGES, epsilon)?;
    let table = NeighborhoodTable::new(g)?;
    let mut smallest = Vec::new();
    let mut ced_number = 0;
    for size in 1..=epsilon {
        for_each_combination(epsilon, size, |x| {
            if ced_bits(&table, x) {
                smallest.push(EdgeMask::from_bits_unchecked(x, epsilon));
            }
        });
        if !smallest.is_empty() {
            ced_number = size;
            break;
        }
    }
    let all_ced_count = (epsilon <= MAX_CED_CENSUS_EDGES)
        .then(|| (1..=full_bits(epsilon)).filter(|&x| ced_bits(&table, x)).count() as u64);
    Ok(CedReport {
        ced_number,
        ced_index: smallest.len() as u64,
        smallest_sets: smallest,
        all_ced_count,
    })
}

/// Visits the `size`-subsets of `0..n` in lexicographic order of their
/// sorted element lists.
fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(u64)) {
    let mut picks: Vec<usize> = (0..size).collect();
    loop {
        visit(picks.iter().fold(0, |acc, &k| acc | 1 << k));
        let Some(slot) = (0..size).rev().find(|&j| picks[j] < n - size + j) else {
            return;
        };
        picks[slot] += 1;
        for j in slot + 1..size {
            picks[j] = picks[j - 1] + 1;
        }
    }
}

/// Number of vertices of the edge-set graph attaining its maximum degree.
pub fn max_degree_vertex_count(g: &Graph) -> Result<u64> {
    Ok(degree_profile(g)?.max_count)
}

/// Outcome of checking that every superset of a CED set has maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersetCheck {
    pub ced_sets: u64,
    /// Subsets containing at least one CED set.
    pub supersets: u64,
    pub max_degree: u64,
    /// A CED set, a superset of it, and that superset's degree, when the
    /// degree falls short of the maximum.
    pub counterexample: Option<(EdgeMask, EdgeMask, u64)>,
}

impl SupersetCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn verify_ced_superset_property(g: &Graph) -> Result<SupersetCheck> {
    let profile = degree_profile(g)?;
    Error::limit("CED superset sweep size", MAX_CED_SEARCH_EDGES, g.size())?;
    Ok(superset_check(g, &profile))
}

pub(crate) fn superset_check(g: &Graph, profile: &DegreeProfile) -> SupersetCheck {
    let epsilon = g.size();
    let table = NeighborhoodTable::new(g).expect("profile succeeded");
    let count = full_bits(epsilon) as usize;
    // contained[s]: some CED subset of s, if any
    let mut contained: Vec<u64> = vec![0; count + 1];
    let mut ced_sets = 0;
    let mut supersets = 0;
    let mut counterexample = None;
    for s in 1..=count as u64 {
        let found = if ced_bits(&table, s) {
            ced_sets += 1;
            s
        } else {
            let mut rest = s;
            let mut hit = 0;
            while rest != 0 && hit == 0 {
                let bit = rest & rest.wrapping_neg();
                hit = contained[(s & !bit) as usize];
                rest &= rest - 1;
            }
            hit
        };
        contained[s as usize] = found;
        if found != 0 {
            supersets += 1;
            let degree = profile.degrees[(s - 1) as usize];
            if degree != profile.max_degree && counterexample.is_none() {
                counterexample = Some((
                    EdgeMask::from_bits_unchecked(found, epsilon),
                    EdgeMask::from_bits_unchecked(s, epsilon),
                    degree,
                ));
            }
        }
    }
    SupersetCheck {
        ced_sets,
        supersets,
        max_degree: profile.max_degree,
        counterexample,
    }
}

/// For each edge `e`, whether `E(G) - e` dominates and whether its edges
/// stay connected.
pub fn edge_deleted_sets(g: &Graph) -> Result<Vec<(usize, bool, bool)>> {
    let table = NeighborhoodTable::new(g)?;
    let full = full_bits(g.size());
    Ok((0..g.size())
        .map(|k| {
            let x = full & !(1 << k);
            (k, x != 0 && dominates(&table, x), edges_connected(&table, x))
        })
        .collect())
}
