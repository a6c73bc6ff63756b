//! Exact isomorphism for small graphs via canonical labeling.
//!
//! The canonical code is the lexicographically smallest upper-triangle
//! adjacency bitstring over all labelings reachable by color refinement plus
//! individualization. Branches on twin vertices are pruned since swapping
//! twins is an automorphism that fixes the current coloring.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order for which [`are_isomorphic`] gives an exact answer.
pub const MAX_EXACT_ISO_ORDER: usize = 12;

/// Largest order for which a canonical code fits in 128 bits.
const MAX_CODE_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic,
    NotIsomorphic,
    /// Fingerprints agree but the graphs are too large for the exact search.
    Undecided,
}

impl IsoOutcome {
    pub fn is_isomorphic(self) -> bool {
        self == IsoOutcome::Isomorphic
    }
}

/// Cheap isomorphism invariants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<usize>,
    pub triangles: usize,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        let mut triangles = 0;
        for &(u, v) in g.edges() {
            let (a, b) = (g.neighbors(u), g.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        triangles += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        Fingerprint {
            order: g.order(),
            size: g.size(),
            degrees: g.degree_sequence().0,
            triangles: triangles / 3,
        }
    }
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> IsoOutcome {
    if Fingerprint::of(g1) != Fingerprint::of(g2) {
        return IsoOutcome::NotIsomorphic;
    }
    if g1.order() > MAX_EXACT_ISO_ORDER {
        return IsoOutcome::Undecided;
    }
    let c1 = canonical_code(g1).expect("order within guard");
    let c2 = canonical_code(g2).expect("order within guard");
    if c1 == c2 {
        IsoOutcome::Isomorphic
    } else {
        IsoOutcome::NotIsomorphic
    }
}

/// Canonical adjacency code; equal codes on equal orders iff isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    let n = g.order();
    if n > MAX_CODE_ORDER {
        return Err(Error::ResourceLimit {
            what: "canonical labeling order",
            limit: MAX_CODE_ORDER,
            actual: n,
        });
    }
    let mut best = None;
    search(g, vec![0; n], &mut best);
    Ok(best.unwrap_or(0))
}

/// The canonical labeling itself: `labeling[v]` is the new index of `v`.
pub(crate) fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    Error::limit("canonical labeling order", MAX_CODE_ORDER, n)?;
    let mut best: Option<(u128, Vec<usize>)> = None;
    search_labeling(g, vec![0; n], &mut best);
    Ok(best.map(|(_, l)| l).unwrap_or_default())
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<u128>) {
    let mut leaf = |code: u128, _: &[u32]| {
        if best.map_or(true, |b| code < b) {
            *best = Some(code);
        }
    };
    walk(g, colors, &mut leaf);
}

fn search_labeling(g: &Graph, colors: Vec<u32>, best: &mut Option<(u128, Vec<usize>)>) {
    let mut leaf = |code: u128, colors: &[u32]| {
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            *best = Some((code, colors.iter().map(|&c| c as usize).collect()));
        }
    };
    walk(g, colors, &mut leaf);
}

fn walk(g: &Graph, colors: Vec<u32>, leaf: &mut dyn FnMut(u128, &[u32])) {
    let colors = refine(g, colors);
    let n = g.order();
    let mut counts = vec![0usize; n.max(1)];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&k| k > 1) else {
        leaf(code_of(g, &colors), &colors);
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &w in &cell {
        if tried.iter().any(|&u| are_twins(g, u, w)) {
            continue;
        }
        tried.push(w);
        let next = colors
            .iter()
            .enumerate()
            .map(|(v, &c)| 2 * c + u32::from(c as usize == target && v != w))
            .collect();
        walk(g, next, leaf);
    }
}

/// 1-dimensional Weisfeiler-Leman refinement to a stable ordered partition.
/// Colors are dense ranks; the order of cells depends only on isomorphism
/// invariant data.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.order();
    colors = densify(&colors);
    let mut classes = distinct(&colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        colors = signatures
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() as u32)
            .collect();
        let now = sorted.len();
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

fn densify(colors: &[u32]) -> Vec<u32> {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    colors
        .iter()
        .map(|c| sorted.binary_search(c).unwrap() as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

fn are_twins(g: &Graph, u: usize, w: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&x| x != w);
    let b = g.neighbors(w).iter().filter(|&&x| x != u);
    a.eq(b)
}

fn code_of(g: &Graph, position: &[u32]) -> u128 {
    let n = g.order();
    let mut code = 0u128;
    for &(u, v) in g.edges() {
        let (a, b) = (position[u] as usize, position[v] as usize);
        let (i, j) = (a.min(b), a.max(b));
        // pairs ordered (0,1),(0,2),..,(0,n-1),(1,2),..; earlier pairs are higher bits
        let index = i * n - i * (i + 1) / 2 + (j - i - 1);
        code |= 1u128 << (127 - index);
    }
    code
}
