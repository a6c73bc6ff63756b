use std::collections::BTreeMap;

use super::iso::{canonical_code, canonical_labeling};
use super::Graph;
use crate::error::{Error, Result};

/// Enumeration runs to any edge count when the order bound is at most this.
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Otherwise the edge bound must be at most this (connected graphs then have
/// at most one more vertex than edges).
pub const MAX_ENUMERATION_EDGES: usize = 10;

/// All connected simple graphs with at most `max_vertices` vertices and at
/// most `max_edges` edges, one per isomorphism class.
///
/// Each graph comes back in canonical labeling with edges sorted, ordered by
/// (order, size, canonical code). `K_1` is included only when
/// `include_trivial` is set.
///
/// Graphs are grown edge by edge: every connected graph with `k + 1` edges
/// arises from a connected graph with `k` edges by adding a chord or a
/// pendant edge (delete a cycle edge or a leaf edge to go back).
pub fn enumerate_connected_graphs(
    max_vertices: usize,
    max_edges: usize,
    include_trivial: bool,
) -> Result<Vec<Graph>> {
    if max_vertices > MAX_ENUMERATION_ORDER && max_edges > MAX_ENUMERATION_EDGES {
        return Err(Error::ResourceLimit {
            what: "enumeration order (with unbounded edges)",
            limit: MAX_ENUMERATION_ORDER,
            actual: max_vertices,
        });
    }
    let mut found: BTreeMap<(usize, usize, u128), Graph> = BTreeMap::new();
    if include_trivial && max_vertices >= 1 {
        let k1 = Graph::empty(1);
        found.insert((1, 0, 0), k1);
    }
    if max_vertices < 2 || max_edges < 1 {
        return Ok(found.into_values().collect());
    }
    let k2 = Graph::new(2, [(0, 1)])?;
    let mut layer: BTreeMap<(usize, u128), Graph> = BTreeMap::new();
    layer.insert((2, canonical_code(&k2)?), k2);
    for size in 1..=max_edges {
        for (&(order, code), g) in &layer {
            found.insert((order, size, code), g.clone());
        }
        if size == max_edges {
            break;
        }
        let mut next = BTreeMap::new();
        for g in layer.values() {
            let n = g.order();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let h = Graph::new(n, g.edges().iter().copied().chain([(u, v)]))?;
                        insert_canonical(&mut next, h)?;
                    }
                }
            }
            if n < max_vertices {
                for u in 0..n {
                    let h = Graph::new(n + 1, g.edges().iter().copied().chain([(u, n)]))?;
                    insert_canonical(&mut next, h)?;
                }
            }
        }
        layer = next;
    }
    Ok(found.into_values().collect())
}

fn insert_canonical(into: &mut BTreeMap<(usize, u128), Graph>, g: Graph) -> Result<()> {
    let labeling = canonical_labeling(&g)?;
    let relabeled = Graph::new(
        g.order(),
        g.edges().iter().map(|&(u, v)| (labeling[u], labeling[v])),
    )?
    .with_sorted_edges();
    let code = canonical_code(&relabeled)?;
    into.entry((g.order(), code)).or_insert(relabeled);
    Ok(())
}
