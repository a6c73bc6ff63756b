//! Edge subsets as bitmasks, their `(s, i)` coordinates, and edge
//! neighborhoods.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Widest host (in edges) an [`EdgeMask`] can describe; keeps `2^ε` in a `u64`.
pub const MAX_MASK_EDGES: usize = 63;

/// A subset of the edges of a host graph with `epsilon` edges.
/// Bit `k` set means edge `e_{k+1}` is in the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeMask {
    bits: u64,
    epsilon: u8,
}

impl EdgeMask {
    pub fn new(bits: u64, epsilon: usize) -> Result<Self> {
        check_width(epsilon)?;
        if bits >> epsilon != 0 {
            return Err(Error::MaskOutOfRange { bits, epsilon });
        }
        Ok(EdgeMask {
            bits,
            epsilon: epsilon as u8,
        })
    }

    pub(crate) fn from_bits_unchecked(bits: u64, epsilon: usize) -> Self {
        debug_assert!(epsilon <= MAX_MASK_EDGES && bits >> epsilon == 0);
        EdgeMask {
            bits,
            epsilon: epsilon as u8,
        }
    }

    pub fn empty(epsilon: usize) -> Result<Self> {
        EdgeMask::new(0, epsilon)
    }

    /// The whole edge set `E(G)`.
    pub fn full(epsilon: usize) -> Result<Self> {
        check_width(epsilon)?;
        Ok(EdgeMask::from_bits_unchecked(full_bits(epsilon), epsilon))
    }

    pub fn singleton(edge: usize, epsilon: usize) -> Result<Self> {
        EdgeMask::from_edges([edge], epsilon)
    }

    /// Mask from 0-based edge indices.
    pub fn from_edges(edges: impl IntoIterator<Item = usize>, epsilon: usize) -> Result<Self> {
        check_width(epsilon)?;
        let mut bits = 0;
        for k in edges {
            if k >= epsilon {
                return Err(Error::EdgeOutOfRange {
                    index: k,
                    size: epsilon,
                });
            }
            bits |= 1 << k;
        }
        Ok(EdgeMask::from_bits_unchecked(bits, epsilon))
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn epsilon(self) -> usize {
        self.epsilon as usize
    }

    /// Cardinality of the subset.
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, edge: usize) -> bool {
        edge < self.epsilon() && self.bits >> edge & 1 == 1
    }

    /// 0-based edge indices in ascending order.
    pub fn edges(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let k = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k)
            }
        })
    }

    pub fn is_subset_of(self, other: EdgeMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(self, other: EdgeMask) -> bool {
        self.bits & other.bits != 0
    }

    pub fn union(self, other: EdgeMask) -> EdgeMask {
        EdgeMask::from_bits_unchecked(self.bits | other.bits, self.epsilon())
    }

    pub fn intersection(self, other: EdgeMask) -> EdgeMask {
        EdgeMask::from_bits_unchecked(self.bits & other.bits, self.epsilon())
    }

    pub fn complement(self) -> EdgeMask {
        EdgeMask::from_bits_unchecked(!self.bits & full_bits(self.epsilon()), self.epsilon())
    }

    /// Machine form, e.g. `0x5` for `{e1,e3}`.
    pub fn to_hex(self) -> String {
        format!("{:#x}", self.bits)
    }

    pub fn index(self) -> Result<SubsetIndex> {
        mask_to_index(self)
    }
}

/// Sorted 1-based edge list, e.g. `{e1,e3}`.
impl fmt::Display for EdgeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, k) in self.edges().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "e{}", k + 1)?;
        }
        f.write_str("}")
    }
}

pub(crate) fn full_bits(epsilon: usize) -> u64 {
    if epsilon == 0 {
        0
    } else {
        u64::MAX >> (64 - epsilon)
    }
}

fn check_width(epsilon: usize) -> Result<()> {
    Error::limit("edge mask width", MAX_MASK_EDGES, epsilon)
}

/// Position of a subset: cardinality `size` and 1-based `rank` among the
/// `size`-element subsets in lexicographic order of their sorted edge lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubsetIndex {
    #[serde(rename = "s")]
    pub size: usize,
    #[serde(rename = "i")]
    pub rank: u64,
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.size, self.rank)
    }
}

/// `C(n, k)`; exact for every `n <= 63`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc as u64
}

pub fn mask_to_index(mask: EdgeMask) -> Result<SubsetIndex> {
    if mask.is_empty() {
        return Err(Error::EmptyMask);
    }
    let epsilon = mask.epsilon();
    let size = mask.len();
    // count the subsets that agree on a prefix and then take a smaller element
    let mut before = 0u64;
    let mut next_free = 0;
    for (position, element) in mask.edges().enumerate() {
        let remaining = size - position - 1;
        for smaller in next_free..element {
            before += binomial(epsilon - smaller - 1, remaining);
        }
        next_free = element + 1;
    }
    Ok(SubsetIndex {
        size,
        rank: before + 1,
    })
}

pub fn index_to_mask(index: SubsetIndex, epsilon: usize) -> Result<EdgeMask> {
    check_width(epsilon)?;
    let SubsetIndex { size, rank } = index;
    if size == 0 || size > epsilon || rank == 0 || rank > binomial(epsilon, size) {
        return Err(Error::SubsetIndexOutOfRange {
            size,
            rank,
            epsilon,
        });
    }
    let mut left = rank - 1;
    let mut bits = 0u64;
    let mut candidate = 0;
    for position in 0..size {
        let remaining = size - position - 1;
        loop {
            let block = binomial(epsilon - candidate - 1, remaining);
            if left < block {
                break;
            }
            left -= block;
            candidate += 1;
        }
        bits |= 1 << candidate;
        candidate += 1;
    }
    Ok(EdgeMask::from_bits_unchecked(bits, epsilon))
}

/// Per-edge neighborhood masks of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodTable {
    epsilon: usize,
    masks: Vec<u64>,
}

impl NeighborhoodTable {
    pub fn new(g: &Graph) -> Result<Self> {
        let epsilon = g.size();
        check_width(epsilon)?;
        let mut incident = vec![0u64; g.order()];
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            incident[u] |= 1 << k;
            incident[v] |= 1 << k;
        }
        let masks = g
            .edges()
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| (incident[u] | incident[v]) & !(1 << k))
            .collect();
        Ok(NeighborhoodTable { epsilon, masks })
    }

    pub fn epsilon(&self) -> usize {
        self.epsilon
    }

    /// Edges adjacent to edge `k`.
    pub fn edge(&self, k: usize) -> EdgeMask {
        EdgeMask::from_bits_unchecked(self.masks[k], self.epsilon)
    }

    pub fn edge_bits(&self, k: usize) -> u64 {
        self.masks[k]
    }

    /// `N(S)` as raw bits.
    pub fn of_bits(&self, subset: u64) -> u64 {
        let mut rest = subset;
        let mut out = 0;
        while rest != 0 {
            out |= self.masks[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    }

    pub fn of(&self, subset: EdgeMask) -> EdgeMask {
        EdgeMask::from_bits_unchecked(self.of_bits(subset.bits()), self.epsilon)
    }

    /// Cross-adjacency of two subsets without argument checks.
    pub fn adjacent_bits(&self, s: u64, t: u64) -> bool {
        self.of_bits(s) & t != 0
    }

    fn check(&self, mask: EdgeMask) -> Result<()> {
        if mask.epsilon() != self.epsilon {
            return Err(Error::HostMismatch(mask.epsilon(), self.epsilon));
        }
        if mask.is_empty() {
            return Err(Error::EmptyMask);
        }
        Ok(())
    }
}

/// Mask of the edges adjacent to edge `k`; never contains `k` itself.
pub fn edge_neighborhood(g: &Graph, k: usize) -> Result<EdgeMask> {
    g.endpoints(k)?;
    Ok(NeighborhoodTable::new(g)?.edge(k))
}

/// `N(S)`: union of the neighborhoods of the edges in `S`. May meet `S`.
pub fn subset_neighborhood(g: &Graph, subset: EdgeMask) -> Result<EdgeMask> {
    let table = NeighborhoodTable::new(g)?;
    table.check(subset)?;
    Ok(table.of(subset))
}

/// Adjacency in the edge-set graph: some edge of `s` is adjacent to some edge
/// of `t`. Overlap alone does not make two subsets adjacent.
pub fn subsets_adjacent(g: &Graph, s: EdgeMask, t: EdgeMask) -> Result<bool> {
    let table = NeighborhoodTable::new(g)?;
    table.check(s)?;
    table.check(t)?;
    if s == t {
        return Err(Error::IdenticalSubsets);
    }
    Ok(table.adjacent_bits(s.bits(), t.bits()))
}
