//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, which keeps the
//! degeneracy peeling and the exhaustive sweeps in [`crate::search`] cheap:
//! degree is a popcount and vertex deletion is a mask. Vertices are always
//! `0..n`.

use serde::Serialize;
use thiserror::Error;

/// Hard cap on the number of vertices (one bitset word per vertex).
pub const MAX_VERTICES: usize = 64;

/// Largest order for which the upper-triangle edge mask of a graph fits in
/// a single `u64` (`C(11, 2) = 55` bits).
pub const MAX_MASK_VERTICES: usize = 11;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} out of range (1..={MAX_VERTICES})")]
    OrderOutOfRange { n: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex} not allowed in a simple graph")]
    LoopEdge { vertex: usize },
    #[error("graph is not {k}-degenerate")]
    NotKDegenerate { k: usize },
    #[error("clique size {k} out of range for order {n} (need 1 <= k <= n)")]
    CliqueOutOfRange { k: usize, n: usize },
    #[error("edge bound needs n >= k, got n = {n}, k = {k}")]
    EdgeBoundDomain { n: usize, k: usize },
    #[error("order {n} too large for edge-mask form (max {MAX_MASK_VERTICES})")]
    MaskOrderTooLarge { n: usize },
    #[error("order {n} too large for canonical form (max {max})", max = crate::canon::MAX_CANON_VERTICES)]
    CanonOrderTooLarge { n: usize },
    #[error("edge mask has bits beyond the {bits} pairs of an order-{n} graph")]
    MaskTooWide { n: usize, bits: usize },
}

/// Iterate the set bit positions of a word in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Index of the pair `(i, j)`, `i < j`, in the column-major upper-triangle
/// order `(0,1), (0,2), (1,2), (0,3), ...` shared by [`Graph::edge_mask`],
/// the graph6 codec, and the canonical form.
#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// A simple undirected graph with vertex set `0..n`, `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Order, size, and degree statistics of a graph, the inputs every closed
/// bound in [`crate::bounds`] consumes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    /// Number of vertices.
    pub n: usize,
    /// Number of edges.
    pub m: usize,
    /// Minimum degree.
    pub min_degree: usize,
    /// Maximum degree.
    pub max_degree: usize,
    /// Degree of each vertex, indexed by vertex.
    pub degrees: Vec<usize>,
}

/// A vertex ordering witnessing the degeneracy of a graph: every vertex has
/// at most `degeneracy` neighbors among the vertices placed before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// The vertices in witness order. The vertex peeled first (a minimum
    /// degree vertex of the whole graph) sits at the *end*.
    pub order: Vec<usize>,
    /// `back_degrees[i]` = number of neighbors of `order[i]` among
    /// `order[..i]`; equals the degree of `order[i]` when it was peeled.
    pub back_degrees: Vec<usize>,
    /// `max(back_degrees)`, or 0 for the one-vertex graph.
    pub degeneracy: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; loops are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// The split graph `S(n, k)`: a clique on vertices `0..k` joined
    /// completely to the independent set `k..n`. Requires `1 <= k <= n`.
    ///
    /// `S(n, k)` is k-degenerate for `k < n` and has exactly
    /// [`max_degenerate_edges`]`(n, k)` edges; it is the conjectured unique
    /// maximizer of both spectral indices over k-degenerate graphs.
    pub fn split_clique(n: usize, k: usize) -> Result<Self, GraphError> {
        if k == 0 || k > n {
            return Err(GraphError::CliqueOutOfRange { k, n });
        }
        let mut g = Graph::empty(n)?;
        let all: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
        let clique: u64 = (1u64 << k) - 1;
        for v in 0..n {
            if v < k {
                g.adj[v] = all & !(1 << v);
            } else {
                g.adj[v] = clique;
            }
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if present {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    /// Copy of the graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::LoopEdge { vertex: u });
        }
        let mut g = self.clone();
        g.set_edge(u, v, true);
        Ok(g)
    }

    /// All edges `(u, v)` with `u < v` in row-major (lexicographic) order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Decode a graph of order `n <= 11` from its upper-triangle edge mask:
    /// bit [`pair_index`]`(i, j)` set means edge `{i, j}`. This is the raw
    /// enumeration coordinate used by the exhaustive sweeps.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderOutOfRange { n });
        }
        if n > MAX_MASK_VERTICES {
            return Err(GraphError::MaskOrderTooLarge { n });
        }
        let bits_needed = n * (n - 1) / 2;
        if bits_needed < 64 && mask >> bits_needed != 0 {
            return Err(GraphError::MaskTooWide { n, bits: bits_needed });
        }
        let mut g = Graph::empty(n)?;
        let mut b = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> b & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
                b += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]. Panics if `n > 11`.
    pub fn edge_mask(&self) -> u64 {
        assert!(
            self.n <= MAX_MASK_VERTICES,
            "edge_mask needs n <= {MAX_MASK_VERTICES}, got {}",
            self.n
        );
        let mut mask = 0u64;
        for j in 1..self.n {
            for i in bits(self.adj[j] & ((1 << j) - 1)) {
                mask |= 1 << pair_index(i, j);
            }
        }
        mask
    }

    /// Order, size, and degree statistics in one pass.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { n: self.n, m, min_degree, max_degree, degrees }
    }

    /// Peel minimum-degree vertices (lowest index on ties) and return the
    /// reversed removal order, so that every vertex has at most
    /// `degeneracy` neighbors among its predecessors.
    pub fn degeneracy_ordering(&self) -> DegeneracyOrdering {
        let n = self.n;
        let mut alive: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
        let mut order = vec![0usize; n];
        let mut back_degrees = vec![0usize; n];
        for step in (0..n).rev() {
            // Scan ascending so the lowest index wins ties.
            let mut best = usize::MAX;
            let mut best_deg = usize::MAX;
            for v in bits(alive) {
                let d = (self.adj[v] & alive).count_ones() as usize;
                if d < best_deg {
                    best_deg = d;
                    best = v;
                }
            }
            alive &= !(1 << best);
            order[step] = best;
            back_degrees[step] = best_deg;
        }
        let degeneracy = back_degrees.iter().copied().max().unwrap_or(0);
        DegeneracyOrdering { order, back_degrees, degeneracy }
    }

    /// Degeneracy: the smallest `k` such that every subgraph has a vertex of
    /// degree at most `k`; equivalently `max` of the peel degrees.
    pub fn degeneracy(&self) -> usize {
        self.degeneracy_ordering().degeneracy
    }

    /// Whether every subgraph has minimum degree at most `k`. Runs the peel
    /// with early exit, so failing graphs are detected before a full
    /// ordering is built.
    pub fn is_k_degenerate(&self, k: usize) -> bool {
        if k >= self.n - 1 {
            return true;
        }
        let mut alive: u64 = if self.n == 64 { !0 } else { (1 << self.n) - 1 };
        for _ in 0..self.n {
            let mut best = usize::MAX;
            let mut best_deg = usize::MAX;
            for v in bits(alive) {
                let d = (self.adj[v] & alive).count_ones() as usize;
                if d < best_deg {
                    best_deg = d;
                    best = v;
                }
            }
            if best_deg > k {
                return false;
            }
            alive &= !(1 << best);
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen: u64 = 0;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp: u64 = 1 << start;
            loop {
                let mut grown = comp;
                for v in bits(comp) {
                    grown |= self.adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(bits(comp).collect());
        }
        comps
    }

    /// Greedily add edges in lexicographic order while the graph stays
    /// k-degenerate, repeating until no edge can be added. The input must
    /// itself be k-degenerate.
    ///
    /// For `k < n` the result always has exactly
    /// [`max_degenerate_edges`]`(n, k)` edges: maximal k-degenerate graphs
    /// all meet the edge bound with equality.
    pub fn complete_to_maximal(&self, k: usize) -> Result<Self, GraphError> {
        if !self.is_k_degenerate(k) {
            return Err(GraphError::NotKDegenerate { k });
        }
        let mut g = self.clone();
        loop {
            let mut grew = false;
            for u in 0..g.n {
                for v in (u + 1)..g.n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    g.set_edge(u, v, true);
                    if g.is_k_degenerate(k) {
                        grew = true;
                    } else {
                        g.set_edge(u, v, false);
                    }
                }
            }
            if !grew {
                break;
            }
        }
        Ok(g)
    }
}

/// Maximum number of edges of a k-degenerate graph of order `n >= k`:
/// `k*n - k*(k+1)/2`. Attained by `S(n, k)` (for `k >= 1`) and by every
/// maximal k-degenerate graph.
pub fn max_degenerate_edges(n: usize, k: usize) -> Result<usize, GraphError> {
    if n < k {
        return Err(GraphError::EdgeBoundDomain { n, k });
    }
    Ok(k * n - k * (k + 1) / 2)
}
