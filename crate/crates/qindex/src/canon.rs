//! Canonical forms for graphs of order at most 8.
//!
//! Two graphs are isomorphic if and only if their canonical forms are equal,
//! which turns isomorphism testing during exhaustive scans into a byte
//! comparison. The form is the lexicographically smallest upper-triangle
//! bit string over all vertex orderings that list degrees in ascending
//! order; restricting to such orderings is sound because any isomorphism
//! preserves degrees, and it prunes the search from `n!` to the product of
//! degree-class factorials (further cut by prefix pruning).

use crate::graph::{Graph, GraphError};

/// Largest order the canonical form supports. The search is exponential in
/// degree-class sizes, so it is deliberately capped where the exhaustive
/// sweeps need it.
pub const MAX_CANON_VERTICES: usize = 8;

/// Minimal upper-triangle edge mask over degree-respecting orderings, in
/// [`Graph::edge_mask`] bit order.
pub(crate) fn canonical_mask(g: &Graph) -> Result<u64, GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::CanonOrderTooLarge { n });
    }
    let total_bits = n * (n - 1) / 2;

    let mut adj = [0u8; MAX_CANON_VERTICES];
    let mut deg = [0usize; MAX_CANON_VERTICES];
    for v in 0..n {
        adj[v] = g.neighbors(v) as u8;
        deg[v] = g.degree(v);
    }
    // Position i may only host vertices of the i-th smallest degree.
    let mut target = [0usize; MAX_CANON_VERTICES];
    target[..n].copy_from_slice(&deg[..n]);
    target[..n].sort_unstable();

    // `value` packs pair b of the triangle at bit (total_bits - 1 - b), so
    // integer comparison is lexicographic comparison of the bit string.
    struct Dfs {
        n: usize,
        total_bits: usize,
        adj: [u8; MAX_CANON_VERTICES],
        deg: [usize; MAX_CANON_VERTICES],
        target: [usize; MAX_CANON_VERTICES],
        perm: [usize; MAX_CANON_VERTICES],
        best: u64,
    }

    impl Dfs {
        fn place(&mut self, pos: usize, used: u8, value: u64, bits_done: usize) {
            if pos == self.n {
                if value < self.best {
                    self.best = value;
                }
                return;
            }
            for v in 0..self.n {
                if used >> v & 1 == 1 || self.deg[v] != self.target[pos] {
                    continue;
                }
                // New pairs (0,pos), ..., (pos-1,pos): earlier position =
                // more significant bit within the appended chunk.
                let mut chunk = 0u64;
                for t in 0..pos {
                    chunk = chunk << 1 | (self.adj[v] >> self.perm[t] & 1) as u64;
                }
                let value = value << pos | chunk;
                let bits_done = bits_done + pos;
                // Lexicographic pruning against the best full string.
                if value > self.best >> (self.total_bits - bits_done) {
                    continue;
                }
                self.perm[pos] = v;
                self.place(pos + 1, used | 1 << v, value, bits_done);
            }
        }
    }

    let mut dfs = Dfs {
        n,
        total_bits,
        adj,
        deg,
        target,
        perm: [0; MAX_CANON_VERTICES],
        best: u64::MAX >> (64 - total_bits.max(1)),
    };
    dfs.place(0, 0, 0, 0);

    // Flip back to edge-mask orientation (pair b at bit b).
    let mut mask = 0u64;
    for b in 0..total_bits {
        mask |= (dfs.best >> (total_bits - 1 - b) & 1) << b;
    }
    Ok(mask)
}

/// Canonical byte string of a graph of order at most 8: the order, then the
/// canonical upper triangle packed 8 bits per byte. Equal byte strings
/// characterize isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let n = g.n();
    let mask = canonical_mask(g)?;
    let total_bits = n * (n - 1) / 2;
    let mut out = vec![n as u8];
    out.resize(1 + total_bits.div_ceil(8), 0);
    for b in 0..total_bits {
        if mask >> b & 1 == 1 {
            out[1 + b / 8] |= 1 << (7 - b % 8);
        }
    }
    Ok(out)
}

/// Convenience: build the canonical representative graph itself.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    Ok(Graph::from_edge_mask(g.n(), canonical_mask(g)?).expect("canonical mask is valid"))
}
