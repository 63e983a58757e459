//! Labeled simple graphs on vertex set {0, …, n−1}.
//!
//! Adjacency is kept in row-wise bit arrays so neighbourhood intersection is a
//! word-parallel operation. Graphs with n ≤ 64 use a single word per row; the
//! same representation stretches to the multi-thousand-vertex graphs used by
//! the samplers without a separate code path. Values are immutable after
//! construction and safe to share across threads.

use crate::bits;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("upper-triangle codes support at most {max} vertices, got {n}")]
    CodeTooWide { n: usize, max: usize },
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
    #[error("invalid graph json: {0}")]
    Json(String),
}

/// A sorted, deduplicated subset of the vertex labels of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Builds the set after checking every member lies in `[0, n)`.
    pub fn within(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self, GraphError> {
        let set = Self::new(members);
        if let Some(&v) = set.members.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        Ok(set)
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            members: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; endpoints
    /// out of range and self-loops are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        bits::set(&mut self.bits[u * self.words..(u + 1) * self.words], v);
        bits::set(&mut self.bits[v * self.words..(v + 1) * self.words], u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        u != v && bits::get(self.row(u), v)
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// The subgraph induced by `s`, with the selected vertices relabeled to
    /// `0..s.len()` preserving label order.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.induced_raw(s.as_slice()))
    }

    /// `verts` must be sorted, deduplicated, and in range.
    pub(crate) fn induced_raw(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Subgraph induced by the vertices selected in a bit mask over `[0, n)`.
    pub(crate) fn induced_mask(&self, mask: &[u64]) -> Graph {
        let verts: Vec<usize> = bits::iter(mask).collect();
        self.induced_raw(&verts)
    }

    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let mut g = Graph::empty(a.n + b.n);
        for (u, v) in a.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in b.edges() {
            g.set_edge(a.n + u, a.n + v);
        }
        g
    }

    /// Disjoint union plus all edges between the two sides.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let mut g = Graph::disjoint_union(a, b);
        for u in 0..a.n {
            for v in 0..b.n {
                g.set_edge(u, a.n + v);
            }
        }
        g
    }

    // --- named constructions -------------------------------------------------

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    /// The cycle 0−1−…−(k−1)−0. Requires `k >= 3`.
    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::empty(k);
        for v in 0..k {
            g.set_edge(v, (v + 1) % k);
        }
        g
    }

    /// The path on `k` vertices (`k − 1` edges).
    pub fn path(k: usize) -> Graph {
        let mut g = Graph::empty(k);
        for v in 1..k {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// The star with `leaves` leaves attached to vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v);
        }
        g
    }

    /// A spider: vertex 0 is the hub, and one path of the given length hangs
    /// off it per entry of `legs`. Lengths are edge counts and must be ≥ 1.
    pub fn spider(legs: &[usize]) -> Graph {
        assert!(legs.iter().all(|&l| l >= 1), "spider legs need length >= 1");
        let n = 1 + legs.iter().sum::<usize>();
        let mut g = Graph::empty(n);
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                g.set_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        g
    }

    /// The Petersen graph as the Kneser graph K(5, 2).
    pub fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .collect();
        let mut g = Graph::empty(10);
        for i in 0..10 {
            for j in (i + 1)..10 {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    // --- upper-triangle codes -------------------------------------------------

    /// Maximum `n` for which the row-major upper-triangle code fits in a u64.
    pub const MAX_CODE_N: usize = 11;

    /// Decodes bit `p` of `code` as the presence of the `p`-th pair in
    /// row-major order (0,1), (0,2), …, (0,n−1), (1,2), ….
    pub fn from_upper_code(n: usize, code: u64) -> Result<Graph, GraphError> {
        if n > Self::MAX_CODE_N {
            return Err(GraphError::CodeTooWide {
                n,
                max: Self::MAX_CODE_N,
            });
        }
        let mut g = Graph::empty(n);
        let mut p = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if (code >> p) & 1 != 0 {
                    g.set_edge(u, v);
                }
                p += 1;
            }
        }
        Ok(g)
    }

    pub fn upper_code(&self) -> Result<u64, GraphError> {
        if self.n > Self::MAX_CODE_N {
            return Err(GraphError::CodeTooWide {
                n: self.n,
                max: Self::MAX_CODE_N,
            });
        }
        let mut code = 0u64;
        let mut p = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    code |= 1 << p;
                }
                p += 1;
            }
        }
        Ok(code)
    }

    // --- graph6 ---------------------------------------------------------------

    /// Encodes in the graph6 ASCII format: a size header followed by the
    /// column-major upper triangle packed into 6-bit chunks offset by 63.
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        let n = self.n;
        if n <= 62 {
            out.push(63 + n as u8);
        } else if n <= 258_047 {
            out.push(126);
            out.push(63 + ((n >> 12) & 63) as u8);
            out.push(63 + ((n >> 6) & 63) as u8);
            out.push(63 + (n & 63) as u8);
        } else {
            panic!("graph6 encoding beyond 258047 vertices is not supported");
        }
        let mut chunk = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                chunk <<= 1;
                if self.has_edge(u, v) {
                    chunk |= 1;
                }
                filled += 1;
                if filled == 6 {
                    out.push(63 + chunk);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            chunk <<= 6 - filled;
            out.push(63 + chunk);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
        let data: Vec<u8> = s.trim().bytes().collect();
        if data.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(GraphError::Graph6("byte outside printable range".into()));
        }
        let vals: Vec<u8> = data.iter().map(|&b| b - 63).collect();
        if vals.is_empty() {
            return Err(GraphError::Graph6("empty input".into()));
        }
        let (n, header) = if vals[0] != 63 {
            (vals[0] as usize, 1)
        } else {
            if vals.len() < 4 {
                return Err(GraphError::Graph6("truncated size header".into()));
            }
            if vals[1] == 63 {
                return Err(GraphError::Graph6("oversize graphs not supported".into()));
            }
            (
                ((vals[1] as usize) << 12) | ((vals[2] as usize) << 6) | vals[3] as usize,
                4,
            )
        };
        let pairs = n * n.saturating_sub(1) / 2;
        let need = header + pairs.div_ceil(6);
        if vals.len() != need {
            return Err(GraphError::Graph6(format!(
                "expected {need} bytes for {n} vertices, got {}",
                vals.len()
            )));
        }
        let mut g = Graph::empty(n);
        let mut p = 0;
        for v in 1..n {
            for u in 0..v {
                let byte = vals[header + p / 6];
                if (byte >> (5 - p % 6)) & 1 != 0 {
                    g.set_edge(u, v);
                }
                p += 1;
            }
        }
        let tail_bits = pairs % 6;
        if tail_bits != 0 {
            let padding = vals[need - 1] & ((1 << (6 - tail_bits)) - 1);
            if padding != 0 {
                return Err(GraphError::Graph6("nonzero padding bits".into()));
            }
        }
        Ok(g)
    }

    // --- json -----------------------------------------------------------------

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            n: self.n,
            edges: self.edges(),
        })
        .expect("graph json serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Graph, GraphError> {
        let raw: GraphJson =
            serde_json::from_str(s).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::build(raw.n, &raw.edges)
    }
}

/// External JSON shape: `{"n": <int>, "edges": [[u, v], …]}` with `u < v`,
/// sorted lexicographically.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Free-function form of [`Graph::induced`].
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph, GraphError> {
    g.induced(s)
}

/// Exact labeled-isomorphism test by backtracking over degree-compatible
/// assignments. Intended for the small graphs handled by the partition and
/// completion machinery (≤ 10 or so vertices).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    iso_extend(a, b, 0, &mut map, &mut used, &mut da, &mut db)
}

fn iso_extend(
    a: &Graph,
    b: &Graph,
    u: usize,
    map: &mut [usize],
    used: &mut [bool],
    da: &[usize],
    db: &[usize],
) -> bool {
    if u == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] || da[u] != db[w] {
            continue;
        }
        let consistent = (0..u).all(|prev| a.has_edge(prev, u) == b.has_edge(map[prev], w));
        if consistent {
            map[u] = w;
            used[w] = true;
            if iso_extend(a, b, u + 1, map, used, da, db) {
                return true;
            }
            used[w] = false;
            map[u] = usize::MAX;
        }
    }
    false
}
