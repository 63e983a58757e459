//! Witnessing-partition machinery: (s, c)-partition search, the witnessing
//! partition number and its failing-shape set, witnessing and certificate
//! verification against a forbidden graph, minimal completion sets, and the
//! finite-prefix criticality diagnostic.
//!
//! Ordered partitions of the forbidden graph's vertex set allow empty pieces
//! throughout: a partition into s stable sets and c cliques may leave blocks
//! empty. This keeps the failing-shape set downward consistent and matches the
//! block-count conventions the experiments rely on.

use crate::families::{
    contains_induced, enumerate_graphs, is_member, FamilyClass, FamilyError,
};
use crate::graph::{are_isomorphic, Graph, GraphError, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hosts above this size would make the ordered-partition enumerations blow
/// past the desk-scale budget.
pub const MAX_PATTERN_VERTICES: usize = 16;

#[derive(Debug, Error, PartialEq)]
pub enum PartitionError {
    #[error("operation needs a nonempty graph")]
    EmptyGraph,
    #[error("partition has {got} blocks but the forbidden graph needs {expected}")]
    BlockCountMismatch { expected: usize, got: usize },
    #[error("certificate lists {families} families for {blocks} blocks")]
    LengthMismatch { blocks: usize, families: usize },
    #[error("forbidden graph on {n} vertices exceeds the partition bound {max}")]
    PatternTooLarge { n: usize, max: usize },
    #[error("vertex {0} appears in more than one block")]
    OverlappingBlocks(usize),
    #[error("blocks do not cover vertex {0}")]
    NotCovering(usize),
    #[error("eqi tolerance must lie in (0, 1], got {0}")]
    MuOutOfRange(f64),
    #[error("criticality diagnostic needs wpn ≥ 2, got {0}")]
    DiagnosticNeedsWpn2(usize),
    #[error(transparent)]
    Census(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A partition shape: `stable` stable-set blocks followed by `cliques` clique
/// blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionShape {
    pub stable: usize,
    pub cliques: usize,
}

impl PartitionShape {
    pub fn new(stable: usize, cliques: usize) -> Self {
        PartitionShape { stable, cliques }
    }

    pub fn total(self) -> usize {
        self.stable + self.cliques
    }

    /// All shapes with `stable + cliques = t`, stable count ascending.
    pub fn with_total(t: usize) -> impl Iterator<Item = PartitionShape> {
        (0..=t).map(move |s| PartitionShape::new(s, t - s))
    }
}

/// An ordered partition of `[n]` into blocks, with the eqi-partition tolerance
/// μ it was requested under and a validator flag recording whether every block
/// size is within `n^(1−μ)` of the mean.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexPartition {
    blocks: Vec<VertexSet>,
    mu: f64,
    eqi: bool,
}

impl VertexPartition {
    pub fn new(blocks: Vec<VertexSet>, mu: f64) -> Result<Self, PartitionError> {
        if !(mu > 0.0 && mu <= 1.0) {
            return Err(PartitionError::MuOutOfRange(mu));
        }
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n];
        for block in &blocks {
            for v in block.iter() {
                if v >= n {
                    return Err(PartitionError::NotCovering(v));
                }
                if seen[v] {
                    return Err(PartitionError::OverlappingBlocks(v));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::NotCovering(v));
        }
        let eqi = is_eqi(&blocks, n, mu);
        Ok(VertexPartition { blocks, mu, eqi })
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn is_eqi(&self) -> bool {
        self.eqi
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

fn is_eqi(blocks: &[VertexSet], n: usize, mu: f64) -> bool {
    let k = blocks.len();
    if k == 0 {
        return true;
    }
    let mean = n as f64 / k as f64;
    let slack = (n as f64).powf(1.0 - mu);
    blocks
        .iter()
        .all(|b| (b.len() as f64 - mean).abs() <= slack)
}

/// One hereditary family per block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate(pub Vec<FamilyClass>);

impl Certificate {
    pub fn families(&self) -> &[FamilyClass] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

// --- (s, c)-partition search ---------------------------------------------------

/// Searches for a partition of the vertex set into `shape.stable` stable sets
/// and `shape.cliques` cliques, blocks possibly empty. Returns the first
/// witness in lexicographic order (vertices ascending, block index ascending),
/// or `None` when no such partition exists.
pub fn can_partition(h: &Graph, shape: PartitionShape) -> Option<VertexPartition> {
    let n = h.n();
    let k = shape.total();
    if k == 0 {
        return (n == 0).then(|| {
            VertexPartition::new(Vec::new(), 1.0).expect("empty partition is valid")
        });
    }
    let mut assign = vec![usize::MAX; n];
    if !assign_blocks(h, shape, 0, &mut assign) {
        return None;
    }
    let blocks: Vec<VertexSet> = (0..k)
        .map(|b| VertexSet::new((0..n).filter(|&v| assign[v] == b)))
        .collect();
    Some(VertexPartition::new(blocks, 1.0).expect("search output partitions [n]"))
}

fn assign_blocks(h: &Graph, shape: PartitionShape, v: usize, assign: &mut [usize]) -> bool {
    if v == h.n() {
        return true;
    }
    for b in 0..shape.total() {
        let compatible = if b < shape.stable {
            (0..v).all(|u| assign[u] != b || !h.has_edge(u, v))
        } else {
            (0..v).all(|u| assign[u] != b || h.has_edge(u, v))
        };
        if compatible {
            assign[v] = b;
            if assign_blocks(h, shape, v + 1, assign) {
                return true;
            }
            assign[v] = usize::MAX;
        }
    }
    false
}

/// The witnessing partition number of `h` together with the failing shapes at
/// that level: the maximum t such that some shape with s + c = t admits no
/// partition of `h`. Brute force over t descending from the vertex count.
pub fn wpn(h: &Graph) -> Result<WpnResult, PartitionError> {
    if h.n() == 0 {
        return Err(PartitionError::EmptyGraph);
    }
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(PartitionError::PatternTooLarge {
            n: h.n(),
            max: MAX_PATTERN_VERTICES,
        });
    }
    for t in (0..=h.n()).rev() {
        let failing: Vec<PartitionShape> = PartitionShape::with_total(t)
            .filter(|&shape| can_partition(h, shape).is_none())
            .collect();
        if !failing.is_empty() {
            return Ok(WpnResult { value: t, failing });
        }
    }
    unreachable!("the (0,0) shape fails on every nonempty graph")
}

/// Witnessing partition number and the failing-shape set at that level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WpnResult {
    pub value: usize,
    pub failing: Vec<PartitionShape>,
}

impl WpnResult {
    /// External JSON shape: `{"wpn": t, "failingShapes": [[s, c], …]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct WpnJson {
            wpn: usize,
            #[serde(rename = "failingShapes")]
            failing_shapes: Vec<(usize, usize)>,
        }
        serde_json::to_string(&WpnJson {
            wpn: self.value,
            failing_shapes: self.failing.iter().map(|s| (s.stable, s.cliques)).collect(),
        })
        .expect("wpn json serialization cannot fail")
    }
}

// --- subset tables and partition reachability ------------------------------------

/// `table[pos][mask]` says whether the piece selected by `mask` may be placed
/// at position `pos`. Both placement predicates used here are hereditary, so a
/// piece is rejected outright when dropping its lowest vertex already fails.
fn build_piece_table(
    h: &Graph,
    positions: usize,
    mut ok: impl FnMut(usize, &Graph) -> bool,
) -> Vec<Vec<bool>> {
    let v = h.n();
    let full = 1usize << v;
    let mut table = vec![vec![false; full]; positions];
    let mut pieces: Vec<Option<Graph>> = vec![None; full];
    for mask in 0..full {
        let verts: Vec<usize> = (0..v).filter(|&i| mask >> i & 1 != 0).collect();
        pieces[mask] = Some(h.induced_raw(&verts));
    }
    for pos in 0..positions {
        for mask in 0..full {
            if mask != 0 {
                let low = mask & mask.wrapping_neg();
                if !table[pos][mask & !low] {
                    continue;
                }
            }
            table[pos][mask] = ok(pos, pieces[mask].as_ref().expect("piece precomputed"));
        }
    }
    table
}

/// Whether the full vertex set can be split into `table.len()` ordered pieces
/// with piece i accepted by `table[i]`. Subset DP over the reachable unions.
fn ordered_partition_exists(v: usize, table: &[Vec<bool>]) -> bool {
    let full = (1usize << v) - 1;
    let mut reach = vec![false; full + 1];
    reach[0] = true;
    for layer in table {
        let mut next = vec![false; full + 1];
        for s in 0..=full {
            if !reach[s] {
                continue;
            }
            let free = full & !s;
            let mut t = free;
            loop {
                if layer[t] {
                    next[s | t] = true;
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & free;
            }
        }
        reach = next;
    }
    reach[full]
}

/// Whether the vertex set of `g` admits an ordered partition with piece i a
/// member of `families[i]` (pieces may be empty). Used both for certificate
/// condition (ii) on the forbidden graph and as a census statistic on hosts.
pub fn family_partition_exists(
    g: &Graph,
    families: &[FamilyClass],
) -> Result<bool, PartitionError> {
    if g.n() > MAX_PATTERN_VERTICES {
        return Err(PartitionError::PatternTooLarge {
            n: g.n(),
            max: MAX_PATTERN_VERTICES,
        });
    }
    let table = build_piece_table(g, families.len(), |pos, piece| {
        is_member(piece, families[pos])
    });
    Ok(ordered_partition_exists(g.n(), &table))
}

// --- witnessing and certificates ---------------------------------------------------

/// Whether `p` witnesses `h`-freeness of `g`: for every ordered partition
/// (W₁, …, W_t) of V(h), some piece h[Wᵢ] fails to embed induced into the
/// corresponding block g[Vᵢ]. The block count must equal wpn(h).
pub fn verify_witnessing(
    g: &Graph,
    p: &VertexPartition,
    h: &Graph,
) -> Result<bool, PartitionError> {
    let t = wpn(h)?.value;
    if p.blocks().len() != t {
        return Err(PartitionError::BlockCountMismatch {
            expected: t,
            got: p.blocks().len(),
        });
    }
    let block_graphs: Vec<Graph> = p
        .blocks()
        .iter()
        .map(|b| g.induced(b))
        .collect::<Result<_, _>>()?;
    let table = build_piece_table(h, t, |pos, piece| {
        contains_induced(&block_graphs[pos], piece).is_some()
    });
    Ok(!ordered_partition_exists(h.n(), &table))
}

/// Per-family nontriviality evidence: the smallest bipartite, split and
/// co-bipartite non-members found among graphs with at most six vertices, as
/// graph6 strings. `None` means no witness at that scale — reported as not
/// established rather than false, since the obstruction sets are infinite in
/// general.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyNontriviality {
    pub family: FamilyClass,
    pub bipartite_obstruction: Option<String>,
    pub split_obstruction: Option<String>,
    pub cobipartite_obstruction: Option<String>,
}

impl FamilyNontriviality {
    pub fn established(&self) -> bool {
        self.bipartite_obstruction.is_some()
            && self.split_obstruction.is_some()
            && self.cobipartite_obstruction.is_some()
    }
}

/// Full certificate check result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    /// Condition (i): each block of g belongs to its family.
    pub blocks_in_families: Vec<bool>,
    /// Condition (ii): no ordered partition of V(h) puts every piece inside
    /// the corresponding family.
    pub no_embeddable_partition: bool,
    pub valid: bool,
    pub nontriviality: Vec<FamilyNontriviality>,
}

/// Checks a certified partition: condition (i) on the host blocks and
/// condition (ii) on the forbidden graph.
pub fn check_certificate(
    g: &Graph,
    p: &VertexPartition,
    cert: &Certificate,
    h: &Graph,
) -> Result<bool, PartitionError> {
    Ok(certificate_report(g, p, cert, h)?.valid)
}

/// As [`check_certificate`] but also reports per-family nontriviality
/// evidence.
pub fn certificate_report(
    g: &Graph,
    p: &VertexPartition,
    cert: &Certificate,
    h: &Graph,
) -> Result<CertificateReport, PartitionError> {
    if p.blocks().len() != cert.len() {
        return Err(PartitionError::LengthMismatch {
            blocks: p.blocks().len(),
            families: cert.len(),
        });
    }
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(PartitionError::PatternTooLarge {
            n: h.n(),
            max: MAX_PATTERN_VERTICES,
        });
    }
    let blocks_in_families: Vec<bool> = p
        .blocks()
        .iter()
        .zip(cert.families())
        .map(|(b, &f)| Ok(is_member(&g.induced(b)?, f)))
        .collect::<Result<_, PartitionError>>()?;
    let no_embeddable_partition = !family_partition_exists(h, cert.families())?;
    let nontriviality = cert
        .families()
        .iter()
        .map(|&f| nontriviality_evidence(f))
        .collect();
    let valid = blocks_in_families.iter().all(|&b| b) && no_embeddable_partition;
    Ok(CertificateReport {
        blocks_in_families,
        no_embeddable_partition,
        valid,
        nontriviality,
    })
}

/// Searches graphs on at most six vertices for bipartite, split and
/// co-bipartite non-members of the family.
pub fn nontriviality_evidence(family: FamilyClass) -> FamilyNontriviality {
    let targets = [
        PartitionShape::new(2, 0), // bipartite
        PartitionShape::new(1, 1), // split
        PartitionShape::new(0, 2), // co-bipartite
    ];
    let mut found: [Option<String>; 3] = [None, None, None];
    'outer: for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for code in 0..(1u64 << pairs) {
            let g = Graph::from_upper_code(n, code).expect("n within code bound");
            if is_member(&g, family) {
                continue;
            }
            for (slot, &shape) in found.iter_mut().zip(&targets) {
                if slot.is_none() && can_partition(&g, shape).is_some() {
                    *slot = Some(g.to_graph6());
                }
            }
            if found.iter().all(|s| s.is_some()) {
                break 'outer;
            }
        }
    }
    let [bipartite_obstruction, split_obstruction, cobipartite_obstruction] = found;
    FamilyNontriviality {
        family,
        bipartite_obstruction,
        split_obstruction,
        cobipartite_obstruction,
    }
}

// --- minimal completions and criticality -------------------------------------------

/// The set F(h, s, c): induced subgraphs h[U] over all U whose complement
/// splits into `shape` stable sets and cliques, kept minimal under induced
/// containment and deduplicated up to isomorphism. Sorted by vertex count,
/// edge count, then graph6 string.
pub fn minimal_completions(h: &Graph, shape: PartitionShape) -> Result<Vec<Graph>, PartitionError> {
    let v = h.n();
    if v > MAX_PATTERN_VERTICES {
        return Err(PartitionError::PatternTooLarge {
            n: v,
            max: MAX_PATTERN_VERTICES,
        });
    }
    let mut candidates: Vec<Graph> = Vec::new();
    for mask in 0usize..(1 << v) {
        let rest: Vec<usize> = (0..v).filter(|&i| mask >> i & 1 == 0).collect();
        if can_partition(&h.induced_raw(&rest), shape).is_none() {
            continue;
        }
        let kept: Vec<usize> = (0..v).filter(|&i| mask >> i & 1 != 0).collect();
        let piece = h.induced_raw(&kept);
        if !candidates.iter().any(|c| are_isomorphic(c, &piece)) {
            candidates.push(piece);
        }
    }
    let mut minimal: Vec<Graph> = candidates
        .iter()
        .filter(|piece| {
            !candidates
                .iter()
                .any(|other| !are_isomorphic(other, piece) && contains_induced(piece, other).is_some())
        })
        .cloned()
        .collect();
    minimal.sort_by_key(|g| (g.n(), g.edge_count(), g.to_graph6()));
    Ok(minimal)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeDiagnostic {
    pub shape: PartitionShape,
    /// F(h, s, c) as graph6 strings.
    pub completions: Vec<String>,
    /// `(n, |Forb(F)_n|)` for n = 1..=n_max.
    pub counts: Vec<(usize, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub wpn: usize,
    pub shapes: Vec<ShapeDiagnostic>,
}

/// For each shape with s + c = wpn(h) − 1, computes F(h, s, c) and counts the
/// graphs avoiding every member of it, for each n up to `n_max`. Reports raw
/// count sequences only; no verdict is attached.
pub fn criticality_diagnostic(h: &Graph, n_max: usize) -> Result<CriticalityReport, PartitionError> {
    let w = wpn(h)?.value;
    if w < 2 {
        return Err(PartitionError::DiagnosticNeedsWpn2(w));
    }
    let mut shapes = Vec::new();
    for shape in PartitionShape::with_total(w - 1) {
        let completions = minimal_completions(h, shape)?;
        let mut counts = Vec::new();
        for n in 1..=n_max {
            let record = enumerate_graphs(
                n,
                &|g| {
                    completions
                        .iter()
                        .all(|f| contains_induced(g, f).is_none())
                },
                &[],
            )?;
            counts.push((n, record.passing));
        }
        shapes.push(ShapeDiagnostic {
            shape,
            completions: completions.iter().map(|g| g.to_graph6()).collect(),
            counts,
        });
    }
    Ok(CriticalityReport { wpn: w, shapes })
}
