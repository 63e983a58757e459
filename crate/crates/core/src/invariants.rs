//! Exact graph invariants: maximum clique, chromatic number, independence
//! number, girth, maximum matching on general graphs, perfection, and the
//! stable-pair colouring used for complements of girth-five graphs.
//!
//! Everything here is exact search, tuned for the desk scale the censuses and
//! experiments run at. All functions are pure and deterministic: identical
//! inputs give identical witnesses.

use crate::bits;
use crate::families::contains_induced;
use crate::graph::Graph;
use serde::Serialize;
use std::cmp::Reverse;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {0} has no colour")]
    Unassigned(usize),
    #[error("colour {0} has an empty class")]
    EmptyClass(usize),
    #[error("classes do not partition the vertex set at vertex {0}")]
    NotAPartition(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

/// A total assignment vertex → colour with contiguous colour indices and
/// per-class size bookkeeping. Propriety is relative to a host graph and
/// checked via [`Coloring::is_proper`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    num_colors: usize,
    class_sizes: Vec<usize>,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Result<Self, ColoringError> {
        if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(ColoringError::Unassigned(v));
        }
        let num_colors = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut class_sizes = vec![0usize; num_colors];
        for &c in &assignment {
            class_sizes[c] += 1;
        }
        if let Some(c) = class_sizes.iter().position(|&s| s == 0) {
            return Err(ColoringError::EmptyClass(c));
        }
        Ok(Coloring {
            assignment,
            num_colors,
            class_sizes,
        })
    }

    /// Builds from explicit classes, which must partition `0..n`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self, ColoringError> {
        let mut assignment = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(ColoringError::EmptyClass(c));
            }
            for &v in class {
                if v >= n {
                    return Err(ColoringError::OutOfRange { vertex: v, n });
                }
                if assignment[v] != usize::MAX {
                    return Err(ColoringError::NotAPartition(v));
                }
                assignment[v] = c;
            }
        }
        Self::new(assignment)
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn max_class_size(&self) -> usize {
        self.class_sizes.iter().copied().max().unwrap_or(0)
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }

    /// External JSON shape: `{"colors": <int>, "classes": [[v, …], …]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ColoringJson {
            colors: usize,
            classes: Vec<Vec<usize>>,
        }
        serde_json::to_string(&ColoringJson {
            colors: self.num_colors,
            classes: self.classes(),
        })
        .expect("coloring json serialization cannot fail")
    }
}

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks disjointness and that every pair is an edge of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        self.pairs.iter().all(|&(u, v)| {
            let fresh = u < g.n() && v < g.n() && !seen[u] && !seen[v] && g.has_edge(u, v);
            if fresh {
                seen[u] = true;
                seen[v] = true;
            }
            fresh
        })
    }
}

// --- maximum clique ---------------------------------------------------------

/// A maximum clique, found by branch and bound over bit-array neighbourhoods
/// with greedy-colouring upper bounds. The vertex order is fixed (descending
/// degree, label tiebreak), so the witness is deterministic.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));

    let mut full = vec![0u64; g.words()];
    for v in 0..n {
        bits::set(&mut full, v);
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    clique_expand(g, &order, full, &mut current, &mut best);
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

fn clique_expand(
    g: &Graph,
    order: &[usize],
    cand: Vec<u64>,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if bits::is_empty(&cand) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }

    // Greedy colouring of the candidate set; colour index c bounds any clique
    // inside the candidates still unprocessed at that point by c + 1.
    let verts: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&v| bits::get(&cand, v))
        .collect();
    let mut class_masks: Vec<Vec<u64>> = Vec::new();
    let mut colored: Vec<(usize, usize)> = Vec::with_capacity(verts.len());
    for &v in &verts {
        let row = g.row(v);
        let c = class_masks
            .iter()
            .position(|m| !bits::intersects(m, row))
            .unwrap_or_else(|| {
                class_masks.push(vec![0u64; cand.len()]);
                class_masks.len() - 1
            });
        bits::set(&mut class_masks[c], v);
        colored.push((v, c));
    }
    // Process in descending colour order so the c + 1 bound covers everything
    // still unprocessed at each step.
    colored.sort_by_key(|&(_, c)| c);

    let mut cand = cand;
    for &(v, c) in colored.iter().rev() {
        if current.len() + c + 1 <= best.len() {
            return;
        }
        current.push(v);
        let mut next = vec![0u64; cand.len()];
        bits::and_into(&mut next, &cand, g.row(v));
        clique_expand(g, order, next, current, best);
        current.pop();
        bits::clear(&mut cand, v);
    }
}

// --- chromatic number ---------------------------------------------------------

/// Exact chromatic number with one optimal colouring. Iterative deepening from
/// ω upward; symmetry is broken by pre-colouring a maximum clique, and fresh
/// colours are introduced in index order.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring::new(Vec::new()).expect("empty coloring"));
    }
    let clique = maximum_clique(g);
    let omega = clique.len();
    let mut rest: Vec<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
    rest.sort_by_key(|&v| (Reverse(g.degree(v)), v));

    for k in omega..=n {
        let mut assignment = vec![usize::MAX; n];
        for (c, &v) in clique.iter().enumerate() {
            assignment[v] = c;
        }
        if color_rest(g, &rest, 0, k, omega - 1, &mut assignment) {
            let coloring = Coloring::new(assignment).expect("search yields total assignment");
            debug_assert!(coloring.is_proper(g));
            return (k, coloring);
        }
    }
    unreachable!("every graph admits an n-colouring")
}

fn color_rest(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    max_used: usize,
    assignment: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let limit = (max_used + 1).min(k - 1);
    for c in 0..=limit {
        if g.neighbors(v).all(|u| assignment[u] != c) {
            assignment[v] = c;
            if color_rest(g, order, idx + 1, k, max_used.max(c), assignment) {
                return true;
            }
            assignment[v] = usize::MAX;
        }
    }
    false
}

// --- girth ---------------------------------------------------------

/// Length of a shortest cycle, or `None` for forests. Per-vertex breadth-first
/// search with early exit once a level can no longer improve the best cycle.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                continue;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v && parent[v] != u {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}

/// True iff the graph has a triangle or a quadrilateral as a subgraph, i.e.
/// girth ≤ 4. Word-parallel common-neighbour counting, cheap enough for the
/// greedy girth-five sampler to call once per produced graph.
pub fn girth_at_most_four(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in (u + 1)..n {
            let common = bits::intersection_count(g.row(u), g.row(v));
            if g.has_edge(u, v) {
                if common >= 1 {
                    return true;
                }
            } else if common >= 2 {
                return true;
            }
        }
    }
    false
}

// --- maximum matching (general graphs) ----------------------------------------

/// Maximum-cardinality matching on general graphs: augmenting-path search with
/// blossom contraction, one phase per exposed vertex.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![usize::MAX; n];
    for v in 0..n {
        if mate[v] == usize::MAX {
            augment_from(g, &mut mate, v);
        }
    }
    let mut pairs = Vec::new();
    for v in 0..n {
        if mate[v] != usize::MAX && v < mate[v] {
            pairs.push((v, mate[v]));
        }
    }
    Matching { pairs }
}

/// Searches for an augmenting path from `root` and applies it. Returns whether
/// the matching grew.
fn augment_from(g: &Graph, mate: &mut [usize], root: usize) -> bool {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut in_queue = vec![false; n];
    let mut queue = VecDeque::new();
    queue.push_back(root);
    in_queue[root] = true;

    let mut finish = usize::MAX;
    'bfs: while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != usize::MAX && parent[mate[to]] != usize::MAX) {
                // Odd cycle: contract the blossom at the lowest common ancestor.
                let cur_base = blossom_lca(mate, &base, &parent, v, to);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(mate, &mut base, &mut in_blossom, &mut parent, v, cur_base, to);
                mark_blossom_path(mate, &mut base, &mut in_blossom, &mut parent, to, cur_base, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !in_queue[i] {
                            in_queue[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == usize::MAX {
                parent[to] = v;
                if mate[to] == usize::MAX {
                    finish = to;
                    break 'bfs;
                }
                in_queue[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }

    if finish == usize::MAX {
        return false;
    }
    let mut v = finish;
    while v != usize::MAX {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
    true
}

fn blossom_lca(mate: &[usize], base: &[usize], parent: &[usize], a: usize, b: usize) -> usize {
    let mut used = vec![false; base.len()];
    let mut a = a;
    loop {
        a = base[a];
        used[a] = true;
        if mate[a] == usize::MAX {
            break;
        }
        a = parent[mate[a]];
    }
    let mut b = b;
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_blossom_path(
    mate: &[usize],
    base: &mut [usize],
    in_blossom: &mut [bool],
    parent: &mut [usize],
    mut v: usize,
    cur_base: usize,
    mut child: usize,
) {
    while base[v] != cur_base {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

// --- perfection ---------------------------------------------------------

/// True iff the graph contains no induced odd cycle of length ≥ 5 and no
/// induced complement of one, searching lengths 5, 7, … up to n. Brute search
/// against the hole/antihole characterization; intended for small hosts
/// (n ≤ ~12).
pub fn is_perfect(g: &Graph) -> bool {
    let n = g.n();
    let mut len = 5;
    while len <= n {
        let hole = Graph::cycle(len);
        if contains_induced(g, &hole).is_some() {
            return false;
        }
        if len >= 7 && contains_induced(g, &hole.complement()).is_some() {
            return false;
        }
        len += 2;
    }
    true
}

// --- stable-pair colouring ------------------------------------------------------

/// Colours `g` with the pairs of a maximum matching of its complement plus
/// singletons, giving n − ν(complement) classes. Every class is a stable set
/// of size at most two.
pub fn pair_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let matching = maximum_matching(&g.complement());
    let mut classes: Vec<Vec<usize>> = matching
        .pairs()
        .iter()
        .map(|&(u, v)| vec![u, v])
        .collect();
    let mut covered = vec![false; n];
    for &(u, v) in matching.pairs() {
        covered[u] = true;
        covered[v] = true;
    }
    for v in 0..n {
        if !covered[v] {
            classes.push(vec![v]);
        }
    }
    classes.sort_by_key(|c| c[0]);
    let coloring = Coloring::from_classes(n, &classes).expect("matching classes partition [n]");
    debug_assert!(coloring.is_proper(g));
    coloring
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    /// Brute-force independence number over all vertex subsets.
    fn alpha_oracle(g: &Graph) -> usize {
        let n = g.n();
        (0u32..(1 << n))
            .filter(|&mask| {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 != 0).collect();
                verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Brute-force maximum matching size over pair sets.
    fn matching_oracle(g: &Graph, avail: u32) -> usize {
        let v = match (0..g.n()).find(|&v| avail >> v & 1 != 0) {
            Some(v) => v,
            None => return 0,
        };
        let mut best = matching_oracle(g, avail & !(1 << v));
        for u in g.neighbors(v) {
            if avail >> u & 1 != 0 {
                best = best.max(1 + matching_oracle(g, avail & !(1 << v) & !(1 << u)));
            }
        }
        best
    }

    /// Definition-based perfection oracle: χ = ω on every induced subgraph.
    fn perfect_oracle(g: &Graph) -> bool {
        let n = g.n();
        (0u32..(1 << n)).all(|mask| {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 != 0).collect();
            let sub = g.induced(&VertexSet::new(verts)).unwrap();
            chromatic_number(&sub).0 == clique_number(&sub)
        })
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::cycle(7).complement()), 3);
        assert_eq!(clique_number(&Graph::complete(6)), 6);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        let anti = Graph::cycle(7).complement();
        let witness = maximum_clique(&anti);
        assert_eq!(witness.len(), 3);
        for (i, &u) in witness.iter().enumerate() {
            for &v in &witness[i + 1..] {
                assert!(anti.has_edge(u, v));
            }
        }
    }

    #[test]
    fn independence_number_examples() {
        assert_eq!(independence_number(&Graph::cycle(5)), 2);
        assert_eq!(independence_number(&Graph::complete(4)), 1);
        // Frozen from the subset oracle below.
        assert_eq!(alpha_oracle(&Graph::path(6)), 3);
        assert_eq!(independence_number(&Graph::path(6)), 3);
    }

    #[test]
    fn alpha_agrees_with_oracle_on_small_graphs() {
        for n in 0..=5usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for code in 0..(1u64 << pairs) {
                let g = Graph::from_upper_code(n, code).unwrap();
                assert_eq!(independence_number(&g), alpha_oracle(&g));
            }
        }
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5)).0, 3);
        assert_eq!(chromatic_number(&Graph::cycle(7).complement()).0, 4);
        assert_eq!(chromatic_number(&Graph::empty(9)).0, 1);
        let (k, col) = chromatic_number(&Graph::petersen());
        assert_eq!(k, 3);
        assert!(col.is_proper(&Graph::petersen()));
        assert_eq!(col.num_colors(), 3);
    }

    #[test]
    fn chi_omega_bounds_hold() {
        for code in 0..(1u64 << 10) {
            let g = Graph::from_upper_code(5, code).unwrap();
            let omega = clique_number(&g);
            let (chi, _) = chromatic_number(&g);
            assert!(omega <= chi && chi <= g.n());
            assert!(chi * independence_number(&g) >= g.n());
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(6)), Some(6));
        assert_eq!(girth(&Graph::spider(&[3, 2, 4])), None);
        assert_eq!(girth(&Graph::path(7)), None);
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        let tadpole = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        assert_eq!(girth(&tadpole), Some(4));
    }

    #[test]
    fn short_cycle_check_matches_girth() {
        for code in 0..(1u64 << 15) {
            let g = Graph::from_upper_code(6, code).unwrap();
            let short = matches!(girth(&g), Some(k) if k <= 4);
            assert_eq!(girth_at_most_four(&g), short);
        }
    }

    #[test]
    fn matching_examples() {
        assert_eq!(maximum_matching(&Graph::complete(4)).len(), 2);
        assert!(maximum_matching(&Graph::empty(5)).is_empty());
        // Frozen from the pair-set oracle.
        assert_eq!(matching_oracle(&Graph::cycle(7), (1 << 7) - 1), 3);
        assert_eq!(maximum_matching(&Graph::cycle(7)).len(), 3);
        assert_eq!(maximum_matching(&Graph::petersen()).len(), 5);
    }

    #[test]
    fn matching_agrees_with_oracle() {
        for n in 0..=4usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for code in 0..(1u64 << pairs) {
                let g = Graph::from_upper_code(n, code).unwrap();
                let m = maximum_matching(&g);
                assert!(m.is_valid_for(&g));
                assert_eq!(m.len(), matching_oracle(&g, (1u32 << n) - 1));
            }
        }
        // Deterministic sweep of larger codes.
        let mut code = 0x9e3779b97f4a7c15u64;
        for _ in 0..400 {
            code = code
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let g = Graph::from_upper_code(9, code & ((1 << 36) - 1)).unwrap();
            let m = maximum_matching(&g);
            assert!(m.is_valid_for(&g));
            assert_eq!(m.len(), matching_oracle(&g, (1u32 << 9) - 1), "graph {:?}", g);
        }
    }

    #[test]
    fn blossom_handles_odd_structures() {
        // Two triangles bridged: the classic blossom trap.
        let g =
            Graph::build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
    }

    #[test]
    fn perfection_examples() {
        assert!(!is_perfect(&Graph::cycle(5)));
        assert!(!is_perfect(&Graph::cycle(7).complement()));
        assert!(is_perfect(&Graph::path(6)));
        assert!(is_perfect(&Graph::complete(7)));
        // Bipartite graphs are perfect.
        let bip = Graph::build(6, &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 5)]).unwrap();
        assert!(is_perfect(&bip));
    }

    #[test]
    fn perfection_matches_definition_oracle_small() {
        for n in 0..=5usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for code in 0..(1u64 << pairs) {
                let g = Graph::from_upper_code(n, code).unwrap();
                assert_eq!(is_perfect(&g), perfect_oracle(&g));
            }
        }
    }

    #[test]
    fn pair_coloring_examples() {
        let col = pair_coloring(&Graph::complete(4));
        assert_eq!(col.num_colors(), 4);
        assert!(col.class_sizes().iter().all(|&s| s == 1));

        // ν(C5) = 2, so the complement gets two pairs and one singleton.
        let col = pair_coloring(&Graph::cycle(5).complement());
        assert_eq!(col.num_colors(), 3);
        assert!(col.is_proper(&Graph::cycle(5).complement()));

        let col = pair_coloring(&Graph::empty(6));
        assert_eq!(col.num_colors(), 3);
        assert!(col.class_sizes().iter().all(|&s| s == 2));
    }

    #[test]
    fn pair_coloring_respects_half_bound_without_stable_triples() {
        let g = Graph::petersen().complement();
        assert!(independence_number(&g) <= 2);
        let col = pair_coloring(&g);
        assert!(col.is_proper(&g));
        assert!(col.num_colors() >= g.n().div_ceil(2));
    }

    #[test]
    fn coloring_type_invariants() {
        let col = Coloring::from_classes(4, &[vec![0, 2], vec![1], vec![3]]).unwrap();
        assert_eq!(col.num_colors(), 3);
        assert_eq!(col.class_sizes(), &[2, 1, 1]);
        assert_eq!(col.to_json(), r#"{"colors":3,"classes":[[0,2],[1],[3]]}"#);
        assert!(Coloring::from_classes(3, &[vec![0, 1]]).is_err());
        assert!(Coloring::from_classes(2, &[vec![0, 1], vec![]]).is_err());
    }
}
