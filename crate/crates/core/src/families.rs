//! Hereditary part-classes: induced-containment testing, membership predicates
//! for every structured family the partition certificates use, exact labeled
//! counts for the countable ones, and the exhaustive labeled-graph census.

use crate::graph::Graph;
use crate::invariants::girth_at_most_four;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{0} has no closed count")]
    NoClosedCount(FamilyClass),
    #[error("census supports at most {max} vertices, got {n}")]
    CensusTooLarge { n: usize, max: usize },
    #[error("unknown family class {0:?}")]
    UnknownClass(String),
}

/// The hereditary families that appear as partition part-classes. Each tag is
/// membership-decidable; the `CoComponents*` tags constrain the connected
/// components of the complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyClass {
    Clique,
    StableSet,
    DisjointUnionOfCliques,
    CompleteMultipartite,
    ComplementOfMatching,
    CoComponentsStarsOrTriangles,
    CoComponentsCliquesOrStars,
    CoComponentsJoinCliqueStable,
    ComplementOfGirth5,
    DisjointUnionOfTwoCliques,
    P4Free,
}

impl FamilyClass {
    pub const ALL: [FamilyClass; 11] = [
        FamilyClass::Clique,
        FamilyClass::StableSet,
        FamilyClass::DisjointUnionOfCliques,
        FamilyClass::CompleteMultipartite,
        FamilyClass::ComplementOfMatching,
        FamilyClass::CoComponentsStarsOrTriangles,
        FamilyClass::CoComponentsCliquesOrStars,
        FamilyClass::CoComponentsJoinCliqueStable,
        FamilyClass::ComplementOfGirth5,
        FamilyClass::DisjointUnionOfTwoCliques,
        FamilyClass::P4Free,
    ];

    /// Whether [`family_count`] has a recurrence for this class.
    pub fn countable(self) -> bool {
        !matches!(self, FamilyClass::ComplementOfGirth5 | FamilyClass::P4Free)
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyClass::Clique => "clique",
            FamilyClass::StableSet => "stable-set",
            FamilyClass::DisjointUnionOfCliques => "union-of-cliques",
            FamilyClass::CompleteMultipartite => "complete-multipartite",
            FamilyClass::ComplementOfMatching => "complement-of-matching",
            FamilyClass::CoComponentsStarsOrTriangles => "co-stars-or-triangles",
            FamilyClass::CoComponentsCliquesOrStars => "co-cliques-or-stars",
            FamilyClass::CoComponentsJoinCliqueStable => "co-join-clique-stable",
            FamilyClass::ComplementOfGirth5 => "complement-of-girth5",
            FamilyClass::DisjointUnionOfTwoCliques => "union-of-two-cliques",
            FamilyClass::P4Free => "p4-free",
        }
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyClass {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| FamilyError::UnknownClass(s.to_string()))
    }
}

// --- induced containment ---------------------------------------------------------

/// Searches for an induced embedding of `h` into `g`: an injective map that
/// preserves both adjacency and non-adjacency. Returns the image of each
/// h-vertex on success. Backtracking with degree-window pruning; pattern
/// vertices are visited in a connectivity-first order so partial maps
/// constrain early.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let hn = h.n();
    let gn = g.n();
    if hn > gn {
        return None;
    }
    if hn == 0 {
        return Some(Vec::new());
    }

    // Order pattern vertices: start at a maximum-degree vertex, then always
    // pick an unplaced vertex with the most placed neighbours (degree tiebreak).
    let mut order = Vec::with_capacity(hn);
    let mut placed = vec![false; hn];
    let first = (0..hn).max_by_key(|&v| (h.degree(v), usize::MAX - v)).unwrap();
    order.push(first);
    placed[first] = true;
    while order.len() < hn {
        let next = (0..hn)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                (anchored, h.degree(v), usize::MAX - v)
            })
            .unwrap();
        order.push(next);
        placed[next] = true;
    }

    let mut image = vec![usize::MAX; hn];
    let mut used = vec![false; gn];
    if embed(g, h, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn embed(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    idx: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let hv = order[idx];
    let dh = h.degree(hv);
    let slack = g.n() - h.n();
    for gv in 0..g.n() {
        if used[gv] {
            continue;
        }
        let dg = g.degree(gv);
        if dg < dh || dg > dh + slack {
            continue;
        }
        let ok = order[..idx]
            .iter()
            .all(|&hu| g.has_edge(image[hu], gv) == h.has_edge(hu, hv));
        if ok {
            image[hv] = gv;
            used[gv] = true;
            if embed(g, h, order, idx + 1, image, used) {
                return true;
            }
            used[gv] = false;
            image[hv] = usize::MAX;
        }
    }
    false
}

// --- membership ---------------------------------------------------------

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn is_clique_on(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn edge_count_on(g: &Graph, verts: &[usize]) -> usize {
    verts
        .iter()
        .enumerate()
        .map(|(i, &u)| verts[i + 1..].iter().filter(|&&v| g.has_edge(u, v)).count())
        .sum()
}

/// A star on its component: one hub adjacent to everything else, no other
/// edges. Single vertices and single edges count.
fn is_star_component(g: &Graph, comp: &[usize]) -> bool {
    let m = comp.len();
    if m <= 2 {
        return true;
    }
    let edges = edge_count_on(g, comp);
    edges == m - 1 && comp.iter().any(|&v| g.degree(v) == m - 1)
}

fn is_triangle_component(g: &Graph, comp: &[usize]) -> bool {
    comp.len() == 3 && edge_count_on(g, comp) == 3
}

/// Join of a clique and a stable set: the non-universal vertices of the
/// component must form a stable set.
fn is_join_clique_stable_component(g: &Graph, comp: &[usize]) -> bool {
    let non_universal: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&v| comp.iter().any(|&u| u != v && !g.has_edge(u, v)))
        .collect();
    non_universal
        .iter()
        .enumerate()
        .all(|(i, &u)| non_universal[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Exact membership decision for the named family.
pub fn is_member(g: &Graph, cls: FamilyClass) -> bool {
    let n = g.n();
    match cls {
        FamilyClass::Clique => g.edge_count() == n * n.saturating_sub(1) / 2,
        FamilyClass::StableSet => g.edge_count() == 0,
        FamilyClass::DisjointUnionOfCliques => {
            components(g).iter().all(|c| is_clique_on(g, c))
        }
        FamilyClass::CompleteMultipartite => {
            is_member(&g.complement(), FamilyClass::DisjointUnionOfCliques)
        }
        FamilyClass::ComplementOfMatching => g.complement().max_degree() <= 1,
        FamilyClass::CoComponentsStarsOrTriangles => {
            let co = g.complement();
            components(&co)
                .iter()
                .all(|c| is_star_component(&co, c) || is_triangle_component(&co, c))
        }
        FamilyClass::CoComponentsCliquesOrStars => {
            let co = g.complement();
            components(&co)
                .iter()
                .all(|c| is_clique_on(&co, c) || is_star_component(&co, c))
        }
        FamilyClass::CoComponentsJoinCliqueStable => {
            let co = g.complement();
            components(&co)
                .iter()
                .all(|c| is_join_clique_stable_component(&co, c))
        }
        FamilyClass::ComplementOfGirth5 => !girth_at_most_four(&g.complement()),
        FamilyClass::DisjointUnionOfTwoCliques => {
            let comps = components(g);
            comps.len() <= 2 && comps.iter().all(|c| is_clique_on(g, c))
        }
        FamilyClass::P4Free => contains_induced(g, &Graph::path(4)).is_none(),
    }
}

// --- exact counts ---------------------------------------------------------

/// Labeled connected structures allowed as a complement component, per class.
/// A single vertex is simultaneously a trivial star and a trivial clique, and
/// the two labeled structures on two vertices coincide, so small sizes are
/// collapsed to avoid double counting.
fn component_count(cls: FamilyClass, m: usize) -> BigUint {
    let big = |x: usize| BigUint::from(x);
    match (cls, m) {
        (_, 0) => BigUint::zero(),
        (FamilyClass::DisjointUnionOfCliques | FamilyClass::CompleteMultipartite, _) => big(1),
        (FamilyClass::ComplementOfMatching, 1 | 2) => big(1),
        (FamilyClass::ComplementOfMatching, _) => BigUint::zero(),
        (FamilyClass::CoComponentsStarsOrTriangles, 1 | 2) => big(1),
        (FamilyClass::CoComponentsStarsOrTriangles, 3) => big(4),
        (FamilyClass::CoComponentsStarsOrTriangles, _) => big(m),
        (FamilyClass::CoComponentsCliquesOrStars, 1 | 2) => big(1),
        (FamilyClass::CoComponentsCliquesOrStars, 3) => big(4),
        (FamilyClass::CoComponentsCliquesOrStars, _) => big(m + 1),
        (FamilyClass::CoComponentsJoinCliqueStable, 1) => big(1),
        (FamilyClass::CoComponentsJoinCliqueStable, _) => {
            // One clique plus one join per vertex subset of size 2..m−1
            // playing the stable side.
            (BigUint::one() << m) - big(m) - big(1)
        }
        _ => unreachable!("no component recurrence for {cls}"),
    }
}

/// Counts labeled graphs on `[n]` whose components all come from `comp`, via
/// the first-component decomposition: the component containing the smallest
/// vertex has some size m, chosen members, and a structure.
fn count_by_components(n: usize, comp: impl Fn(usize) -> BigUint) -> BigUint {
    let mut a: Vec<BigUint> = Vec::with_capacity(n + 1);
    a.push(BigUint::one());
    for r in 1..=n {
        let mut total = BigUint::zero();
        // binom tracks C(r−1, m−1), updated incrementally over m.
        let mut binom = BigUint::one();
        for m in 1..=r {
            total += &binom * comp(m) * &a[r - m];
            binom = binom * BigUint::from(r - m) / BigUint::from(m);
        }
        a.push(total);
    }
    a.pop().expect("table has n+1 entries")
}

/// Exact number of labeled members of the family on vertex set `[n]`.
/// Complementation is a labeled bijection, so the complement-side classes
/// count through their component structure directly.
pub fn family_count(cls: FamilyClass, n: usize) -> Result<BigUint, FamilyError> {
    match cls {
        FamilyClass::Clique | FamilyClass::StableSet => Ok(BigUint::one()),
        FamilyClass::DisjointUnionOfCliques
        | FamilyClass::CompleteMultipartite
        | FamilyClass::ComplementOfMatching
        | FamilyClass::CoComponentsStarsOrTriangles
        | FamilyClass::CoComponentsCliquesOrStars
        | FamilyClass::CoComponentsJoinCliqueStable => {
            Ok(count_by_components(n, |m| component_count(cls, m)))
        }
        FamilyClass::DisjointUnionOfTwoCliques => {
            // The clique containing vertex 0 determines the (at most two)
            // blocks: 2^(n−1) graphs.
            if n == 0 {
                Ok(BigUint::one())
            } else {
                Ok(BigUint::one() << (n - 1))
            }
        }
        FamilyClass::ComplementOfGirth5 | FamilyClass::P4Free => {
            Err(FamilyError::NoClosedCount(cls))
        }
    }
}

// --- census ---------------------------------------------------------

pub const DEFAULT_CENSUS_BOUND: usize = 8;

/// One named census statistic, counted among the graphs passing the filter.
pub struct CensusStat<'a> {
    pub name: &'a str,
    pub pred: &'a (dyn Fn(&Graph) -> bool + Sync),
}

/// Exhaustive census result over all labeled graphs on `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub n: usize,
    pub total: u64,
    pub passing: u64,
    pub statistics: Vec<(String, u64)>,
}

impl CensusRecord {
    pub fn statistic(&self, name: &str) -> Option<u64> {
        self.statistics
            .iter()
            .find(|(k, _)| k == name)
            .map(|&(_, v)| v)
    }

    /// CSV row matching `census_csv_header`.
    pub fn csv_row(&self) -> String {
        let mut row = format!("{},{},{}", self.n, self.total, self.passing);
        for (_, v) in &self.statistics {
            row.push(',');
            row.push_str(&v.to_string());
        }
        row
    }

    pub fn csv_header(stat_names: &[&str]) -> String {
        let mut h = String::from("n,total,passing");
        for name in stat_names {
            h.push(',');
            h.push_str(name);
        }
        h
    }
}

/// Iterates all `2^(n(n−1)/2)` labeled graphs on `[n]` in upper-triangle code
/// order, applies the filter, and accumulates the requested statistics over
/// the passing graphs. Internally data-parallel over disjoint code ranges;
/// counts are merged by exact addition so results do not depend on the worker
/// count.
pub fn enumerate_graphs(
    n: usize,
    filter: &(dyn Fn(&Graph) -> bool + Sync),
    stats: &[CensusStat<'_>],
) -> Result<CensusRecord, FamilyError> {
    if n > Graph::MAX_CODE_N {
        return Err(FamilyError::CensusTooLarge {
            n,
            max: Graph::MAX_CODE_N,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let total = 1u64 << pairs;

    let zero = || (0u64, vec![0u64; stats.len()]);
    let (passing, counts) = (0..total)
        .into_par_iter()
        .fold(zero, |mut acc, code| {
            let g = Graph::from_upper_code(n, code).expect("n is within the code bound");
            if filter(&g) {
                acc.0 += 1;
                for (slot, stat) in acc.1.iter_mut().zip(stats) {
                    if (stat.pred)(&g) {
                        *slot += 1;
                    }
                }
            }
            acc
        })
        .reduce(zero, |mut a, b| {
            a.0 += b.0;
            for (x, y) in a.1.iter_mut().zip(b.1) {
                *x += y;
            }
            a
        });

    Ok(CensusRecord {
        n,
        total,
        passing,
        statistics: stats
            .iter()
            .map(|s| s.name.to_string())
            .zip(counts)
            .map(|(name, v)| (name, v))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn contains_induced_examples() {
        assert!(contains_induced(&Graph::cycle(5), &Graph::path(4)).is_some());
        assert!(contains_induced(&Graph::complete(4), &Graph::cycle(4)).is_none());
        assert!(contains_induced(&Graph::petersen(), &Graph::cycle(5)).is_some());
        // Witness is a genuine induced embedding.
        let g = Graph::petersen();
        let h = Graph::cycle(5);
        let image = contains_induced(&g, &h).unwrap();
        for u in 0..5 {
            for v in (u + 1)..5 {
                assert_eq!(g.has_edge(image[u], image[v]), h.has_edge(u, v));
            }
        }
    }

    #[test]
    fn contains_induced_vs_subset_oracle() {
        // Oracle: try every |V(h)|-subset of g and every labeled bijection.
        fn oracle(g: &Graph, h: &Graph) -> bool {
            let gn = g.n();
            let hn = h.n();
            if hn > gn {
                return false;
            }
            (0u32..1 << gn)
                .filter(|m| m.count_ones() as usize == hn)
                .any(|m| {
                    let verts: Vec<usize> = (0..gn).filter(|&v| m >> v & 1 != 0).collect();
                    are_isomorphic(&g.induced_raw(&verts), h)
                })
        }
        let h = Graph::path(3);
        for code in 0..(1u64 << 10) {
            let g = Graph::from_upper_code(5, code).unwrap();
            assert_eq!(contains_induced(&g, &h).is_some(), oracle(&g, &h));
        }
        let h = Graph::cycle(4);
        for code in (0..(1u64 << 15)).step_by(7) {
            let g = Graph::from_upper_code(6, code).unwrap();
            assert_eq!(contains_induced(&g, &h).is_some(), oracle(&g, &h));
        }
    }

    #[test]
    fn containment_is_monotone_under_induced_subpatterns() {
        let g = Graph::petersen();
        let h = Graph::cycle(5);
        assert!(contains_induced(&g, &h).is_some());
        // Every induced subgraph of C5 embeds too.
        for mask in 0u32..(1 << 5) {
            let verts: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 != 0).collect();
            let sub = h.induced_raw(&verts);
            assert!(contains_induced(&g, &sub).is_some());
        }
    }

    #[test]
    fn membership_examples() {
        let pm6 = Graph::build(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(is_member(&pm6.complement(), FamilyClass::ComplementOfMatching));
        assert!(!is_member(&Graph::cycle(5), FamilyClass::DisjointUnionOfCliques));
        assert!(is_member(
            &Graph::petersen().complement(),
            FamilyClass::ComplementOfGirth5
        ));
        assert!(is_member(&Graph::complete(5), FamilyClass::Clique));
        assert!(!is_member(&Graph::path(3), FamilyClass::Clique));
        assert!(is_member(&Graph::empty(4), FamilyClass::StableSet));
        assert!(is_member(&Graph::cycle(4), FamilyClass::CompleteMultipartite));
        assert!(is_member(&Graph::path(3), FamilyClass::P4Free));
        assert!(!is_member(&Graph::path(4), FamilyClass::P4Free));
        assert!(is_member(
            &Graph::disjoint_union(&Graph::complete(3), &Graph::complete(2)),
            FamilyClass::DisjointUnionOfTwoCliques
        ));
        assert!(!is_member(
            &Graph::empty(3),
            FamilyClass::DisjointUnionOfTwoCliques
        ));
    }

    #[test]
    fn co_component_membership() {
        // Complement of (triangle ⊔ star): components of the complement are a
        // triangle and a star.
        let co = Graph::disjoint_union(&Graph::complete(3), &Graph::star(3));
        assert!(is_member(&co.complement(), FamilyClass::CoComponentsStarsOrTriangles));
        assert!(is_member(&co.complement(), FamilyClass::CoComponentsCliquesOrStars));

        let co = Graph::disjoint_union(&Graph::complete(4), &Graph::star(2));
        assert!(!is_member(&co.complement(), FamilyClass::CoComponentsStarsOrTriangles));
        assert!(is_member(&co.complement(), FamilyClass::CoComponentsCliquesOrStars));

        // Join of K2 and a stable 2-set, plus an isolated complement vertex.
        let join = Graph::join(&Graph::complete(2), &Graph::empty(2));
        let co = Graph::disjoint_union(&join, &Graph::empty(1));
        assert!(is_member(&co.complement(), FamilyClass::CoComponentsJoinCliqueStable));
        // C4 in the complement is not a join of a clique and a stable set.
        assert!(!is_member(
            &Graph::cycle(4).complement(),
            FamilyClass::CoComponentsJoinCliqueStable
        ));
        // P4 in the complement is not either.
        assert!(!is_member(
            &Graph::path(4).complement(),
            FamilyClass::CoComponentsJoinCliqueStable
        ));
    }

    #[test]
    fn family_count_anchors() {
        // Frozen anchors: involutions I(4) = 10, Bell B(4) = 15; verified
        // against the brute-force census below.
        assert_eq!(
            family_count(FamilyClass::ComplementOfMatching, 4).unwrap(),
            BigUint::from(10u32)
        );
        assert_eq!(
            family_count(FamilyClass::DisjointUnionOfCliques, 4).unwrap(),
            BigUint::from(15u32)
        );
        for n in 0..=9 {
            assert_eq!(family_count(FamilyClass::Clique, n).unwrap(), BigUint::one());
        }
        assert!(matches!(
            family_count(FamilyClass::P4Free, 4),
            Err(FamilyError::NoClosedCount(FamilyClass::P4Free))
        ));
        assert!(matches!(
            family_count(FamilyClass::ComplementOfGirth5, 4),
            Err(FamilyError::NoClosedCount(_))
        ));
    }

    #[test]
    fn family_count_matches_census_small() {
        // Criterion-5 shape at reduced size; the acceptance suite runs n ≤ 7.
        for cls in FamilyClass::ALL.into_iter().filter(|c| c.countable()) {
            for n in 0..=5usize {
                let pairs = n * n.saturating_sub(1) / 2;
                let brute = (0..(1u64 << pairs))
                    .filter(|&code| is_member(&Graph::from_upper_code(n, code).unwrap(), cls))
                    .count();
                assert_eq!(
                    family_count(cls, n).unwrap(),
                    BigUint::from(brute),
                    "class {cls} at n={n}"
                );
            }
        }
    }

    #[test]
    fn families_are_hereditary_spotcheck() {
        // Deleting vertices keeps membership, for every class at n ≤ 5.
        for cls in FamilyClass::ALL {
            for n in 1..=5usize {
                let pairs = n * (n - 1) / 2;
                for code in 0..(1u64 << pairs) {
                    let g = Graph::from_upper_code(n, code).unwrap();
                    if !is_member(&g, cls) {
                        continue;
                    }
                    for drop in 0..n {
                        let verts: Vec<usize> = (0..n).filter(|&v| v != drop).collect();
                        assert!(
                            is_member(&g.induced_raw(&verts), cls),
                            "class {cls} not hereditary at {g:?} minus {drop}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn census_totals_and_examples() {
        let all = enumerate_graphs(4, &|_| true, &[]).unwrap();
        assert_eq!(all.total, 64);
        assert_eq!(all.passing, 64);

        // Triangle-free graphs on 3 vertices: the 8 graphs minus K3; all are
        // bipartite hence χ = ω.
        let chi_eq_omega = |g: &Graph| {
            crate::invariants::chromatic_number(g).0 == crate::invariants::clique_number(g)
        };
        let rec = enumerate_graphs(
            3,
            &|g| contains_induced(g, &Graph::complete(3)).is_none(),
            &[CensusStat {
                name: "chi-eq-omega",
                pred: &chi_eq_omega,
            }],
        )
        .unwrap();
        assert_eq!(rec.passing, 7);
        assert_eq!(rec.statistic("chi-eq-omega"), Some(7));
    }

    #[test]
    fn census_double_enumeration_independent_order() {
        // Second pass in column-major (graph6) bit order; the pass sets agree.
        let c4 = Graph::cycle(4);
        let filter = |g: &Graph| contains_induced(g, &c4).is_none();
        let rec = enumerate_graphs(5, &filter, &[]).unwrap();

        let n = 5;
        let mut brute = 0u64;
        for code in 0..(1u64 << 10) {
            let mut g = Graph::empty(n);
            let mut p = 0;
            for v in 1..n {
                for u in 0..v {
                    if code >> p & 1 != 0 {
                        g.set_edge(u, v);
                    }
                    p += 1;
                }
            }
            if filter(&g) {
                brute += 1;
            }
        }
        assert_eq!(rec.passing, brute);
    }

    #[test]
    fn census_conjunction_bound() {
        let c4 = Graph::cycle(4);
        let k3 = Graph::complete(3);
        let both = enumerate_graphs(
            5,
            &|g| contains_induced(g, &c4).is_none() && contains_induced(g, &k3).is_none(),
            &[],
        )
        .unwrap();
        let only_c4 = enumerate_graphs(5, &|g| contains_induced(g, &c4).is_none(), &[]).unwrap();
        let only_k3 = enumerate_graphs(5, &|g| contains_induced(g, &k3).is_none(), &[]).unwrap();
        assert!(both.passing <= only_c4.passing.min(only_k3.passing));
    }

    #[test]
    fn census_rejects_oversize() {
        assert!(matches!(
            enumerate_graphs(12, &|_| true, &[]),
            Err(FamilyError::CensusTooLarge { .. })
        ));
    }

    #[test]
    fn census_csv_shape() {
        let rec = CensusRecord {
            n: 4,
            total: 64,
            passing: 10,
            statistics: vec![("perfect".into(), 9)],
        };
        assert_eq!(CensusRecord::csv_header(&["perfect"]), "n,total,passing,perfect");
        assert_eq!(rec.csv_row(), "4,64,10,9");
    }

    #[test]
    fn class_names_roundtrip() {
        for cls in FamilyClass::ALL {
            assert_eq!(cls.name().parse::<FamilyClass>().unwrap(), cls);
        }
        assert!("nonsense".parse::<FamilyClass>().is_err());
    }
}
