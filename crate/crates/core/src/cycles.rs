//! Cyclic edge sets, cycles, even cycles and their halves.
//!
//! A set of edges is cyclic when every vertex meets either none or exactly two
//! of its edges. A cycle is a non-empty cyclic set containing no smaller
//! non-empty cyclic set; equivalently a cyclic set that is connected under the
//! relation "shares a vertex". An even cycle splits uniquely into two halves
//! whose edges have pairwise disjoint boundaries.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bits::{EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    edges: EdgeSet,
    support: VertexSet,
}

impl Cycle {
    /// Wraps `edges`, verifying that it is a single cycle of `h`.
    pub fn new(h: &Hypergraph, edges: EdgeSet) -> Result<Self> {
        if edges.is_empty() || !is_cyclic(h, &edges) {
            return Err(Error::NotCyclic);
        }
        let parts = components(h, &edges);
        if parts.len() != 1 {
            return Err(Error::NotACycle);
        }
        Ok(Self::unchecked(h, edges))
    }

    fn unchecked(h: &Hypergraph, edges: EdgeSet) -> Self {
        let support = h.support(&edges);
        Cycle { edges, support }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// The vertices met by the cycle.
    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.edges.count()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// An even cycle together with its edge halves and, for graph cycles, its
/// vertex halves. Half 0 contains the smallest-index edge; vertex half 0
/// contains the smallest-index vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCycleData {
    pub cycle: Cycle,
    pub halves: [EdgeSet; 2],
    pub vertex_halves: Option<[VertexSet; 2]>,
}

impl EvenCycleData {
    /// Which half `part` equals, if any.
    pub fn half_index(&self, part: &EdgeSet) -> Option<usize> {
        self.halves.iter().position(|h| h == part)
    }

    pub fn vertex_half_index(&self, part: &VertexSet) -> Option<usize> {
        self.vertex_halves
            .as_ref()?
            .iter()
            .position(|h| h == part)
    }
}

/// True iff every vertex meets 0 or 2 edges of `s`.
pub fn is_cyclic(h: &Hypergraph, s: &EdgeSet) -> bool {
    let mut count = vec![0u8; h.vertex_count()];
    for e in s {
        for &v in h.ends(e) {
            count[v] += 1;
            if count[v] > 2 {
                return false;
            }
        }
    }
    count.iter().all(|&c| c != 1)
}

/// Classes of `s` under the equivalence generated by "shares a vertex".
fn components(h: &Hypergraph, s: &EdgeSet) -> Vec<EdgeSet> {
    let mut seen = h.empty_edges();
    let mut out = Vec::new();
    for start in s {
        if seen.contains(start) {
            continue;
        }
        let mut part = h.empty_edges();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(e) = queue.pop_front() {
            part.insert(e);
            for &v in h.ends(e) {
                for &f in h.incident(v) {
                    if s.contains(f) && !seen.contains(f) {
                        seen.insert(f);
                        queue.push_back(f);
                    }
                }
            }
        }
        out.push(part);
    }
    out
}

/// Splits a cyclic set into its pairwise independent cycles, in canonical
/// cycle order.
pub fn decompose(h: &Hypergraph, s: &EdgeSet) -> Result<Vec<Cycle>> {
    if !is_cyclic(h, s) {
        return Err(Error::NotCyclic);
    }
    let mut cycles: Vec<Cycle> = components(h, s)
        .into_iter()
        .map(|part| Cycle::unchecked(h, part))
        .collect();
    sort_canonical(&mut cycles);
    Ok(cycles)
}

/// Canonical cycle order: by size, then lexicographic bit order.
pub fn sort_canonical(cycles: &mut [Cycle]) {
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges.cmp(&b.edges)));
}

/// All cycles of `h` in canonical order.
///
/// Each cycle is grown from its smallest edge: while some vertex is met by
/// exactly one chosen edge, branch over the edges that could close it without
/// pushing any vertex past degree two. For graphs this is a walk extension; for
/// hypergraphs it is a branch-and-prune over edge subsets. A cycle is found
/// exactly once because the closing edge at the chosen vertex is forced.
///
/// Returns [`Error::CycleLimit`] rather than a truncated list when more than
/// `limit` cycles exist.
pub fn enumerate_cycles(h: &Hypergraph, limit: usize) -> Result<Vec<Cycle>> {
    let mut search = CycleSearch {
        h,
        limit,
        count: vec![0u8; h.vertex_count()],
        deficient: h.empty_vertices(),
        chosen: h.empty_edges(),
        found: Vec::new(),
    };
    for e0 in 0..h.edge_count() {
        search.push(e0);
        search.grow(e0)?;
        search.pop(e0);
    }
    let mut cycles: Vec<Cycle> = search
        .found
        .into_iter()
        .map(|s| Cycle::unchecked(h, s))
        .collect();
    sort_canonical(&mut cycles);
    Ok(cycles)
}

struct CycleSearch<'a> {
    h: &'a Hypergraph,
    limit: usize,
    count: Vec<u8>,
    deficient: VertexSet,
    chosen: EdgeSet,
    found: Vec<EdgeSet>,
}

impl CycleSearch<'_> {
    fn push(&mut self, e: usize) {
        self.chosen.insert(e);
        for &v in self.h.ends(e) {
            self.count[v] += 1;
            if self.count[v] == 1 {
                self.deficient.insert(v);
            } else {
                self.deficient.remove(v);
            }
        }
    }

    fn pop(&mut self, e: usize) {
        self.chosen.remove(e);
        for &v in self.h.ends(e) {
            self.count[v] -= 1;
            if self.count[v] == 1 {
                self.deficient.insert(v);
            } else {
                self.deficient.remove(v);
            }
        }
    }

    fn grow(&mut self, floor: usize) -> Result<()> {
        let Some(v) = self.deficient.first() else {
            if self.found.len() >= self.limit {
                return Err(Error::CycleLimit { limit: self.limit });
            }
            self.found.push(self.chosen.clone());
            return Ok(());
        };
        for &f in self.h.incident(v) {
            if f <= floor || self.chosen.contains(f) {
                continue;
            }
            if self.h.ends(f).iter().any(|&w| self.count[w] >= 2) {
                continue;
            }
            self.push(f);
            let r = self.grow(floor);
            self.pop(f);
            r?;
        }
        Ok(())
    }
}

/// Halves of `s` when it is even, `None` when odd.
///
/// Builds the auxiliary multigraph on the edges of `s` with one adjacency per
/// shared vertex; `s` is even exactly when it is bipartite, and the halves are
/// the colour classes.
pub fn even_data(h: &Hypergraph, s: &Cycle) -> Option<EvenCycleData> {
    let edges = s.edges();
    let first = edges.first()?;
    let m = h.edge_count();
    let mut colour: Vec<Option<u8>> = vec![None; m];
    colour[first] = Some(0);
    let mut queue = VecDeque::from([first]);
    while let Some(e) = queue.pop_front() {
        let c = colour[e].expect("queued edges are coloured");
        for &v in h.ends(e) {
            for &f in h.incident(v) {
                if f == e || !edges.contains(f) {
                    continue;
                }
                match colour[f] {
                    None => {
                        colour[f] = Some(1 - c);
                        queue.push_back(f);
                    }
                    Some(d) if d == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut halves = [h.empty_edges(), h.empty_edges()];
    for e in edges {
        halves[colour[e].expect("cycle is connected") as usize].insert(e);
    }
    let vertex_halves = if h.is_graph() {
        Some(graph_vertex_halves(h, s))
    } else {
        None
    };
    Some(EvenCycleData {
        cycle: s.clone(),
        halves,
        vertex_halves,
    })
}

/// Walks once around a graph cycle and splits its vertices by parity of
/// position.
fn graph_vertex_halves(h: &Hypergraph, s: &Cycle) -> [VertexSet; 2] {
    let edges = s.edges();
    let first = edges.first().expect("non-empty cycle");
    let start = h.ends(first)[0];
    let mut parts = [h.empty_vertices(), h.empty_vertices()];
    let mut at = h.ends(first)[1];
    let mut via = first;
    let mut parity = 0;
    parts[0].insert(start);
    while at != start {
        parity ^= 1;
        parts[parity].insert(at);
        via = *h
            .incident(at)
            .iter()
            .find(|&&f| f != via && edges.contains(f))
            .expect("every cycle vertex has two cycle edges");
        let ends = h.ends(via);
        at = if ends[0] == at { ends[1] } else { ends[0] };
    }
    let smallest = s.support().first().expect("non-empty support");
    if !parts[0].contains(smallest) {
        parts.swap(0, 1);
    }
    parts
}

/// True iff the cycles share no vertex.
pub fn independent(s: &Cycle, t: &Cycle) -> bool {
    s.support().is_disjoint(t.support())
}

/// Exchange form of a cycle: sorted edge ids, plus halves for even cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub edges: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub halves: Option<[Vec<String>; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vhalves: Option<[Vec<String>; 2]>,
}

impl CycleRecord {
    pub fn new(h: &Hypergraph, s: &Cycle) -> Self {
        let even = even_data(h, s);
        CycleRecord {
            edges: h.edge_ids(s.edges()),
            halves: even
                .as_ref()
                .map(|d| [h.edge_ids(&d.halves[0]), h.edge_ids(&d.halves[1])]),
            vhalves: even
                .as_ref()
                .and_then(|d| d.vertex_halves.as_ref())
                .map(|v| [h.vertex_ids(&v[0]), h.vertex_ids(&v[1])]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn es(h: &Hypergraph, ids: &[&str]) -> EdgeSet {
        h.edge_set(ids).unwrap()
    }

    #[test]
    fn cyclic_sets_of_a_square() {
        let c4 = corpus::cycle(4);
        assert!(is_cyclic(&c4, &EdgeSet::full(4)));
        assert!(!is_cyclic(&c4, &EdgeSet::from_indices(4, [0])));
        assert!(is_cyclic(&c4, &EdgeSet::new(4)));
    }

    #[test]
    fn decomposition() {
        let c4 = corpus::cycle(4);
        assert!(decompose(&c4, &EdgeSet::new(4)).unwrap().is_empty());

        let ladder = corpus::ladder();
        let squares = es(&ladder, &["ab", "be", "de", "ad", "bc", "cf", "ef"]);
        assert!(matches!(decompose(&ladder, &squares), Err(Error::NotCyclic)));

        let two = corpus::cycle(4).disjoint_union(&corpus::cycle(4));
        let parts = decompose(&two, &EdgeSet::full(8)).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(independent(&parts[0], &parts[1]));
    }

    #[test]
    fn theta_graph_has_three_digons() {
        let cycles = enumerate_cycles(&corpus::theta(3), 100).unwrap();
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn ladder_has_two_squares_and_a_hexagon() {
        let h = corpus::ladder();
        let cycles = enumerate_cycles(&h, 100).unwrap();
        let sizes: Vec<usize> = cycles.iter().map(Cycle::len).collect();
        assert_eq!(sizes, vec![4, 4, 6]);
        let s1 = Cycle::new(&h, es(&h, &["ab", "be", "de", "ad"])).unwrap();
        let s2 = Cycle::new(&h, es(&h, &["bc", "cf", "ef", "be"])).unwrap();
        assert!(cycles.contains(&s1) && cycles.contains(&s2));
        assert!(!independent(&s1, &s2));
    }

    #[test]
    fn triangle_has_one_odd_cycle() {
        let h = corpus::cycle(3);
        let cycles = enumerate_cycles(&h, 10).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
        assert!(even_data(&h, &cycles[0]).is_none());
    }

    #[test]
    fn square_halves_are_opposite_edges() {
        let h = corpus::cycle(4);
        let s = &enumerate_cycles(&h, 10).unwrap()[0];
        let d = even_data(&h, s).unwrap();
        assert_eq!(d.halves[0].to_vec(), vec![0, 2]);
        assert_eq!(d.halves[1].to_vec(), vec![1, 3]);
        let vh = d.vertex_halves.unwrap();
        assert_eq!(vh[0].to_vec(), vec![0, 2]);
        assert_eq!(vh[1].to_vec(), vec![1, 3]);
    }

    #[test]
    fn digon_halves_are_singletons() {
        let h = corpus::theta(3);
        for s in enumerate_cycles(&h, 10).unwrap() {
            let d = even_data(&h, &s).unwrap();
            assert_eq!(d.halves[0].count(), 1);
            assert_eq!(d.halves[1].count(), 1);
        }
    }

    #[test]
    fn hexagon_vertex_halves_in_ladder() {
        let h = corpus::ladder();
        let hex = Cycle::new(&h, es(&h, &["ab", "bc", "cf", "ef", "de", "ad"])).unwrap();
        let d = even_data(&h, &hex).unwrap();
        let vh = d.vertex_halves.unwrap();
        assert_eq!(h.vertex_ids(&vh[0]), ["a", "c", "e"]);
        assert_eq!(h.vertex_ids(&vh[1]), ["b", "d", "f"]);
    }

    #[test]
    fn hypergraph_even_cycle() {
        let h = corpus::exact_cover_hypergraph();
        let cycles = enumerate_cycles(&h, 100).unwrap();
        assert!(!cycles.is_empty());
        for s in &cycles {
            if let Some(d) = even_data(&h, s) {
                assert!(d.vertex_halves.is_none());
                assert_eq!(h.support(&d.halves[0]), h.support(&d.halves[1]));
            }
        }
    }

    #[test]
    fn self_is_never_independent() {
        let h = corpus::cycle(4);
        let s = &enumerate_cycles(&h, 10).unwrap()[0];
        assert!(!independent(s, s));
    }

    #[test]
    fn cycle_limit_is_reported() {
        assert!(matches!(
            enumerate_cycles(&corpus::theta(5), 3),
            Err(Error::CycleLimit { limit: 3 })
        ));
    }

    #[test]
    fn cycle_constructor_rejects_unions() {
        let two = corpus::cycle(4).disjoint_union(&corpus::cycle(4));
        assert!(matches!(
            Cycle::new(&two, EdgeSet::full(8)),
            Err(Error::NotACycle)
        ));
    }
}
