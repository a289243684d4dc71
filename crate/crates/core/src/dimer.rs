//! Dimer coverings, the dimer complex and dimer labelings.
//!
//! A dimer covering is a set of edges whose boundaries partition the vertex
//! set. Coverings of a fixed (hyper)graph are the states of a cubed complex
//! whose glides are the even cycles; two coverings span a 1-cube exactly when
//! their symmetric difference is one even cycle.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bits::{EdgeSet, VertexSet};
use crate::complex::{build_complex, BuildOptions, CubeComplex, CubeId, GlidingSystem, StateSet};
use crate::cycles::{self, Cycle, EvenCycleData};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// All dimer coverings of `h`, sorted in lexicographic bit order.
///
/// Exact-cover backtracking: repeatedly pick the uncovered vertex with the
/// fewest usable edges and branch over them.
pub fn enumerate_dimer_coverings(h: &Hypergraph) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    let mut covered = h.empty_vertices();
    let mut chosen = h.empty_edges();
    cover(h, &mut covered, &mut chosen, &mut out);
    out.sort();
    out
}

fn cover(h: &Hypergraph, covered: &mut VertexSet, chosen: &mut EdgeSet, out: &mut Vec<EdgeSet>) {
    let usable = |e: usize, covered: &VertexSet| h.boundary_set(e).is_disjoint(covered);
    let mut best: Option<(usize, usize)> = None;
    for v in 0..h.vertex_count() {
        if covered.contains(v) {
            continue;
        }
        let n = h.incident(v).iter().filter(|&&e| usable(e, covered)).count();
        if best.is_none_or(|(_, m)| n < m) {
            best = Some((v, n));
            if n == 0 {
                return;
            }
        }
    }
    let Some((v, _)) = best else {
        out.push(chosen.clone());
        return;
    };
    for &e in h.incident(v) {
        if !usable(e, covered) {
            continue;
        }
        let b = h.boundary_set(e).clone();
        let before = covered.clone();
        *covered = covered.union(&b);
        chosen.insert(e);
        cover(h, covered, chosen, out);
        chosen.remove(e);
        *covered = before;
    }
}

/// True iff the boundaries of the edges of `a` partition the vertex set.
pub fn is_covering(h: &Hypergraph, a: &EdgeSet) -> bool {
    covering_map(h, a).is_ok()
}

/// For a covering `a`, the edge of `a` meeting each vertex.
pub fn covering_map(h: &Hypergraph, a: &EdgeSet) -> Result<Vec<usize>> {
    let mut at = vec![usize::MAX; h.vertex_count()];
    for e in a {
        for &v in h.ends(e) {
            if at[v] != usize::MAX {
                return Err(Error::NotACovering);
            }
            at[v] = e;
        }
    }
    if at.contains(&usize::MAX) {
        return Err(Error::NotACovering);
    }
    Ok(at)
}

/// At every vertex, at least two of the covering edges of `a`, `b`, `c` agree.
pub fn is_flat(h: &Hypergraph, a: &EdgeSet, b: &EdgeSet, c: &EdgeSet) -> Result<bool> {
    let (ma, mb, mc) = (covering_map(h, a)?, covering_map(h, b)?, covering_map(h, c)?);
    Ok((0..h.vertex_count()).all(|v| ma[v] == mb[v] || mb[v] == mc[v] || ma[v] == mc[v]))
}

/// A hypergraph together with its cycles, its even-cycle gliding system and
/// its dimer complex.
#[derive(Debug, Clone)]
pub struct DimerModel {
    graph: Hypergraph,
    cycles: Vec<Cycle>,
    even: Vec<EvenCycleData>,
    /// Index into `cycles` of each glide.
    glide_cycle: Vec<usize>,
    complex: CubeComplex,
}

impl DimerModel {
    pub fn new(graph: Hypergraph, opts: BuildOptions) -> Result<Self> {
        let cycles = cycles::enumerate_cycles(&graph, opts.limits.max_cycles)?;
        let mut even = Vec::new();
        let mut glide_cycle = Vec::new();
        for (i, s) in cycles.iter().enumerate() {
            if let Some(d) = cycles::even_data(&graph, s) {
                even.push(d);
                glide_cycle.push(i);
            }
        }
        let system = GlidingSystem::from_even_cycles(graph.edge_count(), &even)?;
        let states = StateSet::new(enumerate_dimer_coverings(&graph));
        let complex = build_complex(&system, &states, opts)?;
        Ok(DimerModel {
            graph,
            cycles,
            even,
            glide_cycle,
            complex,
        })
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    /// Every cycle, in canonical order.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Even cycles, indexed by glide id.
    pub fn glides(&self) -> &[EvenCycleData] {
        &self.even
    }

    pub fn glide_data(&self, g: usize) -> Result<&EvenCycleData> {
        self.even.get(g).ok_or(Error::UnknownGenerator(g))
    }

    /// Cycle index of glide `g`.
    pub fn cycle_of_glide(&self, g: usize) -> usize {
        self.glide_cycle[g]
    }

    /// Glide id of the even cycle with the given edges.
    pub fn glide_id(&self, edges: &EdgeSet) -> Option<usize> {
        self.complex.system().lookup(edges)
    }

    pub fn system(&self) -> &GlidingSystem {
        self.complex.system()
    }

    pub fn complex(&self) -> &CubeComplex {
        &self.complex
    }

    /// Coverings in state order.
    pub fn coverings(&self) -> &[EdgeSet] {
        self.complex.states().as_slice()
    }

    pub fn covering(&self, i: usize) -> &EdgeSet {
        self.complex.state(i)
    }

    pub fn covering_index(&self, a: &EdgeSet) -> Result<usize> {
        self.complex.states().position(a).ok_or(Error::NotACovering)
    }

    /// Odd cycles as indices into [`Self::cycles`].
    pub fn odd_cycles(&self) -> Vec<usize> {
        (0..self.cycles.len())
            .filter(|i| self.glide_cycle.binary_search(i).is_err())
            .collect()
    }

    /// The hull of two coverings: the cube at `a` on the independent cycles
    /// into which `ab` splits.
    pub fn hull(&self, a: usize, b: usize) -> Result<CubeId> {
        let (sa, sb) = (self.covering(a), self.covering(b));
        let parts = cycles::decompose(&self.graph, &sa.product(sb))?;
        let mut glides = Vec::with_capacity(parts.len());
        for c in &parts {
            let g = self
                .glide_id(c.edges())
                .ok_or_else(|| Error::Inconsistent("difference of coverings has an odd cycle".into()))?;
            glides.push(g);
        }
        self.complex
            .find_cube(sa, &glides)
            .ok_or_else(|| Error::Inconsistent("hull cube missing from the dimer complex".into()))
    }

    /// Flatness of three coverings given by index.
    pub fn is_flat(&self, a: usize, b: usize, c: usize) -> bool {
        is_flat(&self.graph, self.covering(a), self.covering(b), self.covering(c))
            .expect("states are coverings")
    }

    /// The evaluation map at a point of the dimer complex.
    pub fn evaluate(&self, p: &ComplexPoint) -> Result<Labeling> {
        if p.glides.len() != p.coords.len() {
            return Err(Error::InvalidPoint("one coordinate per glide required".into()));
        }
        for (g, x) in p.glides.iter().zip(&p.coords) {
            if *g >= self.even.len() {
                return Err(Error::UnknownGenerator(*g));
            }
            if *x < Rational64::zero() || *x > Rational64::one() {
                return Err(Error::InvalidPoint(format!("coordinate {x} outside [0, 1]")));
            }
        }
        if self.complex.find_cube(&p.base, &p.glides).is_none() {
            return Err(Error::InvalidPoint("base and glides do not span a cube".into()));
        }
        let mut labels: Vec<Rational64> = (0..self.graph.edge_count())
            .map(|e| if p.base.contains(e) { Rational64::one() } else { Rational64::zero() })
            .collect();
        for (&g, &x) in p.glides.iter().zip(&p.coords) {
            for e in self.system().glide(g) {
                labels[e] = if p.base.contains(e) { Rational64::one() - x } else { x };
            }
        }
        Ok(Labeling(labels))
    }

    /// Glides of the cube containing a labeling in its image, read off the
    /// fractional support.
    pub fn labeling_cycles(&self, l: &Labeling) -> Result<Vec<Cycle>> {
        let fractional = EdgeSet::from_indices(
            self.graph.edge_count(),
            (0..l.0.len()).filter(|&e| l.0[e] > Rational64::zero() && l.0[e] < Rational64::one()),
        );
        cycles::decompose(&self.graph, &fractional)
    }
}

/// A point `(A, S, x)` of the dimer complex: a based cube with coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexPoint {
    pub base: EdgeSet,
    pub glides: Vec<usize>,
    pub coords: Vec<Rational64>,
}

/// Edge labels indexed by edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling(pub Vec<Rational64>);

impl Labeling {
    /// The characteristic labeling of an edge set.
    pub fn characteristic(a: &EdgeSet) -> Self {
        Labeling(
            (0..a.universe())
                .map(|e| if a.contains(e) { Rational64::one() } else { Rational64::zero() })
                .collect(),
        )
    }

    /// Labels in `[0, 1]`, summing to 1 at every vertex with at most two
    /// non-zero labels there.
    pub fn is_dimer_labeling(&self, h: &Hypergraph) -> bool {
        if self.0.len() != h.edge_count() {
            return false;
        }
        let unit = Rational64::one();
        if self.0.iter().any(|x| *x < Rational64::zero() || *x > unit) {
            return false;
        }
        (0..h.vertex_count()).all(|v| {
            let inc = h.incident(v);
            let sum: Rational64 = inc.iter().map(|&e| self.0[e]).sum();
            let nonzero = inc.iter().filter(|&&e| !self.0[e].is_zero()).count();
            sum == unit && nonzero <= 2
        }) && {
            let fractional = EdgeSet::from_indices(
                h.edge_count(),
                (0..self.0.len()).filter(|&e| !self.0[e].is_zero() && self.0[e] != unit),
            );
            cycles::is_cyclic(h, &fractional)
        }
    }

    /// `{"edge-id": "p/q"}`.
    pub fn to_map(&self, h: &Hypergraph) -> BTreeMap<String, String> {
        self.0
            .iter()
            .enumerate()
            .map(|(e, x)| (h.edge_name(e).to_string(), format!("{}/{}", x.numer(), x.denom())))
            .collect()
    }
}

/// One component of the space of dimer labelings of a graph.
#[derive(Debug, Clone)]
pub struct LabelingComponent {
    /// Pairwise independent odd cycles carrying the constant label 1/2, as
    /// indices into the cycle list of the original graph.
    pub odd_cycles: Vec<usize>,
    /// The graph with those cycles' vertices removed.
    pub model: DimerModel,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentSummary {
    pub odd_cycles: Vec<Vec<String>>,
    pub coverings: usize,
    pub f_vector: Vec<usize>,
}

impl LabelingComponent {
    pub fn summary(&self, h: &Hypergraph, cycles: &[Cycle]) -> ComponentSummary {
        ComponentSummary {
            odd_cycles: self.odd_cycles.iter().map(|&i| h.edge_ids(cycles[i].edges())).collect(),
            coverings: self.model.coverings().len(),
            f_vector: self.model.complex().f_vector(),
        }
    }
}

/// Components of the space of dimer labelings of a graph, one for every set
/// `S` of pairwise independent odd cycles whose complement graph `Γ_S` has a
/// dimer covering. Sets with no covering are skipped: they carry no labeling.
pub fn labeling_components(model: &DimerModel, opts: BuildOptions) -> Result<Vec<LabelingComponent>> {
    model.graph().require_graph()?;
    let odd = model.odd_cycles();
    let cycles = model.cycles();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    odd_families(model, &odd, 0, &mut chosen, &mut |set| {
        let picked: Vec<Cycle> = set.iter().map(|&i| cycles[i].clone()).collect();
        let rest = model.graph().delete_odd_support(&picked)?;
        let sub = DimerModel::new(rest, opts)?;
        if !sub.coverings().is_empty() {
            out.push(LabelingComponent {
                odd_cycles: set.to_vec(),
                model: sub,
            });
        }
        Ok(())
    })?;
    Ok(out)
}

fn odd_families(
    model: &DimerModel,
    odd: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    visit(chosen)?;
    let cycles = model.cycles();
    for k in from..odd.len() {
        let c = odd[k];
        if chosen.iter().all(|&d| cycles::independent(&cycles[c], &cycles[d])) {
            chosen.push(c);
            odd_families(model, odd, k + 1, chosen, visit)?;
            chosen.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn model(h: Hypergraph) -> DimerModel {
        DimerModel::new(h, BuildOptions::default()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn covering_counts() {
        assert!(enumerate_dimer_coverings(&corpus::cycle(3)).is_empty());
        assert_eq!(enumerate_dimer_coverings(&corpus::cycle(4)).len(), 2);
        assert_eq!(enumerate_dimer_coverings(&corpus::theta(5)).len(), 5);
        assert_eq!(enumerate_dimer_coverings(&corpus::ladder()).len(), 3);
        assert_eq!(enumerate_dimer_coverings(&corpus::exact_cover_hypergraph()).len(), 3);
        let empty = Hypergraph::empty(crate::Mode::Graph);
        assert_eq!(enumerate_dimer_coverings(&empty), vec![EdgeSet::new(0)]);
    }

    #[test]
    fn theta_complex_is_complete_graph() {
        for n in 2..=6 {
            let m = model(corpus::theta(n));
            assert_eq!(m.complex().f_vector(), vec![n, n * (n - 1) / 2]);
        }
    }

    #[test]
    fn ladder_complex_is_a_triangle() {
        let m = model(corpus::ladder());
        assert_eq!(m.complex().f_vector(), vec![3, 3]);
        assert_eq!(m.complex().euler(), 0);
    }

    #[test]
    fn exact_cover_complex_is_a_triangle() {
        let m = model(corpus::exact_cover_hypergraph());
        assert_eq!(m.complex().f_vector(), vec![3, 3]);
    }

    #[test]
    fn odd_cycle_complex_is_empty() {
        let m = model(corpus::cycle(5));
        assert!(m.coverings().is_empty());
        assert_eq!(m.complex().dimension(), None);
    }

    #[test]
    fn gliding_a_square_swaps_matchings() {
        let m = model(corpus::cycle(4));
        let s = m.system().glide(0);
        assert_eq!(crate::complex::glide(m.covering(0), s), *m.covering(1));
    }

    #[test]
    fn hull_of_opposite_corners_is_the_square() {
        let m = model(corpus::cycle(4).disjoint_union(&corpus::cycle(4)));
        assert_eq!(m.complex().f_vector(), vec![4, 4, 1]);
        let a = 0;
        let b = (0..4)
            .find(|&b| m.covering(a).product(m.covering(b)).count() == 8)
            .unwrap();
        let h = m.hull(a, b).unwrap();
        assert_eq!(h.dim, 2);
        assert_eq!(m.hull(a, a).unwrap().dim, 0);
    }

    #[test]
    fn flatness() {
        let m = model(corpus::theta(3));
        assert!(m.is_flat(0, 0, 1));
        assert!(!m.is_flat(0, 1, 2));
        let c4 = corpus::cycle(4);
        assert!(matches!(
            is_flat(&c4, &EdgeSet::new(4), &EdgeSet::new(4), &EdgeSet::new(4)),
            Err(Error::NotACovering)
        ));
    }

    #[test]
    fn evaluation_map() {
        let m = model(corpus::cycle(4));
        let base = m.covering(0).clone();
        let at = |x: Rational64| {
            m.evaluate(&ComplexPoint {
                base: base.clone(),
                glides: vec![0],
                coords: vec![x],
            })
            .unwrap()
        };
        assert_eq!(at(r(0, 1)), Labeling::characteristic(&base));
        assert_eq!(at(r(1, 1)), Labeling::characteristic(m.covering(1)));
        assert!(at(r(1, 2)).0.iter().all(|x| *x == r(1, 2)));
        assert!(at(r(1, 3)).is_dimer_labeling(m.graph()));
        let bad = ComplexPoint {
            base: base.clone(),
            glides: vec![0],
            coords: vec![r(3, 2)],
        };
        assert!(m.evaluate(&bad).is_err());
        assert_eq!(at(r(1, 2)).to_map(m.graph())["e1"], "1/2");
    }

    #[test]
    fn components_of_small_graphs() {
        let c3 = model(corpus::cycle(3));
        let comps = labeling_components(&c3, BuildOptions::default()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].odd_cycles.len(), 1);
        assert_eq!(comps[0].model.complex().f_vector(), vec![1]);

        let c4 = model(corpus::cycle(4));
        let comps = labeling_components(&c4, BuildOptions::default()).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].odd_cycles.is_empty());
        assert_eq!(comps[0].model.complex().f_vector(), vec![2, 1]);

        let mixed = model(corpus::cycle(3).disjoint_union(&corpus::cycle(4)));
        let comps = labeling_components(&mixed, BuildOptions::default()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].model.complex().f_vector(), vec![2, 1]);
    }

    #[test]
    fn components_skip_families_without_coverings() {
        // Two triangles joined by a bridge: four independent odd-cycle
        // families, two of which leave a triangle with no covering.
        let h = Hypergraph::graph(
            ["u1", "u2", "u3", "w1", "w2", "w3"],
            &[
                ("a", "u1", "u2"),
                ("b", "u2", "u3"),
                ("c", "u3", "u1"),
                ("d", "w1", "w2"),
                ("e", "w2", "w3"),
                ("f", "w3", "w1"),
                ("g", "u1", "w1"),
            ],
        )
        .unwrap();
        let m = model(h);
        let comps = labeling_components(&m, BuildOptions::default()).unwrap();
        let sizes: Vec<usize> = comps.iter().map(|c| c.odd_cycles.len()).collect();
        assert_eq!(sizes, vec![0, 2]);
    }

    #[test]
    fn hypergraph_components_are_rejected() {
        let m = model(corpus::exact_cover_hypergraph());
        assert!(matches!(
            labeling_components(&m, BuildOptions::default()),
            Err(Error::NotGraphMode)
        ));
    }
}
