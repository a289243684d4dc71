//! Gliding systems over a power group and the cubed complexes they define.
//!
//! A gliding system here is set-like: glides are non-empty edge sets and
//! independent glides are disjoint. Every finite family of independent glides
//! is then cubic, and a cube is determined by any of its vertices together
//! with its glide set. We store a cube by its canonical base, the vertex that
//! is least in lexicographic bit order, which is found by toggling each glide
//! so that the base avoids the glide's smallest edge.
//!
//! [`build_complex`] produces the complex `X_E` of a state set `E`: all cubes
//! whose vertices lie in `E`. The curvature checkers come in two families that
//! are compared by [`npc_verdict`]: the combinatorial side (regularity and the
//! 3-cube condition, read off `E` directly) and the geometric side (simple
//! links that are flag, read off the built complex).

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{BitSet, EdgeSet};
use crate::cycles::EvenCycleData;
use crate::error::{Error, Limits, Result};

/// A set-like gliding system in the power group `2^E`.
#[derive(Debug, Clone)]
pub struct GlidingSystem {
    glides: Vec<EdgeSet>,
    independent: Vec<BitSet>,
    index: HashMap<EdgeSet, usize>,
}

impl GlidingSystem {
    /// Builds a system from glides and a list of independent index pairs.
    /// The relation is symmetrised; it must be irreflexive and only relate
    /// disjoint glides.
    pub fn new<I>(universe: usize, glides: Vec<EdgeSet>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = glides.len();
        let mut index = HashMap::with_capacity(n);
        for (i, g) in glides.iter().enumerate() {
            if g.universe() != universe {
                return Err(Error::InvalidGlidingSystem(format!(
                    "glide {i} lives over {} edges, expected {universe}",
                    g.universe()
                )));
            }
            if g.is_empty() {
                return Err(Error::InvalidGlidingSystem(format!(
                    "glide {i} is the unit"
                )));
            }
            if index.insert(g.clone(), i).is_some() {
                return Err(Error::InvalidGlidingSystem(format!(
                    "glide {i} is listed twice"
                )));
            }
        }
        let mut independent = vec![BitSet::new(n); n];
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::InvalidGlidingSystem(format!(
                    "independence pair ({i}, {j}) out of range"
                )));
            }
            if i == j {
                return Err(Error::InvalidGlidingSystem(format!(
                    "glide {i} declared independent of itself"
                )));
            }
            if glides[i].intersects(&glides[j]) {
                return Err(Error::InvalidGlidingSystem(format!(
                    "independent glides {i} and {j} overlap"
                )));
            }
            independent[i].insert(j);
            independent[j].insert(i);
        }
        Ok(GlidingSystem {
            glides,
            independent,
            index,
        })
    }

    /// Glides are independent exactly when disjoint.
    pub fn disjointness(universe: usize, glides: Vec<EdgeSet>) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (0..glides.len())
            .flat_map(|i| (i + 1..glides.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| glides[i].is_disjoint(&glides[j]))
            .collect();
        Self::new(universe, glides, pairs)
    }

    /// Even cycles of a hypergraph as glides, independent when their vertex
    /// supports are disjoint.
    pub fn from_even_cycles(universe: usize, cycles: &[EvenCycleData]) -> Result<Self> {
        let glides = cycles.iter().map(|d| d.cycle.edges().clone()).collect();
        let pairs: Vec<(usize, usize)> = (0..cycles.len())
            .flat_map(|i| (i + 1..cycles.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                cycles[i]
                    .cycle
                    .support()
                    .is_disjoint(cycles[j].cycle.support())
            })
            .collect();
        Self::new(universe, glides, pairs)
    }

    pub fn len(&self) -> usize {
        self.glides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glides.is_empty()
    }

    pub fn glide(&self, i: usize) -> &EdgeSet {
        &self.glides[i]
    }

    pub fn glides(&self) -> &[EdgeSet] {
        &self.glides
    }

    pub fn are_independent(&self, i: usize, j: usize) -> bool {
        self.independent[i].contains(j)
    }

    pub fn independent_of(&self, i: usize) -> &BitSet {
        &self.independent[i]
    }

    pub fn lookup(&self, s: &EdgeSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn universe(&self) -> usize {
        self.glides.first().map_or(0, BitSet::universe)
    }
}

/// Gliding of `state` along `glide`: the product `glide * state`.
pub fn glide(state: &EdgeSet, glide: &EdgeSet) -> EdgeSet {
    glide.product(state)
}

/// `[T] A` for a list of glide indices `T`.
pub fn apply(sys: &GlidingSystem, state: &EdgeSet, glides: &[usize]) -> EdgeSet {
    let mut out = state.clone();
    for &g in glides {
        out.product_assign(sys.glide(g));
    }
    out
}

/// Least vertex of the cube spanned by `glides` through `vertex`.
pub fn canonical_base(sys: &GlidingSystem, vertex: &EdgeSet, glides: &[usize]) -> EdgeSet {
    let mut base = vertex.clone();
    for &g in glides {
        let s = sys.glide(g);
        if base.contains(s.first().expect("glides are non-empty")) {
            base.product_assign(s);
        }
    }
    base
}

/// A finite state set with a stable index.
#[derive(Debug, Clone, Default)]
pub struct StateSet {
    states: Vec<EdgeSet>,
    index: HashMap<EdgeSet, usize>,
}

impl StateSet {
    /// Sorts and deduplicates.
    pub fn new(mut states: Vec<EdgeSet>) -> Self {
        states.sort();
        states.dedup();
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        StateSet { states, index }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn get(&self, i: usize) -> &EdgeSet {
        &self.states[i]
    }

    pub fn as_slice(&self) -> &[EdgeSet] {
        &self.states
    }

    pub fn position(&self, s: &EdgeSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &EdgeSet) -> bool {
        self.index.contains_key(s)
    }

    /// Glides `s` with `sA` in the set, ascending.
    fn moves(&self, sys: &GlidingSystem, a: &EdgeSet) -> Vec<usize> {
        if sys.len() <= self.len() {
            (0..sys.len())
                .filter(|&g| self.contains(&glide(a, sys.glide(g))))
                .collect()
        } else {
            let mut out: Vec<usize> = self
                .states
                .iter()
                .filter_map(|b| sys.lookup(&a.product(b)))
                .collect();
            out.sort_unstable();
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CubeId {
    pub dim: usize,
    pub index: usize,
}

/// A cube of the complex: canonical base (a state index) and ascending glide
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    pub base: usize,
    pub glides: Vec<usize>,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.glides.len()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    pub max_dim: Option<usize>,
    pub limits: Limits,
}

/// The cubed complex of a state set.
#[derive(Debug, Clone)]
pub struct CubeComplex {
    system: GlidingSystem,
    states: StateSet,
    cubes: Vec<Vec<Cube>>,
    lookup: HashMap<(usize, Vec<usize>), CubeId>,
    /// Cubes of positive dimension containing each state.
    star: Vec<Vec<CubeId>>,
}

/// Builds `X_E` for the state set `states`.
///
/// Each cube is produced once, at its canonical base `A`: only glides `s` with
/// `sA` in `E` and `A` avoiding the smallest edge of `s` are candidates, and
/// independent families of candidates are grown one glide at a time while all
/// new vertices stay in `E`.
pub fn build_complex(
    sys: &GlidingSystem,
    states: &StateSet,
    opts: BuildOptions,
) -> Result<CubeComplex> {
    let limits = opts.limits;
    if states.len() > limits.max_states {
        return Err(Error::StateLimit {
            size: states.len(),
            limit: limits.max_states,
        });
    }
    let budget = AtomicUsize::new(0);
    let per_state: Vec<Result<Vec<Cube>>> = (0..states.len())
        .into_par_iter()
        .map(|a| cubes_based_at(sys, states, a, opts, &budget))
        .collect();
    let mut cubes: Vec<Vec<Cube>> = Vec::new();
    for found in per_state {
        for cube in found? {
            let d = cube.dim();
            if cubes.len() <= d {
                cubes.resize(d + 1, Vec::new());
            }
            cubes[d].push(cube);
        }
    }
    for layer in &mut cubes {
        layer.sort();
    }
    Ok(CubeComplex::assemble(sys.clone(), states.clone(), cubes))
}

fn cubes_based_at(
    sys: &GlidingSystem,
    states: &StateSet,
    a: usize,
    opts: BuildOptions,
    budget: &AtomicUsize,
) -> Result<Vec<Cube>> {
    let base = states.get(a);
    let candidates: Vec<usize> = states
        .moves(sys, base)
        .into_iter()
        .filter(|&g| !base.contains(sys.glide(g).first().expect("non-empty glide")))
        .collect();
    let mut out = Vec::new();
    let mut grow = CubeGrowth {
        sys,
        states,
        base: a,
        candidates: &candidates,
        max_dim: opts.max_dim.unwrap_or(usize::MAX),
        limit: opts.limits.max_cubes,
        budget,
        out: &mut out,
    };
    grow.emit(Vec::new())?;
    grow.extend(&mut Vec::new(), &mut vec![base.clone()], 0)?;
    Ok(out)
}

struct CubeGrowth<'a> {
    sys: &'a GlidingSystem,
    states: &'a StateSet,
    base: usize,
    candidates: &'a [usize],
    max_dim: usize,
    limit: usize,
    budget: &'a AtomicUsize,
    out: &'a mut Vec<Cube>,
}

impl CubeGrowth<'_> {
    fn emit(&mut self, glides: Vec<usize>) -> Result<()> {
        if self.budget.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::CubeLimit { limit: self.limit });
        }
        self.out.push(Cube {
            base: self.base,
            glides,
        });
        Ok(())
    }

    fn extend(&mut self, chosen: &mut Vec<usize>, verts: &mut Vec<EdgeSet>, from: usize) -> Result<()> {
        if chosen.len() >= self.max_dim {
            return Ok(());
        }
        for k in from..self.candidates.len() {
            let t = self.candidates[k];
            if !chosen.iter().all(|&s| self.sys.are_independent(s, t)) {
                continue;
            }
            let moved: Vec<EdgeSet> = verts.iter().map(|v| glide(v, self.sys.glide(t))).collect();
            if !moved.iter().all(|v| self.states.contains(v)) {
                continue;
            }
            chosen.push(t);
            let keep = verts.len();
            verts.extend(moved);
            self.emit(chosen.clone())?;
            let r = self.extend(chosen, verts, k + 1);
            verts.truncate(keep);
            chosen.pop();
            r?;
        }
        Ok(())
    }
}

/// Vertices of the cube spanned by `glides` at `base`, indexed by subset
/// bitmask over `glides`.
pub fn cube_vertices(sys: &GlidingSystem, base: &EdgeSet, glides: &[usize]) -> Vec<EdgeSet> {
    let mut verts = vec![base.clone()];
    for &g in glides {
        let moved: Vec<EdgeSet> = verts.iter().map(|v| glide(v, sys.glide(g))).collect();
        verts.extend(moved);
    }
    verts
}

/// Simplicial complex on glide indices, closed under taking faces.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    pub vertices: Vec<usize>,
    /// All non-empty simplices, each sorted; sorted by size then content.
    pub simplices: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices
            .binary_search_by(|s| s.len().cmp(&simplex.len()).then_with(|| s.as_slice().cmp(simplex)))
            .is_ok()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagViolation {
    pub state: usize,
    pub clique: Vec<usize>,
}

impl CubeComplex {
    fn assemble(system: GlidingSystem, states: StateSet, cubes: Vec<Vec<Cube>>) -> Self {
        let mut lookup = HashMap::new();
        let mut star = vec![Vec::new(); states.len()];
        for (dim, layer) in cubes.iter().enumerate() {
            for (index, cube) in layer.iter().enumerate() {
                let id = CubeId { dim, index };
                lookup.insert((cube.base, cube.glides.clone()), id);
                if dim == 0 {
                    continue;
                }
                for v in cube_vertices(&system, states.get(cube.base), &cube.glides) {
                    let vi = states.position(&v).expect("cube vertices are states");
                    star[vi].push(id);
                }
            }
        }
        CubeComplex {
            system,
            states,
            cubes,
            lookup,
            star,
        }
    }

    pub fn system(&self) -> &GlidingSystem {
        &self.system
    }

    pub fn states(&self) -> &StateSet {
        &self.states
    }

    pub fn state(&self, i: usize) -> &EdgeSet {
        self.states.get(i)
    }

    pub fn cubes(&self, dim: usize) -> &[Cube] {
        self.cubes.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn cube(&self, id: CubeId) -> &Cube {
        &self.cubes[id.dim][id.index]
    }

    pub fn all_cubes(&self) -> impl Iterator<Item = (CubeId, &Cube)> {
        self.cubes.iter().enumerate().flat_map(|(dim, layer)| {
            layer
                .iter()
                .enumerate()
                .map(move |(index, c)| (CubeId { dim, index }, c))
        })
    }

    /// Cubes of positive dimension having state `a` as a vertex.
    pub fn star(&self, a: usize) -> &[CubeId] {
        &self.star[a]
    }

    /// The cube through state `vertex` spanned by `glides`, if present.
    pub fn find_cube(&self, vertex: &EdgeSet, glides: &[usize]) -> Option<CubeId> {
        let mut sorted = glides.to_vec();
        sorted.sort_unstable();
        let base = canonical_base(&self.system, vertex, &sorted);
        let b = self.states.position(&base)?;
        self.lookup.get(&(b, sorted)).copied()
    }

    pub fn vertices_of(&self, id: CubeId) -> Vec<EdgeSet> {
        let c = self.cube(id);
        cube_vertices(&self.system, self.state(c.base), &c.glides)
    }

    /// State indices of the vertices of a cube.
    pub fn vertex_ids_of(&self, id: CubeId) -> Vec<usize> {
        self.vertices_of(id)
            .iter()
            .map(|v| self.states.position(v).expect("cube vertices are states"))
            .collect()
    }

    /// The `2k` codimension-one faces of a `k`-cube. Panics if one is missing,
    /// which would break the complex invariant.
    pub fn facets(&self, id: CubeId) -> Vec<CubeId> {
        let c = self.cube(id);
        let base = self.state(c.base);
        let mut out = Vec::with_capacity(2 * c.dim());
        for (k, &t) in c.glides.iter().enumerate() {
            let mut rest = c.glides.clone();
            rest.remove(k);
            for v in [base.clone(), glide(base, self.system.glide(t))] {
                out.push(self.find_cube(&v, &rest).expect("facet present in complex"));
            }
        }
        out
    }

    /// True iff `face` is a face of `cube`.
    pub fn is_face(&self, face: CubeId, cube: CubeId) -> bool {
        let (f, c) = (self.cube(face), self.cube(cube));
        if !f.glides.iter().all(|g| c.glides.contains(g)) {
            return false;
        }
        let fb = self.state(f.base);
        let cb = self.state(c.base);
        // fb must be [T] cb for some T among the glides of `cube`.
        let diff = fb.product(cb);
        let mut covered = diff.clone();
        for &g in &c.glides {
            let s = self.system.glide(g);
            let part = diff.intersection(s);
            if !part.is_empty() {
                if &part != s {
                    return false;
                }
                covered.product_assign(s);
            }
        }
        covered.is_empty()
    }

    /// Minimal cube containing both states, when one cube is a face of every
    /// cube containing them.
    pub fn hull(&self, a: usize, b: usize) -> Option<CubeId> {
        if a == b {
            return Some(self.find_cube(self.state(a), &[]).expect("0-cubes present"));
        }
        let containing: Vec<CubeId> = self.star[a]
            .iter()
            .copied()
            .filter(|&id| self.star[b].contains(&id))
            .collect();
        let smallest = *containing.iter().min_by_key(|id| id.dim)?;
        containing
            .iter()
            .all(|&q| self.is_face(smallest, q))
            .then_some(smallest)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self.cubes.iter().map(Vec::len).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn euler(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Highest cube dimension; `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.f_vector().len().checked_sub(1)
    }

    /// Connected components as sorted lists of state indices, ordered by their
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.states.len();
        let mut uf = UnionFind::<usize>::new(n);
        for edge in self.cubes(1) {
            let b = self.state(edge.base);
            let other = glide(b, self.system.glide(edge.glides[0]));
            uf.union(edge.base, self.states.position(&other).expect("edge end is a state"));
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..n {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Edges of the 1-skeleton as ordered state-index pairs `(low, high)`,
    /// together with the glide of each.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = self
            .cubes(1)
            .iter()
            .map(|c| {
                let other = glide(self.state(c.base), self.system.glide(c.glides[0]));
                let o = self.states.position(&other).expect("edge end is a state");
                (c.base.min(o), c.base.max(o), c.glides[0])
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Link of a state: glides of incident edges, simplices from incident cubes.
    pub fn link(&self, a: usize) -> Result<SimplicialComplex> {
        if a >= self.states.len() {
            return Err(Error::NotAState);
        }
        Ok(self.link_unchecked(a))
    }

    pub fn link_of(&self, state: &EdgeSet) -> Result<SimplicialComplex> {
        let a = self.states.position(state).ok_or(Error::NotAState)?;
        Ok(self.link_unchecked(a))
    }

    fn link_unchecked(&self, a: usize) -> SimplicialComplex {
        let mut simplices: Vec<Vec<usize>> = self.star[a]
            .iter()
            .map(|&id| self.cube(id).glides.clone())
            .collect();
        simplices.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        simplices.dedup();
        let vertices = simplices
            .iter()
            .take_while(|s| s.len() == 1)
            .map(|s| s[0])
            .collect();
        SimplicialComplex {
            vertices,
            simplices,
        }
    }

    /// Links are simplicial complexes: every cube has distinct vertices, each
    /// glide set at a vertex names one cube, and faces of link simplices are
    /// link simplices.
    pub fn check_simple(&self) -> bool {
        for layer in &self.cubes {
            for c in layer {
                let verts = cube_vertices(&self.system, self.state(c.base), &c.glides);
                let distinct: HashSet<&EdgeSet> = verts.iter().collect();
                if distinct.len() != verts.len() {
                    return false;
                }
            }
        }
        for a in 0..self.states.len() {
            let mut seen = HashSet::new();
            for &id in &self.star[a] {
                if !seen.insert(self.cube(id).glides.clone()) {
                    return false;
                }
            }
            let link = self.link_unchecked(a);
            for s in &link.simplices {
                for k in 0..s.len() {
                    if s.len() == 1 {
                        continue;
                    }
                    let mut face = s.clone();
                    face.remove(k);
                    if !link.contains(&face) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First clique of some link's 1-skeleton that spans no simplex, scanning
    /// states in order and maximal cliques in Bron–Kerbosch order.
    pub fn flag_violation(&self) -> Option<FlagViolation> {
        (0..self.states.len()).find_map(|a| {
            let link = self.link_unchecked(a);
            let verts = &link.vertices;
            let n = verts.len();
            let mut adj = vec![BitSet::new(n); n];
            for s in link.simplices.iter().filter(|s| s.len() == 2) {
                let i = verts.binary_search(&s[0]).expect("link vertex");
                let j = verts.binary_search(&s[1]).expect("link vertex");
                adj[i].insert(j);
                adj[j].insert(i);
            }
            let mut bad = None;
            bron_kerbosch(
                &adj,
                BitSet::new(n),
                BitSet::full(n),
                BitSet::new(n),
                &mut |clique| {
                    let glides: Vec<usize> = clique.iter().map(|i| verts[i]).collect();
                    if !glides.is_empty() && !link.contains(&glides) {
                        bad = Some(glides);
                        return false;
                    }
                    true
                },
            );
            bad.map(|clique| FlagViolation { state: a, clique })
        })
    }

    pub fn check_flag(&self) -> bool {
        self.flag_violation().is_none()
    }

    /// Cubes as exchange records, naming edges by `edge_names`.
    pub fn dump(&self, edge_names: &[String]) -> ComplexDump {
        let names = |s: &EdgeSet| s.iter().map(|e| edge_names[e].clone()).collect::<Vec<_>>();
        ComplexDump {
            f_vector: self.f_vector(),
            states: self.states.as_slice().iter().map(names).collect(),
            glides: self.system.glides().iter().map(names).collect(),
            cubes: self
                .all_cubes()
                .map(|(id, c)| CubeRecord {
                    dim: id.dim,
                    base: names(self.state(c.base)),
                    glides: c.glides.clone(),
                })
                .collect(),
        }
    }

    /// DOT rendering of the 1-skeleton; vertices are labelled by their edge ids.
    pub fn to_dot(&self, edge_names: &[String]) -> String {
        let label = |s: &EdgeSet| {
            let ids: Vec<&str> = s.iter().map(|e| edge_names[e].as_str()).collect();
            format!("{{{}}}", ids.join(","))
        };
        let mut out = String::from("graph complex {\n");
        for (i, s) in self.states.as_slice().iter().enumerate() {
            out.push_str(&format!("  s{i} [label=\"{}\"];\n", label(s)));
        }
        for (a, b, g) in self.edges() {
            out.push_str(&format!("  s{a} -- s{b} [label=\"g{g}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CubeRecord {
    pub dim: usize,
    pub base: Vec<String>,
    pub glides: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexDump {
    pub f_vector: Vec<usize>,
    pub states: Vec<Vec<String>>,
    pub glides: Vec<Vec<String>>,
    pub cubes: Vec<CubeRecord>,
}

/// Bron–Kerbosch with pivoting over bitset adjacency. `report` sees each
/// maximal clique and returns `false` to stop the search.
fn bron_kerbosch(
    adj: &[BitSet],
    r: BitSet,
    p: BitSet,
    x: BitSet,
    report: &mut dyn FnMut(&BitSet) -> bool,
) -> bool {
    if p.is_empty() && x.is_empty() {
        return report(&r);
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| adj[u].intersection(&p).count())
        .expect("p or x non-empty");
    let mut p = p;
    let mut x = x;
    for v in p.difference(&adj[pivot]).to_vec() {
        let mut r2 = r.clone();
        r2.insert(v);
        if !bron_kerbosch(adj, r2, p.intersection(&adj[v]), x.intersection(&adj[v]), report) {
            return false;
        }
        p.remove(v);
        x.insert(v);
    }
    true
}

/// Violation of the square condition: `sA`, `tA` in the set, `stA` not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareViolation {
    pub state: usize,
    pub glides: [usize; 2],
}

/// Violation of the 3-cube condition: seven corners present, the eighth not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeViolation {
    pub state: usize,
    pub glides: [usize; 3],
}

pub fn square_violation(sys: &GlidingSystem, states: &StateSet) -> Option<SquareViolation> {
    (0..states.len()).find_map(|a| {
        let base = states.get(a);
        let moves = states.moves(sys, base);
        for (k, &s) in moves.iter().enumerate() {
            for &t in &moves[k + 1..] {
                if sys.are_independent(s, t) && !states.contains(&apply(sys, base, &[s, t])) {
                    return Some(SquareViolation {
                        state: a,
                        glides: [s, t],
                    });
                }
            }
        }
        None
    })
}

/// Square condition on `states` relative to the whole power group.
pub fn check_square(sys: &GlidingSystem, states: &StateSet) -> bool {
    square_violation(sys, states).is_none()
}

pub fn three_cube_violation(sys: &GlidingSystem, states: &StateSet) -> Option<CubeViolation> {
    (0..states.len()).find_map(|a| {
        let base = states.get(a);
        let moves = states.moves(sys, base);
        let n = moves.len();
        for i in 0..n {
            for j in i + 1..n {
                let (s1, s2) = (moves[i], moves[j]);
                if !sys.are_independent(s1, s2) || !states.contains(&apply(sys, base, &[s1, s2])) {
                    continue;
                }
                for &s3 in &moves[j + 1..] {
                    if sys.are_independent(s1, s3)
                        && sys.are_independent(s2, s3)
                        && states.contains(&apply(sys, base, &[s1, s3]))
                        && states.contains(&apply(sys, base, &[s2, s3]))
                        && !states.contains(&apply(sys, base, &[s1, s2, s3]))
                    {
                        return Some(CubeViolation {
                            state: a,
                            glides: [s1, s2, s3],
                        });
                    }
                }
            }
        }
        None
    })
}

pub fn check_3cube(sys: &GlidingSystem, states: &StateSet) -> bool {
    three_cube_violation(sys, states).is_none()
}

/// Regularity, checked literally: at every state, every family of independent
/// glides `S` with `sA` and `stA` in the set for all `s != t` in `S` must have
/// pairwise distinct subset products.
pub fn check_regular(sys: &GlidingSystem, states: &StateSet) -> bool {
    (0..states.len()).all(|a| {
        let base = states.get(a);
        let moves = states.moves(sys, base);
        let n = moves.len();
        // Compatibility graph of condition (*).
        let mut adj = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                let (s, t) = (moves[i], moves[j]);
                if sys.are_independent(s, t) && states.contains(&apply(sys, base, &[s, t])) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        all_cliques_cubic(sys, &moves, &adj, &mut Vec::new(), BitSet::full(n))
    })
}

fn all_cliques_cubic(
    sys: &GlidingSystem,
    moves: &[usize],
    adj: &[BitSet],
    chosen: &mut Vec<usize>,
    allowed: BitSet,
) -> bool {
    for k in allowed.iter() {
        chosen.push(moves[k]);
        let mut products = HashSet::new();
        let cubic = (0u64..1 << chosen.len()).all(|mask| {
            let mut p = EdgeSet::new(sys.universe());
            for (i, &g) in chosen.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    p.product_assign(sys.glide(g));
                }
            }
            products.insert(p)
        });
        let mut next = allowed.intersection(&adj[k]);
        for j in 0..=k {
            if next.contains(j) {
                next.remove(j);
            }
        }
        let ok = cubic && all_cliques_cubic(sys, moves, adj, chosen, next);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Both sides of the curvature criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NpcReport {
    pub regular: bool,
    pub three_cube: bool,
    pub simple: bool,
    pub flag: bool,
    pub square: bool,
}

impl NpcReport {
    pub fn combinatorial(&self) -> bool {
        self.regular && self.three_cube
    }

    pub fn geometric(&self) -> bool {
        self.simple && self.flag
    }

    pub fn npc(&self) -> bool {
        self.geometric()
    }
}

/// Evaluates both sides of the criterion and fails with
/// [`Error::Inconsistent`] if they disagree.
pub fn npc_verdict(sys: &GlidingSystem, states: &StateSet, limits: Limits) -> Result<NpcReport> {
    let complex = build_complex(
        sys,
        states,
        BuildOptions {
            max_dim: None,
            limits,
        },
    )?;
    let report = NpcReport {
        regular: check_regular(sys, states),
        three_cube: check_3cube(sys, states),
        simple: complex.check_simple(),
        flag: complex.check_flag(),
        square: check_square(sys, states),
    };
    if report.combinatorial() != report.geometric() {
        return Err(Error::Inconsistent(format!(
            "curvature sides disagree: {report:?}"
        )));
    }
    Ok(report)
}

/// Multiplies f-vectors as polynomials; the f-vector of a product complex.
pub fn f_product(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
