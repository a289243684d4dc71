//! Hypergraph data model.
//!
//! A hypergraph is a finite set of vertices, a finite ordered set of edges and a
//! boundary map sending each edge to a non-empty set of vertices. Multigraphs
//! are the special case where every boundary has exactly two elements; this is
//! recorded by [`Mode::Graph`] and checked at construction.
//!
//! Edge order is fixed at construction and defines the bit positions of every
//! [`EdgeSet`] over this hypergraph.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bits::{EdgeSet, VertexSet};
use crate::cycles::{self, Cycle};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Graph,
    Hypergraph,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EdgeRecord {
    id: String,
    boundary: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphFile {
    mode: Mode,
    vertices: Vec<String>,
    edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone)]
pub struct Hypergraph {
    mode: Mode,
    vertices: Vec<String>,
    edges: Vec<String>,
    /// Endpoints of each edge in input order.
    boundary: Vec<Vec<usize>>,
    boundary_sets: Vec<VertexSet>,
    /// Edges incident to each vertex, ascending.
    incidence: Vec<Vec<usize>>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.boundary == other.boundary
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Builds and validates a hypergraph. Edges are `(id, boundary vertex ids)`.
    pub fn new<V, E, B>(mode: Mode, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, B)>,
        B: IntoIterator,
        B::Item: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateId {
                    kind: "vertex",
                    id: v.clone(),
                });
            }
        }

        let mut names = Vec::new();
        let mut boundary = Vec::new();
        let mut edge_index = HashMap::new();
        for (id, ends) in edges {
            if edge_index.contains_key(&id) {
                return Err(Error::DuplicateId { kind: "edge", id });
            }
            let ends: Vec<String> = ends.into_iter().map(Into::into).collect();
            if ends.is_empty() {
                return Err(Error::EmptyBoundary { edge: id });
            }
            let mut resolved = Vec::with_capacity(ends.len());
            let mut seen = HashSet::new();
            for v in &ends {
                let &vi = vertex_index.get(v).ok_or_else(|| Error::UnknownId {
                    kind: "vertex",
                    id: v.clone(),
                })?;
                if !seen.insert(vi) {
                    return Err(match mode {
                        Mode::Graph => Error::LoopEdge { edge: id },
                        Mode::Hypergraph => Error::Malformed(format!(
                            "edge `{id}` lists vertex `{v}` twice"
                        )),
                    });
                }
                resolved.push(vi);
            }
            if mode == Mode::Graph && resolved.len() != 2 {
                return Err(Error::BadArity {
                    edge: id,
                    arity: ends.len(),
                });
            }
            edge_index.insert(id.clone(), names.len());
            names.push(id);
            boundary.push(resolved);
        }

        let nv = vertices.len();
        let mut incidence = vec![Vec::new(); nv];
        let mut boundary_sets = Vec::with_capacity(boundary.len());
        for (e, ends) in boundary.iter().enumerate() {
            for &v in ends {
                incidence[v].push(e);
            }
            boundary_sets.push(VertexSet::from_indices(nv, ends.iter().copied()));
        }

        Ok(Hypergraph {
            mode,
            vertices,
            edges: names,
            boundary,
            boundary_sets,
            incidence,
            vertex_index,
            edge_index,
        })
    }

    /// Convenience constructor for multigraphs.
    pub fn graph<V, S>(vertices: V, edges: &[(S, S, S)]) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        S: AsRef<str>,
    {
        Self::new(
            Mode::Graph,
            vertices,
            edges.iter().map(|(id, a, b)| {
                (
                    id.as_ref().to_string(),
                    vec![a.as_ref().to_string(), b.as_ref().to_string()],
                )
            }),
        )
    }

    pub fn empty(mode: Mode) -> Self {
        Self::new(mode, Vec::<String>::new(), Vec::<(String, Vec<String>)>::new())
            .expect("empty hypergraph is valid")
    }

    /// Parses the JSON exchange format. When `mode` is given it must agree with
    /// the file's own `mode` field.
    pub fn from_json(text: &str, mode: Option<Mode>) -> Result<Self> {
        let file: HypergraphFile =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if let Some(m) = mode {
            if m != file.mode {
                return Err(Error::Malformed(format!(
                    "expected mode {m:?}, file declares {:?}",
                    file.mode
                )));
            }
        }
        Self::new(
            file.mode,
            file.vertices,
            file.edges.into_iter().map(|e| (e.id, e.boundary)),
        )
    }

    pub fn to_json(&self) -> String {
        let file = HypergraphFile {
            mode: self.mode,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .zip(&self.boundary)
                .map(|(id, ends)| EdgeRecord {
                    id: id.clone(),
                    boundary: ends.iter().map(|&v| self.vertices[v].clone()).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("hypergraph serializes")
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_graph(&self) -> bool {
        self.mode == Mode::Graph
    }

    pub fn require_graph(&self) -> Result<()> {
        if self.is_graph() {
            Ok(())
        } else {
            Err(Error::NotGraphMode)
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edges
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e]
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<usize> {
        self.edge_index.get(name).copied()
    }

    /// Endpoints of edge `e` in input order.
    pub fn ends(&self, e: usize) -> &[usize] {
        &self.boundary[e]
    }

    pub fn boundary_set(&self, e: usize) -> &VertexSet {
        &self.boundary_sets[e]
    }

    /// Edges incident to vertex `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn empty_edges(&self) -> EdgeSet {
        EdgeSet::new(self.edge_count())
    }

    pub fn empty_vertices(&self) -> VertexSet {
        VertexSet::new(self.vertex_count())
    }

    /// Resolves a list of edge identifiers into an edge set.
    pub fn edge_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<EdgeSet> {
        let mut s = self.empty_edges();
        for id in ids {
            let e = self.edge_id(id.as_ref()).ok_or_else(|| Error::UnknownId {
                kind: "edge",
                id: id.as_ref().to_string(),
            })?;
            s.insert(e);
        }
        Ok(s)
    }

    pub fn vertex_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<VertexSet> {
        let mut s = self.empty_vertices();
        for id in ids {
            let v = self.vertex_id(id.as_ref()).ok_or_else(|| Error::UnknownId {
                kind: "vertex",
                id: id.as_ref().to_string(),
            })?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Edge identifiers of `s` in edge order.
    pub fn edge_ids(&self, s: &EdgeSet) -> Vec<String> {
        s.iter().map(|e| self.edges[e].clone()).collect()
    }

    pub fn vertex_ids(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.vertices[v].clone()).collect()
    }

    /// Union of the boundaries of the edges in `s`.
    pub fn support(&self, s: &EdgeSet) -> VertexSet {
        let mut out = self.empty_vertices();
        for e in s {
            for &v in &self.boundary[e] {
                out.insert(v);
            }
        }
        out
    }

    /// Tagged disjoint union; identifiers become `1.x` and `2.x`. The result is
    /// in graph mode only when both operands are.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let mode = if self.is_graph() && other.is_graph() {
            Mode::Graph
        } else {
            Mode::Hypergraph
        };
        let tag = |t: usize, s: &str| format!("{t}.{s}");
        let vertices = self
            .vertices
            .iter()
            .map(|v| tag(1, v))
            .chain(other.vertices.iter().map(|v| tag(2, v)));
        let edges = [(1, self), (2, other)].into_iter().flat_map(|(t, h)| {
            h.edges.iter().zip(&h.boundary).map(move |(id, ends)| {
                (
                    tag(t, id),
                    ends.iter().map(|&v| tag(t, &h.vertices[v])).collect::<Vec<_>>(),
                )
            })
        });
        Hypergraph::new(mode, vertices, edges).expect("union of valid hypergraphs is valid")
    }

    /// Replaces each edge `e` by a path of `2 n(e) + 1` sub-edges running from its
    /// first endpoint to its second, inserting `2 n(e)` new vertices.
    ///
    /// Edges with `n(e) = 0` keep their identifier. Otherwise sub-edges are named
    /// `e/0 .. e/2n` and the inner vertices `e@1 .. e@2n`; new vertices are
    /// appended after the original ones. The returned path map lists, for every
    /// original edge, its sub-edge indices in path order.
    pub fn subdivide(&self, profile: &SubdivisionProfile) -> Result<(Hypergraph, Vec<Vec<usize>>)> {
        self.require_graph()?;
        for name in profile.counts.keys() {
            if self.edge_id(name).is_none() {
                return Err(Error::UnknownId {
                    kind: "edge",
                    id: name.clone(),
                });
            }
        }
        let mut vertices = self.vertices.clone();
        let mut edges: Vec<(String, Vec<String>)> = Vec::new();
        let mut paths = Vec::with_capacity(self.edge_count());
        for (e, id) in self.edges.iter().enumerate() {
            let n = profile.get(id);
            let (a, b) = (&self.vertices[self.boundary[e][0]], &self.vertices[self.boundary[e][1]]);
            if n == 0 {
                paths.push(vec![edges.len()]);
                edges.push((id.clone(), vec![a.clone(), b.clone()]));
                continue;
            }
            let inner: Vec<String> = (1..=2 * n).map(|j| format!("{id}@{j}")).collect();
            vertices.extend(inner.iter().cloned());
            let chain: Vec<&String> = std::iter::once(a)
                .chain(inner.iter())
                .chain(std::iter::once(b))
                .collect();
            let mut path = Vec::with_capacity(2 * n + 1);
            for (j, w) in chain.windows(2).enumerate() {
                path.push(edges.len());
                edges.push((format!("{id}/{j}"), vec![w[0].clone(), w[1].clone()]));
            }
            paths.push(path);
        }
        let sub = Hypergraph::new(Mode::Graph, vertices, edges)?;
        Ok((sub, paths))
    }

    /// Deletes the vertices of the given pairwise independent cycles together
    /// with every edge incident to them. Remaining vertices are kept even when
    /// they become isolated.
    pub fn delete_odd_support(&self, cycles: &[Cycle]) -> Result<Hypergraph> {
        for (i, s) in cycles.iter().enumerate() {
            for t in &cycles[i + 1..] {
                if !cycles::independent(s, t) {
                    return Err(Error::NotIndependent);
                }
            }
        }
        let mut removed = self.empty_vertices();
        for s in cycles {
            removed = removed.union(s.support());
        }
        let vertices = (0..self.vertex_count())
            .filter(|&v| !removed.contains(v))
            .map(|v| self.vertices[v].clone());
        let edges = (0..self.edge_count())
            .filter(|&e| self.boundary_sets[e].is_disjoint(&removed))
            .map(|e| {
                (
                    self.edges[e].clone(),
                    self.boundary[e]
                        .iter()
                        .map(|&v| self.vertices[v].clone())
                        .collect::<Vec<_>>(),
                )
            });
        Hypergraph::new(self.mode, vertices, edges)
    }
}

/// Number of subdivision pairs `n(e)` per edge; absent edges count as zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubdivisionProfile {
    pub counts: BTreeMap<String, usize>,
}

impl SubdivisionProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, edge: impl Into<String>, n: usize) -> Self {
        self.counts.insert(edge.into(), n);
        self
    }

    pub fn get(&self, edge: &str) -> usize {
        self.counts.get(edge).copied().unwrap_or(0)
    }

    /// `|n|`, the total number of subdivision pairs.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Parses `e1=2,e3=1`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut p = Self::new();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (edge, n) = part
                .split_once('=')
                .ok_or_else(|| Error::Malformed(format!("bad subdivision entry `{part}`")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad subdivision count in `{part}`")))?;
            p.counts.insert(edge.trim().to_string(), n);
        }
        Ok(p)
    }
}
