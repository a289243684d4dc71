//! Permutations of marked dimers along loops of glidings.
//!
//! In a graph every dimer covering has `N = |V|/2` edges. Mark the edges of
//! the base covering `1..N` in increasing edge order. A v-orientation picks one
//! of the two vertex halves of every even cycle; gliding along `s` pushes each
//! marked edge of `s` through its endpoint in the distinguished v-half onto the
//! other edge of `s` at that endpoint. Going round a loop permutes the marks.
//!
//! Permutations are one-line arrays: entry `i` is the mark that ends up on the
//! edge that started with mark `i + 1`. With this convention
//! `perm(αβ)[i] = perm(α)[perm(β)[i]]`, see [`Permutation::compose`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::typing::GlideLoop;
use crate::bits::EdgeSet;
use crate::complex::BuildOptions;
use crate::dimer::DimerModel;
use crate::error::{Error, Result};
use crate::hypergraph::SubdivisionProfile;

/// A distinguished vertex half (0 or 1) per glide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VOrientation {
    pub vhalves: Vec<usize>,
}

impl VOrientation {
    /// Vertex half 0, the one holding the smallest vertex, everywhere.
    pub fn canonical(model: &DimerModel) -> Self {
        VOrientation {
            vhalves: vec![0; model.glides().len()],
        }
    }

    /// Distinguishes the given vertex half of the glide with edges `cycle`.
    pub fn choose(&mut self, model: &DimerModel, cycle: &EdgeSet, vhalf: &EdgeSet) -> Result<()> {
        let g = model.glide_id(cycle).ok_or(Error::NotACycle)?;
        let k = model.glides()[g]
            .vertex_half_index(vhalf)
            .ok_or_else(|| Error::VHalfIncidence {
                glide: g,
                detail: "vertex set is not a v-half of the cycle".into(),
            })?;
        self.vhalves[g] = k;
        Ok(())
    }

    pub fn flipped(&self, g: usize) -> Self {
        let mut o = self.clone();
        o.vhalves[g] = 1 - o.vhalves[g];
        o
    }
}

/// A covering with marks `1..=N` on its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedCovering {
    pub covering: EdgeSet,
    /// Edge index to mark.
    pub marks: BTreeMap<usize, usize>,
}

impl MarkedCovering {
    /// Marks `1..=N` in increasing edge order.
    pub fn initial(covering: &EdgeSet) -> Self {
        MarkedCovering {
            covering: covering.clone(),
            marks: covering.iter().zip(1..).collect(),
        }
    }
}

/// Glides a marked covering along glide `g`, moving marks per the
/// v-orientation.
pub fn glide_marked(
    model: &DimerModel,
    m: &MarkedCovering,
    g: usize,
    vo: &VOrientation,
) -> Result<MarkedCovering> {
    let h = model.graph();
    h.require_graph()?;
    let data = model.glide_data(g)?;
    let s = data.cycle.edges();
    let next = m.covering.product(s);
    model.covering_index(&next)?;
    let vhalf = &data.vertex_halves.as_ref().expect("graph cycles have v-halves")[vo.vhalves[g]];
    let mut marks = BTreeMap::new();
    for (&e, &mark) in &m.marks {
        let target = if s.contains(e) {
            let through: Vec<usize> = h.ends(e).iter().copied().filter(|&v| vhalf.contains(v)).collect();
            let &[v] = through.as_slice() else {
                return Err(Error::VHalfIncidence {
                    glide: g,
                    detail: format!(
                        "edge {} has {} endpoints in the distinguished v-half",
                        h.edge_name(e),
                        through.len()
                    ),
                });
            };
            *h.incident(v)
                .iter()
                .find(|&&f| f != e && s.contains(f))
                .expect("cycle vertices have two cycle edges")
        } else {
            e
        };
        if marks.insert(target, mark).is_some() {
            return Err(Error::Inconsistent(format!(
                "two marks pushed onto edge {}",
                h.edge_name(target)
            )));
        }
    }
    debug_assert!(marks.keys().all(|&e| next.contains(e)));
    Ok(MarkedCovering {
        covering: next,
        marks,
    })
}

/// One-line permutation of `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// `(self ∘ other)[i] = self[other[i]]`; for loops,
    /// `perm(αβ) = perm(α).compose(perm(β))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(231)`-style string; entries are comma separated once any exceeds 9.
    pub fn one_line(&self) -> String {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let body: Vec<String> = self.0.iter().map(usize::to_string).collect();
        format!("({})", body.join(sep))
    }

    /// Disjoint cycles without fixed points, `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.0.len()];
        let mut out = String::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start + 1 {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.0[i] - 1;
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// The permutation of marks induced by a loop.
pub fn braid_permutation(model: &DimerModel, lp: &GlideLoop, vo: &VOrientation) -> Result<Permutation> {
    model.graph().require_graph()?;
    lp.states(model)?;
    let start = MarkedCovering::initial(&lp.base);
    let mut m = start.clone();
    for &g in &lp.steps {
        m = glide_marked(model, &m, g, vo)?;
    }
    Ok(Permutation(
        start.marks.keys().map(|e| m.marks[e]).collect(),
    ))
}

/// A loop and v-orientation carried to the subdivided graph `Γ_n`.
#[derive(Debug, Clone)]
pub struct Subdivided {
    pub model: DimerModel,
    pub path: GlideLoop,
    pub vo: VOrientation,
}

/// Transports a loop to `Γ_n`: a covering `A` goes to the covering taking
/// the sub-edges at even positions of edges in `A` and at odd positions of
/// the others; a cycle goes to the union of its paths, with the v-half that
/// contains the original distinguished v-half.
pub fn subdivide_loop(
    model: &DimerModel,
    lp: &GlideLoop,
    profile: &SubdivisionProfile,
    vo: &VOrientation,
    opts: BuildOptions,
) -> Result<Subdivided> {
    let h = model.graph();
    lp.states(model)?;
    let (hn, paths) = h.subdivide(profile)?;
    let sub = DimerModel::new(hn, opts)?;
    let m = sub.graph().edge_count();
    let base = EdgeSet::from_indices(
        m,
        paths.iter().enumerate().flat_map(|(e, p)| {
            let parity = usize::from(!lp.base.contains(e));
            p.iter()
                .enumerate()
                .filter(move |(j, _)| j % 2 == parity)
                .map(|(_, &f)| f)
        }),
    );
    let mut map = vec![usize::MAX; model.glides().len()];
    let mut vn = VOrientation::canonical(&sub);
    for (g, data) in model.glides().iter().enumerate() {
        let edges = EdgeSet::from_indices(
            m,
            data.cycle.edges().iter().flat_map(|e| paths[e].iter().copied()),
        );
        let gn = sub
            .glide_id(&edges)
            .ok_or_else(|| Error::Inconsistent("subdivided cycle is not an even cycle".into()))?;
        map[g] = gn;
        let chosen = &data.vertex_halves.as_ref().expect("graph cycle")[vo.vhalves[g]];
        // Original vertices keep their indices in Γ_n.
        let halves = sub.glides()[gn].vertex_halves.as_ref().expect("graph cycle");
        let k = halves
            .iter()
            .position(|vh| chosen.iter().all(|v| vh.contains(v)))
            .ok_or_else(|| Error::Inconsistent("v-half split by subdivision".into()))?;
        vn.vhalves[gn] = k;
    }
    let path = GlideLoop {
        base,
        steps: lp.steps.iter().map(|&g| map[g]).collect(),
    };
    path.states(&sub)?;
    Ok(Subdivided {
        model: sub,
        path,
        vo: vn,
    })
}

/// `σ θ_n(loop)`: the permutation of `N + |n|` marks on `Γ_n`.
pub fn theta_n_permutation(
    model: &DimerModel,
    lp: &GlideLoop,
    profile: &SubdivisionProfile,
    vo: &VOrientation,
    opts: BuildOptions,
) -> Result<Permutation> {
    let s = subdivide_loop(model, lp, profile, vo, opts)?;
    braid_permutation(&s.model, &s.path, &s.vo)
}

/// Exchange form: `{"vhalves": [{"cycle": [edge ids], "vhalf": [vertex ids]}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VHalvesFile {
    pub vhalves: Vec<VHalfChoice>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VHalfChoice {
    pub cycle: Vec<String>,
    pub vhalf: Vec<String>,
}

impl VHalvesFile {
    /// Listed choices on top of the canonical v-orientation.
    pub fn resolve(&self, model: &DimerModel) -> Result<VOrientation> {
        let h = model.graph();
        let mut vo = VOrientation::canonical(model);
        for c in &self.vhalves {
            vo.choose(model, &h.edge_set(&c.cycle)?, &h.vertex_set(&c.vhalf)?)?;
        }
        Ok(vo)
    }
}
