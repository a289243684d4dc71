//! Loops of glidings, the typing word `μ` and the homomorphism `u`.
//!
//! Choosing a half `s'` in every even cycle `s` orients each 1-cube of the
//! dimer complex towards the covering that contains the smallest edge of the
//! chosen half. Reading a loop one step at a time gives the typing word
//! `μ = g_{s_1}^{ν_1} ... g_{s_n}^{ν_n}` in the right-angled Artin group of
//! glides, with `ν_k = +1` when the step follows the orientation. The map
//! `u(g_s) = Π_{e ∈ s∖s'} h_e^{-1} Π_{e ∈ s'} h_e` lands in the right-angled
//! Artin group on edges, where `h_e` and `h_f` commute when `e` and `f` share no
//! vertex; `u(μ(α))` is trivial for every loop `α`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::raag::RaagSpec;
use super::word::{inverse, Letter, Word};
use crate::bits::EdgeSet;
use crate::dimer::DimerModel;
use crate::error::{Error, Result};

/// A chosen half index (0 or 1) for each glide; `None` when unchosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub halves: Vec<Option<usize>>,
}

impl Orientation {
    /// Half 0, the one holding the smallest edge, in every glide.
    pub fn canonical(model: &DimerModel) -> Self {
        Orientation {
            halves: vec![Some(0); model.glides().len()],
        }
    }

    pub fn unset(model: &DimerModel) -> Self {
        Orientation {
            halves: vec![None; model.glides().len()],
        }
    }

    /// Sets the chosen half of the glide with edges `cycle` to `half`.
    pub fn choose(&mut self, model: &DimerModel, cycle: &EdgeSet, half: &EdgeSet) -> Result<()> {
        let g = model.glide_id(cycle).ok_or(Error::NotACycle)?;
        let k = model.glides()[g].half_index(half).ok_or_else(|| {
            Error::Malformed(format!("edge set is not a half of glide {g}"))
        })?;
        self.halves[g] = Some(k);
        Ok(())
    }

    pub fn flipped(&self, g: usize) -> Self {
        let mut o = self.clone();
        if let Some(Some(k)) = o.halves.get_mut(g) {
            *k = 1 - *k;
        }
        o
    }

    fn half<'m>(&self, model: &'m DimerModel, g: usize) -> Result<&'m EdgeSet> {
        let data = model.glide_data(g)?;
        let k = self
            .halves
            .get(g)
            .copied()
            .flatten()
            .ok_or(Error::MissingHalf(g))?;
        Ok(&data.halves[k])
    }
}

/// A closed sequence of glidings starting at a covering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlideLoop {
    pub base: EdgeSet,
    pub steps: Vec<usize>,
}

impl GlideLoop {
    /// States visited, starting and ending at the base.
    pub fn states(&self, model: &DimerModel) -> Result<Vec<EdgeSet>> {
        model
            .covering_index(&self.base)
            .map_err(|_| Error::InvalidLoop("base is not a dimer covering".into()))?;
        let mut at = self.base.clone();
        let mut out = vec![at.clone()];
        for (k, &g) in self.steps.iter().enumerate() {
            if g >= model.glides().len() {
                return Err(Error::InvalidLoop(format!("step {k}: unknown glide {g}")));
            }
            at = at.product(model.system().glide(g));
            if model.covering_index(&at).is_err() {
                return Err(Error::InvalidLoop(format!(
                    "step {k}: gliding along {g} leaves the dimer coverings"
                )));
            }
            out.push(at.clone());
        }
        if at != self.base {
            return Err(Error::InvalidLoop("loop does not return to its base".into()));
        }
        Ok(out)
    }

    /// The loop traversed backwards.
    pub fn reversed(&self) -> Self {
        GlideLoop {
            base: self.base.clone(),
            steps: self.steps.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &GlideLoop) -> Self {
        GlideLoop {
            base: self.base.clone(),
            steps: self.steps.iter().chain(&other.steps).copied().collect(),
        }
    }
}

/// The right-angled Artin group of glides: `g_s`, `g_t` commute when `s`
/// and `t` are independent.
pub fn glide_raag(model: &DimerModel) -> RaagSpec {
    let n = model.glides().len();
    let sys = model.system();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| sys.are_independent(i, j))
        .collect();
    RaagSpec::new((0..n).map(|g| format!("g{g}")).collect(), pairs)
        .expect("independence is irreflexive")
}

/// The right-angled Artin group on edges: `h_e`, `h_f` commute when the
/// boundaries of `e` and `f` are disjoint.
pub fn edge_raag(model: &DimerModel) -> RaagSpec {
    let h = model.graph();
    let m = h.edge_count();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .filter(|&(i, j)| h.boundary_set(i).is_disjoint(h.boundary_set(j)))
        .collect();
    RaagSpec::new(
        h.edge_names().iter().map(|e| format!("h_{e}")).collect(),
        pairs,
    )
    .expect("edges are distinct")
}

/// `μ(loop)`: one letter per step, positive when the arrival covering holds
/// the smallest edge of the chosen half.
pub fn typing_word(model: &DimerModel, lp: &GlideLoop, o: &Orientation) -> Result<Word> {
    let states = lp.states(model)?;
    lp.steps
        .iter()
        .zip(&states[1..])
        .map(|(&g, arrival)| {
            let chosen = o.half(model, g)?.first().expect("halves are non-empty");
            Ok(if arrival.contains(chosen) {
                Letter::pos(g)
            } else {
                Letter::neg(g)
            })
        })
        .collect()
}

/// `u(w)` for a word in the glide generators.
pub fn u_word(model: &DimerModel, w: &[Letter], o: &Orientation) -> Result<Word> {
    let mut out = Vec::new();
    for l in w {
        let data = model.glide_data(l.gen)?;
        let chosen = o.half(model, l.gen)?;
        let mut image: Word = data
            .cycle
            .edges()
            .difference(chosen)
            .iter()
            .map(Letter::neg)
            .collect();
        image.extend(chosen.iter().map(Letter::pos));
        if l.exp < 0 {
            image = inverse(&image);
        }
        out.extend(image);
    }
    Ok(out)
}

/// A random closed walk: `steps` random glidings from a random covering,
/// closed up along a shortest path back to the start. `None` when the model
/// has no coverings.
pub fn random_loop<R: Rng + ?Sized>(model: &DimerModel, rng: &mut R, steps: usize) -> Option<GlideLoop> {
    let complex = model.complex();
    let n = model.coverings().len();
    if n == 0 {
        return None;
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (a, b, g) in complex.edges() {
        adj[a].push((b, g));
        adj[b].push((a, g));
    }
    let start = rng.gen_range(0..n);
    let mut at = start;
    let mut path = Vec::with_capacity(steps);
    for _ in 0..steps {
        let Some(&(next, g)) = adj[at].choose(rng) else {
            break;
        };
        path.push(g);
        at = next;
    }
    path.extend(shortest_path(&adj, at, start));
    Some(GlideLoop {
        base: model.covering(start).clone(),
        steps: path,
    })
}

fn shortest_path(adj: &[Vec<(usize, usize)>], from: usize, to: usize) -> Vec<usize> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, g) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, g));
                queue.push_back(w);
            }
        }
    }
    let mut steps = Vec::new();
    let mut at = to;
    while let Some((p, g)) = prev[at] {
        steps.push(g);
        at = p;
    }
    steps.reverse();
    steps
}

/// Exchange form: `{"base": [edge ids], "steps": [[edge ids] | glide id, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LoopFile {
    pub base: Vec<String>,
    pub steps: Vec<StepRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StepRecord {
    Id(usize),
    Edges(Vec<String>),
}

impl LoopFile {
    pub fn resolve(&self, model: &DimerModel) -> Result<GlideLoop> {
        let h = model.graph();
        let base = h.edge_set(&self.base)?;
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                StepRecord::Id(g) => Ok(*g),
                StepRecord::Edges(ids) => model
                    .glide_id(&h.edge_set(ids)?)
                    .ok_or_else(|| Error::InvalidLoop(format!("{ids:?} is not an even cycle"))),
            })
            .collect::<Result<_>>()?;
        Ok(GlideLoop { base, steps })
    }

    pub fn from_loop(model: &DimerModel, lp: &GlideLoop) -> Self {
        let h = model.graph();
        LoopFile {
            base: h.edge_ids(&lp.base),
            steps: lp
                .steps
                .iter()
                .map(|&g| StepRecord::Edges(h.edge_ids(model.system().glide(g))))
                .collect(),
        }
    }
}

/// Exchange form of an orientation: `{"halves": [{"cycle": [...], "half": [...]}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HalvesFile {
    pub halves: Vec<HalfChoice>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HalfChoice {
    pub cycle: Vec<String>,
    pub half: Vec<String>,
}

impl HalvesFile {
    /// Orientation with the listed choices and nothing else chosen.
    pub fn resolve(&self, model: &DimerModel) -> Result<Orientation> {
        let h = model.graph();
        let mut o = Orientation::unset(model);
        for c in &self.halves {
            o.choose(model, &h.edge_set(&c.cycle)?, &h.edge_set(&c.half)?)?;
        }
        Ok(o)
    }
}
