//! Finite presentations of the fundamental group (or groupoid) of a glide
//! complex.
//!
//! Two routes are provided. [`dimer_presentation`] and [`glide_presentation`]
//! use one generator `y_{A,B}` per ordered pair of states and one relation
//! `y_{A,B} y_{B,C} = y_{A,C}` per triple of states lying in a common cube
//! (for dimer coverings: per flat triple). [`pi1_spanning_tree`] is the
//! standard edge-path presentation of the 2-skeleton.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::word::{cyclic_reduce, free_reduce, inverse, relator_key, Letter, Word};
use crate::complex::CubeComplex;
use crate::dimer::{covering_map, DimerModel};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

#[derive(Serialize)]
struct PresentationFile<'a> {
    generators: &'a [String],
    relators: Vec<Vec<(&'a str, i8)>>,
}

impl Presentation {
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// `{"generators": [...], "relators": [[["y_0_1", 1], ...], ...]}`.
    pub fn to_json(&self) -> String {
        let file = PresentationFile {
            generators: &self.generators,
            relators: self
                .relators
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|l| (self.generators[l.gen].as_str(), l.exp))
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("presentation serializes")
    }

    /// One relator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("generators ({}): {}\n", self.generators.len(), self.generators.join(" "));
        out.push_str(&format!("relators ({}):\n", self.relators.len()));
        for r in &self.relators {
            out.push_str(&format!("  {}\n", super::word::display(r, &self.generators)));
        }
        out
    }
}

fn pair_generators(prefix: &str, n: usize) -> Vec<String> {
    (0..n)
        .flat_map(|a| (0..n).map(move |b| format!("{prefix}_{a}_{b}")))
        .collect()
}

fn triple_relator(n: usize, a: usize, b: usize, c: usize) -> Word {
    vec![Letter::pos(a * n + b), Letter::pos(b * n + c), Letter::neg(a * n + c)]
}

fn check_base(complex: &CubeComplex, base: usize) -> Result<()> {
    if base >= complex.states().len() {
        return Err(Error::NotAState);
    }
    if !complex.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Presentation of `π_1(X_D, A_0)` on generators `y_{A,B}` and relators
/// `y_{A,B} y_{B,C} y_{A,C}^{-1}` for every flat triple, repeats included, and
/// `y_{A_0,A}` for every `A`. In groupoid mode the basepoint relators are
/// omitted and the generators are named `z_{A,B}`.
pub fn dimer_presentation(model: &DimerModel, a0: usize, groupoid: bool) -> Result<Presentation> {
    let complex = model.complex();
    check_base(complex, a0)?;
    let n = model.coverings().len();
    let h = model.graph();
    let maps: Vec<Vec<usize>> = model
        .coverings()
        .iter()
        .map(|a| covering_map(h, a))
        .collect::<Result<_>>()?;
    let mut relators = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let flat = (0..h.vertex_count()).all(|v| {
                    maps[a][v] == maps[b][v] || maps[b][v] == maps[c][v] || maps[a][v] == maps[c][v]
                });
                if flat {
                    relators.push(triple_relator(n, a, b, c));
                }
            }
        }
    }
    finish(n, a0, groupoid, relators)
}

/// The same presentation for an arbitrary state set, with triples taken from
/// common cubes. Requires every pair of states to have a hull.
pub fn glide_presentation(complex: &CubeComplex, a0: usize, groupoid: bool) -> Result<Presentation> {
    check_base(complex, a0)?;
    let n = complex.states().len();
    for a in 0..n {
        for b in a + 1..n {
            if complex.hull(a, b).is_none() {
                return Err(Error::NoHull);
            }
        }
    }
    let mut triples = BTreeSet::new();
    for (id, _) in complex.all_cubes() {
        let verts = complex.vertex_ids_of(id);
        for &a in &verts {
            for &b in &verts {
                for &c in &verts {
                    triples.insert((a, b, c));
                }
            }
        }
    }
    let relators = triples
        .into_iter()
        .map(|(a, b, c)| triple_relator(n, a, b, c))
        .collect();
    finish(n, a0, groupoid, relators)
}

fn finish(n: usize, a0: usize, groupoid: bool, mut relators: Vec<Word>) -> Result<Presentation> {
    if !groupoid {
        relators.extend((0..n).map(|a| vec![Letter::pos(a0 * n + a)]));
    }
    Ok(Presentation {
        generators: pair_generators(if groupoid { "z" } else { "y" }, n),
        relators,
    })
}

/// Edge-path presentation of the component of `base`: generators are the
/// 1-cubes outside a breadth-first spanning tree, oriented from the lower to
/// the higher state index; relators are the boundaries of 2-cubes.
pub fn pi1_spanning_tree(complex: &CubeComplex, base: usize) -> Result<Presentation> {
    let n = complex.states().len();
    if base >= n {
        return Err(Error::NotAState);
    }
    let edges = complex.edges();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut by_ends = HashMap::new();
    for (k, &(a, b, _)) in edges.iter().enumerate() {
        adj[a].push((b, k));
        adj[b].push((a, k));
        by_ends.insert((a, b), k);
    }
    let mut seen = vec![false; n];
    let mut tree = HashSet::new();
    seen[base] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for &(w, k) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                tree.insert(k);
                queue.push_back(w);
            }
        }
    }
    let mut gen_of = HashMap::new();
    let mut generators = Vec::new();
    for (k, &(a, b, _)) in edges.iter().enumerate() {
        if seen[a] && !tree.contains(&k) {
            gen_of.insert(k, generators.len());
            generators.push(format!("x_{a}_{b}"));
        }
    }
    let step = |u: usize, w: usize| -> Option<Letter> {
        let k = by_ends[&(u.min(w), u.max(w))];
        let g = *gen_of.get(&k)?;
        Some(if u < w { Letter::pos(g) } else { Letter::neg(g) })
    };
    let mut relators = Vec::new();
    for (id, _) in complex.all_cubes().filter(|(id, _)| id.dim == 2) {
        let v = complex.vertex_ids_of(id);
        if !seen[v[0]] {
            continue;
        }
        let walk = [v[0], v[1], v[3], v[2], v[0]];
        let word: Word = walk.windows(2).filter_map(|p| step(p[0], p[1])).collect();
        relators.push(free_reduce(&word));
    }
    Ok(Presentation {
        generators,
        relators,
    })
}

/// Simplifies a presentation by Tietze moves: free and cyclic reduction,
/// removal of trivial and repeated relators, elimination of generators that
/// occur once in a relator of length at most two, then elimination through
/// length-three relators while the total relator length does not grow.
pub fn tietze_reduce(p: &Presentation) -> Presentation {
    let n = p.generators.len();
    let mut alive = vec![true; n];
    let mut rels: Vec<Word> = p.relators.clone();
    loop {
        rels = normalize(rels);
        let Some((r, pos)) = pick_elimination(&rels) else {
            break;
        };
        let rel = rels.swap_remove(r);
        let x = rel[pos];
        // Rotate so that x^e leads: x^e w = 1.
        let w: Word = rel[pos + 1..].iter().chain(&rel[..pos]).copied().collect();
        let value = if x.exp > 0 { inverse(&w) } else { w };
        let value_inv = inverse(&value);
        for other in &mut rels {
            if other.iter().any(|l| l.gen == x.gen) {
                let mut out = Vec::with_capacity(other.len() + value.len());
                for &l in other.iter() {
                    if l.gen == x.gen {
                        out.extend_from_slice(if l.exp > 0 { &value } else { &value_inv });
                    } else {
                        out.push(l);
                    }
                }
                *other = out;
            }
        }
        alive[x.gen] = false;
    }
    let mut index = vec![usize::MAX; n];
    let mut generators = Vec::new();
    for g in 0..n {
        if alive[g] {
            index[g] = generators.len();
            generators.push(p.generators[g].clone());
        }
    }
    let relators = rels
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|l| Letter {
                    gen: index[l.gen],
                    exp: l.exp,
                })
                .collect()
        })
        .collect();
    Presentation {
        generators,
        relators,
    }
}

fn normalize(rels: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out: Vec<Word> = Vec::with_capacity(rels.len());
    for r in rels {
        let r = cyclic_reduce(&r);
        if r.is_empty() {
            continue;
        }
        let key = relator_key(&r);
        if seen.insert(key.clone()) {
            out.push(key);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// A relator and the position of a generator occurring exactly once in it.
fn pick_elimination(rels: &[Word]) -> Option<(usize, usize)> {
    let once = |r: &Word, i: usize| r.iter().filter(|l| l.gen == r[i].gen).count() == 1;
    for (k, r) in rels.iter().enumerate() {
        if r.len() > 2 {
            break;
        }
        if let Some(i) = (0..r.len()).find(|&i| once(r, i)) {
            return Some((k, i));
        }
    }
    let mut occurrences: HashMap<usize, usize> = HashMap::new();
    for r in rels {
        for l in r {
            *occurrences.entry(l.gen).or_default() += 1;
        }
    }
    for (k, r) in rels.iter().enumerate() {
        if r.len() != 3 {
            continue;
        }
        // Substituting a length-2 word for each other occurrence adds one
        // letter per occurrence; the removed relator frees three.
        if let Some(i) = (0..3).find(|&i| once(r, i) && occurrences[&r[i].gen] - 1 <= 3) {
            return Some((k, i));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::snf::abelianization;
    use crate::complex::BuildOptions;
    use crate::corpus;

    fn model(h: crate::Hypergraph) -> DimerModel {
        DimerModel::new(h, BuildOptions::default()).unwrap()
    }

    #[test]
    fn theta_three_is_infinite_cyclic() {
        let m = model(corpus::theta(3));
        let p = dimer_presentation(&m, 0, false).unwrap();
        assert_eq!(p.generators.len(), 9);
        let r = tietze_reduce(&p);
        assert_eq!(r.generators.len(), 1);
        assert!(r.relators.is_empty());
        assert_eq!(abelianization(&r), abelianization(&p));
    }

    #[test]
    fn spanning_tree_route_on_theta() {
        for n in 2..=6 {
            let m = model(corpus::theta(n));
            let p = pi1_spanning_tree(m.complex(), 0).unwrap();
            assert_eq!(p.generators.len(), (n - 1) * (n - 2) / 2);
            assert!(p.relators.is_empty());
        }
    }

    #[test]
    fn square_is_simply_connected() {
        let m = model(corpus::cycle(4).disjoint_union(&corpus::cycle(4)));
        let p = pi1_spanning_tree(m.complex(), 0).unwrap();
        assert_eq!(p.generators.len(), 1);
        assert_eq!(p.relators.len(), 1);
        assert!(abelianization(&p).is_trivial());
        let q = tietze_reduce(&dimer_presentation(&m, 0, false).unwrap());
        assert!(q.generators.is_empty());
    }

    #[test]
    fn segment_is_trivial() {
        let m = model(corpus::cycle(4));
        let q = tietze_reduce(&dimer_presentation(&m, 0, false).unwrap());
        assert!(q.generators.is_empty() && q.relators.is_empty());
    }

    #[test]
    fn generic_route_matches_flat_triples() {
        for (_, h) in corpus::all() {
            let m = model(h);
            if m.coverings().is_empty() || !m.complex().is_connected() {
                continue;
            }
            for groupoid in [false, true] {
                let d = dimer_presentation(&m, 0, groupoid).unwrap();
                let g = glide_presentation(m.complex(), 0, groupoid).unwrap();
                assert_eq!(d, g);
            }
        }
    }

    #[test]
    fn errors() {
        let m = model(corpus::cycle(4));
        assert!(matches!(dimer_presentation(&m, 5, false), Err(Error::NotAState)));
        assert!(matches!(pi1_spanning_tree(m.complex(), 5), Err(Error::NotAState)));
    }

    #[test]
    fn tietze_keeps_irreducible_input() {
        let p = Presentation {
            generators: vec!["a".into(), "b".into()],
            relators: vec![vec![
                Letter::pos(0),
                Letter::pos(1),
                Letter::neg(0),
                Letter::neg(1),
            ]],
        };
        let r = tietze_reduce(&p);
        assert_eq!(r.generators, p.generators);
        assert_eq!(r.relators.len(), 1);
        assert_eq!(r.relators[0].len(), 4);
    }

    #[test]
    fn json_shape() {
        let p = Presentation {
            generators: vec!["y_0_1".into()],
            relators: vec![vec![Letter::pos(0), Letter::neg(0)]],
        };
        let v: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(v["relators"][0][1], serde_json::json!(["y_0_1", -1]));
    }
}
