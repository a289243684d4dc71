//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the searches it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use glide_core::complex::{CubeComplex, GlidingSystem, StateSet};
use glide_core::{EdgeSet, Hypergraph, Mode};
use num_rational::Rational64;
use rand::Rng;

/// Degree of every vertex under the edge mask.
fn degrees(h: &Hypergraph, mask: u64) -> Vec<usize> {
    let mut d = vec![0; h.vertex_count()];
    for e in 0..h.edge_count() {
        if mask >> e & 1 == 1 {
            for &v in h.ends(e) {
                d[v] += 1;
            }
        }
    }
    d
}

fn mask_of(s: &EdgeSet) -> u64 {
    s.iter().fold(0, |m, e| m | 1 << e)
}

pub fn to_set(h: &Hypergraph, mask: u64) -> EdgeSet {
    EdgeSet::from_mask(h.edge_count(), mask)
}

/// Dimer coverings by scanning every edge subset.
pub fn subset_scan_coverings(h: &Hypergraph) -> Vec<EdgeSet> {
    let m = h.edge_count();
    assert!(m <= 20);
    let mut out: Vec<EdgeSet> = (0u64..1 << m)
        .filter(|&mask| degrees(h, mask).iter().all(|&d| d == 1))
        .map(|mask| to_set(h, mask))
        .collect();
    out.sort();
    out
}

fn cyclic(h: &Hypergraph, mask: u64) -> bool {
    degrees(h, mask).iter().all(|&d| d == 0 || d == 2)
}

/// Cycles straight from the definition: non-empty cyclic sets with no
/// non-empty proper cyclic subset.
pub fn brute_cycles(h: &Hypergraph) -> BTreeSet<Vec<usize>> {
    let m = h.edge_count();
    assert!(m <= 14);
    let mut out = BTreeSet::new();
    for mask in 1u64..1 << m {
        if !cyclic(h, mask) {
            continue;
        }
        let mut sub = (mask - 1) & mask;
        let mut minimal = true;
        while sub != 0 {
            if cyclic(h, sub) {
                minimal = false;
                break;
            }
            sub = (sub - 1) & mask;
        }
        if minimal {
            out.insert((0..m).filter(|e| mask >> e & 1 == 1).collect());
        }
    }
    out
}

/// Whether a cycle splits into two classes of pairwise vertex-disjoint edges,
/// by trying every 2-colouring.
pub fn brute_is_even(h: &Hypergraph, edges: &[usize]) -> bool {
    let k = edges.len();
    (0u64..1 << k).any(|col| {
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                (col >> i & 1) != (col >> j & 1)
                    || h.boundary_set(edges[i]).is_disjoint(h.boundary_set(edges[j]))
            })
        })
    })
}

/// Cubes of `X_E` by testing every based cube `(A, S)` with `|S| <= 16`
/// glides, each cube keyed by its vertex set.
pub fn brute_cubes(sys: &GlidingSystem, states: &StateSet) -> BTreeSet<(usize, BTreeSet<EdgeSet>)> {
    let k = sys.len();
    assert!(k <= 16);
    let mut out = BTreeSet::new();
    for a in states.as_slice() {
        for smask in 0u32..1 << k {
            let s: Vec<usize> = (0..k).filter(|i| smask >> i & 1 == 1).collect();
            let independent = s
                .iter()
                .all(|&i| s.iter().all(|&j| i == j || sys.are_independent(i, j)));
            if !independent {
                continue;
            }
            let mut verts = BTreeSet::new();
            for tmask in 0u32..1 << s.len() {
                let mut v = a.clone();
                for (i, &g) in s.iter().enumerate() {
                    if tmask >> i & 1 == 1 {
                        v.product_assign(sys.glide(g));
                    }
                }
                verts.insert(v);
            }
            if verts.iter().all(|v| states.contains(v)) {
                out.insert((s.len(), verts));
            }
        }
    }
    out
}

/// Cubes of a built complex in the same keyed form.
pub fn built_cubes(x: &CubeComplex) -> BTreeSet<(usize, BTreeSet<EdgeSet>)> {
    x.all_cubes()
        .map(|(id, _)| (id.dim, x.vertices_of(id).into_iter().collect()))
        .collect()
}

/// A random multigraph with no loops.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(2..=max_vertices);
    let m = rng.gen_range(1..=max_edges);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges = (0..m).map(|i| {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        (format!("e{i}"), vec![vertices[a].clone(), vertices[b].clone()])
    });
    let edges: Vec<_> = edges.collect();
    Hypergraph::new(Mode::Graph, vertices, edges).unwrap()
}

/// A random hypergraph with boundaries of size 1 to 3.
pub fn random_hypergraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(3..=max_vertices);
    let m = rng.gen_range(1..=max_edges);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..m {
        let k = rng.gen_range(1..=3);
        let mut ends: Vec<usize> = (0..n).collect();
        for j in 0..k {
            let r = rng.gen_range(j..n);
            ends.swap(j, r);
        }
        edges.push((
            format!("e{i}"),
            ends[..k].iter().map(|&v| vertices[v].clone()).collect::<Vec<_>>(),
        ));
    }
    Hypergraph::new(Mode::Hypergraph, vertices, edges).unwrap()
}

/// Checks that the 1-skeleton is the complete graph on the states and that
/// there are no higher cubes.
pub fn is_complete_graph(x: &CubeComplex) -> bool {
    let n = x.states().len();
    let pairs: HashSet<(usize, usize)> = x.edges().iter().map(|&(a, b, _)| (a, b)).collect();
    x.f_vector().len() <= 2
        && pairs.len() == n * (n - 1) / 2
        && x.edges().len() == pairs.len()
}

// ---------------------------------------------------------------------------
// Right-angled Artin groups.

pub type BWord = Vec<(usize, i8)>;

/// Least minimal-length word reachable from `w` by swapping adjacent
/// commuting letters and deleting adjacent inverse pairs. Every word of a
/// right-angled Artin group reaches its geodesics this way, so this is a
/// breadth-first search of the word graph of the element.
pub fn bfs_normal_form(w: &BWord, commute: &dyn Fn(usize, usize) -> bool) -> BWord {
    let mut seen: HashSet<BWord> = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    let mut best = w.clone();
    while let Some(u) = queue.pop_front() {
        if (u.len(), &u) < (best.len(), &best) {
            best = u.clone();
        }
        for i in 0..u.len().saturating_sub(1) {
            let (a, b) = (u[i], u[i + 1]);
            let mut next = Vec::new();
            if a.0 == b.0 && a.1 == -b.1 {
                let mut v = u.clone();
                v.drain(i..i + 2);
                next.push(v);
            } else if a.0 != b.0 && commute(a.0, b.0) {
                let mut v = u.clone();
                v.swap(i, i + 1);
                next.push(v);
            }
            for v in next {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Dimer labelings on a grid.

/// All dimer labelings of a graph with values in `{0, 1/q, ..., 1}`, as
/// numerators over `q`.
pub fn grid_labelings(h: &Hypergraph, q: i64) -> Vec<Vec<i64>> {
    let m = h.edge_count();
    let mut out = Vec::new();
    let mut cur = vec![0i64; m];
    fn rec(h: &Hypergraph, q: i64, e: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let ok_partial = |cur: &Vec<i64>, upto: usize| {
            (0..h.vertex_count()).all(|v| {
                let inc = h.incident(v);
                let sum: i64 = inc.iter().filter(|&&f| f < upto).map(|&f| cur[f]).sum();
                let nz = inc.iter().filter(|&&f| f < upto && cur[f] != 0).count();
                let done = inc.iter().all(|&f| f < upto);
                sum <= q && nz <= 2 && (!done || sum == q)
            })
        };
        if e == h.edge_count() {
            out.push(cur.clone());
            return;
        }
        for x in 0..=q {
            cur[e] = x;
            if ok_partial(cur, e + 1) {
                rec(h, q, e + 1, cur, out);
            }
        }
        cur[e] = 0;
    }
    rec(h, q, 0, &mut cur, &mut out);
    out
}

/// Number of classes of grid labelings under the relation: sup-distance at
/// most one step and at most two non-zero labels at every vertex on the union
/// of supports. Joined labelings have the segment between them inside the
/// labeling space, and grid points of one cube are joined through the grid.
pub fn grid_components(h: &Hypergraph, q: i64) -> usize {
    let labs = grid_labelings(h, q);
    let n = labs.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&labs[i], &labs[j]);
            if a.iter().zip(b).any(|(x, y)| (x - y).abs() > 1) {
                continue;
            }
            let fine = (0..h.vertex_count()).all(|v| {
                h.incident(v)
                    .iter()
                    .filter(|&&e| a[e] != 0 || b[e] != 0)
                    .count()
                    <= 2
            });
            if fine {
                let (ra, rb) = (find(&mut parent, i), find(&mut parent, j));
                parent[ra] = rb;
            }
        }
    }
    let roots: HashSet<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    roots.len()
}

pub fn rat(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

pub fn mask(s: &EdgeSet) -> u64 {
    mask_of(s)
}
