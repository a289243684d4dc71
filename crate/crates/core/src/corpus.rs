//! Small named hypergraphs used by tests, benches and the bundled example files.

use crate::hypergraph::{Hypergraph, Mode};

/// The cycle graph on `n >= 2` vertices `v1..vn` with edges `e1..en`, where
/// `ei` joins `vi` to `v(i+1)`.
pub fn cycle(n: usize) -> Hypergraph {
    assert!(n >= 2, "cycle needs at least two vertices");
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges = (0..n).map(|i| {
        (
            format!("e{}", i + 1),
            vec![vertices[i].clone(), vertices[(i + 1) % n].clone()],
        )
    });
    Hypergraph::new(Mode::Graph, vertices.clone(), edges).expect("cycle graph is valid")
}

/// Two vertices `u`, `v` joined by `n` parallel edges `e1..en`.
pub fn theta(n: usize) -> Hypergraph {
    let edges = (1..=n).map(|i| (format!("e{i}"), vec!["u", "v"]));
    Hypergraph::new(Mode::Graph, ["u", "v"], edges).expect("theta graph is valid")
}

/// The three-rung ladder: top row `a b c`, bottom row `d e f`, with the three
/// rungs `ad`, `be`, `cf` listed left to right.
pub fn ladder() -> Hypergraph {
    Hypergraph::graph(
        ["a", "b", "c", "d", "e", "f"],
        &[
            ("ab", "a", "b"),
            ("bc", "b", "c"),
            ("ad", "a", "d"),
            ("be", "b", "e"),
            ("cf", "c", "f"),
            ("de", "d", "e"),
            ("ef", "e", "f"),
        ],
    )
    .expect("ladder is valid")
}

/// A 3-uniform hypergraph on six vertices with three exact covers
/// `{a,b}`, `{c,d}`, `{x,y}`.
pub fn exact_cover_hypergraph() -> Hypergraph {
    Hypergraph::new(
        Mode::Hypergraph,
        ["1", "2", "3", "4", "5", "6"],
        [
            ("a", vec!["1", "2", "3"]),
            ("b", vec!["4", "5", "6"]),
            ("c", vec!["1", "2", "4"]),
            ("d", vec!["3", "5", "6"]),
            ("x", vec!["1", "5", "6"]),
            ("y", vec!["2", "3", "4"]),
            ("z", vec!["1", "3", "5"]),
        ]
        .into_iter()
        .map(|(id, b)| (id.to_string(), b)),
    )
    .expect("exact-cover hypergraph is valid")
}

/// Every named graph of the bundled corpus, in a stable order.
pub fn all() -> Vec<(&'static str, Hypergraph)> {
    let c4 = cycle(4);
    vec![
        ("c3", cycle(3)),
        ("c4", c4.clone()),
        ("c5", cycle(5)),
        ("c6", cycle(6)),
        ("theta2", theta(2)),
        ("theta3", theta(3)),
        ("theta4", theta(4)),
        ("theta5", theta(5)),
        ("theta6", theta(6)),
        ("c4_c4", c4.disjoint_union(&c4)),
        ("c3_c4", cycle(3).disjoint_union(&c4)),
        ("ladder", ladder()),
        ("exact_cover", exact_cover_hypergraph()),
    ]
}
