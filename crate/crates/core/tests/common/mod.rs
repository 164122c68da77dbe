//! Shared helpers for the integration test suites: a seeded corpus of random
//! negative-definite trees and root-comparison utilities.

use latticeroot::lattice::{
    self, GradedRoot, LatticeError, SpinCClass, TieBreak, TruncationPolicy,
};
use latticeroot::plumbing::{self, PlumbingGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic corpus: random trees with up to `max_vertices` vertices and
/// weights in [−7,−1], filtered to negative-definite graphs passing the
/// star-shape warning.
pub fn random_graph_corpus(count: usize, max_vertices: usize) -> Vec<PlumbingGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a77_1ce0);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(1..=max_vertices);
        let mut vertices = Vec::with_capacity(n);
        let mut edges = Vec::new();
        for i in 0..n {
            vertices.push((i as i64, -rng.gen_range(1..=7i64)));
            if i > 0 {
                edges.push((rng.gen_range(0..i) as i64, i as i64));
            }
        }
        let g = match plumbing::build_graph(&vertices, &edges) {
            Ok(g) => g,
            Err(_) => continue,
        };
        if !plumbing::is_negative_definite(&g) || g.ar_warning().is_some() {
            continue;
        }
        out.push(g);
    }
    out
}

/// Base vertex convention for graphs without Seifert metadata: the vertex of
/// maximal degree, lowest index first.
pub fn base_vertex(g: &PlumbingGraph) -> usize {
    (0..g.vertex_count())
        .max_by_key(|&v| (g.neighbors(v).len(), usize::MAX - v))
        .unwrap_or(0)
}

/// Sequence-based graded root of the spin class.
pub fn spin_root(g: &PlumbingGraph, tie: TieBreak) -> (SpinCClass, GradedRoot) {
    let s = lattice::spin_class(g).expect("spin class");
    let path = lattice::full_sequence_with_tie(
        g,
        &s,
        base_vertex(g),
        TruncationPolicy::default(),
        tie,
    )
    .expect("full sequence");
    let root = lattice::graded_root(&path);
    (s, root)
}

/// Brute-force oracle root, growing the box until no leaf touches the
/// boundary.
pub fn oracle_root(g: &PlumbingGraph, class: &SpinCClass) -> GradedRoot {
    let mut radius = 4;
    loop {
        match lattice::brute_force_root(g, class, radius) {
            Ok(r) => return r,
            Err(LatticeError::BoxTooSmall(_)) if radius < 9 => radius += 1,
            Err(e) => panic!("oracle failed at radius {radius}: {e}"),
        }
    }
}
