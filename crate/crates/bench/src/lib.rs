//! Shared pipeline helpers for the criterion benchmarks: building Brieskorn
//! and branched-cover plumbing graphs and running the graded-root and
//! mapping-degree computations end to end.

use latticeroot::equivariant::miyazawa_degree;
use latticeroot::lattice::{self, TruncationPolicy};
use latticeroot::plumbing::{self, PlumbingGraph};
use latticeroot::Rat;

/// Plumbing graph of the Brieskorn sphere Σ(a₁,a₂,a₃).
pub fn brieskorn_graph(a1: i64, a2: i64, a3: i64) -> PlumbingGraph {
    let data = plumbing::brieskorn_to_seifert(a1, a2, a3).expect("valid multiplicities");
    plumbing::seifert_to_plumbing(&data).expect("star graph")
}

/// Plumbing graph of Σ(2, p, q), the double branched cover of T_{p,q}
/// (p even).
pub fn branched_cover_graph(p: i64, q: i64) -> PlumbingGraph {
    let data = plumbing::branched_cover_seifert(p, q).expect("even torus knot");
    plumbing::seifert_to_plumbing(&data).expect("star graph")
}

/// Full degree pipeline: spin class, computation sequence from the central
/// vertex, graded root, mapping degree.
pub fn degree_pipeline(g: &PlumbingGraph) -> u64 {
    let class = lattice::spin_class(g).expect("spin class");
    let path =
        lattice::full_sequence(g, &class, 0, TruncationPolicy::default()).expect("sequence");
    let root = lattice::graded_root(&path);
    miyazawa_degree(&root).expect("degree")
}

/// μ̄ pipeline: Wu class plus signature.
pub fn mubar_pipeline(g: &PlumbingGraph) -> Rat {
    plumbing::mubar(g).expect("mubar")
}
