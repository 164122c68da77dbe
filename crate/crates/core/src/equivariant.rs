//! Cell models of graded roots, involution actions (conjugation, negation,
//! leg swap), fixed-point submodels, Euler characteristics, the Miyazawa
//! degree, and the symmetric-path construction for even torus knots.
//!
//! Cell dimensions are measured in the relative (even-integer) grading of the
//! underlying path, halved and shifted by a stabilization parameter h; the
//! absolute rational normalization stays in the path's `shift`. The reported
//! Euler characteristic and degree are h-independent.

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::lattice::{
    self, CharVector, GradedRoot, LatticeError, SpinCClass, TruncationPolicy, WeightedPath,
};
use crate::matrix::{self, Rat};
use crate::plumbing::{self, PlumbingGraph, PlumbingError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EquivariantError {
    #[error(transparent)]
    Plumbing(#[from] PlumbingError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("cell of negative dimension {0}; increase the stabilization h")]
    NegativeDimension(Rat),
    #[error("stabilization h must be a nonnegative even integer, got {0}")]
    BadStabilization(i64),
    #[error("root grading {0} is odd; shift the grading first")]
    OddGrading(i64),
    #[error("the class carries no negation-invariant lattice cube")]
    NoCube,
    #[error("the graph has no two identical legs to swap")]
    LegsNotIdentical,
    #[error("base vertex {0} has nonzero coefficient on the invariant cube")]
    BaseInCube(usize),
    #[error("symmetry verification failed: {0}")]
    SymmetryBroken(String),
}

/// The path-homotopy-type cell model: one sphere cell per path point and one
/// edge cell per adjacent pair, with complex dimensions (grading + h)/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellModel {
    /// (point index, complex dimension).
    pub sphere_cells: Vec<(usize, Rat)>,
    /// ((left point, right point), complex dimension).
    pub edge_cells: Vec<((usize, usize), Rat)>,
    /// The even stabilization parameter h.
    pub stabilization_h: i64,
}

/// Which involution acts on a cell model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionSpec {
    /// Complex conjugation on every sphere and edge (arborescent case).
    ConjugationEverywhere,
    /// The almost-I action: index reflection i ↦ −i with reflection on the
    /// declared central edge.
    AlmostI {
        /// Index of the central gap edge in the path.
        central_edge: usize,
    },
}

/// The fixed-point submodel of a cell model under an involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedModel {
    /// Conjugation fixes a real cell of the same dimension inside every
    /// complex cell.
    Conjugation {
        sphere_cells: Vec<(usize, Rat)>,
        edge_cells: Vec<((usize, usize), Rat)>,
        stabilization_h: i64,
    },
    /// Under the almost-I action only the central edge survives: a single
    /// real cell whose (possibly fractional) dimension is −μ̄ of the graph.
    AlmostICell {
        real_dim: Rat,
        /// δ_R = δ̲_R = δ̄_R = −μ̄/2 carried by the cell.
        delta: Rat,
    },
}

/// Smallest even h making all dimensions of the model for `path` nonnegative.
pub fn minimal_stabilization(path: &WeightedPath) -> i64 {
    let min = path.gradings.iter().copied().min().unwrap_or(0);
    if min >= 0 {
        0
    } else {
        // Gradings are even, so −min already is.
        -min
    }
}

/// Build the cell model of a path at stabilization h (`None` = minimal).
pub fn build_cell_model(
    path: &WeightedPath,
    h: Option<i64>,
) -> Result<CellModel, EquivariantError> {
    let h = h.unwrap_or_else(|| minimal_stabilization(path));
    if h < 0 || h % 2 != 0 {
        return Err(EquivariantError::BadStabilization(h));
    }
    let dim = |g: i64| -> Result<Rat, EquivariantError> {
        let d = matrix::rat(g + h, 2);
        if d < matrix::rat_int(0) {
            return Err(EquivariantError::NegativeDimension(d));
        }
        Ok(d)
    };
    let mut sphere_cells = Vec::with_capacity(path.len());
    for (i, &g) in path.gradings.iter().enumerate() {
        sphere_cells.push((i, dim(g)?));
    }
    let mut edge_cells = Vec::new();
    for (i, g) in path.edge_gradings().into_iter().enumerate() {
        edge_cells.push(((i, i + 1), dim(g)?));
    }
    Ok(CellModel { sphere_cells, edge_cells, stabilization_h: h })
}

/// Fixed-point model under complex conjugation: every complex-d cell
/// contributes its real locus ℝ^d.
pub fn conjugation_fixed_model(m: &CellModel) -> FixedModel {
    FixedModel::Conjugation {
        sphere_cells: m.sphere_cells.clone(),
        edge_cells: m.edge_cells.clone(),
        stabilization_h: m.stabilization_h,
    }
}

fn parity_sign(d: &Rat) -> Result<i64, EquivariantError> {
    if !d.is_integer() {
        // Fractional dimensions only occur in the almost-I single cell,
        // which is handled separately.
        return Err(EquivariantError::OddGrading(0));
    }
    let n = d.to_integer().to_i64().expect("dimension fits i64");
    Ok(if n % 2 == 0 { 1 } else { -1 })
}

/// Closed-form reduced Euler characteristic of a graded root:
/// Σ_leaves (−1)^{gr/2} − Σ_angles (−1)^{gr/2}.
pub fn euler_char_closed_form(root: &GradedRoot) -> Result<i64, EquivariantError> {
    let term = |g: i64| -> Result<i64, EquivariantError> {
        if g % 2 != 0 {
            return Err(EquivariantError::OddGrading(g));
        }
        Ok(if (g / 2) % 2 == 0 { 1 } else { -1 })
    };
    let mut chi = 0;
    for &(_, g) in &root.leaves {
        chi += term(g)?;
    }
    for &(_, g) in &root.angles {
        chi -= term(g)?;
    }
    Ok(chi)
}

/// Reduced Euler characteristic of a fixed model. For conjugation models the
/// alternating cell count is computed and checked against the closed-form
/// leaf/angle formula of `root` (they differ by the sign (−1)^{h/2}); the
/// h-independent closed form is returned. The almost-I fixed cell counts as a
/// single cell, χ = 1.
pub fn euler_char_fixed(
    f: &FixedModel,
    root: &GradedRoot,
) -> Result<i64, EquivariantError> {
    match f {
        FixedModel::Conjugation { sphere_cells, edge_cells, stabilization_h } => {
            let mut count = 0i64;
            for (_, d) in sphere_cells {
                count += parity_sign(d)?;
            }
            for (_, d) in edge_cells {
                count -= parity_sign(d)?;
            }
            let closed = euler_char_closed_form(root)?;
            let h_sign = if (stabilization_h / 2) % 2 == 0 { 1 } else { -1 };
            if count != h_sign * closed {
                return Err(EquivariantError::SymmetryBroken(format!(
                    "cell-count Euler characteristic {count} disagrees with closed form {closed} (h = {stabilization_h})"
                )));
            }
            Ok(closed)
        }
        FixedModel::AlmostICell { .. } => Ok(1),
    }
}

/// The Miyazawa degree |deg| = |Σ_leaves (−1)^{gr/2} − Σ_angles (−1)^{gr/2}|.
pub fn miyazawa_degree(root: &GradedRoot) -> Result<u64, EquivariantError> {
    Ok(euler_char_closed_form(root)?.unsigned_abs())
}

/// The negation involution J: k ↦ −k on characteristic vectors.
pub fn negation(k: &CharVector) -> CharVector {
    CharVector { pairings: k.pairings.iter().map(|p| -p).collect() }
}

/// The J-invariant lattice cube of a spin-c class: the integer cycle t with
/// Wu vector = distinguished + 2·PD(t), when it exists.
pub fn negation_fixed_cube(
    _g: &PlumbingGraph,
    class: &SpinCClass,
) -> Result<Vec<i64>, EquivariantError> {
    if !class.is_spin {
        return Err(EquivariantError::NoCube);
    }
    Ok(class.rep_offset.clone())
}

/// The leg-swap involution τ of a star-shaped graph with two identical legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauAction {
    /// Vertex permutation by internal index.
    pub permutation: Vec<usize>,
}

impl TauAction {
    pub fn apply_cycle(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (v, &img) in self.permutation.iter().enumerate() {
            out[img] = x[v];
        }
        out
    }

    pub fn apply_char(&self, k: &CharVector) -> CharVector {
        CharVector { pairings: self.apply_cycle(&k.pairings) }
    }
}

/// Find the swap of the first pair of identical legs of a star-shaped graph,
/// fixing all other vertices.
pub fn tau_action(g: &PlumbingGraph) -> Result<TauAction, EquivariantError> {
    let star = g.star().ok_or(EquivariantError::LegsNotIdentical)?;
    let legs = &star.legs;
    let weights_of = |leg: &Vec<usize>| -> Vec<i64> {
        leg.iter().map(|&v| g.weight(v)).collect()
    };
    for a in 0..legs.len() {
        for b in (a + 1)..legs.len() {
            if weights_of(&legs[a]) == weights_of(&legs[b]) {
                let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
                for (&u, &v) in legs[a].iter().zip(&legs[b]) {
                    perm[u] = v;
                    perm[v] = u;
                }
                return Ok(TauAction { permutation: perm });
            }
        }
    }
    Err(EquivariantError::LegsNotIdentical)
}

/// Pick the default base vertex for symmetric paths: a τ-fixed vertex on
/// which every vertex of the J-invariant cube has zero coefficient (zero Wu
/// coefficient and zero cube anchor), preferring the central vertex. When no
/// such vertex exists — on Γ_{2,q} the Wu class sits on the central vertex
/// and there is no invariant leg — the central vertex is used anyway: the
/// x(i) anchors stay τ-invariant, at the cost of the path meeting the cube
/// in more than one cycle.
pub fn default_symmetric_base(
    g: &PlumbingGraph,
    class: &SpinCClass,
    tau: &TauAction,
) -> Result<usize, EquivariantError> {
    let wu = plumbing::wu_class(g)?;
    let eps = &wu.coefficients;
    let central = g.star().map(|s| s.central);
    let fixed: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| tau.permutation[v] == v)
        .collect();
    let good: Vec<usize> = fixed
        .iter()
        .copied()
        .filter(|&v| eps[v] == 0 && class.rep_offset[v] == 0)
        .collect();
    if let Some(&c) = good.iter().find(|&&v| Some(v) == central) {
        return Ok(c);
    }
    if let Some(&c) = good.first() {
        return Ok(c);
    }
    central
        .filter(|c| tau.permutation[*c] == *c)
        .ok_or(EquivariantError::BaseInCube(central.unwrap_or(0)))
}

/// Build the almost-I-invariant path 𝔰_{−n},…,𝔰_{−1},𝔰_1,…,𝔰_n for the spin
/// class: the positive half starts at the Wu vector (𝔰_1, cycle 0), walks by
/// unit steps down to the truncated computation sequence from x(0), and the
/// negative half is 𝔰_{−i} = −τ(𝔰_i). The step 𝔰_{−1} → 𝔰_1 is the central
/// gap, with 𝔰_1 − 𝔰_{−1} = PD(Wu class).
pub fn almost_i_path(
    g: &PlumbingGraph,
    class: &SpinCClass,
    base: Option<usize>,
    policy: TruncationPolicy,
) -> Result<(WeightedPath, InvolutionSpec), EquivariantError> {
    if !class.is_spin {
        return Err(EquivariantError::NoCube);
    }
    let tau = tau_action(g)?;
    let wu = plumbing::wu_class(g)?;
    let eps: Vec<i64> = wu.coefficients.iter().map(|&c| c as i64).collect();
    let base = match base {
        Some(b) => {
            if b >= g.vertex_count() {
                return Err(EquivariantError::Lattice(LatticeError::BadBaseVertex(b)));
            }
            if eps[b] != 0 || class.rep_offset[b] != 0 {
                return Err(EquivariantError::BaseInCube(b));
            }
            b
        }
        None => default_symmetric_base(g, class, &tau)?,
    };
    // When the base is τ-fixed the minimality condition is symmetric and the
    // x(i) anchors must come out τ-invariant; with a leg base (forced when
    // the Wu class sits on the central vertex) only the reflection symmetry
    // of the assembled path is checked below.
    if tau.permutation[base] == base {
        for i in 0..=3 {
            let x = lattice::x_cycle(g, class, base, i)?;
            if tau.apply_cycle(&x) != x {
                return Err(EquivariantError::SymmetryBroken(format!(
                    "x({i}) is not invariant under the leg swap"
                )));
            }
        }
    }

    let natural = lattice::full_sequence(g, class, base, policy)?;
    // Positive half in Wu-relative coordinates: connector from z = 0 (the Wu
    // vector itself) to the first point of the natural path, one unit step
    // per vertex in index order, then the natural path.
    let mut positive: Vec<Vec<i64>> = vec![vec![0; g.vertex_count()]];
    let target = natural.points[0].clone();
    let mut cur = positive[0].clone();
    for v in 0..g.vertex_count() {
        while cur[v] != target[v] {
            cur[v] += if target[v] > cur[v] { 1 } else { -1 };
            positive.push(cur.clone());
        }
    }
    positive.extend(natural.points.iter().skip(1).cloned());
    if positive.len() > 1 && positive[0] == positive[1] {
        positive.remove(0);
    }

    // Negative half: z_{−i} = −τ(z_i) − ε, listed from −n up to −1.
    let negative: Vec<Vec<i64>> = positive
        .iter()
        .rev()
        .map(|z| {
            tau.apply_cycle(z)
                .iter()
                .zip(&eps)
                .map(|(a, e)| -a - e)
                .collect()
        })
        .collect();
    let central_gap = negative.len() - 1;
    let mut points = negative;
    points.extend(positive);

    let rep = CharVector { pairings: wu.pairings(g) };
    let gradings: Vec<i64> = points.iter().map(|z| lattice::w_rel(g, &rep, z)).collect();
    // Verify the reflection symmetry of weights and the character identity
    // 𝔰_{−i} = −τ(𝔰_i) at the vector level.
    let n = points.len();
    for i in 0..n {
        let j = n - 1 - i;
        if gradings[i] != gradings[j] {
            return Err(EquivariantError::SymmetryBroken(format!(
                "weights are not reflection-symmetric at index {i}"
            )));
        }
        let q = g.intersection_form();
        let qz = q.apply(&points[i]);
        let ki: Vec<i64> =
            rep.pairings.iter().zip(&qz).map(|(a, b)| a + 2 * b).collect();
        let qzj = q.apply(&points[j]);
        let kj: Vec<i64> =
            rep.pairings.iter().zip(&qzj).map(|(a, b)| a + 2 * b).collect();
        let neg_tau: Vec<i64> = {
            let t = tau.apply_cycle(&ki);
            t.iter().map(|x| -x).collect()
        };
        if kj != neg_tau {
            return Err(EquivariantError::SymmetryBroken(format!(
                "character vectors at indices {i}, {j} are not negation-swap dual"
            )));
        }
    }
    // The central gap carries PD(Wu): the difference of the two middle
    // cycles is exactly ε.
    let diff: Vec<i64> = points[central_gap + 1]
        .iter()
        .zip(&points[central_gap])
        .map(|(a, b)| a - b)
        .collect();
    if diff != eps {
        return Err(EquivariantError::SymmetryBroken(
            "central gap does not realize the Wu class".into(),
        ));
    }

    let shift = lattice::weight(g, &rep);
    let path = WeightedPath {
        points,
        rep,
        gradings,
        shift,
        central_gap: Some(central_gap),
    };
    Ok((path, InvolutionSpec::AlmostI { central_edge: central_gap }))
}

/// Fixed-point data of the almost-I action: a single real cell of dimension
/// −μ̄(g), carrying δ_R = δ̲_R = δ̄_R = −μ̄/2.
pub fn almost_i_fixed_data(
    g: &PlumbingGraph,
    _path: &WeightedPath,
    spec: &InvolutionSpec,
) -> Result<FixedModel, EquivariantError> {
    match spec {
        InvolutionSpec::AlmostI { .. } => {
            let mu = plumbing::mubar(g)?;
            let dim = -mu.clone();
            let delta = -mu / matrix::rat_int(2);
            Ok(FixedModel::AlmostICell { real_dim: dim, delta })
        }
        InvolutionSpec::ConjugationEverywhere => Err(EquivariantError::SymmetryBroken(
            "almost-I fixed data requested for a conjugation action".into(),
        )),
    }
}
