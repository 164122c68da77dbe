//! Characteristic vectors, Laufer-minimal cycles, Némethi computation
//! sequences, graded roots, and a brute-force superlevel-set oracle.
//!
//! Conventions. A characteristic vector k is stored by its pairings (k, S_v)
//! with the vertex classes. For a spin-c class with representative k_rep, a
//! lattice point is an integer cycle z with characteristic vector
//! k_rep + 2·PD(z), of relative weight w_rel(z) = (z, z) + (k_rep, z) — always
//! an even integer. Weights descend along the tail of a computation sequence
//! (w_rel → −∞), so leaves of graded roots sit at local *maxima* of the weight
//! and the truncation and oracle filtrations run over superlevel sets.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::matrix::{self, Rat};
use crate::plumbing::{self, PlumbingGraph, PlumbingError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error(transparent)]
    Plumbing(#[from] PlumbingError),
    #[error("operation requires a negative-definite graph")]
    NotNegativeDefinite,
    #[error("Laufer iteration exceeded {0} steps (should be impossible on negative-definite input)")]
    NonTermination(usize),
    #[error("iteration cap {0} exceeded")]
    IterationCap(usize),
    #[error("computation sequence hit the hard cap of {cap} steps before the truncation policy fired")]
    TruncationNotReached { cap: usize },
    #[error("brute-force box of radius {0} is too small: a leaf touches the boundary")]
    BoxTooSmall(usize),
    #[error("base vertex {0} is out of range")]
    BadBaseVertex(usize),
}

/// A characteristic element of the plumbing lattice, stored by its pairings
/// (k, S_v) with the vertex classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharVector {
    pub pairings: Vec<i64>,
}

impl CharVector {
    /// Characteristic: (k, S_v) ≡ S_v² (mod 2) for every vertex.
    pub fn is_characteristic(&self, g: &PlumbingGraph) -> bool {
        self.pairings
            .iter()
            .zip(g.weights())
            .all(|(&p, &w)| (p - w).rem_euclid(2) == 0)
    }

    /// k² = kᵀQ⁻¹k, an exact rational.
    pub fn square(&self, g: &PlumbingGraph) -> Rat {
        let q = g.intersection_form();
        let rhs: Vec<Rat> = self.pairings.iter().map(|&p| matrix::rat_int(p)).collect();
        let x = matrix::solve(&q.matrix, &rhs).expect("negative-definite form is invertible");
        rhs.iter().zip(&x).map(|(a, b)| a * b).sum()
    }
}

/// The canonical class K, with (K, S_v) = −w_v − 2.
pub fn canonical_class(g: &PlumbingGraph) -> CharVector {
    CharVector { pairings: g.weights().iter().map(|&w| -w - 2).collect() }
}

/// The weight w(k) = (k² + |V|)/4 of a characteristic vector.
pub fn weight(g: &PlumbingGraph, k: &CharVector) -> Rat {
    (k.square(g) + matrix::rat_int(g.vertex_count() as i64)) / matrix::rat_int(4)
}

/// Relative weight w_rel(z) = (z, z) + (k, z) of an integer cycle z against a
/// characteristic vector k, so that w(k + 2·PD(z)) = w(k) + w_rel(z).
pub fn w_rel(g: &PlumbingGraph, k: &CharVector, z: &[i64]) -> i64 {
    let q = g.intersection_form();
    let qz = q.apply(z);
    let zz: i64 = z.iter().zip(&qz).map(|(a, b)| a * b).sum();
    let kz: i64 = k.pairings.iter().zip(z).map(|(a, b)| a * b).sum();
    zz + kz
}

/// The minimal representative l′ of a spin-c class, as exact cycle
/// coordinates and integer pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalLPrime {
    /// Pairings (l′, S_v), all ≤ 0.
    pub pairings: Vec<i64>,
    /// Rational cycle coordinates Q⁻¹·pairings.
    pub coords: Vec<Rat>,
}

/// A spin-c structure on the plumbed boundary: a class of characteristic
/// vectors modulo 2·Q·ℤⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinCClass {
    /// k_r = K + 2·l′_min, the distinguished representative.
    pub distinguished: CharVector,
    /// The representative against which path gradings are measured: the Wu
    /// characteristic vector for the self-conjugate class, `distinguished`
    /// otherwise.
    pub representative: CharVector,
    /// The minimal l′ of the class.
    pub l_prime_min: MinimalLPrime,
    /// Integer cycle t with representative = distinguished + 2·PD(t)
    /// (zero when representative = distinguished).
    pub rep_offset: Vec<i64>,
    /// Whether this is the self-conjugate (spin) class, i.e. the grading
    /// representative is the Wu characteristic vector.
    pub is_spin: bool,
}

const LAUFER_CAP: usize = 5_000_000;

/// Minimal element of (l′ + H₂) ∩ S_ℚ under the pairing order, by ascending
/// Laufer steps from the fractional representative.
pub fn minimal_l_prime(g: &PlumbingGraph, lambda: &[i64]) -> Result<MinimalLPrime, LatticeError> {
    if !plumbing::is_negative_definite(g) {
        return Err(LatticeError::NotNegativeDefinite);
    }
    let n = g.vertex_count();
    let q = g.intersection_form();
    let rhs: Vec<Rat> = lambda.iter().map(|&x| matrix::rat_int(x)).collect();
    let lp = matrix::solve(&q.matrix, &rhs).expect("form invertible");
    // Start at the smallest integer shift placing every coordinate of
    // l′ + y at or above its fractional part, then ascend.
    let mut y: Vec<i64> = lp
        .iter()
        .map(|c| -c.floor().to_integer().to_i64().expect("coordinate fits i64"))
        .collect();
    let mut steps = 0usize;
    loop {
        let qy = q.apply(&y);
        let pr: Vec<i64> = lambda.iter().zip(&qy).map(|(a, b)| a + b).collect();
        match (0..n).find(|&v| pr[v] > 0) {
            Some(v) => {
                y[v] += 1;
                steps += 1;
                if steps > LAUFER_CAP {
                    return Err(LatticeError::NonTermination(LAUFER_CAP));
                }
            }
            None => {
                let coords: Vec<Rat> =
                    lp.iter().zip(&y).map(|(c, &yi)| c + matrix::rat_int(yi)).collect();
                return Ok(MinimalLPrime { pairings: pr, coords });
            }
        }
    }
}

/// Build the spin-c class containing the characteristic vector K + 2λ.
pub fn class_from_lambda(g: &PlumbingGraph, lambda: &[i64]) -> Result<SpinCClass, LatticeError> {
    let min = minimal_l_prime(g, lambda)?;
    let k = canonical_class(g);
    let distinguished = CharVector {
        pairings: k.pairings.iter().zip(&min.pairings).map(|(a, b)| a + 2 * b).collect(),
    };
    // If the class contains the Wu characteristic vector, use it as the
    // grading representative (it computes μ̄ and drives the spin symmetry).
    let (representative, rep_offset, is_spin) = match wu_offset(g, &min.pairings)? {
        Some(t) => {
            let wu = plumbing::wu_class(g)?;
            (CharVector { pairings: wu.pairings(g) }, t, true)
        }
        None => (distinguished.clone(), vec![0; g.vertex_count()], false),
    };
    Ok(SpinCClass { distinguished, representative, l_prime_min: min, rep_offset, is_spin })
}

/// Integer cycle t with Wu vector = (K + 2λ) + 2·Q·t, if it exists.
fn wu_offset(g: &PlumbingGraph, lambda: &[i64]) -> Result<Option<Vec<i64>>, LatticeError> {
    let wu = plumbing::wu_class(g)?;
    let wp = wu.pairings(g);
    let k = canonical_class(g);
    let mut rhs = Vec::with_capacity(g.vertex_count());
    for ((&w, &kp), &l) in wp.iter().zip(&k.pairings).zip(lambda) {
        let d = w - kp;
        debug_assert_eq!(d.rem_euclid(2), 0);
        rhs.push(matrix::rat_int(d / 2 - l));
    }
    let q = g.intersection_form();
    let t = matrix::solve(&q.matrix, &rhs).expect("form invertible");
    if t.iter().all(|c| c.is_integer()) {
        Ok(Some(t.iter().map(|c| c.to_integer().to_i64().expect("offset fits i64")).collect()))
    } else {
        Ok(None)
    }
}

/// The self-conjugate spin-c class (the one containing the Wu vector).
pub fn spin_class(g: &PlumbingGraph) -> Result<SpinCClass, LatticeError> {
    let wu = plumbing::wu_class(g)?;
    let wp = wu.pairings(g);
    let k = canonical_class(g);
    let lambda: Vec<i64> =
        wp.iter().zip(&k.pairings).map(|(&w, &kp)| (w - kp) / 2).collect();
    class_from_lambda(g, &lambda)
}

/// All |det Q| spin-c classes of the boundary.
pub fn enumerate_spinc(g: &PlumbingGraph) -> Result<Vec<SpinCClass>, LatticeError> {
    if !plumbing::is_negative_definite(g) {
        return Err(LatticeError::NotNegativeDefinite);
    }
    let q = g.intersection_form();
    let (d, uinv) = matrix::coker_diagonalize(&q.matrix);
    let moduli: Vec<i64> = d
        .iter()
        .map(|x| x.abs().to_i64().expect("determinant factor fits i64"))
        .collect();
    let mut classes = Vec::new();
    let mut c = vec![0i64; moduli.len()];
    loop {
        let lambda: Vec<i64> = uinv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&c)
                    .map(|(u, &ci)| u * BigInt::from(ci))
                    .sum::<BigInt>()
                    .to_i64()
                    .expect("representative fits i64")
            })
            .collect();
        classes.push(class_from_lambda(g, &lambda)?);
        // Odometer over ∏ ℤ/moduli.
        let mut i = 0;
        loop {
            if i == moduli.len() {
                return Ok(classes);
            }
            c[i] += 1;
            if c[i] < moduli[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// A finite walk through characteristic vectors of one spin-c class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPath {
    /// Lattice points as integer cycles relative to the class representative.
    pub points: Vec<Vec<i64>>,
    /// The representative the points are measured against.
    pub rep: CharVector,
    /// Relative weights w_rel(z), even integers.
    pub gradings: Vec<i64>,
    /// Absolute weight of the representative, w(k_rep) = (k_rep² + |V|)/4.
    pub shift: Rat,
    /// Index i such that the step points[i] → points[i+1] is the declared
    /// central gap of an almost-I-invariant path (not a single vertex step).
    pub central_gap: Option<usize>,
}

impl WeightedPath {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Absolute weights w(k) per point.
    pub fn weights(&self) -> Vec<Rat> {
        self.gradings.iter().map(|&g| &self.shift + matrix::rat_int(g)).collect()
    }

    /// Edge weights: min of the two adjacent point weights (absolute).
    pub fn edge_weights(&self) -> Vec<Rat> {
        let w = self.weights();
        w.windows(2).map(|p| p[0].clone().min(p[1].clone())).collect()
    }

    /// Edge gradings: min of the two adjacent relative gradings.
    pub fn edge_gradings(&self) -> Vec<i64> {
        self.gradings.windows(2).map(|p| p[0].min(p[1])).collect()
    }

    /// The characteristic vector of point i: k_rep + 2·PD(z_i).
    pub fn char_vector(&self, g: &PlumbingGraph, i: usize) -> CharVector {
        let q = g.intersection_form();
        let qz = q.apply(&self.points[i]);
        CharVector {
            pairings: self.rep.pairings.iter().zip(&qz).map(|(a, b)| a + 2 * b).collect(),
        }
    }
}

/// Which neighbor to pick when several saturation steps are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    SmallestIndex,
    LargestIndex,
}

/// The unique minimal cycle with base-coefficient i and
/// (x(i) + l′, S_v) ≤ 0 for all v ≠ base.
pub fn x_cycle(
    g: &PlumbingGraph,
    class: &SpinCClass,
    base: usize,
    i: i64,
) -> Result<Vec<i64>, LatticeError> {
    if base >= g.vertex_count() {
        return Err(LatticeError::BadBaseVertex(base));
    }
    let mut x = vec![0i64; g.vertex_count()];
    x[base] = i;
    saturate(g, class, base, &mut x, TieBreak::SmallestIndex, &mut |_| {})?;
    Ok(x)
}

fn saturate(
    g: &PlumbingGraph,
    class: &SpinCClass,
    base: usize,
    x: &mut Vec<i64>,
    tie: TieBreak,
    visit: &mut dyn FnMut(&[i64]),
) -> Result<(), LatticeError> {
    let q = g.intersection_form();
    let lambda = &class.l_prime_min.pairings;
    let n = g.vertex_count();
    let mut steps = 0usize;
    loop {
        let qx = q.apply(x);
        let positive = (0..n).filter(|&v| v != base && qx[v] + lambda[v] > 0);
        let v = match tie {
            TieBreak::SmallestIndex => positive.min(),
            TieBreak::LargestIndex => positive.max(),
        };
        match v {
            Some(v) => {
                x[v] += 1;
                visit(x);
                steps += 1;
                if steps > LAUFER_CAP {
                    return Err(LatticeError::IterationCap(LAUFER_CAP));
                }
            }
            None => return Ok(()),
        }
    }
}

/// The amalgamated computation sequence from x(i_from) to x(i_to): raise the
/// base coefficient one step at a time, saturating in between.
pub fn computation_sequence(
    g: &PlumbingGraph,
    class: &SpinCClass,
    base: usize,
    i_from: i64,
    i_to: i64,
) -> Result<WeightedPath, LatticeError> {
    computation_sequence_with_tie(g, class, base, i_from, i_to, TieBreak::SmallestIndex)
}

/// As [`computation_sequence`] but with an explicit tie-breaking strategy
/// (used to certify that the choice does not affect graded roots).
pub fn computation_sequence_with_tie(
    g: &PlumbingGraph,
    class: &SpinCClass,
    base: usize,
    i_from: i64,
    i_to: i64,
    tie: TieBreak,
) -> Result<WeightedPath, LatticeError> {
    assert!(i_from <= i_to, "i_from must not exceed i_to");
    let mut x = vec![0i64; g.vertex_count()];
    x[base] = i_from;
    let mut pts = Vec::new();
    saturate(g, class, base, &mut x, tie, &mut |_| {})?;
    pts.push(x.clone());
    for _ in i_from..i_to {
        x[base] += 1;
        pts.push(x.clone());
        saturate(g, class, base, &mut x, tie, &mut |y| pts.push(y.to_vec()))?;
    }
    Ok(finish_path(g, class, pts))
}

fn finish_path(g: &PlumbingGraph, class: &SpinCClass, pts: Vec<Vec<i64>>) -> WeightedPath {
    let t = &class.rep_offset;
    let points: Vec<Vec<i64>> = pts
        .into_iter()
        .map(|y| y.iter().zip(t).map(|(a, b)| a - b).collect())
        .collect();
    let gradings: Vec<i64> =
        points.iter().map(|z| w_rel(g, &class.representative, z)).collect();
    let shift = weight(g, &class.representative);
    WeightedPath { points, rep: class.representative.clone(), gradings, shift, central_gap: None }
}

/// Stabilization policy for [`full_sequence`].
#[derive(Debug, Clone, Copy, Default)]
pub struct TruncationPolicy {
    /// Length of the non-increasing run required before stopping;
    /// `None` means |V|·(1 + max|w_v|).
    pub run_length: Option<usize>,
    /// Hard cap on generated steps; `None` reads LATTICEROOT_MAX_STEPS from
    /// the environment, defaulting to 2,000,000.
    pub cap: Option<usize>,
}

const DEFAULT_CAP: usize = 2_000_000;

impl TruncationPolicy {
    fn effective_run_length(&self, g: &PlumbingGraph) -> usize {
        self.run_length.unwrap_or_else(|| {
            let maxw = g.weights().iter().map(|w| w.unsigned_abs()).max().unwrap_or(0) as usize;
            g.vertex_count() * (1 + maxw)
        })
    }

    fn effective_cap(&self) -> usize {
        self.cap.unwrap_or_else(|| {
            std::env::var("LATTICEROOT_MAX_STEPS")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(DEFAULT_CAP)
        })
    }
}

/// The computation sequence from x(0), truncated once the weight has been
/// non-increasing for the policy's run length and sits strictly below every
/// weight attained before the run, then trimmed at both ends to genuine local
/// maxima of the weight.
pub fn full_sequence(
    g: &PlumbingGraph,
    class: &SpinCClass,
    base: usize,
    policy: TruncationPolicy,
) -> Result<WeightedPath, LatticeError> {
    full_sequence_with_tie(g, class, base, policy, TieBreak::SmallestIndex)
}

/// As [`full_sequence`] with an explicit tie-breaking strategy.
pub fn full_sequence_with_tie(
    g: &PlumbingGraph,
    class: &SpinCClass,
    base: usize,
    policy: TruncationPolicy,
    tie: TieBreak,
) -> Result<WeightedPath, LatticeError> {
    if base >= g.vertex_count() {
        return Err(LatticeError::BadBaseVertex(base));
    }
    let n = g.vertex_count();
    let run_needed = policy.effective_run_length(g).max(1);
    let cap = policy.effective_cap();
    let q = g.intersection_form();
    let lambda = &class.l_prime_min.pairings;
    let k_dist = &class.distinguished;

    let mut x = vec![0i64; n];
    saturate(g, class, base, &mut x, tie, &mut |_| {})?;
    let mut pts = vec![x.clone()];
    let mut ws = vec![w_rel(g, k_dist, &x)];
    // prefix_min[i] = min of ws[0..=i]; run = length of the current
    // non-increasing run of steps ending at the last point.
    let mut prefix_min = vec![ws[0]];
    let mut run = 0usize;
    let mut total = 0usize;

    'outer: loop {
        // Next step: a saturation move if available, else raise the base.
        let qx = q.apply(&x);
        let positive = (0..n).filter(|&v| v != base && qx[v] + lambda[v] > 0);
        let v = match tie {
            TieBreak::SmallestIndex => positive.min(),
            TieBreak::LargestIndex => positive.max(),
        };
        match v {
            Some(v) => x[v] += 1,
            None => x[base] += 1,
        }
        let w = w_rel(g, k_dist, &x);
        let prev = *ws.last().unwrap();
        run = if w <= prev { run + 1 } else { 0 };
        pts.push(x.clone());
        ws.push(w);
        prefix_min.push((*prefix_min.last().unwrap()).min(w));
        total += 1;
        if total >= cap {
            return Err(LatticeError::TruncationNotReached { cap });
        }
        if run >= run_needed {
            // Weights attained up to the start of the run (index len-1-run),
            // including the local maximum the run descends from.
            let start = ws.len() - 1 - run;
            if w < prefix_min[start] {
                break 'outer;
            }
        }
    }
    let (a, b) = trim_to_local_maxima(&ws);
    let mut path = finish_path(g, class, pts[a..=b].to_vec());
    debug_assert_eq!(path.gradings.len(), b - a + 1);
    path.central_gap = None;
    Ok(path)
}

/// Indices (first, last) delimiting the sub-path from the first to the last
/// genuine local maximum of the weight sequence (plateaus collapsed).
/// Boundary plateaus are cut down to a single representative point.
fn trim_to_local_maxima(ws: &[i64]) -> (usize, usize) {
    let segs = collapse(ws);
    let m = segs.len();
    let is_max = |j: usize| -> bool {
        let left_ok = j == 0 || segs[j].2 > segs[j - 1].2;
        let right_ok = j + 1 == m || segs[j].2 > segs[j + 1].2;
        left_ok && right_ok
    };
    let first = (0..m).find(|&j| is_max(j));
    let last = (0..m).rev().find(|&j| is_max(j));
    match (first, last) {
        (Some(f), Some(l)) if f < l => (segs[f].1, segs[l].0),
        (Some(f), Some(_)) => (segs[f].0, segs[f].0),
        _ => (0, ws.len() - 1),
    }
}

/// Maximal constant runs of a weight sequence as (start, end, value).
fn collapse(ws: &[i64]) -> Vec<(usize, usize, i64)> {
    let mut segs = Vec::new();
    let mut s = 0;
    for i in 1..=ws.len() {
        if i == ws.len() || ws[i] != ws[s] {
            segs.push((s, i - 1, ws[s]));
            s = i;
        }
    }
    segs
}

/// A graded tree summarizing lattice homology: leaves at local maxima of the
/// weight along a path, angles at the intervening minima, with parent links
/// forming the merge tree of superlevel sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRoot {
    /// (node id, grading) per leaf, in path order.
    pub leaves: Vec<(usize, i64)>,
    /// (node id, grading) per angle, in path order; one fewer than leaves.
    pub angles: Vec<(usize, i64)>,
    /// parent[node id] — each node's parent in the merge tree (None for the
    /// root node attached to the infinite stem).
    pub parents: Vec<Option<usize>>,
    /// Absolute normalization: the weight of the class representative.
    pub grading_shift: Rat,
}

impl GradedRoot {
    /// Sorted leaf and angle gradings — the comparison key used against the
    /// brute-force oracle.
    pub fn grading_multisets(&self) -> (Vec<i64>, Vec<i64>) {
        let mut l: Vec<i64> = self.leaves.iter().map(|&(_, g)| g).collect();
        let mut a: Vec<i64> = self.angles.iter().map(|&(_, g)| g).collect();
        l.sort_unstable();
        a.sort_unstable();
        (l, a)
    }

    /// Equality of leaf/angle grading multisets and shift.
    pub fn same_shape(&self, other: &GradedRoot) -> bool {
        self.grading_multisets() == other.grading_multisets()
            && self.grading_shift == other.grading_shift
    }
}

/// Build the graded root of a weighted path: plateaus collapse to single
/// vertices, path endpoints and interior local maxima are leaves, and the
/// angle between consecutive leaves sits at the minimum weight between them.
pub fn graded_root(path: &WeightedPath) -> GradedRoot {
    assert!(!path.is_empty(), "graded_root requires a nonempty path");
    for &g in &path.gradings {
        debug_assert_eq!(g.rem_euclid(2), 0, "relative gradings are even");
    }
    let segs = collapse(&path.gradings);
    let m = segs.len();
    let mut leaf_segs = Vec::new();
    for j in 0..m {
        let left_ok = j == 0 || segs[j].2 > segs[j - 1].2;
        let right_ok = j + 1 == m || segs[j].2 > segs[j + 1].2;
        // Endpoints always count as leaves; interior vertices must be
        // genuine local maxima.
        if (j == 0 || j + 1 == m) || (left_ok && right_ok) {
            leaf_segs.push(j);
        }
    }
    let mut leaves = Vec::new();
    let mut angles = Vec::new();
    for (idx, &j) in leaf_segs.iter().enumerate() {
        leaves.push((2 * idx, segs[j].2));
        if idx + 1 < leaf_segs.len() {
            let k = leaf_segs[idx + 1];
            let min = segs[j..=k].iter().map(|&(_, _, v)| v).min().unwrap();
            angles.push((2 * idx + 1, min));
        }
    }
    let parents = merge_tree_parents(&leaves, &angles);
    GradedRoot { leaves, angles, parents, grading_shift: path.shift.clone() }
}

/// Parent links of the merge tree determined by alternating leaf/angle
/// gradings along a path: process angles from the highest down; each merges
/// the two adjacent components.
fn merge_tree_parents(leaves: &[(usize, i64)], angles: &[(usize, i64)]) -> Vec<Option<usize>> {
    let n = leaves.len() + angles.len();
    let mut parents: Vec<Option<usize>> = vec![None; n];
    // Union-find over leaf positions 0..leaves.len().
    let mut comp: Vec<usize> = (0..leaves.len()).collect();
    let mut root_node: Vec<usize> = leaves.iter().map(|&(id, _)| id).collect();
    fn find(comp: &mut Vec<usize>, mut a: usize) -> usize {
        while comp[a] != a {
            comp[a] = comp[comp[a]];
            a = comp[a];
        }
        a
    }
    let mut order: Vec<usize> = (0..angles.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(angles[i].1));
    for i in order {
        let a = find(&mut comp, i);
        let b = find(&mut comp, i + 1);
        let node = angles[i].0;
        parents[root_node[a]] = Some(node);
        if b != a {
            parents[root_node[b]] = Some(node);
        }
        comp[a] = b;
        root_node[b] = node;
    }
    parents
}

/// Independent oracle: build the graded root directly from the superlevel-set
/// filtration of all cycles with coefficients in [0, radius]^V.
pub fn brute_force_root(
    g: &PlumbingGraph,
    class: &SpinCClass,
    radius: usize,
) -> Result<GradedRoot, LatticeError> {
    if !plumbing::is_negative_definite(g) {
        return Err(LatticeError::NotNegativeDefinite);
    }
    let n = g.vertex_count();
    let r = radius as i64;
    let side = (radius + 1) as usize;
    let total = side.pow(n as u32);
    let t = &class.rep_offset;
    let rep = &class.representative;

    // Enumerate cells y ∈ [0, radius]^V; grading of y is w_rel(y − t).
    let decode = |mut idx: usize| -> Vec<i64> {
        let mut y = vec![0i64; n];
        for v in 0..n {
            y[v] = (idx % side) as i64;
            idx /= side;
        }
        y
    };
    let mut w = Vec::with_capacity(total);
    for idx in 0..total {
        let y = decode(idx);
        let z: Vec<i64> = y.iter().zip(t).map(|(a, b)| a - b).collect();
        w.push(w_rel(g, rep, &z));
    }
    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(w[i]));

    let mut parent_uf: Vec<usize> = (0..total).collect();
    let mut birth = vec![i64::MIN; total];
    let mut active = vec![false; total];
    let mut node_of: Vec<usize> = vec![usize::MAX; total];
    fn find(uf: &mut Vec<usize>, mut a: usize) -> usize {
        while uf[a] != a {
            uf[a] = uf[uf[a]];
            a = uf[a];
        }
        a
    }

    let mut leaves = Vec::new();
    let mut angles = Vec::new();
    let mut parents_acc: Vec<(usize, usize)> = Vec::new(); // (child node, parent node)
    let mut next_node = 0usize;
    let mut boundary_leaf = false;

    let mut i = 0;
    while i < total {
        let lvl = w[order[i]];
        let mut batch = Vec::new();
        while i < total && w[order[i]] == lvl {
            batch.push(order[i]);
            i += 1;
        }
        for &c in &batch {
            birth[c] = lvl;
            active[c] = true;
        }
        for &c in &batch {
            let y = decode(c);
            for v in 0..n {
                for d in [-1i64, 1] {
                    let nv = y[v] + d;
                    if nv < 0 || nv > r {
                        continue;
                    }
                    let stride = side.pow(v as u32);
                    let nb = if d == 1 { c + stride } else { c - stride };
                    if !active[nb] {
                        continue;
                    }
                    let ra = find(&mut parent_uf, c);
                    let rb = find(&mut parent_uf, nb);
                    if ra == rb {
                        continue;
                    }
                    let (ba, bb) = (birth[ra], birth[rb]);
                    if ba > lvl && bb > lvl {
                        // Two components born above merge here: an angle.
                        let node = next_node;
                        next_node += 1;
                        angles.push((node, lvl));
                        for &rc in &[ra, rb] {
                            if node_of[rc] != usize::MAX {
                                parents_acc.push((node_of[rc], node));
                            }
                        }
                        parent_uf[ra] = rb;
                        birth[rb] = ba.max(bb);
                        node_of[rb] = node;
                    } else {
                        let keep = if ba >= bb { ra } else { rb };
                        let other = if keep == ra { rb } else { ra };
                        parent_uf[other] = keep;
                        birth[keep] = ba.max(bb);
                        // keep's node identity persists.
                        if node_of[other] != usize::MAX && node_of[keep] == usize::MAX {
                            node_of[keep] = node_of[other];
                        }
                    }
                }
            }
        }
        // Components born entirely at this level are leaves.
        let mut seen = Vec::new();
        for &c in &batch {
            let rc = find(&mut parent_uf, c);
            if birth[rc] == lvl && !seen.contains(&rc) {
                seen.push(rc);
                let node = next_node;
                next_node += 1;
                leaves.push((node, lvl));
                node_of[rc] = node;
                // A leaf born on the box boundary means the box clipped it.
                let y = decode(c);
                if y.iter().any(|&v| v == r) {
                    boundary_leaf = true;
                }
            }
        }
    }
    if boundary_leaf {
        return Err(LatticeError::BoxTooSmall(radius));
    }
    let mut parents: Vec<Option<usize>> = vec![None; next_node];
    for (c, p) in parents_acc {
        parents[c] = Some(p);
    }
    Ok(GradedRoot { leaves, angles, parents, grading_shift: weight(g, rep) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::{brieskorn_to_seifert, build_graph, seifert_to_plumbing, SeifertData};

    fn pretzel() -> PlumbingGraph {
        seifert_to_plumbing(&brieskorn_to_seifert(2, 3, 7).unwrap()).unwrap()
    }

    #[test]
    fn canonical_class_examples() {
        let single = build_graph(&[(0, -2)], &[]).unwrap();
        assert_eq!(canonical_class(&single).pairings, vec![0]);
        let p = pretzel();
        assert_eq!(canonical_class(&p).pairings, vec![-1, 0, 1, 5]);
        assert!(canonical_class(&p).is_characteristic(&p));
    }

    #[test]
    fn spin_class_of_pretzel_uses_wu_representative() {
        let p = pretzel();
        let s = spin_class(&p).unwrap();
        // Wu class (0,1,1,1): pairings Q·ε.
        let wu = crate::plumbing::wu_class(&p).unwrap();
        assert_eq!(s.representative.pairings, wu.pairings(&p));
        assert_eq!(s.l_prime_min.pairings.iter().filter(|&&x| x > 0).count(), 0);
        // Σ(2,3,7) is a homology sphere: the minimal l′ is 0.
        assert!(s.l_prime_min.pairings.iter().all(|&x| x == 0));
        assert_eq!(s.rep_offset, vec![1, 1, 1, 1]);
    }

    #[test]
    fn enumerate_spinc_counts_classes() {
        let p = pretzel();
        assert_eq!(enumerate_spinc(&p).unwrap().len(), 1);
        let g =
            seifert_to_plumbing(&SeifertData::new(-1, vec![(19, -9), (19, -9)]).unwrap()).unwrap();
        assert_eq!(enumerate_spinc(&g).unwrap().len(), 19);
        let single = build_graph(&[(0, -2)], &[]).unwrap();
        assert_eq!(enumerate_spinc(&single).unwrap().len(), 2);
    }

    #[test]
    fn weight_identity_on_random_cycles() {
        let p = pretzel();
        let s = spin_class(&p).unwrap();
        let k = &s.distinguished;
        let wk = weight(&p, k);
        // w(k + 2x) = w(k) + w_rel(x) for a spread of integer cycles.
        let q = p.intersection_form();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    for d in -2i64..=2 {
                        let x = vec![a, b, c, d];
                        let qx = q.apply(&x);
                        let k2 = CharVector {
                            pairings: k
                                .pairings
                                .iter()
                                .zip(&qx)
                                .map(|(p, q)| p + 2 * q)
                                .collect(),
                        };
                        assert_eq!(
                            weight(&p, &k2),
                            &wk + matrix::rat_int(w_rel(&p, k, &x))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pretzel_computation_sequence_matches_printed_path() {
        let p = pretzel();
        let s = spin_class(&p).unwrap();
        let path = computation_sequence(&p, &s, 0, 0, 2).unwrap();
        // Relative weights {2,0,0,0,0,2} against the Wu representative.
        assert_eq!(path.gradings, vec![2, 0, 0, 0, 0, 2]);
        // Printed coordinates relative to the Wu vector.
        assert_eq!(
            path.points,
            vec![
                vec![-1, -1, -1, -1],
                vec![0, -1, -1, -1],
                vec![0, 0, -1, -1],
                vec![0, 0, 0, -1],
                vec![0, 0, 0, 0],
                vec![1, 0, 0, 0],
            ]
        );
        // Single point path.
        let single = computation_sequence(&p, &s, 0, 1, 1).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn x_cycle_monotone_and_nonnegative() {
        let p = pretzel();
        let s = spin_class(&p).unwrap();
        let mut prev = x_cycle(&p, &s, 0, 0).unwrap();
        assert!(prev.iter().all(|&c| c == 0));
        for i in 1..=20 {
            let x = x_cycle(&p, &s, 0, i).unwrap();
            assert!(x.iter().all(|&c| c >= 0));
            assert!(prev.iter().zip(&x).all(|(a, b)| a <= b));
            prev = x;
        }
    }

    #[test]
    fn pretzel_full_sequence_and_root() {
        let p = pretzel();
        let s = spin_class(&p).unwrap();
        let path = full_sequence(&p, &s, 0, TruncationPolicy::default()).unwrap();
        let root = graded_root(&path);
        let (l, a) = root.grading_multisets();
        assert_eq!(l, vec![2, 2]);
        assert_eq!(a, vec![0]);
        assert_eq!(root.parents.iter().filter(|p| p.is_none()).count(), 1);
    }

    #[test]
    fn graded_root_endpoint_and_plateau_rules() {
        let mk = |ws: &[i64]| WeightedPath {
            points: vec![vec![]; ws.len()],
            rep: CharVector { pairings: vec![] },
            gradings: ws.to_vec(),
            shift: matrix::rat_int(0),
            central_gap: None,
        };
        let r = graded_root(&mk(&[0, 2, 0, 4, 0]));
        let (l, a) = r.grading_multisets();
        assert_eq!(l, vec![0, 0, 2, 4]);
        assert_eq!(a, vec![0, 0, 0]);
        // Constant path: one leaf, no angles.
        let r = graded_root(&mk(&[4, 4, 4]));
        assert_eq!(r.leaves.len(), 1);
        assert!(r.angles.is_empty());
        // Plateau between maxima forms a single angle.
        let r = graded_root(&mk(&[2, 0, 0, 0, 0, 2]));
        let (l, a) = r.grading_multisets();
        assert_eq!(l, vec![2, 2]);
        assert_eq!(a, vec![0]);
    }

    #[test]
    fn brute_force_oracle_matches_pretzel() {
        let p = pretzel();
        let s = spin_class(&p).unwrap();
        let path = full_sequence(&p, &s, 0, TruncationPolicy::default()).unwrap();
        let root = graded_root(&path);
        let oracle = brute_force_root(&p, &s, 4).unwrap();
        assert!(root.same_shape(&oracle));
    }

    #[test]
    fn brute_force_single_vertex() {
        let g = build_graph(&[(0, -2)], &[]).unwrap();
        let s = spin_class(&g).unwrap();
        let oracle = brute_force_root(&g, &s, 5).unwrap();
        assert_eq!(oracle.leaves.len(), 1);
        assert!(oracle.angles.is_empty());
    }

    #[test]
    fn truncation_not_reached_surfaces() {
        let p = pretzel();
        let s = spin_class(&p).unwrap();
        let policy = TruncationPolicy { run_length: None, cap: Some(10) };
        assert!(matches!(
            full_sequence(&p, &s, 0, policy),
            Err(LatticeError::TruncationNotReached { cap: 10 })
        ));
    }
}
